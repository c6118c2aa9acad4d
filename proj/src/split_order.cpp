#include <turan/error.hpp>
#include <turan/split_order.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace turan
{
    bool SplitOrder::valid() const
    {
        if (part.size() != rank.size() || parts < 1)
            return false;
        std::vector<std::vector<int>> seen(static_cast<std::size_t>(parts));
        for (std::size_t i = 0; i < part.size(); ++i) {
            if (part[i] < 0 || part[i] >= parts)
                return false;
            seen[static_cast<std::size_t>(part[i])].push_back(rank[i]);
        }
        for (auto & ranks : seen) {
            std::sort(ranks.begin(), ranks.end());
            for (std::size_t r = 0; r < ranks.size(); ++r)
                if (ranks[r] != static_cast<int>(r))
                    return false;
        }
        return true;
    }

    std::vector<std::vector<int>> SplitOrder::blocks() const
    {
        std::vector<std::vector<int>> result(static_cast<std::size_t>(parts));
        for (int v = 0; v < size(); ++v)
            result[static_cast<std::size_t>(part[static_cast<std::size_t>(v)])].push_back(v);
        for (auto & b : result)
            std::sort(b.begin(), b.end(), [&](int a, int c) { return rank[static_cast<std::size_t>(a)] < rank[static_cast<std::size_t>(c)]; });
        return result;
    }

    std::string SplitOrder::to_string() const
    {
        std::string out = "(";
        for (std::size_t i = 0; i < part.size(); ++i)
            out += (i ? "," : "") + std::to_string(part[i] + 1);
        out += "|";
        for (std::size_t i = 0; i < rank.size(); ++i)
            out += (i ? "," : "") + std::to_string(rank[i] + 1);
        return out + ")";
    }

    std::vector<std::vector<int>> weak_compositions(int parts, int k)
    {
        if (parts < 1)
            throw Error("weak compositions need at least one part");
        if (k < 0)
            throw Error("weak compositions of a negative number");
        std::vector<std::vector<int>> result;
        std::vector<int> current;
        std::function<void(int, int)> rec = [&](int index, int left) {
            if (index == parts - 1) {
                current.push_back(left);
                result.push_back(current);
                current.pop_back();
                return;
            }
            for (int q = 0; q <= left; ++q) {
                current.push_back(q);
                rec(index + 1, left - q);
                current.pop_back();
            }
        };
        rec(0, k);
        return result;
    }

    std::vector<SplitOrder> split_orders(int parts, int k)
    {
        if (parts < 1)
            throw Error("split orders need at least one part");
        std::vector<SplitOrder> result;
        std::vector<int> f(static_cast<std::size_t>(k), 0);
        while (true) {
            auto base_blocks = SplitOrder{f, std::vector<int>(f.size(), 0), parts}.blocks();
            std::vector<SplitOrder> batch;
            std::vector<std::vector<int>> perms;
            for (auto & b : base_blocks) {
                std::vector<int> p(b.size());
                std::iota(p.begin(), p.end(), 0);
                perms.push_back(p);
            }
            while (true) {
                SplitOrder s{f, std::vector<int>(f.size(), 0), parts};
                for (std::size_t b = 0; b < base_blocks.size(); ++b)
                    for (std::size_t i = 0; i < base_blocks[b].size(); ++i)
                        s.rank[static_cast<std::size_t>(base_blocks[b][i])] = perms[b][i];
                batch.push_back(std::move(s));
                std::size_t b = 0;
                while (b < perms.size() && ! std::next_permutation(perms[b].begin(), perms[b].end()))
                    ++b;
                if (b == perms.size())
                    break;
            }
            std::sort(batch.begin(), batch.end(), [](const SplitOrder & a, const SplitOrder & c) { return a.rank < c.rank; });
            result.insert(result.end(), batch.begin(), batch.end());
            int i = k - 1;
            while (i >= 0 && ++f[static_cast<std::size_t>(i)] == parts)
                f[static_cast<std::size_t>(i--)] = 0;
            if (i < 0)
                break;
        }
        return result;
    }

    SplitOrder induce(const SplitOrder & s, std::span<const int> alpha)
    {
        SplitOrder out;
        out.parts = s.parts;
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            if (alpha[i] < 0 || alpha[i] >= s.size())
                throw Error("tuple leaves the split order's universe");
            for (std::size_t j = 0; j < i; ++j)
                if (alpha[j] == alpha[i])
                    throw Error("induced split orders need an injective tuple");
            out.part.push_back(s.part[static_cast<std::size_t>(alpha[i])]);
        }
        out.rank.assign(alpha.size(), 0);
        for (std::size_t i = 0; i < alpha.size(); ++i)
            for (std::size_t j = 0; j < alpha.size(); ++j)
                if (j != i && s.precedes(alpha[j], alpha[i]))
                    ++out.rank[i];
        return out;
    }

    int thickness(const SplitOrder & s)
    {
        auto sizes = composition_of(s);
        return *std::min_element(sizes.begin(), sizes.end());
    }

    std::vector<int> composition_of(const SplitOrder & s)
    {
        std::vector<int> sizes(static_cast<std::size_t>(s.parts), 0);
        for (int p : s.part)
            ++sizes[static_cast<std::size_t>(p)];
        return sizes;
    }

    SplitOrder parse_split_order(std::string_view text, int parts)
    {
        std::string t(text);
        t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == ' ' || c == '(' || c == ')'; }), t.end());
        auto bar = t.find('|');
        if (bar == std::string::npos)
            throw Error("split order needs the form (parts|ranks)");
        auto numbers = [](const std::string & s) {
            std::vector<int> out;
            std::stringstream in(s);
            std::string item;
            while (std::getline(in, item, ','))
                if (! item.empty())
                    out.push_back(std::stoi(item) - 1);
            return out;
        };
        SplitOrder s{numbers(t.substr(0, bar)), numbers(t.substr(bar + 1)), parts};
        if (! s.valid())
            throw Error("invalid split order '" + std::string(text) + "'");
        return s;
    }

    std::uint64_t signature_key(const SplitOrder & s)
    {
        std::uint64_t base = static_cast<std::uint64_t>(s.parts) * static_cast<std::uint64_t>(std::max(s.size(), 1));
        std::uint64_t key = 0;
        for (std::size_t i = 0; i < s.part.size(); ++i)
            key = key * base + static_cast<std::uint64_t>(s.part[i]) * static_cast<std::uint64_t>(s.size()) + static_cast<std::uint64_t>(s.rank[i]);
        return key;
    }
}
