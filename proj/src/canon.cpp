#include <turan/canon.hpp>
#include <turan/error.hpp>

#include <algorithm>
#include <map>
#include <numeric>

namespace turan
{
    namespace
    {
        void put(std::string & out, std::uint64_t value, int bytes)
        {
            for (int i = bytes - 1; i >= 0; --i)
                out.push_back(static_cast<char>((value >> (8 * i)) & 0xFF));
        }

        struct Incidence
        {
            int symbol;
            std::vector<int> tuple;
        };

        class Labeler
        {
        public:
            explicit Labeler(const Structure & m) :
                m_(m),
                n_(m.size())
            {
                for (std::size_t p = 0; p < m.language().size(); ++p)
                    for (auto & t : m.tuples(static_cast<int>(p)))
                        tuples_.push_back({static_cast<int>(p), t});
                incident_.resize(static_cast<std::size_t>(n_));
                for (std::size_t i = 0; i < tuples_.size(); ++i)
                    for (int v : tuples_[i].tuple)
                        incident_[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
                twin_.assign(static_cast<std::size_t>(n_), -1);
                for (int u = 0; u < n_; ++u) {
                    if (twin_[static_cast<std::size_t>(u)] != -1)
                        continue;
                    twin_[static_cast<std::size_t>(u)] = u;
                    for (int v = u + 1; v < n_; ++v)
                        if (twin_[static_cast<std::size_t>(v)] == -1 && transposition_is_automorphism(u, v))
                            twin_[static_cast<std::size_t>(v)] = u;
                }
            }

            CanonicalForm run()
            {
                std::vector<int> colors(static_cast<std::size_t>(n_), 0);
                search(colors);
                return best_;
            }

        private:
            const Structure & m_;
            int n_;
            std::vector<Incidence> tuples_;
            std::vector<std::vector<int>> incident_;
            std::vector<int> twin_;
            CanonicalForm best_;
            bool have_best_ = false;

            bool transposition_is_automorphism(int u, int v) const
            {
                std::vector<int> perm(static_cast<std::size_t>(n_));
                std::iota(perm.begin(), perm.end(), 0);
                std::swap(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
                for (auto & inc : tuples_) {
                    std::vector<int> image(inc.tuple.size());
                    for (std::size_t i = 0; i < image.size(); ++i)
                        image[i] = perm[static_cast<std::size_t>(inc.tuple[i])];
                    if (! m_.holds(inc.symbol, image))
                        return false;
                }
                return true;
            }

            // Replaces colors by ranks of (color, incidence multiset) until stable.
            void refine(std::vector<int> & colors) const
            {
                auto count_distinct = [](std::vector<int> c) {
                    std::sort(c.begin(), c.end());
                    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
                };
                std::size_t classes = count_distinct(colors);
                while (true) {
                    using Entry = std::vector<int>;
                    std::vector<std::pair<int, std::vector<Entry>>> sig(static_cast<std::size_t>(n_));
                    for (int v = 0; v < n_; ++v) {
                        auto & s = sig[static_cast<std::size_t>(v)];
                        s.first = colors[static_cast<std::size_t>(v)];
                        for (int i : incident_[static_cast<std::size_t>(v)]) {
                            auto & inc = tuples_[static_cast<std::size_t>(i)];
                            for (std::size_t pos = 0; pos < inc.tuple.size(); ++pos) {
                                if (inc.tuple[pos] != v)
                                    continue;
                                Entry e{inc.symbol, static_cast<int>(pos)};
                                for (int w : inc.tuple)
                                    e.push_back(colors[static_cast<std::size_t>(w)]);
                                s.second.push_back(std::move(e));
                            }
                        }
                        std::sort(s.second.begin(), s.second.end());
                    }
                    auto sorted = sig;
                    std::sort(sorted.begin(), sorted.end());
                    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
                    for (int v = 0; v < n_; ++v)
                        colors[static_cast<std::size_t>(v)] = static_cast<int>(
                            std::lower_bound(sorted.begin(), sorted.end(), sig[static_cast<std::size_t>(v)]) - sorted.begin());
                    if (sorted.size() == classes)
                        return;
                    classes = sorted.size();
                }
            }

            void search(std::vector<int> colors)
            {
                refine(colors);
                std::vector<int> size(static_cast<std::size_t>(n_), 0);
                for (int c : colors)
                    ++size[static_cast<std::size_t>(c)];
                int cell = -1;
                for (int c = 0; c < n_; ++c)
                    if (size[static_cast<std::size_t>(c)] > 1) {
                        cell = c;
                        break;
                    }
                if (cell < 0) {
                    auto code = binary_form(m_.relabeled(colors));
                    if (! have_best_ || code < best_.code) {
                        best_.code = std::move(code);
                        best_.labeling = colors;
                        have_best_ = true;
                    }
                    return;
                }
                std::vector<int> tried;
                for (int v = 0; v < n_; ++v) {
                    if (colors[static_cast<std::size_t>(v)] != cell)
                        continue;
                    int t = twin_[static_cast<std::size_t>(v)];
                    if (std::find(tried.begin(), tried.end(), t) != tried.end())
                        continue;
                    tried.push_back(t);
                    auto next = colors;
                    for (auto & c : next)
                        c = 2 * c + 1;
                    next[static_cast<std::size_t>(v)] = 2 * cell;
                    search(std::move(next));
                }
            }
        };
    }

    std::string binary_form(const Structure & m)
    {
        std::string out;
        put(out, static_cast<std::uint64_t>(m.size()), 4);
        put(out, m.language().size(), 2);
        for (std::size_t p = 0; p < m.language().size(); ++p) {
            int k = m.language().arity(static_cast<int>(p));
            std::string bits;
            unsigned char byte = 0;
            int used = 0;
            for_each_injective_tuple(m.size(), k, [&](std::span<const int> t) {
                byte = static_cast<unsigned char>((byte << 1) | (m.holds(static_cast<int>(p), t) ? 1 : 0));
                if (++used == 8) {
                    bits.push_back(static_cast<char>(byte));
                    byte = 0;
                    used = 0;
                }
            });
            if (used)
                bits.push_back(static_cast<char>(byte << (8 - used)));
            put(out, static_cast<std::uint64_t>(k), 1);
            put(out, bits.size(), 4);
            out += bits;
        }
        return out;
    }

    CanonicalForm canonical_form(const Structure & m)
    {
        if (m.size() == 0)
            return {binary_form(m), {}};
        return Labeler(m).run();
    }

    CanonicalCode canonical_code(const Structure & m) { return canonical_form(m).code; }

    std::optional<std::vector<int>> find_isomorphism(const Structure & a, const Structure & b)
    {
        if (a.language() != b.language())
            throw LanguageMismatch("isomorphism test across different languages");
        if (a.size() != b.size())
            return std::nullopt;
        auto ca = canonical_form(a);
        auto cb = canonical_form(b);
        if (ca.code != cb.code)
            return std::nullopt;
        std::vector<int> inverse_b(cb.labeling.size());
        for (std::size_t v = 0; v < cb.labeling.size(); ++v)
            inverse_b[static_cast<std::size_t>(cb.labeling[v])] = static_cast<int>(v);
        std::vector<int> p(ca.labeling.size());
        for (std::size_t v = 0; v < p.size(); ++v)
            p[v] = inverse_b[static_cast<std::size_t>(ca.labeling[v])];
        if (! (a.relabeled(p) == b))
            throw InvariantViolation("canonical labeling produced an invalid isomorphism");
        return p;
    }

    bool are_isomorphic(const Structure & a, const Structure & b) { return find_isomorphism(a, b).has_value(); }

    bool are_isomorphic_brute(const Structure & a, const Structure & b)
    {
        if (a.language() != b.language())
            throw LanguageMismatch("isomorphism test across different languages");
        if (a.size() != b.size())
            return false;
        std::vector<int> p(static_cast<std::size_t>(a.size()));
        std::iota(p.begin(), p.end(), 0);
        do {
            if (a.relabeled(p) == b)
                return true;
        } while (std::next_permutation(p.begin(), p.end()));
        return false;
    }

    std::vector<Structure> dedupe_by_code(const std::vector<Structure> & structures)
    {
        std::map<CanonicalCode, Structure> seen;
        for (auto & s : structures) {
            auto form = canonical_form(s);
            if (! seen.count(form.code))
                seen.emplace(form.code, s.relabeled(form.labeling));
        }
        std::vector<Structure> result;
        for (auto & entry : seen)
            result.push_back(entry.second);
        return result;
    }
}
