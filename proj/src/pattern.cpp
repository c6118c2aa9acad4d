#include <turan/error.hpp>
#include <turan/models.hpp>
#include <turan/parallel.hpp>
#include <turan/pattern.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace turan
{
    SignatureSpace::SignatureSpace(LanguagePtr language, int parts) :
        language_(std::move(language)),
        parts_(parts)
    {
        if (parts < 1)
            throw Error("pattern space needs at least one part");
        for (std::size_t p = 0; p < language_->size(); ++p) {
            offsets_.push_back(dimension_);
            signatures_.push_back(split_orders(parts, language_->arity(static_cast<int>(p))));
            auto & index = index_.emplace_back();
            for (std::size_t i = 0; i < signatures_.back().size(); ++i)
                index.emplace(signature_key(signatures_.back()[i]), i);
            dimension_ += signatures_.back().size();
        }
    }

    std::size_t SignatureSpace::coordinate(int symbol, const SplitOrder & signature) const
    {
        auto & index = index_.at(static_cast<std::size_t>(symbol));
        auto it = index.find(signature_key(signature));
        if (it == index.end() || signature.parts != parts_ || signature.size() != language_->arity(symbol))
            throw Error("signature outside the pattern space");
        return offsets_[static_cast<std::size_t>(symbol)] + it->second;
    }

    std::pair<int, std::size_t> SignatureSpace::locate(std::size_t coordinate) const
    {
        for (std::size_t p = offsets_.size(); p-- > 0;)
            if (coordinate >= offsets_[p])
                return {static_cast<int>(p), coordinate - offsets_[p]};
        throw Error("coordinate outside the pattern space");
    }

    namespace
    {
        void check_space(const Structure & m, const SignatureSpace & space)
        {
            if (m.language() != space.language())
                throw LanguageMismatch("structure and pattern space use different languages");
        }
    }

    bool is_uniform(const Structure & m, const SignatureSpace & space, const Pattern & q, const SplitOrder & s)
    {
        check_space(m, space);
        if (s.parts != space.parts() || s.size() != m.size() || q.size() != space.dimension())
            throw Error("dimension mismatch between model, pattern and split order");
        bool ok = true;
        for (std::size_t p = 0; p < space.language().size() && ok; ++p) {
            int symbol = static_cast<int>(p);
            for_each_injective_tuple(m.size(), space.language().arity(symbol), [&](std::span<const int> t) {
                if (ok && q.test(space.coordinate(symbol, induce(s, t))) != m.holds(symbol, t))
                    ok = false;
            });
        }
        return ok;
    }

    Box box_of(const Structure & m, const SignatureSpace & space, const SplitOrder & s)
    {
        check_space(m, space);
        Box box{boost::dynamic_bitset<>(space.dimension()), boost::dynamic_bitset<>(space.dimension()), -1, s};
        for (std::size_t p = 0; p < space.language().size(); ++p) {
            int symbol = static_cast<int>(p);
            for_each_injective_tuple(m.size(), space.language().arity(symbol), [&](std::span<const int> t) {
                auto c = space.coordinate(symbol, induce(s, t));
                if (m.holds(symbol, t))
                    box.required.set(c);
                else
                    box.forbidden.set(c);
            });
        }
        return box;
    }

    std::vector<Box> compatibility_boxes(const Structure & m, const SignatureSpace & space, const PartConstraint & constraint, int source)
    {
        check_space(m, space);
        int n = m.size();
        int parts = space.parts();
        std::map<std::pair<boost::dynamic_bitset<>, boost::dynamic_bitset<>>, Box> unique;
        std::vector<int> f(static_cast<std::size_t>(n), 0);
        std::function<void(int)> assign = [&](int v) {
            if (v == n) {
                auto blocks = SplitOrder{f, std::vector<int>(f.size(), 0), parts}.blocks();
                std::vector<std::vector<int>> perms;
                for (auto & b : blocks) {
                    std::vector<int> perm(b.size());
                    for (std::size_t i = 0; i < perm.size(); ++i)
                        perm[i] = static_cast<int>(i);
                    perms.push_back(std::move(perm));
                }
                while (true) {
                    SplitOrder s{f, std::vector<int>(f.size(), 0), parts};
                    for (std::size_t b = 0; b < blocks.size(); ++b)
                        for (std::size_t i = 0; i < blocks[b].size(); ++i)
                            s.rank[static_cast<std::size_t>(blocks[b][i])] = perms[b][i];
                    Box box = box_of(m, space, s);
                    if (! box.is_void()) {
                        box.source = source;
                        unique.try_emplace({box.required, box.forbidden}, std::move(box));
                    }
                    std::size_t b = 0;
                    while (b < perms.size() && ! std::next_permutation(perms[b].begin(), perms[b].end()))
                        ++b;
                    if (b == perms.size())
                        return;
                }
            }
            for (int part = 0; part < parts; ++part) {
                bool ok = true;
                if (constraint)
                    for (int u = 0; u < v && ok; ++u)
                        ok = constraint(u, v, f[static_cast<std::size_t>(u)], part) && constraint(v, u, part, f[static_cast<std::size_t>(u)]);
                if (! ok)
                    continue;
                f[static_cast<std::size_t>(v)] = part;
                assign(v + 1);
            }
        };
        assign(0);
        std::vector<Box> result;
        for (auto & entry : unique)
            result.push_back(std::move(entry.second));
        return result;
    }

    std::vector<Box> family_boxes(const std::vector<Structure> & family, const SignatureSpace & space, const PartConstraint & constraint,
        int workers)
    {
        std::vector<int> indices(family.size());
        for (std::size_t i = 0; i < indices.size(); ++i)
            indices[i] = static_cast<int>(i);
        auto parts = parallel_map(indices, workers, [&](int i) {
            return compatibility_boxes(family[static_cast<std::size_t>(i)], space, constraint, i);
        });
        std::vector<Box> result;
        for (auto & part : parts)
            for (auto & b : part)
                result.push_back(std::move(b));
        return result;
    }

    PartConstraint turan_constraint(const Structure & m, int edge)
    {
        return [&m, edge](int u, int v, int pu, int pv) { return m.holds(edge, std::array{u, v}) == (pu != pv); };
    }

    PartConstraint proper_constraint(const Structure & m, int edge)
    {
        return [&m, edge](int u, int v, int pu, int pv) { return ! m.holds(edge, std::array{u, v}) || pu != pv; };
    }

    PartConstraint complete_constraint(const Structure & m, int edge)
    {
        return [&m, edge](int u, int v, int, int) { return m.holds(edge, std::array{u, v}); };
    }

    std::optional<UniformityWitness> pattern_in_uniformity_set(const Pattern & q, const std::vector<Structure> & family,
        const SignatureSpace & space)
    {
        for (std::size_t i = 0; i < family.size(); ++i)
            for (auto & s : split_orders(space.parts(), family[i].size()))
                if (is_uniform(family[i], space, q, s))
                    return UniformityWitness{static_cast<int>(i), s};
        return std::nullopt;
    }

    Slice full_slice(const SignatureSpace & space)
    {
        return {boost::dynamic_bitset<>(space.dimension()), boost::dynamic_bitset<>(space.dimension())};
    }

    namespace
    {
        void check_edge(const SignatureSpace & space, int edge)
        {
            if (edge < 0 || edge >= static_cast<int>(space.language().size()) || space.language().arity(edge) != 2)
                throw LanguageMismatch("the edge symbol must be a binary symbol of the language");
        }
    }

    Slice complete_slice(const SignatureSpace & space, int edge)
    {
        check_edge(space, edge);
        if (space.parts() != 1)
            throw Error("complete patterns live at one part");
        Slice slice = full_slice(space);
        for (std::size_t i = 0; i < space.count(edge); ++i) {
            slice.mask.set(space.offset(edge) + i);
            slice.values.set(space.offset(edge) + i);
        }
        return slice;
    }

    Slice turan_slice(const SignatureSpace & space, int edge)
    {
        check_edge(space, edge);
        Slice slice = full_slice(space);
        for (std::size_t i = 0; i < space.count(edge); ++i) {
            auto & s = space.signature(edge, i);
            slice.mask.set(space.offset(edge) + i);
            slice.values.set(space.offset(edge) + i, s.part[0] != s.part[1]);
        }
        return slice;
    }

    Pattern restrict_pattern(const Pattern & q, const SignatureSpace & space, const SignatureSpace & lower)
    {
        if (space.language() != lower.language() || lower.parts() > space.parts())
            throw Error("restriction needs the same language and fewer parts");
        Pattern out(lower.dimension());
        for (std::size_t p = 0; p < lower.language().size(); ++p) {
            int symbol = static_cast<int>(p);
            for (std::size_t i = 0; i < lower.count(symbol); ++i) {
                SplitOrder s = lower.signature(symbol, i);
                s.parts = space.parts();
                out.set(lower.offset(symbol) + i, q.test(space.coordinate(symbol, s)));
            }
        }
        return out;
    }

    std::vector<Box> proper_split_orderings(const Structure & m, int edge, const SignatureSpace & space, const std::vector<int> & kept, int source)
    {
        if (m.language().arity(edge) != 2)
            throw LanguageMismatch("the edge symbol must be binary");
        auto reduced = reduct(m, space.language_ptr(), kept);
        return compatibility_boxes(reduced, space, proper_constraint(m, edge), source);
    }

    std::vector<Pattern> covered_patterns(const SignatureSpace & space, const std::vector<Box> & boxes)
    {
        if (space.dimension() > 24)
            throw Error("pattern space too large to list");
        std::vector<Pattern> result;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << space.dimension()); ++mask) {
            Pattern q(space.dimension(), static_cast<unsigned long>(mask));
            for (auto & b : boxes)
                if (b.contains(q)) {
                    result.push_back(q);
                    break;
                }
        }
        return result;
    }

    std::uint64_t count_covered(const SignatureSpace & space, const std::vector<Box> & boxes)
    {
        return covered_patterns(space, boxes).size();
    }

    namespace
    {
        std::string signature_set(const boost::dynamic_bitset<> & bits, const SignatureSpace & space, int symbol)
        {
            std::string out = "{";
            bool first = true;
            for (std::size_t i = 0; i < space.count(symbol); ++i)
                if (bits.test(space.offset(symbol) + i)) {
                    out += (first ? "" : ", ") + space.signature(symbol, i).to_string();
                    first = false;
                }
            return out + "}";
        }
    }

    std::string pattern_to_text(const Pattern & q, const SignatureSpace & space)
    {
        std::string out;
        for (std::size_t p = 0; p < space.language().size(); ++p)
            out += space.language()[p].name + ": " + signature_set(q, space, static_cast<int>(p)) + "\n";
        return out;
    }

    std::string box_to_text(const Box & box, const SignatureSpace & space)
    {
        std::string out;
        for (std::size_t p = 0; p < space.language().size(); ++p)
            out += space.language()[p].name + ": " + signature_set(box.required, space, static_cast<int>(p)) + " / " +
                signature_set(box.forbidden, space, static_cast<int>(p)) + "\n";
        return out;
    }

    Pattern parse_pattern(std::string_view text, const SignatureSpace & space)
    {
        Pattern q(space.dimension());
        std::istringstream in{std::string(text)};
        std::string line;
        while (std::getline(in, line)) {
            auto colon = line.find(':');
            if (colon == std::string::npos)
                continue;
            std::string name = line.substr(0, colon);
            name.erase(std::remove(name.begin(), name.end(), ' '), name.end());
            int symbol = space.language().index_of(name);
            std::size_t pos = colon;
            while ((pos = line.find('(', pos)) != std::string::npos) {
                auto close = line.find(')', pos);
                if (close == std::string::npos)
                    throw Error("unterminated signature in pattern text");
                q.set(space.coordinate(symbol, parse_split_order(line.substr(pos, close - pos + 1), space.parts())));
                pos = close + 1;
            }
        }
        return q;
    }
}
