#include <turan/ramsey.hpp>

#include <turan/enumerate.hpp>
#include <turan/error.hpp>
#include <turan/parallel.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace turan
{
    namespace
    {
        // Calls fn on every size-k subset of items (as index combinations).
        void for_each_combination(int n, int k, const std::function<void(const std::vector<int> &)> & fn)
        {
            if (k > n || k < 0)
                return;
            std::vector<int> c(static_cast<std::size_t>(k));
            std::iota(c.begin(), c.end(), 0);
            while (true) {
                fn(c);
                int i = k - 1;
                while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i)
                    --i;
                if (i < 0)
                    return;
                ++c[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < k; ++j)
                    c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
            }
        }

        std::vector<int> composition(std::span<const int> e, const std::vector<int> & part, int parts)
        {
            std::vector<int> q(static_cast<std::size_t>(parts), 0);
            for (int v : e)
                ++q[static_cast<std::size_t>(part[static_cast<std::size_t>(v)])];
            return q;
        }

        // Backtracking over "exactly `thickness` vertices from every part". The
        // callback `add` checks the new vertex against the chosen ones and
        // records what it assigned; `undo` rolls back to a trail mark.
        struct PartChooser
        {
            std::vector<std::vector<int>> blocks;
            int thickness = 0;
            std::function<bool(const std::vector<int> & chosen, int v)> add;
            std::function<void()> push;
            std::function<void()> pop;
            std::vector<int> chosen;

            bool run(std::size_t part, std::size_t from, int taken)
            {
                if (part == blocks.size())
                    return true;
                if (taken == thickness)
                    return run(part + 1, 0, 0);
                const auto & b = blocks[part];
                for (std::size_t i = from; i + static_cast<std::size_t>(thickness - taken) <= b.size(); ++i) {
                    push();
                    if (add(chosen, b[i])) {
                        chosen.push_back(b[i]);
                        if (run(part, i + 1, taken + 1))
                            return true;
                        chosen.pop_back();
                    }
                    pop();
                }
                return false;
            }
        };

        std::vector<std::vector<int>> blocks_of(const std::vector<int> & part, int parts)
        {
            std::vector<std::vector<int>> b(static_cast<std::size_t>(parts));
            for (std::size_t v = 0; v < part.size(); ++v)
                b[static_cast<std::size_t>(part[v])].push_back(static_cast<int>(v));
            return b;
        }
    }

    std::optional<UniformWitness> find_uniform_submodel(const Structure & m, const SplitOrder & s, int thickness)
    {
        if (s.size() != m.size())
            throw Error("split order size differs from the structure size");
        if (thickness < 0)
            throw Error("thickness must be non-negative");
        SignatureSpace space(m.language_ptr(), s.parts);
        std::vector<signed char> value(space.dimension(), -1);
        std::vector<std::size_t> trail;
        std::vector<std::size_t> marks;

        PartChooser chooser;
        chooser.blocks = blocks_of(s.part, s.parts);
        chooser.thickness = thickness;
        chooser.push = [&] { marks.push_back(trail.size()); };
        chooser.pop = [&] {
            while (trail.size() > marks.back()) {
                value[trail.back()] = -1;
                trail.pop_back();
            }
            marks.pop_back();
        };
        chooser.add = [&](const std::vector<int> & chosen, int v) {
            std::vector<int> pool = chosen;
            pool.push_back(v);
            int last = static_cast<int>(pool.size()) - 1;
            const auto & lang = m.language();
            for (std::size_t p = 0; p < lang.size(); ++p) {
                int sym = static_cast<int>(p);
                int k = lang.arity(sym);
                if (k > static_cast<int>(pool.size()))
                    continue;
                bool ok = true;
                std::vector<int> alpha(static_cast<std::size_t>(k));
                for_each_injective_tuple(static_cast<int>(pool.size()), k, [&](std::span<const int> idx) {
                    if (! ok || std::find(idx.begin(), idx.end(), last) == idx.end())
                        return;
                    for (int j = 0; j < k; ++j)
                        alpha[static_cast<std::size_t>(j)] = pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
                    auto c = space.coordinate(sym, induce(s, alpha));
                    signed char h = m.holds(sym, alpha) ? 1 : 0;
                    if (value[c] == -1) {
                        value[c] = h;
                        trail.push_back(c);
                    }
                    else if (value[c] != h)
                        ok = false;
                });
                if (! ok)
                    return false;
            }
            return true;
        };
        if (! chooser.run(0, 0, 0))
            return std::nullopt;

        UniformWitness w;
        w.vertices = chooser.chosen;
        std::sort(w.vertices.begin(), w.vertices.end());
        w.pattern = Pattern(space.dimension());
        for (std::size_t c = 0; c < value.size(); ++c)
            if (value[c] == 1)
                w.pattern.set(c);
        w.order = induce(s, w.vertices);
        return w;
    }

    bool verify_witness(const Structure & m, const SplitOrder & s, int thickness, const UniformWitness & w)
    {
        if (! std::is_sorted(w.vertices.begin(), w.vertices.end()) ||
            std::adjacent_find(w.vertices.begin(), w.vertices.end()) != w.vertices.end())
            return false;
        for (int v : w.vertices)
            if (v < 0 || v >= m.size())
                return false;
        SplitOrder induced = induce(s, w.vertices);
        if (induced != w.order || turan::thickness(induced) < thickness)
            return false;
        SignatureSpace space(m.language_ptr(), s.parts);
        if (w.pattern.size() != space.dimension())
            return false;
        return is_uniform(m.induced(w.vertices), space, w.pattern, induced);
    }

    LanguagePtr hypergraph_language(const std::vector<int> & arities)
    {
        std::vector<PredicateSymbol> symbols;
        for (std::size_t i = 0; i < arities.size(); ++i)
            symbols.push_back({"E" + std::to_string(i + 1), arities[i]});
        return make_language(Language(std::move(symbols)));
    }

    bool hypergraph_is_uniform(const Structure & h, const std::vector<int> & part, int parts, const HypergraphPattern & q)
    {
        const auto & lang = h.language();
        if (q.size() != lang.size())
            return false;
        for (std::size_t i = 0; i < lang.size(); ++i) {
            int sym = static_cast<int>(i);
            bool ok = true;
            for_each_combination(h.size(), lang.arity(sym), [&](const std::vector<int> & e) {
                if (ok && h.holds(sym, e) != q[i].contains(composition(e, part, parts)))
                    ok = false;
            });
            if (! ok)
                return false;
        }
        return true;
    }

    std::optional<HypergraphPattern> hypergraph_pattern_of(const Structure & h, const std::vector<int> & part, int parts)
    {
        const auto & lang = h.language();
        HypergraphPattern q(lang.size());
        for (std::size_t i = 0; i < lang.size(); ++i) {
            int sym = static_cast<int>(i);
            std::map<std::vector<int>, bool> seen;
            bool ok = true;
            for_each_combination(h.size(), lang.arity(sym), [&](const std::vector<int> & e) {
                if (! ok)
                    return;
                bool in = h.holds(sym, e);
                auto [it, fresh] = seen.emplace(composition(e, part, parts), in);
                if (! fresh && it->second != in)
                    ok = false;
            });
            if (! ok)
                return std::nullopt;
            for (const auto & [c, in] : seen)
                if (in)
                    q[i].insert(c);
        }
        return q;
    }

    std::optional<HypergraphWitness> hypergraph_uniform_search(const Structure & h, const std::vector<int> & part, int parts, int thickness)
    {
        if (static_cast<int>(part.size()) != h.size())
            throw Error("part map size differs from the hypergraph size");
        const auto & lang = h.language();
        std::vector<std::map<std::vector<int>, bool>> value(lang.size());
        std::vector<std::pair<std::size_t, std::vector<int>>> trail;
        std::vector<std::size_t> marks;

        PartChooser chooser;
        chooser.blocks = blocks_of(part, parts);
        chooser.thickness = thickness;
        chooser.push = [&] { marks.push_back(trail.size()); };
        chooser.pop = [&] {
            while (trail.size() > marks.back()) {
                value[trail.back().first].erase(trail.back().second);
                trail.pop_back();
            }
            marks.pop_back();
        };
        chooser.add = [&](const std::vector<int> & chosen, int v) {
            for (std::size_t i = 0; i < lang.size(); ++i) {
                int k = lang.arity(static_cast<int>(i));
                bool ok = true;
                for_each_combination(static_cast<int>(chosen.size()), k - 1, [&](const std::vector<int> & idx) {
                    if (! ok)
                        return;
                    std::vector<int> e;
                    for (int j : idx)
                        e.push_back(chosen[static_cast<std::size_t>(j)]);
                    e.push_back(v);
                    bool in = h.holds(static_cast<int>(i), e);
                    auto q = composition(e, part, parts);
                    auto [it, fresh] = value[i].emplace(q, in);
                    if (fresh)
                        trail.emplace_back(i, std::move(q));
                    else if (it->second != in)
                        ok = false;
                });
                if (! ok)
                    return false;
            }
            return true;
        };
        if (! chooser.run(0, 0, 0))
            return std::nullopt;
        HypergraphWitness w;
        w.vertices = chooser.chosen;
        std::sort(w.vertices.begin(), w.vertices.end());
        w.pattern.resize(lang.size());
        for (std::size_t i = 0; i < lang.size(); ++i)
            for (const auto & [c, in] : value[i])
                if (in)
                    w.pattern[i].insert(c);
        return w;
    }

    std::vector<int> reduction_arities(const Language & language)
    {
        std::vector<int> out;
        for (const auto & p : language.symbols()) {
            std::size_t f = 1;
            for (int j = 2; j <= p.arity; ++j)
                f *= static_cast<std::size_t>(j);
            out.insert(out.end(), f, p.arity);
        }
        return out;
    }

    OrderedReduction reduce_to_hypergraph(const Structure & m, const SplitOrder & s)
    {
        if (s.size() != m.size() || ! s.valid())
            throw Error("split order does not fit the structure");
        const auto & lang = m.language();
        int n = m.size();
        OrderedReduction r;
        r.split = s;
        r.order.resize(static_cast<std::size_t>(n));
        std::iota(r.order.begin(), r.order.end(), 0);
        std::sort(r.order.begin(), r.order.end(), [&](int a, int b) {
            auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
            return std::pair(s.part[ua], s.rank[ua]) < std::pair(s.part[ub], s.rank[ub]);
        });
        r.position.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            r.position[static_cast<std::size_t>(r.order[static_cast<std::size_t>(i)])] = i;

        std::vector<int> arities;
        std::map<std::pair<int, std::vector<int>>, int> index;
        for (std::size_t p = 0; p < lang.size(); ++p) {
            std::vector<int> perm(static_cast<std::size_t>(lang.arity(static_cast<int>(p))));
            std::iota(perm.begin(), perm.end(), 0);
            do {
                index[{static_cast<int>(p), perm}] = static_cast<int>(r.orders.size());
                r.orders.emplace_back(static_cast<int>(p), perm);
                arities.push_back(static_cast<int>(perm.size()));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }

        r.hypergraph = Structure(hypergraph_language(arities), n);
        for (std::size_t i = 0; i < r.orders.size(); ++i) {
            const auto & [sym, perm] = r.orders[i];
            int k = static_cast<int>(perm.size());
            std::vector<int> alpha(perm.size());
            for_each_combination(n, k, [&](const std::vector<int> & pos) {
                // iota(perm[r]) is the r-th smallest element of A
                for (int q = 0; q < k; ++q)
                    alpha[static_cast<std::size_t>(perm[static_cast<std::size_t>(q)])] = r.order[static_cast<std::size_t>(pos[static_cast<std::size_t>(q)])];
                if (! m.holds(sym, alpha))
                    return;
                std::vector<int> e = alpha;
                std::sort(e.begin(), e.end());
                do
                    r.hypergraph.set(static_cast<int>(i), e);
                while (std::next_permutation(e.begin(), e.end()));
            });
        }

        // every relation of M must be readable back from H and the order
        for (std::size_t p = 0; p < lang.size(); ++p) {
            int sym = static_cast<int>(p);
            int k = lang.arity(sym);
            std::vector<int> perm(static_cast<std::size_t>(k));
            for_each_injective_tuple(n, k, [&](std::span<const int> alpha) {
                std::iota(perm.begin(), perm.end(), 0);
                std::sort(perm.begin(), perm.end(), [&](int a, int b) {
                    return r.position[static_cast<std::size_t>(alpha[static_cast<std::size_t>(a)])] <
                        r.position[static_cast<std::size_t>(alpha[static_cast<std::size_t>(b)])];
                });
                int i = index.at({sym, perm});
                if (m.holds(sym, alpha) != r.hypergraph.holds(i, alpha))
                    throw InvariantViolation("hypergraph reduction does not reproduce symbol " + lang[p].name);
            });
        }
        return r;
    }

    Pattern transfer_pattern(const OrderedReduction & reduction, const HypergraphPattern & q, const SignatureSpace & space)
    {
        if (q.size() != reduction.orders.size())
            throw Error("hypergraph pattern has the wrong number of edge sets");
        Pattern out(space.dimension());
        const auto & lang = space.language();
        for (std::size_t p = 0; p < lang.size(); ++p) {
            int sym = static_cast<int>(p);
            for (std::size_t idx = 0; idx < space.count(sym); ++idx) {
                const SplitOrder & sig = space.signature(sym, idx);
                auto g = composition_of(sig);
                for (std::size_t i = 0; i < reduction.orders.size(); ++i) {
                    const auto & [osym, perm] = reduction.orders[i];
                    if (osym != sym)
                        continue;
                    bool fits = true;
                    for (std::size_t a = 0; a + 1 < perm.size() && fits; ++a)
                        fits = sig.part[static_cast<std::size_t>(perm[a])] <= sig.part[static_cast<std::size_t>(perm[a + 1])];
                    // inside a part, the signature order must follow perm
                    for (std::size_t a = 0; a < perm.size() && fits; ++a)
                        for (std::size_t b = a + 1; b < perm.size() && fits; ++b) {
                            auto ja = static_cast<std::size_t>(perm[a]), jb = static_cast<std::size_t>(perm[b]);
                            if (sig.part[ja] == sig.part[jb])
                                fits = sig.rank[ja] < sig.rank[jb];
                        }
                    if (fits && q[i].contains(g)) {
                        out.set(space.offset(sym) + idx);
                        break;
                    }
                }
            }
        }
        return out;
    }

    std::string SearchResult::to_string() const
    {
        std::ostringstream out;
        switch (verdict) {
        case SearchVerdict::Exceeds:
            out << "exceeds: found a configuration without a uniform submodel";
            break;
        case SearchVerdict::Holds:
            out << "holds: every configuration has a uniform submodel";
            break;
        case SearchVerdict::Unknown:
            out << "unknown: resource cap reached";
            break;
        }
        out << " (" << configurations << " configurations)";
        return out.str();
    }

    SearchResult ramsey_witness_search(const Theory & t, int parts, int thickness, int n, std::size_t cap, int workers)
    {
        if (parts < 1 || n < 0 || thickness < 0)
            throw Error("ramsey search needs parts >= 1 and non-negative sizes");
        SearchResult result;
        std::vector<SplitOrder> orders;
        for (auto & s : split_orders(parts, parts * n))
            if (composition_of(s) == std::vector<int>(static_cast<std::size_t>(parts), n))
                orders.push_back(std::move(s));
        auto models = enumerate_models(t, parts * n, workers);
        std::size_t total = models.size() * orders.size();
        if (total > cap) {
            result.configurations = 0;
            return result;
        }
        auto failures = parallel_map(models, workers, [&](const Structure & m) -> std::optional<SplitOrder> {
            for (const auto & s : orders)
                if (! find_uniform_submodel(m, s, thickness))
                    return s;
            return std::nullopt;
        });
        result.configurations = total;
        result.verdict = SearchVerdict::Holds;
        for (std::size_t i = 0; i < failures.size(); ++i)
            if (failures[i]) {
                result.verdict = SearchVerdict::Exceeds;
                result.model = models[i];
                result.order = *failures[i];
                break;
            }
        return result;
    }

    SplitOrder block_split_order(const std::vector<int> & sizes)
    {
        SplitOrder s;
        s.parts = static_cast<int>(sizes.size());
        for (std::size_t p = 0; p < sizes.size(); ++p)
            for (int r = 0; r < sizes[p]; ++r) {
                s.part.push_back(static_cast<int>(p));
                s.rank.push_back(r);
            }
        return s;
    }

    SearchResult hypergraph_witness_search(const std::vector<int> & arities, int parts, int thickness, int n, std::size_t cap)
    {
        if (parts < 1 || n < 0 || thickness < 0)
            throw Error("hypergraph search needs parts >= 1 and non-negative sizes");
        auto lang = hypergraph_language(arities);
        int size = parts * n;
        std::vector<std::pair<int, std::vector<int>>> slots;
        for (std::size_t i = 0; i < arities.size(); ++i)
            for_each_combination(size, arities[i], [&](const std::vector<int> & e) { slots.emplace_back(static_cast<int>(i), e); });
        SearchResult result;
        if (slots.size() >= 63 || (std::uint64_t{1} << slots.size()) > cap)
            return result;
        SplitOrder s = block_split_order(std::vector<int>(static_cast<std::size_t>(parts), n));
        std::uint64_t total = std::uint64_t{1} << slots.size();
        result.configurations = total;
        result.verdict = SearchVerdict::Holds;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            Structure h(lang, size);
            for (std::size_t j = 0; j < slots.size(); ++j)
                if (mask >> j & 1) {
                    auto e = slots[j].second;
                    do
                        h.set(slots[j].first, e);
                    while (std::next_permutation(e.begin(), e.end()));
                }
            if (! hypergraph_uniform_search(h, s.part, parts, thickness)) {
                result.verdict = SearchVerdict::Exceeds;
                result.model = std::move(h);
                result.order = s;
                break;
            }
        }
        return result;
    }

    // ---- bounds ----

    namespace
    {
        constexpr const char * bound_method =
            "R(1,c,s) = c(s-1)+1; for k >= 2, R(k,c,s) <= need(1) where need(m) = 1, "
            "need(t) = 1 + c^C(t-1,k-2) need(t+1), m = R(k-1,c,s-1)+1 (end-homogeneous sequences); "
            "R_{l,(k)}(m) <= R(k, 2^|C_{l,k}|, l m); R_{l,(k1..kt)}(m) <= R_{l,(kt)}(R_{l,(k1..k(t-1))}(m))";

        BigInt binom(int n, int k)
        {
            if (k < 0 || k > n)
                return 0;
            BigInt r = 1;
            for (int i = 1; i <= k; ++i)
                r = r * (n - k + i) / i;
            return r;
        }

        // Empty result means the value exceeds 2^bits.
        std::optional<BigInt> classical(int k, const BigInt & c, const BigInt & s, int bits)
        {
            BigInt limit = BigInt(1) << bits;
            if (s <= 0)
                return BigInt(0);
            if (c <= 1 || s <= k)
                return s;
            if (k == 1) {
                BigInt v = c * (s - 1) + 1;
                if (v > limit)
                    return std::nullopt;
                return v;
            }
            auto inner = classical(k - 1, c, s - 1, bits);
            if (! inner)
                return std::nullopt;
            BigInt m = *inner + 1;
            // need(1) >= 2^(m-1)
            if (m - 1 > bits)
                return std::nullopt;
            int mm = static_cast<int>(m);
            double log_c = static_cast<double>(msb(c)) + 1.0;
            BigInt need = 1;
            for (int t = mm - 1; t >= 1; --t) {
                BigInt e = binom(t - 1, k - 2);
                if (e * static_cast<long long>(std::ceil(log_c)) > bits)
                    return std::nullopt;
                need = 1 + pow(c, static_cast<unsigned>(e)) * need;
                if (need > limit)
                    return std::nullopt;
            }
            return need;
        }

        std::optional<BigInt> hypergraph_bound(int parts, const std::vector<int> & arities, const BigInt & m, int bits)
        {
            if (m <= 0)
                return BigInt(0);
            if (arities.empty())
                return m;
            BigInt inner = m;
            for (int k : arities) {
                BigInt cells = binom(k + parts - 1, parts - 1);
                if (cells > bits)
                    return std::nullopt;
                BigInt colours = BigInt(1) << static_cast<unsigned>(cells);
                auto next = classical(k, colours, inner * parts, bits);
                if (! next)
                    return std::nullopt;
                inner = *next;
            }
            return inner;
        }
    }

    std::string Bound::to_string() const
    {
        std::ostringstream out;
        if (value)
            out << *value;
        else
            out << "> 2^" << bit_limit;
        return out.str();
    }

    Bound classical_ramsey_bound(int k, const BigInt & colours, const BigInt & s, int bit_limit)
    {
        if (k < 1)
            throw Error("uniformity must be positive");
        return {classical(k, colours, s, bit_limit), bit_limit, bound_method};
    }

    Bound hypergraph_ramsey_bound(int parts, const std::vector<int> & arities, int m, int bit_limit)
    {
        if (parts < 1 || m < 0)
            throw Error("bound needs parts >= 1 and m >= 0");
        return {hypergraph_bound(parts, arities, m, bit_limit), bit_limit, bound_method};
    }

    Bound theory_ramsey_bound(int parts, const Language & language, int m, int bit_limit)
    {
        Bound b = hypergraph_ramsey_bound(parts, reduction_arities(language), m, bit_limit);
        b.method = "reduction to the hypergraph with one edge set per (symbol, order on its arguments); " + b.method;
        return b;
    }
}
