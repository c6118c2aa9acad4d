#include <turan/canon.hpp>
#include <turan/error.hpp>
#include <turan/models.hpp>

#include <algorithm>
#include <numeric>

namespace turan
{
    LanguagePtr graph_language()
    {
        static const LanguagePtr language = make_language(Language({{"E", 2}}));
        return language;
    }

    Structure graph_from_edges(int n, const std::vector<std::pair<int, int>> & edges)
    {
        Structure g(graph_language(), n);
        for (auto [a, b] : edges) {
            g.set(0, {a - 1, b - 1});
            g.set(0, {b - 1, a - 1});
        }
        return g;
    }

    Structure complete_graph(int n) { return turan_graph(n, std::max(n, 1)); }

    Structure empty_graph(int n) { return Structure(graph_language(), n); }

    Structure turan_graph(int n, int parts)
    {
        if (parts < 1)
            throw Error("Turan graph needs at least one part");
        if (n < 0)
            throw Error("size must be non-negative");
        Structure g(graph_language(), n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && u % parts != v % parts)
                    g.set(0, {u, v});
        return g;
    }

    Structure transitive_tournament(int n)
    {
        Structure g(graph_language(), n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                g.set(0, {u, v});
        return g;
    }

    Structure cycle_graph(int n)
    {
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i <= n; ++i)
            edges.emplace_back(i, i % n + 1);
        return graph_from_edges(n, edges);
    }

    Structure apply_interpretation(const Interpretation & interp, const Structure & m)
    {
        if (m.language() != interp.target())
            throw LanguageMismatch("structure is not over the interpretation's target language");
        Structure result(interp.source_ptr(), m.size());
        for (std::size_t p = 0; p < interp.source().size(); ++p) {
            int symbol = static_cast<int>(p);
            for_each_injective_tuple(m.size(), interp.source().arity(symbol), [&](std::span<const int> t) {
                if (eval(interp[symbol], m, t))
                    result.set(symbol, t);
            });
        }
        return result;
    }

    Rational density(const Structure & small, const Structure & large)
    {
        if (small.language() != large.language())
            throw LanguageMismatch("density across different languages");
        int k = small.size();
        int n = large.size();
        if (k > n)
            throw Error("density needs the pattern to be no larger than the host");
        auto code = canonical_code(small);
        std::vector<int> pick(static_cast<std::size_t>(n), 0);
        std::fill(pick.begin(), pick.begin() + k, 1);
        boost::multiprecision::cpp_int hits = 0;
        boost::multiprecision::cpp_int total = 0;
        do {
            std::vector<int> subset;
            for (int v = 0; v < n; ++v)
                if (pick[static_cast<std::size_t>(v)])
                    subset.push_back(v);
            ++total;
            if (canonical_code(large.induced(subset)) == code)
                ++hits;
        } while (std::prev_permutation(pick.begin(), pick.end()));
        return Rational(hits, total);
    }

    namespace
    {
        bool embed_edges(const Structure & g, const Structure & h, const std::vector<int> & order, std::size_t depth,
            std::vector<int> & image, std::vector<char> & used, const std::vector<int> & deg_h)
        {
            if (depth == order.size())
                return true;
            int u = order[depth];
            int need = 0;
            for (int w = 0; w < g.size(); ++w)
                if (g.holds(0, std::array{u, w}) || g.holds(0, std::array{w, u}))
                    ++need;
            for (int x = 0; x < h.size(); ++x) {
                if (used[static_cast<std::size_t>(x)] || deg_h[static_cast<std::size_t>(x)] < need)
                    continue;
                bool ok = true;
                for (std::size_t i = 0; i < depth && ok; ++i) {
                    int w = order[i];
                    int y = image[static_cast<std::size_t>(w)];
                    if (g.holds(0, std::array{u, w}) && ! h.holds(0, std::array{x, y}))
                        ok = false;
                    if (g.holds(0, std::array{w, u}) && ! h.holds(0, std::array{y, x}))
                        ok = false;
                }
                if (! ok)
                    continue;
                image[static_cast<std::size_t>(u)] = x;
                used[static_cast<std::size_t>(x)] = 1;
                if (embed_edges(g, h, order, depth + 1, image, used, deg_h))
                    return true;
                used[static_cast<std::size_t>(x)] = 0;
            }
            return false;
        }

        std::vector<int> degrees(const Structure & g)
        {
            std::vector<int> deg(static_cast<std::size_t>(g.size()), 0);
            for (int u = 0; u < g.size(); ++u)
                for (int w = 0; w < g.size(); ++w)
                    if (g.holds(0, std::array{u, w}) || g.holds(0, std::array{w, u}))
                        ++deg[static_cast<std::size_t>(u)];
            return deg;
        }
    }

    bool has_noninduced_copy(const Structure & g, const Structure & h)
    {
        if (g.language().size() != 1 || g.language().arity(0) != 2 || h.language().size() != 1 || h.language().arity(0) != 2)
            throw LanguageMismatch("non-induced copies are defined for graphs");
        if (g.size() > h.size())
            return false;
        auto deg_g = degrees(g);
        std::vector<int> order(static_cast<std::size_t>(g.size()));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg_g[static_cast<std::size_t>(a)] > deg_g[static_cast<std::size_t>(b)]; });
        std::vector<int> image(static_cast<std::size_t>(g.size()), -1);
        std::vector<char> used(static_cast<std::size_t>(h.size()), 0);
        return embed_edges(g, h, order, 0, image, used, degrees(h));
    }

    namespace
    {
        Formula diagram(const Structure & k, const std::vector<int> & positive_only)
        {
            std::vector<int> vars(static_cast<std::size_t>(k.size()));
            std::iota(vars.begin(), vars.end(), 1);
            std::vector<Formula> parts{Formula::pairwise_distinct(vars)};
            for (std::size_t p = 0; p < k.language().size(); ++p) {
                int symbol = static_cast<int>(p);
                bool positive = std::find(positive_only.begin(), positive_only.end(), symbol) != positive_only.end();
                for_each_injective_tuple(k.size(), k.language().arity(symbol), [&](std::span<const int> t) {
                    std::vector<int> atom_vars;
                    for (int v : t)
                        atom_vars.push_back(v + 1);
                    auto atom = Formula::atom(symbol, atom_vars);
                    if (k.holds(symbol, t))
                        parts.push_back(atom);
                    else if (! positive)
                        parts.push_back(! atom);
                });
            }
            std::vector<Formula> nonempty;
            for (auto & f : parts)
                if (f.connective() != Connective::True)
                    nonempty.push_back(f);
            return Formula::all_of(nonempty);
        }
    }

    Formula open_diagram(const Structure & k) { return diagram(k, {}); }

    Theory forb(const Theory & t, const std::vector<Structure> & family)
    {
        std::vector<UniversalAxiom> axioms;
        for (auto & f : family) {
            if (f.language() != t.language())
                throw LanguageMismatch("forbidden structure over a different language");
            axioms.push_back({f.size(), ! open_diagram(f)});
        }
        return t.with_axioms(axioms);
    }

    Theory forb_noninduced(const Theory & t, const std::vector<Structure> & family, int edge)
    {
        std::vector<UniversalAxiom> axioms;
        for (auto & f : family) {
            if (f.language() != t.language())
                throw LanguageMismatch("forbidden structure over a different language");
            axioms.push_back({f.size(), ! diagram(f, {edge})});
        }
        return t.with_axioms(axioms);
    }

    std::vector<Structure> upward_closure(const std::vector<Structure> & family, int edge)
    {
        std::vector<Structure> all;
        for (auto & m : family) {
            if (m.language().arity(edge) != 2)
                throw LanguageMismatch("upward closure needs a binary edge symbol");
            std::vector<std::pair<int, int>> missing;
            for (int u = 0; u < m.size(); ++u)
                for (int v = u + 1; v < m.size(); ++v)
                    if (! (m.holds(edge, std::array{u, v}) && m.holds(edge, std::array{v, u})))
                        missing.emplace_back(u, v);
            if (missing.size() >= 31)
                throw Error("too many non-edges for an upward closure");
            for (std::uint32_t mask = 0; mask < (1U << missing.size()); ++mask) {
                Structure s = m;
                for (std::size_t i = 0; i < missing.size(); ++i)
                    if ((mask >> i) & 1U) {
                        s.set(edge, {missing[i].first, missing[i].second});
                        s.set(edge, {missing[i].second, missing[i].first});
                    }
                all.push_back(std::move(s));
            }
        }
        return dedupe_by_code(all);
    }

    Structure erase_symbol(const Structure & m, int symbol)
    {
        Structure result = m;
        for (auto & t : m.tuples(symbol))
            result.set(symbol, t, false);
        return result;
    }

    Structure reduct(const Structure & m, const LanguagePtr & language, const std::vector<int> & kept)
    {
        if (kept.size() != language->size())
            throw LanguageMismatch("reduct language does not match the kept symbols");
        Structure result(language, m.size());
        for (std::size_t i = 0; i < kept.size(); ++i) {
            if (language->arity(static_cast<int>(i)) != m.language().arity(kept[i]))
                throw LanguageMismatch("reduct arity mismatch");
            for (auto & t : m.tuples(kept[i]))
                result.set(static_cast<int>(i), t);
        }
        return result;
    }
}
