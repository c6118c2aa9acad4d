#pragma once

// Definition-level reference implementations used only by the tests. They
// avoid the library's canonical labeling, augmentation and box machinery.

#include <turan/models.hpp>
#include <turan/pattern.hpp>
#include <turan/theory.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace oracle
{
    using namespace turan;

    inline std::vector<std::pair<int, std::vector<int>>> slots(const Language & lang, int n)
    {
        std::vector<std::pair<int, std::vector<int>>> out;
        for (std::size_t p = 0; p < lang.size(); ++p) {
            int k = lang.arity(static_cast<int>(p));
            std::vector<int> t(static_cast<std::size_t>(k), 0);
            // odometer over [n]^k, keep injective tuples
            std::function<void(int)> rec = [&](int i) {
                if (i == k) {
                    auto s = t;
                    std::sort(s.begin(), s.end());
                    if (std::adjacent_find(s.begin(), s.end()) == s.end())
                        out.emplace_back(static_cast<int>(p), t);
                    return;
                }
                for (int v = 0; v < n; ++v) {
                    t[static_cast<std::size_t>(i)] = v;
                    rec(i + 1);
                }
            };
            if (k <= n)
                rec(0);
        }
        return out;
    }

    /// Every labeled structure of size n (2^slots of them).
    inline void labeled(const LanguagePtr & lang, int n, const std::function<void(const Structure &)> & fn)
    {
        auto s = slots(*lang, n);
        std::uint64_t total = std::uint64_t{1} << s.size();
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            Structure m(lang, n);
            for (std::size_t i = 0; i < s.size(); ++i)
                if (mask >> i & 1)
                    m.set(s[i].first, s[i].second);
            fn(m);
        }
    }

    inline bool same_under(const Structure & a, const Structure & b, const std::vector<int> & perm)
    {
        for (auto & [sym, t] : slots(a.language(), a.size())) {
            std::vector<int> u;
            for (int v : t)
                u.push_back(perm[static_cast<std::size_t>(v)]);
            if (a.holds(sym, t) != b.holds(sym, u))
                return false;
        }
        return true;
    }

    inline bool isomorphic(const Structure & a, const Structure & b)
    {
        if (a.size() != b.size() || a.language() != b.language())
            return false;
        std::vector<int> perm(static_cast<std::size_t>(a.size()));
        std::iota(perm.begin(), perm.end(), 0);
        do
            if (same_under(a, b, perm))
                return true;
        while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    }

    inline std::vector<Structure> classes(const std::vector<Structure> & items)
    {
        std::vector<Structure> reps;
        for (const auto & m : items)
            if (std::none_of(reps.begin(), reps.end(), [&](const Structure & r) { return isomorphic(r, m); }))
                reps.push_back(m);
        return reps;
    }

    /// Models of t of size n up to isomorphism, by labeled filtering.
    inline std::vector<Structure> models(const Theory & t, int n)
    {
        std::vector<Structure> found;
        labeled(t.language_ptr(), n, [&](const Structure & m) {
            if (is_model(m, t))
                found.push_back(m);
        });
        return classes(found);
    }

    inline bool edge(const Structure & g, int u, int v, int e = 0)
    {
        std::vector<int> t{u, v};
        return g.holds(e, t);
    }

    /// Least k admitting a proper k-colouring, by trying all colourings.
    inline int chromatic(const Structure & g, int e = 0)
    {
        int n = g.size();
        if (n == 0)
            return 0;
        for (int k = 1; k <= n; ++k) {
            std::vector<int> c(static_cast<std::size_t>(n), 0);
            while (true) {
                bool ok = true;
                for (int u = 0; u < n && ok; ++u)
                    for (int v = 0; v < n && ok; ++v)
                        if (u != v && edge(g, u, v, e) && c[static_cast<std::size_t>(u)] == c[static_cast<std::size_t>(v)])
                            ok = false;
                if (ok)
                    return k;
                int i = 0;
                while (i < n && ++c[static_cast<std::size_t>(i)] == k)
                    c[static_cast<std::size_t>(i++)] = 0;
                if (i == n)
                    break;
            }
        }
        return n;
    }

    /// Least number of consecutive blocks of `order` that are independent.
    inline int interval_chromatic(const Structure & g, const std::vector<int> & order, int e = 0)
    {
        int n = static_cast<int>(order.size());
        std::vector<int> best(static_cast<std::size_t>(n + 1), n + 1);
        best[0] = 0;
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i) {
                bool independent = true;
                for (int a = i; a < j && independent; ++a)
                    for (int b = i; b < j && independent; ++b)
                        if (a != b && edge(g, order[static_cast<std::size_t>(a)], order[static_cast<std::size_t>(b)], e))
                            independent = false;
                if (independent)
                    best[static_cast<std::size_t>(j)] = std::min(best[static_cast<std::size_t>(j)], best[static_cast<std::size_t>(i)] + 1);
            }
        return best[static_cast<std::size_t>(n)];
    }

    /// Signature of a tuple from scratch: parts read off s, ranks renumbered
    /// densely inside each part.
    inline SplitOrder signature(const SplitOrder & s, const std::vector<int> & alpha)
    {
        SplitOrder out;
        out.parts = s.parts;
        for (int v : alpha)
            out.part.push_back(s.part[static_cast<std::size_t>(v)]);
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            int r = 0;
            for (std::size_t j = 0; j < alpha.size(); ++j)
                if (out.part[j] == out.part[i] && s.rank[static_cast<std::size_t>(alpha[j])] < s.rank[static_cast<std::size_t>(alpha[i])])
                    ++r;
            out.rank.push_back(r);
        }
        return out;
    }

    /// The definition: R_P(M) = {alpha : signature(alpha) in Q_P} for every P.
    inline bool uniform(const Structure & m, const SignatureSpace & space, const Pattern & q, const SplitOrder & s)
    {
        for (auto & [sym, t] : slots(m.language(), m.size()))
            if (m.holds(sym, t) != q.test(space.coordinate(sym, signature(s, t))))
                return false;
        return true;
    }

    /// Every split order on [n] with `parts` parts, generated independently.
    inline std::vector<SplitOrder> all_split_orders(int parts, int n)
    {
        std::vector<SplitOrder> out;
        std::vector<int> f(static_cast<std::size_t>(n), 0);
        while (true) {
            // within each part, every permutation of ranks
            std::vector<std::vector<int>> members(static_cast<std::size_t>(parts));
            for (int v = 0; v < n; ++v)
                members[static_cast<std::size_t>(f[static_cast<std::size_t>(v)])].push_back(v);
            std::vector<std::vector<int>> perms(static_cast<std::size_t>(parts));
            for (std::size_t p = 0; p < members.size(); ++p) {
                perms[p].resize(members[p].size());
                std::iota(perms[p].begin(), perms[p].end(), 0);
            }
            std::function<void(std::size_t)> rec = [&](std::size_t p) {
                if (p == members.size()) {
                    SplitOrder s;
                    s.parts = parts;
                    s.part = f;
                    s.rank.assign(static_cast<std::size_t>(n), 0);
                    for (std::size_t q = 0; q < members.size(); ++q)
                        for (std::size_t i = 0; i < members[q].size(); ++i)
                            s.rank[static_cast<std::size_t>(members[q][i])] = perms[q][i];
                    out.push_back(s);
                    return;
                }
                std::sort(perms[p].begin(), perms[p].end());
                do
                    rec(p + 1);
                while (std::next_permutation(perms[p].begin(), perms[p].end()));
            };
            rec(0);
            int i = 0;
            while (i < n && ++f[static_cast<std::size_t>(i)] == parts)
                f[static_cast<std::size_t>(i++)] = 0;
            if (i == n)
                break;
        }
        return out;
    }

    /// Patterns of a slice, materialized.
    inline std::vector<Pattern> slice_patterns(const Slice & slice)
    {
        std::vector<std::size_t> free;
        for (std::size_t c = 0; c < slice.mask.size(); ++c)
            if (! slice.mask.test(c))
                free.push_back(c);
        std::vector<Pattern> out;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free.size()); ++bits) {
            Pattern q = slice.values & slice.mask;
            for (std::size_t i = 0; i < free.size(); ++i)
                q[free[i]] = (bits >> i & 1) != 0;
            out.push_back(q);
        }
        return out;
    }

    inline std::vector<int> random_permutation(int n, std::mt19937 & rng)
    {
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        return p;
    }

    inline Structure random_structure(const LanguagePtr & lang, int n, std::mt19937 & rng)
    {
        Structure m(lang, n);
        for (auto & [sym, t] : slots(*lang, n))
            if (rng() & 1)
                m.set(sym, t);
        return m;
    }

    inline LanguagePtr one_binary() { return make_language(Language({{"E", 2}})); }
}
