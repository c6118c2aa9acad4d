#include <turan/canon.hpp>
#include <turan/enumerate.hpp>
#include <turan/error.hpp>
#include <turan/parallel.hpp>

#include <algorithm>
#include <map>

namespace turan
{
    namespace
    {
        // All surjections [vars] -> [s].
        std::vector<std::vector<int>> surjections(int vars, int s)
        {
            std::vector<std::vector<int>> result;
            if (vars < s)
                return result;
            std::vector<int> f(static_cast<std::size_t>(vars), 0);
            while (true) {
                std::vector<char> hit(static_cast<std::size_t>(s), 0);
                int count = 0;
                for (int x : f)
                    if (! hit[static_cast<std::size_t>(x)]++)
                        ++count;
                if (count == s)
                    result.push_back(f);
                int i = 0;
                while (i < vars && ++f[static_cast<std::size_t>(i)] == s)
                    f[static_cast<std::size_t>(i++)] = 0;
                if (i == vars)
                    return result;
            }
        }

        struct Span
        {
            std::vector<int> vertices;
            std::vector<std::pair<int, std::vector<int>>> slots;
        };

        enum class Mode
        {
            Models,
            MinimalNonModels
        };

        class Augmenter
        {
        public:
            Augmenter(const Theory & t, int n, Mode mode) :
                theory_(t),
                n_(n),
                mode_(mode),
                axioms_(t.axioms()),
                horizon_(std::min(t.max_variable_count(), n))
            {
                surjections_.resize(axioms_.size());
                for (std::size_t a = 0; a < axioms_.size(); ++a) {
                    surjections_[a].resize(static_cast<std::size_t>(horizon_ + 1));
                    for (int s = 1; s <= horizon_; ++s)
                        surjections_[a][static_cast<std::size_t>(s)] = surjections(axioms_[a].variable_count, s);
                }
                int v = n - 1;
                for (int s = 1; s <= horizon_; ++s) {
                    std::vector<int> pick(static_cast<std::size_t>(n - 1), 0);
                    std::fill(pick.begin(), pick.begin() + (s - 1), 1);
                    do {
                        Span span;
                        for (int u = 0; u < n - 1; ++u)
                            if (pick[static_cast<std::size_t>(u)])
                                span.vertices.push_back(u);
                        span.vertices.push_back(v);
                        for (std::size_t p = 0; p < t.language().size(); ++p) {
                            if (t.language().arity(static_cast<int>(p)) != s)
                                continue;
                            auto perm = span.vertices;
                            std::sort(perm.begin(), perm.end());
                            do
                                span.slots.emplace_back(static_cast<int>(p), perm);
                            while (std::next_permutation(perm.begin(), perm.end()));
                        }
                        spans_.push_back(std::move(span));
                    } while (std::prev_permutation(pick.begin(), pick.end()));
                }
            }

            void extend(const Structure & parent, std::map<CanonicalCode, Structure> & out)
            {
                Structure m(parent.language_ptr(), n_);
                for (std::size_t p = 0; p < parent.language().size(); ++p)
                    for (auto & t : parent.tuples(static_cast<int>(p)))
                        m.set(static_cast<int>(p), t);
                if (mode_ == Mode::MinimalNonModels && n_ > horizon_)
                    return;
                recurse(m, 0, out);
            }

        private:
            const Theory & theory_;
            int n_;
            Mode mode_;
            std::vector<UniversalAxiom> axioms_;
            int horizon_;
            std::vector<std::vector<std::vector<std::vector<int>>>> surjections_;
            std::vector<Span> spans_;

            bool span_ok(const Structure & m, const Span & span) const
            {
                int s = static_cast<int>(span.vertices.size());
                std::vector<int> assignment;
                for (std::size_t a = 0; a < axioms_.size(); ++a) {
                    for (auto & f : surjections_[a][static_cast<std::size_t>(s)]) {
                        assignment.resize(f.size());
                        for (std::size_t i = 0; i < f.size(); ++i)
                            assignment[i] = span.vertices[static_cast<std::size_t>(f[i])];
                        if (! eval(axioms_[a].matrix, m, assignment))
                            return false;
                    }
                }
                return true;
            }

            void recurse(Structure & m, std::size_t index, std::map<CanonicalCode, Structure> & out)
            {
                if (index == spans_.size()) {
                    auto form = canonical_form(m);
                    if (! out.count(form.code))
                        out.emplace(form.code, m.relabeled(form.labeling));
                    return;
                }
                const Span & span = spans_[index];
                bool last = index + 1 == spans_.size();
                bool want_failure = mode_ == Mode::MinimalNonModels && last && static_cast<int>(span.vertices.size()) == n_;
                std::size_t c = span.slots.size();
                std::uint64_t total = std::uint64_t{1} << c;
                for (std::uint64_t mask = 0; mask < total; ++mask) {
                    for (std::size_t i = 0; i < c; ++i)
                        m.set(span.slots[i].first, span.slots[i].second, (mask >> i) & 1U);
                    if (span_ok(m, span) != want_failure)
                        recurse(m, index + 1, out);
                }
                for (std::size_t i = 0; i < c; ++i)
                    m.set(span.slots[i].first, span.slots[i].second, false);
            }
        };

        bool nullary_axioms_hold(const Theory & t)
        {
            Structure empty(t.language_ptr(), 0);
            for (auto & a : t.axioms())
                if (a.variable_count == 0 && ! eval(a.matrix, empty, {}))
                    return false;
            return true;
        }

        std::vector<Structure> augment_all(const Theory & t, const std::vector<Structure> & parents, int n, Mode mode, int workers)
        {
            Augmenter shared(t, n, mode);
            auto parts = parallel_map(parents, workers, [&](const Structure & parent) {
                Augmenter local = shared;
                std::map<CanonicalCode, Structure> found;
                local.extend(parent, found);
                return found;
            });
            std::map<CanonicalCode, Structure> merged;
            for (auto & part : parts)
                for (auto & entry : part)
                    merged.emplace(entry.first, entry.second);
            std::vector<Structure> result;
            for (auto & entry : merged)
                result.push_back(std::move(entry.second));
            return result;
        }
    }

    std::vector<Structure> enumerate_models(const Theory & t, int n, int workers)
    {
        if (n < 0)
            throw Error("size must be non-negative");
        std::vector<Structure> level;
        if (nullary_axioms_hold(t))
            level.emplace_back(t.language_ptr(), 0);
        for (int size = 1; size <= n && ! level.empty(); ++size)
            level = augment_all(t, level, size, Mode::Models, workers);
        return level;
    }

    std::vector<Structure> minimal_non_models(const Theory & t, int workers)
    {
        if (! nullary_axioms_hold(t))
            return {Structure(t.language_ptr(), 0)};
        std::vector<Structure> result;
        std::vector<Structure> level{Structure(t.language_ptr(), 0)};
        int k = t.max_variable_count();
        for (int size = 1; size <= k && ! level.empty(); ++size) {
            auto bad = augment_all(t, level, size, Mode::MinimalNonModels, workers);
            result.insert(result.end(), bad.begin(), bad.end());
            if (size < k)
                level = augment_all(t, level, size, Mode::Models, workers);
        }
        return result;
    }

    ForbiddenFamily forbidden_family_from_theory(const Theory & t)
    {
        ForbiddenFamily result;
        result.k = t.max_variable_count();
        Theory pure(t.language_ptr(), {});
        for (int size = 0; size <= result.k; ++size)
            for (auto & m : enumerate_models(pure, size))
                if (! is_model(m, t))
                    result.family.push_back(m);
        return result;
    }

    std::vector<Structure> brute_force_models(const Theory & t, int n)
    {
        std::vector<Structure> classes;
        for_each_labeled_structure(t.language_ptr(), n, [&](const Structure & m) {
            if (! is_model(m, t))
                return;
            for (auto & c : classes)
                if (are_isomorphic_brute(c, m))
                    return;
            classes.push_back(m);
        });
        return classes;
    }
}
