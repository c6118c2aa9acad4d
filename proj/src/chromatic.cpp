#include <turan/canon.hpp>
#include <turan/chromatic.hpp>
#include <turan/enumerate.hpp>
#include <turan/error.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace turan
{
    std::string ChiValue::to_string() const
    {
        switch (kind) {
        case ChiKind::Finite:
            return std::to_string(value);
        case ChiKind::Infinity:
            return "infinity";
        case ChiKind::Undecided:
            return "undecided>=" + std::to_string(value);
        }
        return "?";
    }

    namespace
    {
        bool symmetric_in_small_models(const Theory & t, int symbol)
        {
            for (int n = 0; n <= 2; ++n)
                for (auto & m : enumerate_models(t, n))
                    for (auto & pair : m.tuples(symbol))
                        if (! m.holds(symbol, std::array{pair[1], pair[0]}))
                            return false;
            return true;
        }
    }

    ExtendedTheory build_extended_theory(const Interpretation & interp, const Theory & t, bool allow_shortcut)
    {
        if (interp.source().size() != 1 || interp.source().arity(0) != 2)
            throw LanguageMismatch("the interpretation must start from the theory of graphs");
        if (interp.target() != t.language())
            throw LanguageMismatch("interpretation target differs from the theory's language");
        const Formula & image = interp.written(0);
        if (allow_shortcut && image.connective() == Connective::Atom && image.variables() == std::vector<int>{1, 2} &&
            t.language().arity(image.symbol()) == 2 && symmetric_in_small_models(t, image.symbol()))
            return {t, image.symbol(), true};
        auto name = t.language().fresh_name("E");
        auto language = make_language(t.language().with({name, 2}));
        int edge = static_cast<int>(language->size()) - 1;
        auto extended = t.extended_to(language);
        auto e = [&](int a, int b) { return Formula::atom(edge, {a, b}); };
        extended = extended.with_axiom({2, Formula::implication(e(1, 2), e(2, 1))});
        extended = extended.with_axiom({2, Formula::biconditional(e(1, 2), interp[0])});
        return {extended, edge, false};
    }

    namespace
    {
        std::string check_not_covered(const Pattern & q, const std::vector<Structure> & family, const SignatureSpace & space, const std::string & what)
        {
            if (auto w = pattern_in_uniformity_set(q, family, space))
                return what + " is realized by family member " + std::to_string(w->member) + " under " + w->order.to_string();
            return {};
        }
    }

    ChiResult chi_of_extended(const ExtendedTheory & extended, const ChiOptions & options)
    {
        ChiResult result;
        result.extended = extended;
        const Theory & t = extended.theory;
        int edge = extended.edge;
        result.variable_count = t.max_variable_count();
        result.family = minimal_non_models(t, options.workers);
        for (int n = 0; n <= result.variable_count + 1 && ! result.degenerate; ++n)
            if (enumerate_models(t, n, options.workers).empty())
                result.degenerate = true;

        SignatureSpace first(t.language_ptr(), 1);
        auto complete_boxes = family_boxes(result.family, first, {}, options.workers);
        {
            std::vector<Box> restricted;
            for (auto & b : complete_boxes) {
                auto & m = result.family[static_cast<std::size_t>(b.source)];
                bool all_edges = true;
                for (int u = 0; u < m.size() && all_edges; ++u)
                    for (int v = 0; v < m.size() && all_edges; ++v)
                        if (u != v && ! m.holds(edge, std::array{u, v}))
                            all_edges = false;
                if (all_edges)
                    restricted.push_back(b);
            }
            complete_boxes = std::move(restricted);
        }
        auto complete = slice_covered(complete_slice(first, edge), complete_boxes);
        if (! complete.covered) {
            result.value = ChiValue::infinity();
            result.uncovered = complete.uncovered;
            result.uncovered_level = 1;
        }
        else {
            for (auto i : complete.used)
                result.complete_boxes.push_back(complete_boxes[i]);
            result.value = ChiValue::undecided(options.cap);
            for (int level = 1; level <= options.cap; ++level) {
                SignatureSpace space(t.language_ptr(), level);
                auto boxes = std::vector<Box>{};
                for (std::size_t i = 0; i < result.family.size(); ++i) {
                    auto more = compatibility_boxes(result.family[i], space, turan_constraint(result.family[i], edge), static_cast<int>(i));
                    boxes.insert(boxes.end(), more.begin(), more.end());
                }
                auto cover = slice_covered(turan_slice(space, edge), boxes);
                result.trace.push_back({level, cover.covered, boxes.size(), cover.nodes});
                if (cover.covered) {
                    result.value = ChiValue::finite(level);
                    for (auto i : cover.used)
                        result.witnesses.push_back(boxes[i]);
                    break;
                }
                result.uncovered = cover.uncovered;
                result.uncovered_level = level;
            }
            if (result.value.kind == ChiKind::Undecided) {
                result.uncovered.reset();
                result.uncovered_level = 0;
            }
        }

        if (! options.verify)
            return result;

        auto problem = verify_chi_certificate(result);
        if (! problem.empty())
            throw InvariantViolation("certificate re-check failed: " + problem);
        result.checks.push_back("certificate re-verified");

        if (result.value.kind == ChiKind::Finite) {
            int next = result.value.value + 1;
            if (! turan_level_covered(result, next))
                throw InvariantViolation("coverage at level " + std::to_string(next - 1) + " but not at level " + std::to_string(next));
            result.checks.push_back("coverage monotone: level " + std::to_string(next) + " covered");
        }
        for (auto & record : result.trace)
            if (record.covered && record.level != result.value.value)
                throw InvariantViolation("coverage recorded below the reported value");
        if (result.uncovered && result.value.kind == ChiKind::Finite) {
            SignatureSpace top(t.language_ptr(), result.uncovered_level);
            for (int lower = 1; lower < result.uncovered_level; ++lower) {
                SignatureSpace space(t.language_ptr(), lower);
                auto q = restrict_pattern(*result.uncovered, top, space);
                auto slice = turan_slice(space, edge);
                if (! ((q & slice.mask) == (slice.values & slice.mask)))
                    throw InvariantViolation("restricted pattern left the Turán slice");
                auto issue = check_not_covered(q, result.family, space, "restriction to level " + std::to_string(lower));
                if (! issue.empty())
                    throw InvariantViolation(issue);
            }
            result.checks.push_back("restrictions of the uncovered pattern stay uncovered below level " + std::to_string(result.uncovered_level));
        }
        if (result.degenerate && ! (result.value.kind == ChiKind::Finite && result.value.value == 1))
            throw InvariantViolation("theory without models of some size but chi is " + result.value.to_string());
        if (result.degenerate)
            result.checks.push_back("degenerate theory, chi = 1");
        return result;
    }

    bool turan_level_covered(const ChiResult & result, int level)
    {
        const Theory & t = result.extended.theory;
        int edge = result.extended.edge;
        SignatureSpace space(t.language_ptr(), level);
        std::vector<Box> boxes;
        for (std::size_t i = 0; i < result.family.size(); ++i) {
            auto more = compatibility_boxes(result.family[i], space, turan_constraint(result.family[i], edge), static_cast<int>(i));
            boxes.insert(boxes.end(), more.begin(), more.end());
        }
        return slice_covered(turan_slice(space, edge), boxes).covered;
    }

    ChiResult chi(const Interpretation & interp, const Theory & t, const ChiOptions & options)
    {
        return chi_of_extended(build_extended_theory(interp, t, options.shortcut), options);
    }

    std::string verify_chi_certificate(const ChiResult & result)
    {
        const Theory & t = result.extended.theory;
        int edge = result.extended.edge;
        auto rederive = [&](const std::vector<Box> & boxes, const SignatureSpace & space, bool complete) -> std::string {
            for (auto & b : boxes) {
                if (b.source < 0 || b.source >= static_cast<int>(result.family.size()))
                    return "box without a family member";
                const auto & m = result.family[static_cast<std::size_t>(b.source)];
                if (b.order.size() != m.size() || b.order.parts != space.parts() || ! b.order.valid())
                    return "box of member " + std::to_string(b.source) + " has a malformed split order";
                auto allowed = complete ? complete_constraint(m, edge) : turan_constraint(m, edge);
                for (int u = 0; u < m.size(); ++u)
                    for (int v = 0; v < m.size(); ++v)
                        if (u != v && ! allowed(u, v, b.order.part[static_cast<std::size_t>(u)], b.order.part[static_cast<std::size_t>(v)]))
                            return "box of member " + std::to_string(b.source) + " under " + b.order.to_string() + " violates the part constraint";
                auto again = box_of(m, space, b.order);
                if (again.required != b.required || again.forbidden != b.forbidden)
                    return "box of member " + std::to_string(b.source) + " under " + b.order.to_string() + " does not re-derive";
            }
            return {};
        };
        SignatureSpace first(t.language_ptr(), 1);
        if (result.value.kind == ChiKind::Infinity) {
            if (! result.uncovered)
                return "infinite value without an uncovered complete pattern";
            auto slice = complete_slice(first, edge);
            if (! ((*result.uncovered & slice.mask) == (slice.values & slice.mask)))
                return "uncovered pattern is not complete";
            return check_not_covered(*result.uncovered, result.family, first, "uncovered complete pattern");
        }
        if (result.value.kind == ChiKind::Undecided)
            return {};
        if (auto issue = rederive(result.complete_boxes, first, true); ! issue.empty())
            return issue;
        if (! slice_covered(complete_slice(first, edge), result.complete_boxes).covered)
            return "complete slice not covered by the recorded boxes";
        int level = result.value.value;
        SignatureSpace space(t.language_ptr(), level);
        if (auto issue = rederive(result.witnesses, space, false); ! issue.empty())
            return issue;
        if (! slice_covered(turan_slice(space, edge), result.witnesses).covered)
            return "Turán slice at level " + std::to_string(level) + " not covered by the recorded boxes";
        if (level >= 2) {
            if (! result.uncovered || result.uncovered_level != level - 1)
                return "missing uncovered Turán pattern at level " + std::to_string(level - 1);
            SignatureSpace lower(t.language_ptr(), level - 1);
            auto slice = turan_slice(lower, edge);
            if (! ((*result.uncovered & slice.mask) == (slice.values & slice.mask)))
                return "uncovered pattern is not a Turán pattern";
            return check_not_covered(*result.uncovered, result.family, lower, "uncovered Turán pattern");
        }
        return {};
    }

    std::string DensityValue::to_string() const
    {
        if (minus_infinity)
            return "-inf";
        std::ostringstream out;
        out << value;
        return out.str();
    }

    DensityValue pi(const ChiValue & chi, int t)
    {
        if (t < 0)
            throw Error("clique size must be non-negative");
        if (chi.kind == ChiKind::Undecided)
            throw Error("density undefined for an undecided chromatic number");
        if (chi.kind == ChiKind::Finite && chi.value <= 1)
            return {true, 0};
        if (chi.kind == ChiKind::Infinity || t == 0)
            return {false, 1};
        Rational product = 1;
        for (int j = 1; j <= t - 1; ++j)
            product *= Rational(1) - Rational(j, chi.value - 1);
        if (product < 0)
            product = 0;
        return {false, product};
    }

    namespace
    {
        bool adjacent(const Structure & g, int edge, int u, int v)
        {
            return g.holds(edge, std::array{u, v}) || g.holds(edge, std::array{v, u});
        }

        bool colourable(const Structure & g, int k, std::vector<int> & colour, const std::vector<int> & order, std::size_t depth)
        {
            if (depth == order.size())
                return true;
            int v = order[depth];
            int highest = -1;
            for (std::size_t i = 0; i < depth; ++i)
                highest = std::max(highest, colour[static_cast<std::size_t>(order[i])]);
            for (int c = 0; c < k && c <= highest + 1; ++c) {
                bool ok = true;
                for (std::size_t i = 0; i < depth && ok; ++i)
                    if (colour[static_cast<std::size_t>(order[i])] == c && adjacent(g, 0, v, order[i]))
                        ok = false;
                if (! ok)
                    continue;
                colour[static_cast<std::size_t>(v)] = c;
                if (colourable(g, k, colour, order, depth + 1))
                    return true;
            }
            colour[static_cast<std::size_t>(v)] = -1;
            return false;
        }
    }

    int graph_chromatic(const Structure & g)
    {
        int n = g.size();
        if (n == 0)
            return 0;
        std::vector<int> degree(static_cast<std::size_t>(n), 0);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && adjacent(g, 0, u, v))
                    ++degree[static_cast<std::size_t>(u)];
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)]; });
        for (int k = 1; k <= n; ++k) {
            std::vector<int> colour(static_cast<std::size_t>(n), -1);
            if (colourable(g, k, colour, order, 0))
                return k;
        }
        return n;
    }

    std::vector<int> order_of(const Structure & m, int order_symbol)
    {
        std::vector<int> order(static_cast<std::size_t>(m.size()));
        std::iota(order.begin(), order.end(), 0);
        std::vector<int> below(static_cast<std::size_t>(m.size()), 0);
        for (auto & t : m.tuples(order_symbol))
            ++below[static_cast<std::size_t>(t[1])];
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return below[static_cast<std::size_t>(a)] < below[static_cast<std::size_t>(b)]; });
        for (std::size_t i = 0; i < order.size(); ++i)
            for (std::size_t j = i + 1; j < order.size(); ++j)
                if (! m.holds(order_symbol, std::array{order[i], order[j]}))
                    throw Error("order symbol is not a strict linear order");
        return order;
    }

    int interval_chromatic(const Structure & g, int edge, std::optional<int> order_symbol)
    {
        std::vector<int> order(static_cast<std::size_t>(g.size()));
        std::iota(order.begin(), order.end(), 0);
        if (order_symbol)
            order = order_of(g, *order_symbol);
        if (order.empty())
            return 0;
        int colours = 1;
        std::size_t start = 0;
        for (std::size_t i = 1; i < order.size(); ++i) {
            for (std::size_t j = start; j < i; ++j)
                if (adjacent(g, edge, order[i], order[j])) {
                    ++colours;
                    start = i;
                    break;
                }
        }
        return colours;
    }

    std::optional<int> multipartite_parts(const Structure & g)
    {
        int n = g.size();
        std::vector<int> cls(static_cast<std::size_t>(n), -1);
        int parts = 0;
        for (int u = 0; u < n; ++u) {
            if (cls[static_cast<std::size_t>(u)] != -1)
                continue;
            cls[static_cast<std::size_t>(u)] = parts;
            for (int v = u + 1; v < n; ++v)
                if (cls[static_cast<std::size_t>(v)] == -1 && ! adjacent(g, 0, u, v))
                    cls[static_cast<std::size_t>(v)] = parts;
            ++parts;
        }
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && adjacent(g, 0, u, v) == (cls[static_cast<std::size_t>(u)] == cls[static_cast<std::size_t>(v)]))
                    return std::nullopt;
        return std::max(parts, 1);
    }

    std::optional<int> min_complete_multipartite(const std::vector<Structure> & family)
    {
        std::optional<int> best;
        for (auto & g : family)
            if (auto parts = multipartite_parts(g); parts && (! best || *parts < *best))
                best = parts;
        return best;
    }

    ChiValue induced_family_chi(const std::vector<Structure> & family)
    {
        bool has_complete = false;
        for (auto & g : family)
            if (g.tuple_count(0) == static_cast<std::size_t>(g.size()) * static_cast<std::size_t>(std::max(g.size() - 1, 0)))
                has_complete = true;
        if (! has_complete)
            return ChiValue::infinity();
        return ChiValue::finite(*min_complete_multipartite(family));
    }
}
