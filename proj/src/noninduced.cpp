#include <turan/dsl.hpp>
#include <turan/enumerate.hpp>
#include <turan/error.hpp>
#include <turan/noninduced.hpp>

#include <numeric>
#include <sstream>

namespace turan
{
    namespace
    {
        void check_member(const Structure & f, int edge)
        {
            for (const auto & t : f.tuples(edge))
                if (! f.holds(edge, std::vector<int>{t[1], t[0]}))
                    throw LanguageMismatch("family member has a non-symmetric edge relation:\n" + to_text(f));
        }
    }

    NoninducedInstance make_noninduced_instance(const Theory & base, std::vector<Structure> family)
    {
        if (base.language().find("E"))
            throw LanguageMismatch("the base language must not contain the edge symbol E");
        NoninducedInstance instance;
        instance.base = base;
        instance.full = make_language(base.language().with({"E", 2}));
        instance.edge = static_cast<int>(instance.full->size()) - 1;
        for (auto & f : family) {
            if (f.language() != *instance.full)
                throw LanguageMismatch("family member over " + f.language().to_string() + ", expected " + instance.full->to_string());
            check_member(f, instance.edge);
            instance.family.push_back(f.with_language(instance.full));
        }
        return instance;
    }

    NoninducedInstance parse_noninduced(std::string_view text)
    {
        std::istringstream in{std::string(text)};
        std::string line;
        std::string header;
        std::vector<std::string> blocks;
        std::vector<int> first_lines;
        int number = 0;
        bool in_header = true;
        while (std::getline(in, line)) {
            ++number;
            auto trimmed = line;
            trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
            if (trimmed.rfind("---", 0) == 0) {
                in_header = false;
                blocks.emplace_back();
                first_lines.push_back(number + 1);
                header += "\n";
                continue;
            }
            if (in_header)
                header += line + "\n";
            else
                blocks.back() += line + "\n";
        }
        auto base = parse_theory(header);
        NoninducedInstance instance = make_noninduced_instance(base, {});
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            try {
                instance.family.push_back(parse_structure(blocks[b], instance.full));
                check_member(instance.family.back(), instance.edge);
            }
            catch (const ParseError & e) {
                throw ParseError(std::string("in structure ") + std::to_string(b + 1) + ": " + e.what(), first_lines[b] + e.line() - 1, e.column());
            }
        }
        return instance;
    }

    std::vector<Structure> effective_family(const NoninducedInstance & instance)
    {
        auto family = instance.family;
        for (auto & m : minimal_non_models(instance.base)) {
            Structure lifted(instance.full, m.size());
            for (std::size_t p = 0; p < instance.base.language().size(); ++p)
                for (auto & t : m.tuples(static_cast<int>(p)))
                    lifted.set(static_cast<int>(p), t);
            family.push_back(std::move(lifted));
        }
        return family;
    }

    Theory noninduced_theory(const NoninducedInstance & instance)
    {
        Theory t = instance.base.extended_to(instance.full);
        int e = instance.edge;
        t = t.with_axiom({2, Formula::implication(Formula::atom(e, {1, 2}), Formula::atom(e, {2, 1}))});
        std::vector<UniversalAxiom> axioms;
        for (auto & f : instance.family) {
            std::vector<int> vars(static_cast<std::size_t>(f.size()));
            std::iota(vars.begin(), vars.end(), 1);
            std::vector<Formula> parts{Formula::pairwise_distinct(vars)};
            for (std::size_t p = 0; p < instance.full->size(); ++p) {
                int symbol = static_cast<int>(p);
                for_each_injective_tuple(f.size(), instance.full->arity(symbol), [&](std::span<const int> tuple) {
                    std::vector<int> atom_vars;
                    for (int v : tuple)
                        atom_vars.push_back(v + 1);
                    auto atom = Formula::atom(symbol, atom_vars);
                    if (f.holds(symbol, tuple))
                        parts.push_back(atom);
                    else if (symbol != e)
                        parts.push_back(! atom);
                });
            }
            axioms.push_back({f.size(), ! Formula::all_of(parts)});
        }
        return t.with_axioms(axioms);
    }

    namespace
    {
        std::vector<int> base_symbols(const NoninducedInstance & instance)
        {
            std::vector<int> kept(instance.base.language().size());
            std::iota(kept.begin(), kept.end(), 0);
            return kept;
        }

        std::vector<Box> proper_boxes(const std::vector<Structure> & family, const NoninducedInstance & instance, const SignatureSpace & space)
        {
            std::vector<Box> boxes;
            auto kept = base_symbols(instance);
            for (std::size_t i = 0; i < family.size(); ++i) {
                auto more = proper_split_orderings(family[i], instance.edge, space, kept, static_cast<int>(i));
                boxes.insert(boxes.end(), more.begin(), more.end());
            }
            return boxes;
        }
    }

    NoninducedResult chi_noninduced(const NoninducedInstance & instance, const ChiOptions & options)
    {
        NoninducedResult result;
        result.family = effective_family(instance);
        auto kept = base_symbols(instance);
        auto base_language = instance.base.language_ptr();

        SignatureSpace first(base_language, 1);
        std::vector<Box> erased;
        for (std::size_t i = 0; i < result.family.size(); ++i) {
            auto more = compatibility_boxes(reduct(result.family[i], base_language, kept), first, {}, static_cast<int>(i));
            erased.insert(erased.end(), more.begin(), more.end());
        }
        auto finite = slice_covered(full_slice(first), erased);
        if (! finite.covered) {
            result.value = ChiValue::infinity();
            result.uncovered = finite.uncovered;
            result.uncovered_level = 1;
            return result;
        }
        result.value = ChiValue::undecided(options.cap);
        for (int level = 1; level <= options.cap; ++level) {
            SignatureSpace space(base_language, level);
            auto boxes = proper_boxes(result.family, instance, space);
            auto cover = slice_covered(full_slice(space), boxes);
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
        return result;
    }

    AgreementReport agreement_check(const NoninducedInstance & instance, const ChiOptions & options)
    {
        AgreementReport report;
        auto fast = chi_noninduced(instance, options);
        ExtendedTheory extended{noninduced_theory(instance), instance.edge, true};
        auto general = chi_of_extended(extended, options);
        report.fast = fast.value;
        report.general = general.value;
        report.agree = fast.value == general.value;

        auto family = fast.family;
        auto closure = upward_closure(family, instance.edge);
        auto kept = base_symbols(instance);
        auto base_language = instance.base.language_ptr();
        std::vector<Structure> erased;
        for (auto & f : family)
            erased.push_back(reduct(f, base_language, kept));

        int top = 2;
        if (fast.value.kind == ChiKind::Finite)
            top = std::max(top, fast.value.value);
        for (int level = 1; level <= top && report.claims_hold; ++level) {
            SignatureSpace small(base_language, level);
            SignatureSpace big(instance.full, level);
            if (small.dimension() > 12)
                break;
            auto proper = proper_boxes(family, instance, small);
            auto erased_boxes = std::vector<Box>{};
            for (auto & m : erased) {
                auto more = compatibility_boxes(m, small);
                erased_boxes.insert(erased_boxes.end(), more.begin(), more.end());
            }
            auto turan = turan_slice(big, instance.edge);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << small.dimension()) && report.claims_hold; ++mask) {
                Pattern q_small(small.dimension(), static_cast<unsigned long>(mask));
                // lift: the base coordinates come first in both spaces
                Pattern q_turan = turan.values;
                for (std::size_t c = 0; c < small.dimension(); ++c)
                    q_turan.set(c, q_small.test(c));
                bool lifted = pattern_in_uniformity_set(q_turan, closure, big).has_value();
                bool restricted = std::any_of(proper.begin(), proper.end(), [&](const Box & b) { return b.contains(q_small); });
                ++report.patterns_checked;
                if (lifted != restricted) {
                    report.claims_hold = false;
                    report.detail = "Turán restriction mismatch at level " + std::to_string(level);
                }
                if (level == 1) {
                    Pattern q_complete = complete_slice(big, instance.edge).values;
                    for (std::size_t c = 0; c < small.dimension(); ++c)
                        q_complete.set(c, q_small.test(c));
                    bool lifted_complete = pattern_in_uniformity_set(q_complete, closure, big).has_value();
                    bool erased_in = std::any_of(erased_boxes.begin(), erased_boxes.end(), [&](const Box & b) { return b.contains(q_small); });
                    ++report.patterns_checked;
                    if (lifted_complete != erased_in) {
                        report.claims_hold = false;
                        report.detail = "complete restriction mismatch";
                    }
                }
            }
        }
        if (! report.agree || ! report.claims_hold)
            throw InvariantViolation("routes disagree: general " + general.value.to_string() + ", fast path " + fast.value.to_string() +
                (report.detail.empty() ? "" : "; " + report.detail));
        return report;
    }
}
