#pragma once

#include <turan/chromatic.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace turan
{
    /// Graphs with extra structure from a base theory over L, forbidding the
    /// family members as subgraphs that are non-induced in the edge relation
    /// (the other symbols are matched exactly).
    struct NoninducedInstance
    {
        Theory base;
        /// Base language followed by the edge symbol.
        LanguagePtr full;
        int edge = 0;
        std::vector<Structure> family;
    };

    /// Builds the full language (base symbols, then E/2) and checks members.
    NoninducedInstance make_noninduced_instance(const Theory & base, std::vector<Structure> family);

    /// Header in the theory DSL (the base theory), then structures over the
    /// base language plus E, each preceded by a line "---".
    NoninducedInstance parse_noninduced(std::string_view text);

    /// Members plus the base theory's minimal non-models with no edges.
    std::vector<Structure> effective_family(const NoninducedInstance & instance);

    /// Graph axioms, base axioms and one non-induced exclusion per member.
    Theory noninduced_theory(const NoninducedInstance & instance);

    struct NoninducedResult
    {
        ChiValue value;
        std::vector<Structure> family;
        std::vector<Box> witnesses;
        std::optional<Pattern> uncovered;
        int uncovered_level = 0;
        std::vector<LevelRecord> trace;
    };

    /// Fast path: finiteness from coverage of every level-1 pattern over L by
    /// the uniformity set of the edge-erased family; value = least level whose
    /// full pattern space over L is covered by proper split orderings.
    NoninducedResult chi_noninduced(const NoninducedInstance & instance, const ChiOptions & options = {});

    struct AgreementReport
    {
        ChiValue general;
        ChiValue fast;
        bool agree = false;
        /// Patterns compared by the restriction bijections.
        std::size_t patterns_checked = 0;
        bool claims_hold = true;
        std::string detail;
    };

    /// Runs both routes and compares the restriction bijections on
    /// enumerable levels. Throws InvariantViolation on disagreement.
    AgreementReport agreement_check(const NoninducedInstance & instance, const ChiOptions & options = {});
}
