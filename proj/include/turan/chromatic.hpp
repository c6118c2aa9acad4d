#pragma once

#include <turan/cover.hpp>
#include <turan/models.hpp>
#include <turan/pattern.hpp>
#include <turan/theory.hpp>

#include <optional>
#include <string>
#include <vector>

namespace turan
{
    enum class ChiKind
    {
        Finite,
        Infinity,
        Undecided
    };

    struct ChiValue
    {
        ChiKind kind = ChiKind::Finite;
        int value = 0; ///< the finite value, or the cap when undecided

        static ChiValue finite(int v) { return {ChiKind::Finite, v}; }
        static ChiValue infinity() { return {ChiKind::Infinity, 0}; }
        static ChiValue undecided(int cap) { return {ChiKind::Undecided, cap}; }

        /// "3", "infinity" or "undecided>=16".
        std::string to_string() const;
        bool operator==(const ChiValue &) const = default;
    };

    /// Theory over L ∪ {E} whose edge symbol mirrors the interpreted graph.
    struct ExtendedTheory
    {
        Theory theory;
        int edge = 0;
        bool shortcut = false;
    };

    /// Uses the input theory itself when the interpretation sends E to one of
    /// its binary symbols and that symbol is already a graph relation;
    /// otherwise adds a fresh edge symbol with the graph axioms and the
    /// biconditional with the interpreted formula.
    ExtendedTheory build_extended_theory(const Interpretation & interp, const Theory & t, bool allow_shortcut = true);

    struct ChiOptions
    {
        int cap = 16;
        bool shortcut = true;
        int workers = 1;
        /// Re-check certificates, monotonicity and restriction properties.
        bool verify = true;
    };

    struct LevelRecord
    {
        int level = 0;
        bool covered = false;
        std::size_t boxes = 0;
        std::uint64_t nodes = 0;
    };

    struct ChiResult
    {
        ChiValue value;
        ExtendedTheory extended;
        /// Minimal non-models of the extended theory.
        std::vector<Structure> family;
        int variable_count = 0;
        /// Some size <= variable_count+1 without models was found.
        bool degenerate = false;

        /// Finite: the boxes (member, split order) covering the Turán slice
        /// at `value`. Coverage of the complete slice uses `complete_boxes`.
        std::vector<Box> witnesses;
        std::vector<Box> complete_boxes;
        /// Infinity: an uncovered complete pattern (level 1). Finite with
        /// value >= 2: an uncovered Turán pattern at value-1.
        std::optional<Pattern> uncovered;
        int uncovered_level = 0;

        std::vector<LevelRecord> trace;
        /// Verification notes (monotonicity, restriction, re-checks).
        std::vector<std::string> checks;
    };

    /// Abstract chromatic number of the interpretation.
    ChiResult chi(const Interpretation & interp, const Theory & t, const ChiOptions & options = {});
    /// Same, on a theory already containing the edge symbol as a graph relation.
    ChiResult chi_of_extended(const ExtendedTheory & extended, const ChiOptions & options = {});

    /// Whether the Turán slice at `level` is covered by the family of `result`.
    bool turan_level_covered(const ChiResult & result, int level);

    /// Re-derives every box of the certificate from the family, re-runs the
    /// coverage and non-membership checks. Returns an empty string when the
    /// certificate holds, otherwise a description of the failure.
    std::string verify_chi_certificate(const ChiResult & result);

    struct DensityValue
    {
        bool minus_infinity = false;
        Rational value = 0;

        /// "p/q", "1", "0" or "-inf".
        std::string to_string() const;
        bool operator==(const DensityValue &) const = default;
    };

    /// Product over j = 1..t-1 of (1 - j/(chi-1)); 1 for chi = infinity;
    /// -inf for chi <= 1; 1 for t = 0. Undecided values are rejected.
    DensityValue pi(const ChiValue & chi, int t);

    /// Exact chromatic number of a graph over {E}.
    int graph_chromatic(const Structure & g);
    /// Least number of colours whose classes are intervals of the vertex order
    /// and independent in the `edge` relation. The order is read from
    /// `order_symbol` when given, otherwise the vertex numbering is used.
    int interval_chromatic(const Structure & g, int edge = 0, std::optional<int> order_symbol = std::nullopt);
    /// Number of parts (at least 1) when `g` is complete multipartite.
    std::optional<int> multipartite_parts(const Structure & g);
    /// Least part count over the complete multipartite members.
    std::optional<int> min_complete_multipartite(const std::vector<Structure> & family);
    /// Chromatic number of Forb(family) over graphs read off the family:
    /// min_complete_multipartite when a complete graph is present, else infinity.
    ChiValue induced_family_chi(const std::vector<Structure> & family);

    /// Vertices in increasing order of the linear order `order_symbol`.
    std::vector<int> order_of(const Structure & m, int order_symbol);
}
