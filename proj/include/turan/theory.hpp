#pragma once

#include <turan/formula.hpp>
#include <turan/language.hpp>
#include <turan/structure.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace turan
{
    /// Universal closure of `matrix` over x1..x_{variable_count}.
    struct UniversalAxiom
    {
        int variable_count = 0;
        Formula matrix;

        bool operator==(const UniversalAxiom &) const = default;
    };

    /// Variable count is taken from the largest variable used.
    UniversalAxiom make_axiom(Formula matrix);

    /// A universal theory over a finite relational language. The canonicity
    /// axioms (atoms false on repeated arguments) are always part of it and
    /// are never stored among the user axioms.
    class Theory
    {
    public:
        Theory();
        explicit Theory(Language language, std::vector<UniversalAxiom> axioms = {});
        Theory(LanguagePtr language, std::vector<UniversalAxiom> axioms);

        const Language & language() const noexcept { return *language_; }
        const LanguagePtr & language_ptr() const noexcept { return language_; }
        const std::vector<UniversalAxiom> & axioms() const noexcept { return axioms_; }

        std::vector<UniversalAxiom> canonicity_axioms() const;
        /// User axioms followed by canonicity axioms.
        std::vector<UniversalAxiom> all_axioms() const;
        /// Largest variable count over all axioms including canonicity ones.
        int max_variable_count() const;

        Theory with_axiom(UniversalAxiom axiom) const;
        Theory with_axioms(const std::vector<UniversalAxiom> & axioms) const;
        /// Theory over the disjoint union of languages, axioms of both.
        Theory disjoint_union(const Theory & other) const;
        /// Same axioms over a larger language that starts with this one.
        Theory extended_to(LanguagePtr language) const;

    private:
        LanguagePtr language_;
        std::vector<UniversalAxiom> axioms_;
    };

    bool satisfies(const Structure & m, const UniversalAxiom & axiom);
    /// Throws LanguageMismatch when languages differ.
    bool is_model(const Structure & m, const Theory & t);

    Theory graph_theory();
    Theory tournament_theory();
    Theory linorder_theory();
    Theory hypergraph_theory(int k);
    /// "graph", "tournament", "linorder" or "hypergraph<k>"; throws Error otherwise.
    Theory builtin_theory(std::string_view name);

    /// Open interpretation: maps each source symbol P to an open formula over
    /// the target language in variables x1..x_{k(P)}. Formulas that could be
    /// true on a repeated-argument assignment are guarded with pairwise
    /// distinctness, so the image of a canonical structure is canonical.
    class Interpretation
    {
    public:
        Interpretation(LanguagePtr source, LanguagePtr target, std::vector<Formula> map);

        /// Maps every source symbol to the target symbol of the same name.
        static Interpretation identity(LanguagePtr source, LanguagePtr target);

        const Language & source() const noexcept { return *source_; }
        const Language & target() const noexcept { return *target_; }
        const LanguagePtr & source_ptr() const noexcept { return source_; }
        const LanguagePtr & target_ptr() const noexcept { return target_; }
        const Formula & operator[](int symbol) const { return map_.at(static_cast<std::size_t>(symbol)); }
        /// Formula as supplied, before any distinctness guard.
        const Formula & written(int symbol) const { return written_.at(static_cast<std::size_t>(symbol)); }

    private:
        LanguagePtr source_;
        LanguagePtr target_;
        std::vector<Formula> written_;
        std::vector<Formula> map_;
    };

    /// True when `f` (over variables 1..k) can hold on some assignment with
    /// a repeated vertex in some canonical structure over `language`.
    bool may_hold_on_repeats(const Formula & f, int k, const Language & language);

    /// Replaces every source atom by the interpreted formula.
    Formula translate(const Interpretation & interp, const Formula & f);

    struct InterpretationReport
    {
        bool validated = true;
        int size_bound = 0;
        std::optional<Structure> counterexample;
        int failing_axiom = -1; ///< index into source.all_axioms()
        std::string message;
    };

    /// Checks that every model of `target` of size <= size_bound satisfies the
    /// translation of every axiom of `source`.
    InterpretationReport validate_interpretation(const Interpretation & interp, const Theory & source, const Theory & target,
        int size_bound);
}
