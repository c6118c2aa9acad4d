#pragma once

#include <turan/language.hpp>

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace turan
{
    class Structure;

    enum class Connective
    {
        True,
        False,
        Atom,
        Equal,
        Not,
        And,
        Or,
        Implies,
        Iff
    };

    /// Immutable quantifier-free formula. Variables are 1-based (x1, x2, ...);
    /// atoms refer to predicate symbols by index into an ambient Language.
    /// Copies share structure.
    class Formula
    {
    public:
        Formula();

        static Formula truth(bool value);
        static Formula atom(int symbol, std::vector<int> variables);
        static Formula equal(int lhs, int rhs);
        static Formula negation(Formula f);
        static Formula conjunction(Formula lhs, Formula rhs);
        static Formula disjunction(Formula lhs, Formula rhs);
        static Formula implication(Formula lhs, Formula rhs);
        static Formula biconditional(Formula lhs, Formula rhs);

        /// Folds with the neutral element for empty input (true / false).
        static Formula all_of(const std::vector<Formula> & fs);
        static Formula any_of(const std::vector<Formula> & fs);
        /// x_i != x_j for every pair i < j among `variables`.
        static Formula pairwise_distinct(const std::vector<int> & variables);

        Connective connective() const noexcept;
        int symbol() const noexcept;
        const std::vector<int> & variables() const noexcept;
        const Formula & lhs() const;
        const Formula & rhs() const;
        /// Operand of a negation.
        const Formula & operand() const { return lhs(); }

        bool is_binary() const noexcept;
        /// Largest variable index appearing, 0 when none.
        int max_variable() const;
        /// Throws LanguageMismatch if an atom is out of `language` or has the wrong arity.
        void check_against(const Language & language) const;

        /// Structural equality.
        bool operator==(const Formula & other) const;

        /// Replaces every variable x_i with x_{map[i-1]}.
        Formula rename(std::span<const int> map) const;

    private:
        struct Node;
        explicit Formula(std::shared_ptr<const Node> node);
        std::shared_ptr<const Node> node_;
    };

    /// Replaces every atom's symbol index s with map[s].
    Formula remap_symbols(const Formula & f, std::span<const int> map);

    Formula operator!(Formula f);
    Formula operator&&(Formula a, Formula b);
    Formula operator||(Formula a, Formula b);

    /// Truth of `f` in `m` under `assignment` (0-based vertices; entry i binds x_{i+1}).
    /// Atoms are false on non-injective tuples. Throws Error on an unbound variable.
    bool eval(const Formula & f, const Structure & m, std::span<const int> assignment);

    /// Renders in the DSL syntax, with minimal parentheses.
    std::string to_string(const Formula & f, const Language & language);
}
