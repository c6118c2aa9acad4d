#pragma once

#include <turan/structure.hpp>

#include <optional>
#include <string>
#include <vector>

namespace turan
{
    /// Isomorphism-invariant byte string; equal codes iff isomorphic structures
    /// (over the same language).
    using CanonicalCode = std::string;

    struct CanonicalForm
    {
        CanonicalCode code;
        /// labeling[v] = position of vertex v in the canonical copy.
        std::vector<int> labeling;
    };

    /// Length-prefixed binary form of a labeled structure:
    /// [u32 n][u16 symbols] then per symbol [u8 arity][u32 bytes][bits over
    /// injective tuples in lexicographic order].
    std::string binary_form(const Structure & m);

    CanonicalForm canonical_form(const Structure & m);
    CanonicalCode canonical_code(const Structure & m);

    /// A bijection p with b == a.relabeled(p), or nothing.
    std::optional<std::vector<int>> find_isomorphism(const Structure & a, const Structure & b);
    bool are_isomorphic(const Structure & a, const Structure & b);
    /// Exhaustive permutation test; oracle for small structures.
    bool are_isomorphic_brute(const Structure & a, const Structure & b);

    /// Canonically labeled copy per isomorphism class, sorted by canonical code.
    std::vector<Structure> dedupe_by_code(const std::vector<Structure> & structures);
}
