#pragma once

#include <turan/structure.hpp>
#include <turan/theory.hpp>

#include <vector>

namespace turan
{
    /// One model per isomorphism class of size n, sorted by canonical code.
    /// Built by one-vertex augmentation of the models of size n-1 with
    /// axiom checks as soon as a vertex set's tuples are all decided.
    std::vector<Structure> enumerate_models(const Theory & t, int n, int workers = 1);

    /// Non-models of size <= max_variable_count() all of whose proper induced
    /// substructures are models, up to isomorphism. For a universal theory
    /// T = Forb_{T_L}(these).
    std::vector<Structure> minimal_non_models(const Theory & t, int workers = 1);

    struct ForbiddenFamily
    {
        int k = 0;
        std::vector<Structure> family;
    };

    /// k = max variable count; family = every non-model of size <= k, up to
    /// isomorphism (labeled enumeration; small languages only).
    ForbiddenFamily forbidden_family_from_theory(const Theory & t);

    /// Labeled brute force: all models of size n, clustered by isomorphism
    /// with the exhaustive permutation test. Oracle for small n.
    std::vector<Structure> brute_force_models(const Theory & t, int n);
}
