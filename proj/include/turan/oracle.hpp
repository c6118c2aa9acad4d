#pragma once

#include <turan/chromatic.hpp>

#include <optional>
#include <string>
#include <vector>

namespace turan
{
    /// Largest K_t density of I(N) over the models N of size n; -inf when there are none.
    DensityValue brute_density(const Interpretation & interp, const Theory & t, int clique, int n, int workers = 1);

    /// Whether some model N of size n has the Turán graph T_{n,parts} as a
    /// (not necessarily induced) subgraph of I(N).
    bool chi_direct(const Interpretation & interp, const Theory & t, int parts, int n, int workers = 1);

    /// a < b in the order where -inf is the least value.
    bool density_less(const DensityValue & a, const DensityValue & b);

    struct DensityRow
    {
        int n = 0;
        std::size_t models = 0;
        DensityValue best;
        /// Index (in enumeration order) of a model reaching the best density.
        int witness = -1;
    };

    /// brute_density with the model count and the index of a best model.
    DensityRow density_row(const Interpretation & interp, const Theory & t, int clique, int n, int workers = 1);

    struct CheckOutcome
    {
        std::string name;
        bool passed = true;
        std::string note;
    };

    struct CrossCheckReport
    {
        ChiValue chi;
        std::optional<DensityValue> limit; ///< pi(chi, t) when chi is decided
        int clique = 2;
        std::vector<DensityRow> densities;
        /// direct[n-1][l-1] = chi_direct(l, n).
        std::vector<std::vector<bool>> direct;
        std::vector<CheckOutcome> checks;
        /// Coverage of the Turán slice at levels 1.. (decided chi only).
        std::vector<bool> coverage;
        /// n where chi_direct fails at l = chi, when found.
        std::optional<int> failure_witness;

        bool passed() const;
        std::string to_text() const;
    };

    struct CrossCheckOptions
    {
        int clique = 2;
        int n_max = 6;
        int ell_max = 4;
        int workers = 1;
        ChiOptions chi;
        /// Throw InvariantViolation on the first failed check.
        bool strict = true;
    };

    /// Compares the solver's chi and pi against the brute-force oracles:
    /// (a) densities non-increasing in n, (b) densities at least pi,
    /// (c) chi_direct true for l < chi, (d) a failure at l = chi when one is
    /// small enough to find, (e) chi_direct downward closed in l, (f) solver
    /// coverage monotone in the level.
    CrossCheckReport cross_check(const Interpretation & interp, const Theory & t, const CrossCheckOptions & options = {});
}
