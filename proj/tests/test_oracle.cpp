#include "oracles.hpp"

#include <turan/enumerate.hpp>
#include <turan/oracle.hpp>

#include <doctest.h>

using namespace turan;

namespace
{
    Interpretation id_on(const Theory & t) { return Interpretation::identity(graph_language(), t.language_ptr()); }

    // max K2 density over labeled triangle-free graphs, from scratch
    Rational triangle_free_max(int n)
    {
        int best = 0;
        oracle::labeled(graph_language(), n, [&](const Structure & g) {
            int edges = 0;
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) {
                    if (u != v && oracle::edge(g, u, v) != oracle::edge(g, v, u))
                        return;
                    if (u < v && oracle::edge(g, u, v))
                        ++edges;
                    for (int w = 0; w < n; ++w)
                        if (u < v && v < w && oracle::edge(g, u, v) && oracle::edge(g, v, w) && oracle::edge(g, u, w))
                            return;
                }
            best = std::max(best, edges);
        });
        return Rational(best, n * (n - 1) / 2);
    }
}

TEST_SUITE("oracle")
{
    TEST_CASE("brute density examples")
    {
        Theory tri = forb_noninduced(graph_theory(), {complete_graph(3)});
        CHECK(brute_density(id_on(tri), tri, 2, 6).value == Rational(3, 5));
        for (int n = 4; n <= 5; ++n)
            CHECK(brute_density(id_on(tri), tri, 2, n).value == triangle_free_max(n));
        for (int n = 2; n <= 5; ++n)
            CHECK(brute_density(id_on(graph_theory()), graph_theory(), 2, n).value == 1);
        Theory none = forb(graph_theory(), {complete_graph(1)});
        CHECK(brute_density(id_on(none), none, 2, 3).minus_infinity);
        CHECK(brute_density(id_on(tri), tri, 2, 6, 3) == brute_density(id_on(tri), tri, 2, 6, 1));
    }

    TEST_CASE("density ordering")
    {
        DensityValue minus{true, 0};
        CHECK(density_less(minus, DensityValue{false, 0}));
        CHECK_FALSE(density_less(DensityValue{false, 0}, minus));
        CHECK(density_less(DensityValue{false, Rational(1, 3)}, DensityValue{false, Rational(1, 2)}));
    }

    TEST_CASE("direct chromatic tests")
    {
        Theory tri = forb_noninduced(graph_theory(), {complete_graph(3)});
        CHECK(chi_direct(id_on(tri), tri, 2, 6));
        CHECK_FALSE(chi_direct(id_on(tri), tri, 3, 3));
        Theory k2 = forb(graph_theory(), {complete_graph(2)});
        CHECK_FALSE(chi_direct(id_on(k2), k2, 2, 2));
        CHECK(chi_direct(id_on(k2), k2, 1, 4));
    }

    TEST_CASE("cross check on named examples")
    {
        Theory tri = forb_noninduced(graph_theory(), {complete_graph(3)});
        CrossCheckOptions opts;
        opts.n_max = 5;
        opts.ell_max = 3;
        auto r = cross_check(id_on(tri), tri, opts);
        CHECK(r.passed());
        CHECK(r.chi == ChiValue::finite(3));
        REQUIRE(r.limit);
        CHECK(r.limit->value == Rational(1, 2));

        Theory k2 = forb(graph_theory(), {complete_graph(2)});
        auto r2 = cross_check(id_on(k2), k2, opts);
        CHECK(r2.passed());
        CHECK(r2.chi == ChiValue::finite(2));
        REQUIRE(r2.failure_witness);
        CHECK(*r2.failure_witness == 2);

        Theory none = forb(graph_theory(), {complete_graph(1)});
        auto r3 = cross_check(id_on(none), none, opts);
        CHECK(r3.passed());
        CHECK(r3.chi == ChiValue::finite(1));
        REQUIRE(r3.limit);
        CHECK(r3.limit->minus_infinity);
    }

    TEST_CASE("report rows and text")
    {
        Theory tri = forb_noninduced(graph_theory(), {complete_graph(3)});
        CrossCheckOptions opts;
        opts.n_max = 4;
        opts.ell_max = 3;
        auto r = cross_check(id_on(tri), tri, opts);
        REQUIRE(! r.densities.empty());
        CHECK(r.densities.back().n == 4);
        CHECK(r.densities.back().models == oracle::models(tri, 4).size());
        CHECK(r.to_text().find("chi = 3") != std::string::npos);
    }
}
