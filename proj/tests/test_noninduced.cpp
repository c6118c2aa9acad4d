#include "oracles.hpp"

#include <turan/dsl.hpp>
#include <turan/enumerate.hpp>
#include <turan/noninduced.hpp>

#include <doctest.h>

using namespace turan;

namespace
{
    const char * ordered_edge = "builtin: linorder\n---\nn=2\nL: (1,2)\nE: (1,2); (2,1)\n";

    NoninducedInstance ordered_instance(const Structure & graph)
    {
        auto full = make_language(Language({{"L", 2}, {"E", 2}}));
        Structure m(full, graph.size());
        for (int u = 0; u < graph.size(); ++u)
            for (int v = 0; v < graph.size(); ++v) {
                if (u < v)
                    m.set(0, {u, v});
                if (u != v && oracle::edge(graph, u, v))
                    m.set(1, {u, v});
            }
        return make_noninduced_instance(linorder_theory(), {m});
    }
}

TEST_SUITE("noninduced")
{
    TEST_CASE("parsing a family file")
    {
        auto inst = parse_noninduced(ordered_edge);
        CHECK(inst.full->size() == 2);
        CHECK(inst.edge == 1);
        REQUIRE(inst.family.size() == 1);
        CHECK(inst.family[0].size() == 2);
        CHECK_THROWS(parse_noninduced("builtin: linorder\n---\nn=2\nE: (1,2)\n"));
    }

    TEST_CASE("effective family lifts the base non-models")
    {
        auto inst = parse_noninduced(ordered_edge);
        auto eff = effective_family(inst);
        CHECK(eff.size() == 1 + minimal_non_models(linorder_theory()).size());
        for (std::size_t i = 1; i < eff.size(); ++i)
            CHECK(eff[i].tuple_count(inst.edge) == 0);
    }

    TEST_CASE("ordered examples")
    {
        auto edge = parse_noninduced(ordered_edge);
        CHECK(chi_noninduced(edge).value == ChiValue::finite(2));
        auto report = agreement_check(edge);
        CHECK(report.agree);
        CHECK(report.claims_hold);
        CHECK(report.general == ChiValue::finite(2));
    }

    TEST_CASE("fast path equals interval chromatic number")
    {
        std::vector<Structure> graphs{graph_from_edges(2, {{1, 2}}), graph_from_edges(3, {{1, 2}, {2, 3}}), graph_from_edges(3, {{1, 3}, {2, 3}}),
            graph_from_edges(3, {{1, 3}}), graph_from_edges(3, {{1, 2}, {1, 3}, {2, 3}})};
        for (const auto & g : graphs) {
            std::vector<int> order(static_cast<std::size_t>(g.size()));
            std::iota(order.begin(), order.end(), 0);
            auto inst = ordered_instance(g);
            CHECK(chi_noninduced(inst).value == ChiValue::finite(std::max(1, oracle::interval_chromatic(g, order))));
            CHECK(interval_chromatic(inst.family[0], inst.edge, 0) == oracle::interval_chromatic(g, order));
        }
    }

    TEST_CASE("plain graphs through the fast path")
    {
        auto full = make_language(Language({{"E", 2}}));
        auto inst = make_noninduced_instance(Theory(Language{}), {complete_graph(3).with_language(full)});
        CHECK(chi_noninduced(inst).value == ChiValue::finite(3));
        auto c5 = make_noninduced_instance(Theory(Language{}), {cycle_graph(5).with_language(full)});
        CHECK(chi_noninduced(c5).value == ChiValue::finite(3));
    }

    TEST_CASE("the generated theory forbids exactly the non-induced copies")
    {
        auto inst = parse_noninduced(ordered_edge);
        Theory t = noninduced_theory(inst);
        for (int n = 0; n <= 4; ++n) {
            auto ms = enumerate_models(t, n);
            REQUIRE(ms.size() == 1);
            CHECK(ms[0].tuple_count(inst.edge) == 0);
        }
    }
}
