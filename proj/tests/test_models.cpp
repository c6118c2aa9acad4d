#include "oracles.hpp"

#include <turan/canon.hpp>
#include <turan/dsl.hpp>
#include <turan/enumerate.hpp>
#include <turan/error.hpp>

#include <doctest.h>

#include <set>

using namespace turan;

namespace
{
    bool has_induced(const Structure & m, const Structure & f)
    {
        if (f.size() > m.size())
            return false;
        std::vector<int> pick(static_cast<std::size_t>(m.size()), 0);
        std::fill(pick.begin(), pick.begin() + f.size(), 1);
        do {
            std::vector<int> sub;
            for (int v = 0; v < m.size(); ++v)
                if (pick[static_cast<std::size_t>(v)])
                    sub.push_back(v);
            if (oracle::isomorphic(m.induced(sub), f))
                return true;
        } while (std::prev_permutation(pick.begin(), pick.end()));
        return false;
    }
}

TEST_SUITE("models")
{
    TEST_CASE("model counts match labeled brute force")
    {
        struct Case
        {
            Theory t;
            int max_n;
        };
        std::vector<Case> cases{{graph_theory(), 4}, {tournament_theory(), 4}, {linorder_theory(), 4}, {hypergraph_theory(3), 4},
            {parse_theory("language: E/2, U/1\n"), 3}};
        for (auto & c : cases)
            for (int n = 0; n <= c.max_n; ++n) {
                if (tuple_slots(c.t.language(), n) > 16)
                    continue;
                auto got = enumerate_models(c.t, n);
                auto expected = oracle::models(c.t, n);
                CHECK(got.size() == expected.size());
                for (std::size_t i = 0; i < got.size(); ++i) {
                    CHECK(is_model(got[i], c.t));
                    for (std::size_t j = 0; j < i; ++j)
                        CHECK_FALSE(oracle::isomorphic(got[i], got[j]));
                }
            }
    }

    TEST_CASE("known counts")
    {
        std::vector<std::size_t> graphs{1, 1, 2, 4, 11, 34};
        for (int n = 0; n <= 5; ++n)
            CHECK(enumerate_models(graph_theory(), n).size() == graphs[static_cast<std::size_t>(n)]);
        CHECK(enumerate_models(tournament_theory(), 3).size() == 2);
        CHECK(enumerate_models(tournament_theory(), 5).size() == 12);
        CHECK(enumerate_models(linorder_theory(), 6).size() == 1);
        CHECK(enumerate_models(hypergraph_theory(3), 5).size() == 34);
    }

    TEST_CASE("enumeration is deterministic across worker counts")
    {
        Theory t = parse_theory("builtin: graph\nlanguage: U/1\n");
        auto a = enumerate_models(t, 4, 1);
        auto b = enumerate_models(t, 4, 3);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            CHECK(a[i] == b[i]);
    }

    TEST_CASE("library brute force agrees")
    {
        for (int n = 0; n <= 4; ++n)
            CHECK(brute_force_models(tournament_theory(), n).size() == enumerate_models(tournament_theory(), n).size());
    }

    TEST_CASE("canonical codes are complete invariants")
    {
        std::mt19937 rng(7);
        auto lang = make_language(Language({{"E", 2}, {"F", 2}}));
        std::vector<Structure> sample;
        for (int i = 0; i < 60; ++i)
            sample.push_back(oracle::random_structure(lang, 4 + i % 2, rng));
        for (std::size_t i = 0; i < sample.size(); ++i) {
            auto p = oracle::random_permutation(sample[i].size(), rng);
            CHECK(canonical_code(sample[i]) == canonical_code(sample[i].relabeled(p)));
            auto iso = find_isomorphism(sample[i], sample[i].relabeled(p));
            REQUIRE(iso);
            CHECK(sample[i].relabeled(*iso) == sample[i].relabeled(p));
            for (std::size_t j = 0; j < i; ++j)
                if (sample[i].size() == sample[j].size())
                    CHECK((canonical_code(sample[i]) == canonical_code(sample[j])) == oracle::isomorphic(sample[i], sample[j]));
        }
        auto digraphs = enumerate_models(Theory(*oracle::one_binary()), 4);
        CHECK(digraphs.size() == 218);
        std::set<CanonicalCode> codes;
        for (const auto & m : digraphs)
            codes.insert(canonical_code(m));
        CHECK(codes.size() == digraphs.size());
    }

    TEST_CASE("isomorphism examples")
    {
        CHECK(are_isomorphic(cycle_graph(4), turan_graph(4, 2)));
        CHECK(oracle::isomorphic(cycle_graph(4), turan_graph(4, 2)));
        auto path = graph_from_edges(3, {{1, 2}, {2, 3}});
        auto single = graph_from_edges(3, {{1, 2}});
        CHECK_FALSE(are_isomorphic(path, single));
        CHECK(are_isomorphic_brute(path, graph_from_edges(3, {{1, 3}, {3, 2}})));
    }

    TEST_CASE("induced substructures")
    {
        CHECK(complete_graph(4).induced({0, 2, 3}) == complete_graph(3));
        CHECK(transitive_tournament(4).induced({0, 2, 3}) == transitive_tournament(3));
        auto empty = complete_graph(3).induced({});
        CHECK(empty.size() == 0);
        CHECK(is_model(empty, graph_theory()));
        CHECK_THROWS(complete_graph(3).induced({0, 5}));
    }

    TEST_CASE("densities")
    {
        CHECK(density(complete_graph(2), complete_graph(3)) == 1);
        CHECK(density(complete_graph(2), turan_graph(4, 2)) == Rational(2, 3));
        CHECK(density(complete_graph(3), turan_graph(6, 2)) == 0);
        CHECK_THROWS_AS(density(complete_graph(4), complete_graph(3)), Error);
    }

    TEST_CASE("named graphs")
    {
        CHECK(turan_graph(4, 2).tuple_count(0) == 8);
        for (int n = 1; n <= 5; ++n) {
            CHECK(turan_graph(n, n) == complete_graph(n));
            CHECK(turan_graph(n, 1) == empty_graph(n));
        }
        CHECK_THROWS(turan_graph(3, 0));
        CHECK(is_model(transitive_tournament(5), tournament_theory()));
    }

    TEST_CASE("non-induced copies")
    {
        CHECK(has_noninduced_copy(complete_graph(3), complete_graph(4)));
        CHECK_FALSE(has_noninduced_copy(complete_graph(3), turan_graph(6, 2)));
        CHECK(has_noninduced_copy(turan_graph(4, 2), turan_graph(6, 3)));
        CHECK(has_noninduced_copy(turan_graph(5, 2), turan_graph(12, 4)));
        CHECK(has_noninduced_copy(cycle_graph(4), complete_graph(4)));
        CHECK_FALSE(has_noninduced_copy(cycle_graph(5), turan_graph(6, 2)));
    }

    TEST_CASE("forb examples and soundness")
    {
        Theory no_edge = forb(graph_theory(), {complete_graph(2)});
        for (int n = 0; n <= 5; ++n) {
            auto ms = enumerate_models(no_edge, n);
            REQUIRE(ms.size() == 1);
            CHECK(ms[0] == empty_graph(n));
        }
        Theory cliques = forb(graph_theory(), {empty_graph(2)});
        CHECK(enumerate_models(cliques, 4)[0] == complete_graph(4));
        auto p3bar = graph_from_edges(3, {{1, 2}});
        CHECK(enumerate_models(forb(graph_theory(), {p3bar}), 3).size() == 3);

        std::vector<Structure> family{graph_from_edges(3, {{1, 2}, {2, 3}}), empty_graph(3)};
        Theory t = forb(graph_theory(), family);
        for (int n = 0; n <= 5; ++n) {
            std::size_t filtered = 0;
            for (const auto & m : enumerate_models(graph_theory(), n))
                if (std::none_of(family.begin(), family.end(), [&](const Structure & f) { return has_induced(m, f); }))
                    ++filtered;
            CHECK(enumerate_models(t, n).size() == filtered);
        }
    }

    TEST_CASE("forbidden family of a theory")
    {
        auto g = forbidden_family_from_theory(graph_theory());
        CHECK(g.k == 2);
        for (const auto & m : g.family)
            CHECK_FALSE(is_model(m, graph_theory()));
        auto tri = forbidden_family_from_theory(forb(graph_theory(), {complete_graph(3)}));
        CHECK(tri.k == 3);
        CHECK(std::any_of(tri.family.begin(), tri.family.end(), [](const Structure & m) { return are_isomorphic(m, complete_graph(3)); }));
        auto lin = forbidden_family_from_theory(linorder_theory());
        CHECK(lin.k == 3);
        auto ll = linorder_theory().language_ptr();
        Structure antichain(ll, 2), two_cycle(ll, 2), three_cycle(ll, 3);
        two_cycle.set(0, {0, 1});
        two_cycle.set(0, {1, 0});
        three_cycle.set(0, {0, 1});
        three_cycle.set(0, {1, 2});
        three_cycle.set(0, {2, 0});
        for (const auto & needed : {antichain, two_cycle, three_cycle})
            CHECK(std::any_of(lin.family.begin(), lin.family.end(), [&](const Structure & m) { return are_isomorphic(m, needed); }));
        // minimal non-models are among them and generate the same theory
        auto minimal = minimal_non_models(linorder_theory());
        for (const auto & m : minimal)
            CHECK(std::any_of(lin.family.begin(), lin.family.end(), [&](const Structure & f) { return are_isomorphic(m, f); }));
    }

    TEST_CASE("applying interpretations")
    {
        Theory ordered = graph_theory().disjoint_union(linorder_theory());
        auto k3 = enumerate_models(forb(ordered, {}), 3);
        auto erase = Interpretation::identity(graph_language(), ordered.language_ptr());
        std::size_t complete = 0;
        for (const auto & m : k3)
            if (apply_interpretation(erase, m) == complete_graph(3))
                ++complete;
        CHECK(complete == 1);
        auto complement = parse_interpretation("interpret E(x1,x2) := x1 != x2 & !E(x1,x2)\n", graph_language(), graph_language());
        CHECK(apply_interpretation(complement, empty_graph(3)) == complete_graph(3));
        auto ll = linorder_theory().language_ptr();
        Structure order(ll, 2);
        order.set(0, {0, 1});
        auto sym = parse_interpretation("interpret E(x1,x2) := L(x1,x2) | L(x2,x1)\n", ll, graph_language());
        CHECK(apply_interpretation(sym, order) == complete_graph(2));
        auto raw = parse_interpretation("interpret E(x1,x2) := L(x1,x2)\n", ll, graph_language());
        CHECK_FALSE(is_model(apply_interpretation(raw, order), graph_theory()));
        CHECK_THROWS_AS(apply_interpretation(sym, complete_graph(2)), LanguageMismatch);
    }

    TEST_CASE("structure text round trip")
    {
        std::mt19937 rng(3);
        auto lang = make_language(Language({{"E", 2}, {"T", 3}, {"U", 1}}));
        for (int i = 0; i < 20; ++i) {
            auto m = oracle::random_structure(lang, i % 5, rng);
            CHECK(parse_structure(to_text(m), lang) == m);
        }
        auto m = parse_structure("language: E/2\nn=3\nE: (1,2); (2,1)\n");
        CHECK(m.size() == 3);
        CHECK(m.tuple_count(0) == 2);
        CHECK_THROWS(parse_structure("language: E/2\nn=2\nE: (1,1)\n"));
        CHECK_THROWS(parse_structure("language: E/2\nn=2\nE: (1,3)\n"));
    }
}
