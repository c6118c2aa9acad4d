#include "oracles.hpp"

#include <turan/cover.hpp>
#include <turan/enumerate.hpp>
#include <turan/dsl.hpp>

#include <doctest.h>

#include <set>

using namespace turan;

namespace
{
    std::set<std::string> keys(const std::vector<SplitOrder> & ss)
    {
        std::set<std::string> out;
        for (const auto & s : ss)
            out.insert(s.to_string());
        return out;
    }

    bool in_union(const std::vector<Box> & boxes, const Pattern & q)
    {
        return std::any_of(boxes.begin(), boxes.end(), [&](const Box & b) { return b.contains(q); });
    }

    // Box semantics against the definition, over every pattern of the space.
    void check_boxes(const Structure & m, int parts)
    {
        SignatureSpace space(m.language_ptr(), parts);
        REQUIRE(space.dimension() <= 12);
        auto boxes = compatibility_boxes(m, space);
        auto orders = oracle::all_split_orders(parts, m.size());
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << space.dimension()); ++bits) {
            Pattern q(space.dimension(), static_cast<unsigned long>(bits));
            bool direct = std::any_of(orders.begin(), orders.end(), [&](const SplitOrder & s) { return oracle::uniform(m, space, q, s); });
            CHECK(in_union(boxes, q) == direct);
        }
    }
}

TEST_SUITE("patterns")
{
    TEST_CASE("weak compositions")
    {
        CHECK(weak_compositions(2, 2) == std::vector<std::vector<int>>{{0, 2}, {1, 1}, {2, 0}});
        CHECK(weak_compositions(2, 3).size() == 4);
        CHECK(weak_compositions(1, 5) == std::vector<std::vector<int>>{{5}});
        CHECK(weak_compositions(3, 4).size() == 15);
        CHECK_THROWS(weak_compositions(0, 2));
    }

    TEST_CASE("split orders are complete and duplicate free")
    {
        CHECK(split_orders(1, 2).size() == 2);
        CHECK(split_orders(2, 2).size() == 6);
        CHECK(split_orders(1, 1).size() == 1);
        for (int parts = 1; parts <= 3; ++parts)
            for (int k = 0; k <= 4; ++k) {
                auto got = split_orders(parts, k);
                CHECK(keys(got).size() == got.size());
                CHECK(keys(got) == keys(oracle::all_split_orders(parts, k)));
                for (const auto & s : got)
                    CHECK(s.valid());
            }
    }

    TEST_CASE("inducing split orders")
    {
        std::mt19937 rng(11);
        for (int round = 0; round < 200; ++round) {
            auto all = split_orders(2, 5);
            const auto & s = all[rng() % all.size()];
            std::vector<int> ident{0, 1, 2, 3, 4};
            CHECK(induce(s, ident) == s);
            auto alpha = oracle::random_permutation(5, rng);
            alpha.resize(4);
            auto beta = oracle::random_permutation(4, rng);
            beta.resize(3);
            std::vector<int> composed;
            for (int b : beta)
                composed.push_back(alpha[static_cast<std::size_t>(b)]);
            CHECK(induce(induce(s, alpha), beta) == induce(s, composed));
            CHECK(induce(s, alpha) == oracle::signature(s, alpha));
        }
        SplitOrder one = parse_split_order("(1,1|1,2)", 1);
        std::vector<int> swap{1, 0};
        CHECK(induce(one, swap).to_string() == "(1,1|2,1)");
        std::vector<int> repeated{0, 0};
        CHECK_THROWS(induce(one, repeated));
    }

    TEST_CASE("thickness and compositions")
    {
        auto s = parse_split_order("(1,2,2,1,2|1,1,2,2,3)", 2);
        CHECK(thickness(s) == 2);
        CHECK(composition_of(s) == std::vector<int>{2, 3});
        std::vector<int> w{0, 1, 2};
        CHECK(thickness(induce(s, w)) == 1);
        CHECK(thickness(parse_split_order("(1,1|1,2)", 2)) == 0);
    }

    TEST_CASE("is_uniform agrees with the definition")
    {
        auto lang = oracle::one_binary();
        for (int parts = 1; parts <= 2; ++parts) {
            SignatureSpace space(lang, parts);
            for (int n = 0; n <= 3; ++n)
                oracle::labeled(lang, n, [&](const Structure & m) {
                    for (const auto & s : split_orders(parts, n))
                        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << space.dimension()); ++bits) {
                            Pattern q(space.dimension(), static_cast<unsigned long>(bits));
                            CHECK(is_uniform(m, space, q, s) == oracle::uniform(m, space, q, s));
                        }
                });
        }
    }

    TEST_CASE("uniformity examples")
    {
        SignatureSpace one(graph_language(), 1);
        Pattern all(one.dimension());
        all.set();
        CHECK(is_uniform(complete_graph(3), one, all, split_orders(1, 3)[3]));
        auto cyclic = graph_from_edges(3, {});
        cyclic.set(0, {0, 1});
        cyclic.set(0, {1, 2});
        cyclic.set(0, {2, 0});
        for (const auto & s : split_orders(1, 3))
            for (unsigned long bits = 0; bits < 4; ++bits)
                CHECK_FALSE(is_uniform(cyclic, one, Pattern(2, bits), s));
    }

    TEST_CASE("uniformity set sizes")
    {
        SignatureSpace one(graph_language(), 1);
        for (int n = 2; n <= 5; ++n) {
            CHECK(count_covered(one, compatibility_boxes(complete_graph(n), one)) == 1);
            CHECK(count_covered(one, compatibility_boxes(empty_graph(n), one)) == 1);
            CHECK(count_covered(one, compatibility_boxes(transitive_tournament(n), one)) == 2);
        }
        CHECK(count_covered(one, compatibility_boxes(empty_graph(1), one)) == 4);
    }

    TEST_CASE("box semantics on small structures")
    {
        auto lang = oracle::one_binary();
        for (int n = 0; n <= 3; ++n)
            for (const auto & m : enumerate_models(Theory(*lang), n)) {
                check_boxes(m, 1);
                check_boxes(m, 2);
            }
        auto marked = make_language(Language({{"E", 2}, {"U", 1}}));
        for (const auto & m : enumerate_models(Theory(*marked), 2))
            check_boxes(m, 2);
        for (const auto & m : enumerate_models(Theory(*lang), 2))
            check_boxes(m, 3);
    }

    TEST_CASE("uniformity sets respect isomorphism")
    {
        std::mt19937 rng(5);
        SignatureSpace two(oracle::one_binary(), 2);
        for (int i = 0; i < 10; ++i) {
            auto m = oracle::random_structure(oracle::one_binary(), 4, rng);
            auto p = oracle::random_permutation(4, rng);
            CHECK(covered_patterns(two, compatibility_boxes(m, two)) == covered_patterns(two, compatibility_boxes(m.relabeled(p), two)));
        }
    }

    TEST_CASE("membership in the uniformity set of a family")
    {
        SignatureSpace one(graph_language(), 1);
        auto complete = complete_slice(one, 0);
        Pattern q = complete.values;
        auto w = pattern_in_uniformity_set(q, {complete_graph(3)}, one);
        REQUIRE(w);
        CHECK(w->member == 0);
        CHECK_FALSE(pattern_in_uniformity_set(q, {empty_graph(2)}, one));
        SignatureSpace two(graph_language(), 2);
        auto turan = turan_slice(two, 0);
        CHECK(pattern_in_uniformity_set(turan.values, {cycle_graph(4)}, two));
    }

    TEST_CASE("slice sizes")
    {
        SignatureSpace one(graph_language(), 1);
        CHECK(complete_slice(one, 0).free_dimensions() == 0);
        for (int parts = 1; parts <= 4; ++parts) {
            SignatureSpace space(graph_language(), parts);
            CHECK(turan_slice(space, 0).free_dimensions() == 0);
        }
        auto ordered = make_language(Language({{"E", 2}, {"L", 2}}));
        SignatureSpace oone(ordered, 1);
        CHECK(oracle::slice_patterns(complete_slice(oone, 0)).size() == 4);
        CHECK_THROWS(complete_slice(SignatureSpace(make_language(Language({{"U", 1}})), 1), 0));
    }

    TEST_CASE("slice coverage matches enumeration")
    {
        std::mt19937 rng(17);
        auto lang = make_language(Language({{"E", 2}, {"U", 1}, {"L", 2}}));
        for (int parts = 1; parts <= 2; ++parts) {
            SignatureSpace space(lang, parts);
            for (int round = 0; round < 150; ++round) {
                Slice slice = full_slice(space);
                // fix a few coordinates
                for (std::size_t c = 0; c < space.dimension(); ++c)
                    if (rng() % 4 == 0) {
                        slice.mask.set(c);
                        slice.values[c] = rng() & 1;
                    }
                if (slice.free_dimensions() > 14)
                    continue;
                std::vector<Box> boxes;
                int count = static_cast<int>(rng() % 40);
                for (int b = 0; b < count; ++b) {
                    Box box;
                    box.required.resize(space.dimension());
                    box.forbidden.resize(space.dimension());
                    for (std::size_t c = 0; c < space.dimension(); ++c) {
                        auto r = rng() % 8;
                        if (r == 0)
                            box.required.set(c);
                        else if (r == 1)
                            box.forbidden.set(c);
                    }
                    boxes.push_back(box);
                }
                bool expected = true;
                for (const auto & q : oracle::slice_patterns(slice))
                    if (! in_union(boxes, q))
                        expected = false;
                for (auto method : {CoverMethod::Split, CoverMethod::Enumerate, CoverMethod::Automatic}) {
                    auto r = slice_covered(slice, boxes, method);
                    CHECK(r.covered == expected);
                    if (! r.covered) {
                        REQUIRE(r.uncovered);
                        CHECK_FALSE(in_union(boxes, *r.uncovered));
                        CHECK(((*r.uncovered & slice.mask) == (slice.values & slice.mask)));
                    }
                    else {
                        std::vector<Box> used;
                        for (auto i : r.used)
                            used.push_back(boxes[i]);
                        CHECK(slice_covered(slice, used, CoverMethod::Enumerate).covered);
                    }
                }
            }
        }
    }

    TEST_CASE("trivial coverage cases")
    {
        SignatureSpace space(make_language(Language({{"E", 2}, {"U", 1}})), 1);
        auto slice = complete_slice(space, 0);
        CHECK_FALSE(slice_covered(slice, {}).covered);
        Box whole;
        whole.required.resize(space.dimension());
        whole.forbidden.resize(space.dimension());
        CHECK(slice_covered(slice, {whole}).covered);
    }

    TEST_CASE("coverage of a marked family")
    {
        auto lang = make_language(Language({{"E", 2}, {"U", 1}}));
        Structure k3(lang, 3);
        for (int u = 0; u < 3; ++u)
            for (int v = 0; v < 3; ++v)
                if (u != v)
                    k3.set(0, {u, v});
        Structure marked_pair(lang, 2);
        marked_pair.set(1, {0});
        SignatureSpace space(lang, 1);
        auto boxes = family_boxes({k3, marked_pair}, space);
        auto slice = complete_slice(space, 0);
        bool expected = true;
        for (const auto & q : oracle::slice_patterns(slice))
            if (! in_union(boxes, q))
                expected = false;
        CHECK(slice_covered(slice, boxes).covered == expected);
    }

    TEST_CASE("upward closure")
    {
        auto up = upward_closure({empty_graph(2)}, 0);
        CHECK(up.size() == 2);
        CHECK(upward_closure({empty_graph(3)}, 0).size() == 4);
        CHECK(upward_closure({complete_graph(4)}, 0).size() == 1);
    }

    TEST_CASE("proper split orderings")
    {
        auto full = make_language(Language({{"L", 2}, {"E", 2}}));
        auto base = make_language(Language({{"L", 2}}));
        Structure edge(full, 2);
        edge.set(1, {0, 1});
        edge.set(1, {1, 0});
        SignatureSpace one(base, 1), two(base, 2);
        CHECK(proper_split_orderings(edge, 1, one, {0}).empty());
        CHECK_FALSE(proper_split_orderings(edge, 1, two, {0}).empty());

        // a 3-cycle of L and no edges: every split order is proper
        Structure cyc(full, 3);
        cyc.set(0, {0, 1});
        cyc.set(0, {1, 2});
        cyc.set(0, {2, 0});
        auto boxes = proper_split_orderings(cyc, 1, two, {0});
        Structure plain(base, 3);
        plain.set(0, {0, 1});
        plain.set(0, {1, 2});
        plain.set(0, {2, 0});
        auto orders = oracle::all_split_orders(2, 3);
        for (unsigned long bits = 0; bits < (1ul << two.dimension()); ++bits) {
            Pattern q(two.dimension(), bits);
            bool direct = std::any_of(orders.begin(), orders.end(), [&](const SplitOrder & s) { return oracle::uniform(plain, two, q, s); });
            CHECK(in_union(boxes, q) == direct);
        }
    }

    TEST_CASE("pattern text round trip")
    {
        auto lang = make_language(Language({{"E", 2}, {"U", 1}}));
        SignatureSpace space(lang, 2);
        std::mt19937 rng(2);
        for (int i = 0; i < 20; ++i) {
            Pattern q(space.dimension());
            for (std::size_t c = 0; c < q.size(); ++c)
                q[c] = rng() & 1;
            CHECK(parse_pattern(pattern_to_text(q, space), space) == q);
        }
    }

    TEST_CASE("restriction keeps the lower parts")
    {
        SignatureSpace three(graph_language(), 3), two(graph_language(), 2);
        auto t3 = turan_slice(three, 0).values;
        auto t2 = turan_slice(two, 0).values;
        CHECK(restrict_pattern(t3, three, two) == t2);
    }
}
