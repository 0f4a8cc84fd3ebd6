#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "zq/enumerate.hpp"
#include "zq/families.hpp"
#include "zq/solver.hpp"
#include "zq/tree.hpp"

using namespace zq;

namespace {

Graph spider_comb() {  // two degree-3 spine ends, two teeth each
    return gen_comb({{1, 1}, {}, {1, 1}});
}

}  // namespace

TEST_CASE("comb recognition") {
    auto k13 = comb_decompose(zqt::star_graph(3));
    REQUIRE(k13.has_value());
    std::vector<std::pair<int, int>> leaf_pairs{{1, 2}, {1, 3}, {2, 3}};
    CHECK(k13->initial_pairs == leaf_pairs);
    CHECK(k13->teeth.size() == 3);

    CHECK_FALSE(comb_decompose(zqt::star_graph(4)).has_value());
    CHECK(comb_decompose(gen_spider(1)).has_value());
    CHECK_FALSE(comb_decompose(gen_spider(2)).has_value());  // three hubs off one center
    CHECK_FALSE(comb_decompose(gen_double_star(3, 3)).has_value());

    auto p4 = comb_decompose(zqt::path_graph(4));
    REQUIRE(p4.has_value());
    CHECK(p4->spine.size() == 4);
    CHECK(p4->teeth.empty());
    CHECK(p4->initial_pairs.size() == 6);  // vacuously every pair

    CHECK_THROWS_AS(comb_decompose(zqt::cycle_graph(4)), ContractViolation);
}

TEST_CASE("classification") {
    Classification c = classify(zqt::star_graph(3), QValue::finite(0));
    CHECK(c.zq_value == 1);
    CHECK(c.label == GraphClass::tree_non_path);

    c = classify(zqt::path_graph(7), QValue::finite(3));
    CHECK(c.zq_value == 1);
    CHECK(c.label == GraphClass::path);

    c = classify(zqt::cycle_graph(5), QValue::finite(2));
    CHECK(c.zq_value == 2);
    CHECK(c.label == GraphClass::zigzag);
    CHECK(c.z_value == 2);

    c = classify(zqt::star_graph(3), QValue::finite(1));
    CHECK(c.zq_value == 2);
    CHECK(c.label == GraphClass::comb);
    REQUIRE(c.comb.has_value());

    c = classify(gen_double_star(3, 3), QValue::finite(1));
    CHECK(c.zq_value == 3);
    CHECK(c.label == GraphClass::other);

    Graph two_parts = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(classify(two_parts, QValue::finite(1)), ContractViolation);
}

TEST_CASE("spider generator") {
    Graph s1 = gen_spider(1);
    CHECK(s1.vertex_count() == 7);
    std::vector<int> degs;
    for (int v = 0; v < 7; ++v) degs.push_back(s1.degree(v));
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{1, 1, 1, 1, 2, 3, 3});
    for (int k = 1; k <= 4; ++k) {
        Graph s = gen_spider(k);
        CHECK(s.vertex_count() == 3 * k + 4);
        int leaves = 0;
        for (int v = 0; v < s.vertex_count(); ++v) leaves += s.degree(v) == 1;
        CHECK(leaves == 2 * k + 2);
        CHECK(s.is_tree());
    }
    CHECK(z_number(gen_spider(3)) == 5);
    CHECK_THROWS_AS(gen_spider(0), ContractViolation);
}

TEST_CASE("double star and binary generators") {
    Graph ds = gen_double_star(3, 3);
    CHECK(ds.vertex_count() == 8);
    CHECK(ds.degree(0) == 4);
    CHECK(ds.degree(1) == 4);
    CHECK(z1_tree(gen_double_star(1, 1)) == 1);  // that's just a path
    CHECK_THROWS_AS(gen_double_star(0, 2), ContractViolation);

    Graph b3 = gen_complete_binary(3);
    CHECK(b3.vertex_count() == 15);
    CHECK(b3.is_tree());
    CHECK(z1_tree(b3) == 3);
}

TEST_CASE("comb generator") {
    Graph k13 = gen_comb({{1, 1, 1}});
    CHECK(tree_canonical_code(k13) == tree_canonical_code(zqt::star_graph(3)));
    CHECK(zq_number(k13, QValue::finite(1)).value == 2);

    CHECK(tree_canonical_code(spider_comb()) == tree_canonical_code(gen_spider(1)));

    CHECK_THROWS_AS(gen_comb({{}, {1, 1}, {}}), ContractViolation);  // interior overload
    CHECK_THROWS_AS(gen_comb({{0}}), ContractViolation);
    CHECK_THROWS_AS(gen_comb({}), ContractViolation);
}

TEST_CASE("pick comb generator") {
    Graph comb = spider_comb();
    Graph via_path = gen_pick_comb(comb, PickAttachment::path, 2);
    CHECK(via_path.is_connected());
    CHECK(via_path.vertex_count() == 9);
    CHECK(zq_number(via_path, QValue::finite(1)).value == 2);

    Graph via_zigzag = gen_pick_comb(comb, PickAttachment::zigzag, 3);
    CHECK(via_zigzag.vertex_count() == 11);
    CHECK(zq_number(via_zigzag, QValue::finite(1)).value == 2);
    CHECK(z_number(via_zigzag) >= 3);  // not itself a two-token graph
    Classification c = classify(via_zigzag, QValue::finite(1));
    CHECK(c.label == GraphClass::pick_comb);

    CHECK_THROWS_AS(gen_pick_comb(comb, PickAttachment::path, 2, {{0, 1}}), ContractViolation);
    CHECK_THROWS_AS(gen_pick_comb(zqt::path_graph(2), PickAttachment::zigzag, 2, {{0, 1}}),
                    ContractViolation);
    CHECK_THROWS_AS(gen_pick_comb(zqt::star_graph(4), PickAttachment::path, 2), ContractViolation);
}

TEST_CASE("comb characterization with token placement, small trees") {
    SolverConfig cfg;
    cfg.q = QValue::finite(1);
    for (int n = 3; n <= 8; ++n) {
        for (const Graph& t : enumerate_trees(n)) {
            bool comb = comb_decompose(t).has_value();
            bool path = zqt::is_path_shape(t);
            int value = z1_tree(t);
            CHECK((value == 2) == (comb && !path));
            if (value != 2) continue;
            auto dec = comb_decompose(t);
            REQUIRE(dec.has_value());
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    bool initial = std::count(dec->initial_pairs.begin(), dec->initial_pairs.end(),
                                              std::make_pair(u, v)) > 0;
                    int rest = zq_value_from(t, VertexSet::of(n, {u, v}), cfg);
                    CHECK((rest == 0) == initial);
                    if (initial) CHECK(normalize_tree_state(t, VertexSet::of(n, {u, v})).is_full());
                }
        }
    }
}

TEST_CASE("generated pick combs stay at value two") {
    std::vector<Graph> combs{spider_comb(), gen_comb({{1, 1}, {1}, {}, {1, 1}}),
                             gen_comb({{1, 2}, {}, {1}})};
    for (const Graph& comb : combs) {
        for (int len : {2, 3})
            CHECK(zq_number(gen_pick_comb(comb, PickAttachment::path, len), QValue::finite(1)).value == 2);
        for (int size : {2, 3})
            CHECK(zq_number(gen_pick_comb(comb, PickAttachment::zigzag, size), QValue::finite(1)).value == 2);
    }
}
