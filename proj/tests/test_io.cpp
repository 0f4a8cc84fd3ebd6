#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "zq/enumerate.hpp"
#include "zq/graph_io.hpp"

using namespace zq;

namespace {

bool same_graph(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges() == b.edges();
}

}  // namespace

TEST_CASE("graph6 fixed encodings") {
    CHECK(to_graph6(Graph::from_edges(1, {})) == "@");
    CHECK(to_graph6(Graph::from_edges(2, {{0, 1}})) == "A_");
    // five-vertex star centered on the last vertex
    Graph star4 = Graph::from_edges(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}});
    CHECK(to_graph6(star4) == "D?{");
    CHECK(same_graph(parse_graph6("D?{"), star4));
    CHECK(same_graph(parse_graph6(">>graph6<<A_\n"), Graph::from_edges(2, {{0, 1}})));
}

TEST_CASE("graph6 round trips") {
    for (const Graph& t : enumerate_trees(5)) {
        std::string s = to_graph6(t);
        CHECK(same_graph(parse_graph6(s), t));
        CHECK(to_graph6(parse_graph6(s)) == s);
    }
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n)) CHECK(same_graph(parse_graph6(to_graph6(g)), g));
    // a size above 62 exercises the extended header
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < 70; ++i) edges.emplace_back(i, i + 1);
    Graph p70 = Graph::from_edges(70, edges);
    CHECK(same_graph(parse_graph6(to_graph6(p70)), p70));
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("D?"), ParseError);        // truncated
    CHECK_THROWS_AS(parse_graph6("A_?"), ParseError);       // trailing bytes
    CHECK_THROWS_AS(parse_graph6("A\x20"), ParseError);     // byte below range
    CHECK_THROWS_AS(parse_graph6("A`"), ParseError);        // nonzero padding
    CHECK_THROWS_AS(parse_graph6("~~???"), ParseError);     // unsupported size class
    try {
        parse_graph6("D?");
    } catch (const ParseError& e) {
        CHECK(e.offset == 2);
    }
}

TEST_CASE("edgelist parsing") {
    CHECK(same_graph(parse_edgelist("0 1\n1 2"), zqt::path_graph(3)));
    CHECK(parse_edgelist("5").vertex_count() == 5);
    Graph with_header = parse_edgelist("8\n0 1");
    CHECK(with_header.vertex_count() == 8);
    CHECK(with_header.edge_count() == 1);
    CHECK_THROWS_AS(parse_edgelist("0 0"), ContractViolation);
    CHECK_THROWS_AS(parse_edgelist("0 1 0 1"), ContractViolation);
    CHECK_THROWS_AS(parse_edgelist("zero one"), ParseError);
    CHECK_THROWS_AS(parse_edgelist(""), ParseError);
    CHECK_THROWS_AS(parse_edgelist("-1 0"), ContractViolation);
}

TEST_CASE("edgelist round trips") {
    for (const Graph& t : enumerate_trees(6)) {
        std::string s = to_edgelist(t);
        CHECK(same_graph(parse_edgelist(s), t));
        CHECK(to_edgelist(parse_edgelist(s)) == s);
    }
}

TEST_CASE("format names") {
    CHECK(parse_format("graph6") == GraphFormat::graph6);
    CHECK(parse_format("edgelist") == GraphFormat::edgelist);
    CHECK_THROWS_AS(parse_format("dot"), ContractViolation);
}
