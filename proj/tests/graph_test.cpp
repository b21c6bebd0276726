#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

#include "cograph/errors.hpp"
#include "cograph/graph.hpp"
#include "cograph/oracle.hpp"
#include "graph6_decoder.hpp"

using namespace cograph;

namespace {

SimpleGraph complete(std::uint32_t n) {
    SimpleGraph g(n);
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

SimpleGraph k4_minus_edge() {
    SimpleGraph g = complete(4);
    SimpleGraph h(4);
    for (auto [u, v] : g.edges())
        if (!(u == 2 && v == 3)) h.add_edge(u, v);
    return h;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> column_order(const SimpleGraph& g) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> e;
    for (auto [u, v] : g.edges()) e.emplace_back(u, v);
    std::ranges::sort(e, [](auto a, auto b) { return std::pair(a.second, a.first) < std::pair(b.second, b.first); });
    return e;
}

} // namespace

TEST_CASE("SimpleGraph basics") {
    SimpleGraph g(3);
    g.add_edge(0, 2);
    g.add_edge(2, 0);
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK_THROWS_AS(g.add_edge(1, 1), UsageError);
    CHECK_THROWS_AS(g.add_edge(0, 3), UsageError);
}

TEST_CASE("materialize follows the lowest common ancestor rule") {
    CHECK(materialize(parse("(1 1)"), RootType::Join) == complete(2));
    const SimpleGraph empty = materialize(min_tree(4), RootType::Union);
    CHECK(empty.vertex_count() == 4);
    CHECK(empty.edge_count() == 0);
    CHECK(materialize(parse("(1 1 (1 1))"), RootType::Join) == k4_minus_edge());

    // Alternation: union of a vertex with a join of two vertices and a
    // union pair below it.
    const SimpleGraph g = materialize(parse("(1 (1 (1 1)))"), RootType::Union);
    CHECK(g.edges() == std::vector<SimpleGraph::Edge>{{1, 2}, {1, 3}});
}

TEST_CASE("complement_check") {
    const Cotree t = parse("(1 (1 1) (1 (1 1)))");
    CHECK(complement_check(materialize(t, RootType::Union), materialize(t, RootType::Join)));
    CHECK_FALSE(complement_check(complete(2), complete(2)));
    CHECK(complement_check(SimpleGraph(3), complete(3)));
    CHECK_FALSE(complement_check(SimpleGraph(3), complete(4)));
}

TEST_CASE("is_connected") {
    CHECK(is_connected(SimpleGraph(1)));
    CHECK_FALSE(is_connected(SimpleGraph(2)));
    CHECK(is_connected(k4_minus_edge()));
}

TEST_CASE("edge list format") {
    CHECK(to_edgelist(SimpleGraph(2)) == "2 0\n");
    CHECK(to_edgelist(complete(2)) == "2 1\n0 1\n");
    CHECK(to_edgelist(k4_minus_edge()) == "4 5\n0 1\n0 2\n0 3\n1 2\n1 3\n");
}

TEST_CASE("graph6 matches a reference encoder") {
    // Strings produced by networkx.to_graph6_bytes.
    CHECK(to_graph6(complete(2)) == "A_");
    CHECK(to_graph6(SimpleGraph(1)) == "@");
    CHECK(to_graph6(SimpleGraph(0)) == "?");
    CHECK(to_graph6(k4_minus_edge()) == "C}");
    SimpleGraph p4(4);
    p4.add_edge(0, 1);
    p4.add_edge(1, 2);
    p4.add_edge(2, 3);
    CHECK(to_graph6(p4) == "Ch");
    SimpleGraph c5(5);
    for (std::uint32_t i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
    CHECK(to_graph6(c5) == "Dhc");

    SimpleGraph big(70);
    big.add_edge(0, 69);
    big.add_edge(5, 6);
    std::ifstream in(COGRAPH_TEST_DATA "/g6_70_vertices.txt");
    REQUIRE(in.good());
    std::string expected;
    std::getline(in, expected);
    CHECK(to_graph6(big) == expected);
}

TEST_CASE("graph6 size limits") {
    CHECK(to_graph6(SimpleGraph(62)).front() == static_cast<char>(63 + 62));
    CHECK(to_graph6(SimpleGraph(63)).substr(0, 4) == "~??~");
    CHECK_THROWS_AS(to_graph6(SimpleGraph(258048)), UsageError);
}

TEST_CASE("graph6 decodes under an independent reader") {
    for (std::uint32_t n = 1; n <= 6; ++n) {
        for (const Cotree& t : n == 1 ? std::vector<Cotree>{Cotree{}} : oracle::all_trees(n)) {
            for (RootType r : {RootType::Union, RootType::Join}) {
                const SimpleGraph g = materialize(t, r);
                const auto decoded = testing_support::decode_graph6(to_graph6(g));
                CHECK(decoded.n == n);
                CHECK(decoded.edges == column_order(g));
            }
        }
    }
}

TEST_CASE("dot output") {
    CHECK(to_dot(complete(2)) == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n");
    CHECK(to_dot(SimpleGraph(1), "H") == "graph H {\n  0;\n}\n");
}
