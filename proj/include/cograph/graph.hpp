#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cograph/cotree.hpp"
#include "cograph/generator.hpp"

namespace cograph {

// Simple undirected graph on vertices 0..n-1. Adjacency rows are bitsets,
// allocated on a vertex's first edge.
class SimpleGraph {
public:
    using Edge = std::pair<std::uint32_t, std::uint32_t>;

    explicit SimpleGraph(std::uint32_t vertex_count = 0);

    std::uint32_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return m_; }
    bool has_edge(std::uint32_t u, std::uint32_t v) const;

    // Adds {u, v}. Self-loops and out-of-range vertices throw UsageError;
    // re-adding an edge is a no-op.
    void add_edge(std::uint32_t u, std::uint32_t v);

    // Edges with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
        return a.n_ == b.n_ && a.edges() == b.edges();
    }

private:
    std::uint32_t n_;
    std::size_t m_ = 0;
    std::vector<std::vector<std::uint64_t>> rows_;
};

// Leaves become vertices numbered in serialization order; two vertices are
// adjacent iff their lowest common ancestor is a join node. Node types
// alternate with depth starting from `root_type` at the root.
SimpleGraph materialize(const Cotree& t, RootType root_type);
SimpleGraph materialize(const CographHandle& h);

// True iff g2 is the edge complement of g1.
bool complement_check(const SimpleGraph& g1, const SimpleGraph& g2);

bool is_connected(const SimpleGraph& g);

// "n m" header, then one "u v" line per edge. Every line ends in '\n'.
std::string to_edgelist(const SimpleGraph& g);

// Standard graph6 encoding, without the optional ">>graph6<<" header and
// without a trailing newline. Throws UsageError above 258047 vertices.
std::string to_graph6(const SimpleGraph& g);

// Undirected DOT graph block, newline terminated.
std::string to_dot(const SimpleGraph& g, const std::string& name = "G");

} // namespace cograph
