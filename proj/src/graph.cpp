#include "cograph/graph.hpp"

#include <bit>
#include <vector>

#include "cograph/errors.hpp"

namespace cograph {

SimpleGraph::SimpleGraph(std::uint32_t vertex_count) : n_(vertex_count), rows_(vertex_count) {}

bool SimpleGraph::has_edge(std::uint32_t u, std::uint32_t v) const {
    if (u >= n_ || v >= n_) throw UsageError("vertex index out of range");
    const auto& row = rows_[u];
    return !row.empty() && ((row[v / 64] >> (v % 64)) & 1U) != 0;
}

void SimpleGraph::add_edge(std::uint32_t u, std::uint32_t v) {
    if (u >= n_ || v >= n_) throw UsageError("vertex index out of range");
    if (u == v) throw UsageError("self-loops are not allowed");
    if (has_edge(u, v)) return;
    const std::size_t words = (static_cast<std::size_t>(n_) + 63) / 64;
    for (auto [a, b] : {Edge{u, v}, Edge{v, u}}) {
        auto& row = rows_[a];
        if (row.empty()) row.assign(words, 0);
        row[b / 64] |= std::uint64_t{1} << (b % 64);
    }
    ++m_;
}

std::vector<SimpleGraph::Edge> SimpleGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (std::uint32_t u = 0; u < n_; ++u) {
        const auto& row = rows_[u];
        for (std::size_t w = 0; w < row.size(); ++w) {
            for (std::uint64_t bits = row[w]; bits != 0; bits &= bits - 1) {
                const auto v = static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                if (v > u) out.emplace_back(u, v);
            }
        }
    }
    return out;
}

namespace {

struct LeafRange {
    std::uint32_t begin;
    std::uint32_t end;
};

// Leaves of a subtree are contiguous in serialization order, so each node
// maps to a half-open range of vertex indices.
LeafRange build(const Cotree& t, NodeId v, bool join, std::uint32_t& next_leaf, SimpleGraph& g) {
    if (t.is_leaf(v)) {
        const std::uint32_t id = next_leaf++;
        return {id, id + 1};
    }
    const std::uint32_t begin = next_leaf;
    std::uint32_t joined_end = begin;
    for (NodeId c : t.children(v)) {
        const LeafRange r = build(t, c, !join, next_leaf, g);
        if (join) {
            for (std::uint32_t a = begin; a < joined_end; ++a) {
                for (std::uint32_t b = r.begin; b < r.end; ++b) g.add_edge(a, b);
            }
        }
        joined_end = r.end;
    }
    return {begin, next_leaf};
}

} // namespace

SimpleGraph materialize(const Cotree& t, RootType root_type) {
    SimpleGraph g(t.leaves());
    std::uint32_t next_leaf = 0;
    build(t, t.root(), root_type == RootType::Join, next_leaf, g);
    return g;
}

SimpleGraph materialize(const CographHandle& h) { return materialize(h.tree.get(), h.root_type); }

bool complement_check(const SimpleGraph& g1, const SimpleGraph& g2) {
    if (g1.vertex_count() != g2.vertex_count()) return false;
    const std::uint32_t n = g1.vertex_count();
    for (std::uint32_t u = 0; u < n; ++u) {
        for (std::uint32_t v = u + 1; v < n; ++v) {
            if (g1.has_edge(u, v) == g2.has_edge(u, v)) return false;
        }
    }
    return true;
}

bool is_connected(const SimpleGraph& g) {
    const std::uint32_t n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<bool> seen(n, false);
    std::vector<std::uint32_t> stack{0};
    seen[0] = true;
    std::uint32_t reached = 1;
    while (!stack.empty()) {
        const std::uint32_t u = stack.back();
        stack.pop_back();
        for (std::uint32_t v = 0; v < n; ++v) {
            if (!seen[v] && g.has_edge(u, v)) {
                seen[v] = true;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n;
}

std::string to_edgelist(const SimpleGraph& g) {
    std::string out = std::to_string(g.vertex_count()) + ' ' + std::to_string(g.edge_count()) + '\n';
    for (const auto& [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

std::string to_graph6(const SimpleGraph& g) {
    const std::uint32_t n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(63 + n);
    } else if (n <= 258047) {
        out += static_cast<char>(126);
        for (int shift = 12; shift >= 0; shift -= 6) {
            out += static_cast<char>(63 + ((n >> shift) & 0x3F));
        }
    } else {
        throw UsageError("graph6 supports at most 258047 vertices");
    }

    // Upper triangle, column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
    unsigned chunk = 0;
    int filled = 0;
    for (std::uint32_t j = 1; j < n; ++j) {
        for (std::uint32_t i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.has_edge(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out += static_cast<char>(63 + chunk);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled != 0) out += static_cast<char>(63 + (chunk << (6 - filled)));
    return out;
}

std::string to_dot(const SimpleGraph& g, const std::string& name) {
    std::string out = "graph " + name + " {\n";
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) out += "  " + std::to_string(v) + ";\n";
    for (const auto& [u, v] : g.edges()) {
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    }
    out += "}\n";
    return out;
}

} // namespace cograph
