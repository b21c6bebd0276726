#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cograph/partition.hpp"

namespace cograph {

enum class NodeId : std::uint32_t {};

inline constexpr NodeId kNoNode{std::numeric_limits<std::uint32_t>::max()};

constexpr std::uint32_t index(NodeId id) noexcept { return static_cast<std::uint32_t>(id); }

enum class NodeOrdering { Less, Equivalent, Greater };

// Instrumentation for the successor machinery. Every arena allocation,
// release and traversal step bumps one of the counters when a counter is
// supplied; passing nullptr disables counting.
struct WorkCounter {
    std::uint64_t visited = 0;
    std::uint64_t created = 0;
    std::uint64_t deleted = 0;

    std::uint64_t total() const noexcept { return visited + created + deleted; }
};

// Rooted tree whose internal nodes have at least two children, stored in an
// arena with a free list. Each node carries its leaf count, its parent and
// its position among its parent's children.
class Cotree {
public:
    // Single leaf: the tree of the one-vertex graph.
    Cotree();

    NodeId root() const noexcept { return root_; }
    std::uint32_t leaves() const noexcept { return leaf_count(root_); }
    std::size_t node_count() const noexcept { return live_; }

    NodeId parent(NodeId v) const { return node(v).parent; }
    std::span<const NodeId> children(NodeId v) const { return node(v).children; }
    std::uint32_t leaf_count(NodeId v) const { return node(v).leaf_count; }
    // Position of v in its parent's child sequence (0 for the root).
    std::uint32_t slot(NodeId v) const { return node(v).slot; }
    bool is_leaf(NodeId v) const { return node(v).children.empty(); }

    // Appends a fresh leaf under `parent` and returns it. Ancestor labels are
    // not touched; call relabel_in_place or set_leaf_count afterwards.
    NodeId add_child(NodeId parent, WorkCounter* work = nullptr);

    // Releases every descendant of v, leaving v as a childless node.
    void clear_children(NodeId v, WorkCounter* work = nullptr);

    // Replaces the descendants of `dst` by a copy of the descendants of
    // `src`. Both must have the same leaf count and be distinct, and `dst`
    // must not lie inside T(src).
    void copy_subtree(NodeId src, NodeId dst, WorkCounter* work = nullptr);

    void set_leaf_count(NodeId v, std::uint32_t count) { node(v).leaf_count = count; }

    // Node ids in pre-order, left to right.
    std::vector<NodeId> preorder() const;

private:
    struct Node {
        NodeId parent = kNoNode;
        std::uint32_t slot = 0;
        std::uint32_t leaf_count = 1;
        std::vector<NodeId> children;
    };

    NodeId allocate(WorkCounter* work);
    Node& node(NodeId v) { return nodes_[index(v)]; }
    const Node& node(NodeId v) const { return nodes_[index(v)]; }

    std::vector<Node> nodes_;
    std::vector<NodeId> free_;
    std::vector<NodeId> scratch_;
    NodeId root_ = kNoNode;
    std::size_t live_ = 0;
};

// The root with n leaf children. Requires n >= 2.
Cotree min_tree(std::uint32_t n);

// (l(v_1), ..., l(v_k)) for the children of internal node v.
Partition induced_partition(const Cotree& t, NodeId v);

// Recursive node order; nodes may live in different trees.
NodeOrdering compare_nodes(const Cotree& t1, NodeId v, const Cotree& t2, NodeId w);

// Order of two trees with the same number of leaves (compares roots).
NodeOrdering compare_trees(const Cotree& t1, const Cotree& t2);

// Recomputes every leaf count bottom-up. Throws ValidationError if an
// internal node has fewer than two children.
void relabel_in_place(Cotree& t);
Cotree relabel(Cotree t);

// True when every sibling sequence is non-decreasing under compare_nodes.
bool is_ordered(const Cotree& t);

// True when every stored leaf count matches the subtree it roots.
bool is_labeled(const Cotree& t);

// Canonical text: tree := "1" | "(" tree (" " tree)+ ")".
std::string serialize(const Cotree& t);
std::string serialize(const Cotree& t, NodeId v);
void serialize_to(const Cotree& t, NodeId v, std::string& out);

// Parses canonical text and relabels. Throws ParseError.
Cotree parse(std::string_view text);

} // namespace cograph
