#pragma once

#include <optional>
#include <vector>

#include "cograph/cotree.hpp"
#include "cograph/partition.hpp"

namespace cograph {

struct PivotResult {
    std::optional<NodeId> node;
    // Pivot first, root last. Empty when there is no pivot.
    std::vector<NodeId> path_to_root;
};

struct SiblingSplit {
    std::vector<NodeId> before;
    NodeId self = kNoNode;
    std::vector<NodeId> after;
};

// A leaf, or a node whose induced partition is (floor(l/2), ceil(l/2)).
// Constant time; relies on the children being ordered by leaf count.
bool is_exhausted(const Cotree& t, NodeId v);

// First non-exhausted node of the inverted post-order traversal (each
// sibling sequence right to left, children before their parent).
PivotResult find_pivot(const Cotree& t);

// Same search without materializing the path; kNoNode when the tree is the
// maximum of its family.
NodeId find_pivot_node(const Cotree& t, WorkCounter* work = nullptr);

// The sibling sequence of v split around v. The root is its own only sibling.
SiblingSplit split_siblings(const Cotree& t, NodeId v);

// Replaces T(v) by the smallest ordered subtree whose root induces p: one
// child per part, and every child with part > 1 gets that many leaves.
void rebuild_node(Cotree& t, NodeId v, const Partition& p, WorkCounter* work = nullptr);

// Advances t to the immediately following tree of its family. Returns false
// and leaves t untouched when t is already the maximum.
bool next_tree(Cotree& t, WorkCounter* work = nullptr);

// The successor step for a pivot already located by find_pivot_node.
void advance_at(Cotree& t, NodeId pivot, WorkCounter* work = nullptr);

// Throws UsageError unless t is labeled and ordered. next_tree runs this in
// builds without NDEBUG.
void check_successor_input(const Cotree& t);

} // namespace cograph
