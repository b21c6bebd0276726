#include "cograph/successor.hpp"

#include <span>

#include "cograph/errors.hpp"

namespace cograph {

namespace {

NodeId pivot_below(const Cotree& t, NodeId v, WorkCounter* work) {
    const auto ch = t.children(v);
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) {
        const NodeId hit = pivot_below(t, *it, work);
        if (hit != kNoNode) return hit;
    }
    if (work != nullptr) ++work->visited;
    return is_exhausted(t, v) ? kNoNode : v;
}

void rebuild(Cotree& t, NodeId v, std::span<const Part> parts, WorkCounter* work) {
    t.clear_children(v, work);
    for (Part a : parts) {
        const NodeId c = t.add_child(v, work);
        t.set_leaf_count(c, a);
        if (a > 1) {
            for (Part i = 0; i < a; ++i) t.add_child(c, work);
        }
    }
}

// Rebuild with the all-ones partition: v becomes a star over its leaves.
void reset_to_min(Cotree& t, NodeId v, WorkCounter* work) {
    const std::uint32_t leaves = t.leaf_count(v);
    t.clear_children(v, work);
    for (std::uint32_t i = 0; i < leaves; ++i) t.add_child(v, work);
}

} // namespace

bool is_exhausted(const Cotree& t, NodeId v) {
    const auto ch = t.children(v);
    if (ch.empty()) return true;
    return ch.size() == 2 && t.leaf_count(ch[0]) == t.leaf_count(v) / 2;
}

NodeId find_pivot_node(const Cotree& t, WorkCounter* work) {
    return pivot_below(t, t.root(), work);
}

PivotResult find_pivot(const Cotree& t) {
    PivotResult result;
    const NodeId pivot = find_pivot_node(t);
    if (pivot == kNoNode) return result;
    result.node = pivot;
    for (NodeId x = pivot; x != kNoNode; x = t.parent(x)) result.path_to_root.push_back(x);
    return result;
}

SiblingSplit split_siblings(const Cotree& t, NodeId v) {
    SiblingSplit split;
    split.self = v;
    const NodeId p = t.parent(v);
    if (p == kNoNode) return split;
    const auto ch = t.children(p);
    const std::uint32_t at = t.slot(v);
    split.before.assign(ch.begin(), ch.begin() + at);
    split.after.assign(ch.begin() + at + 1, ch.end());
    return split;
}

void rebuild_node(Cotree& t, NodeId v, const Partition& p, WorkCounter* work) {
    if (p.sum() != t.leaf_count(v)) {
        throw UsageError("partition " + p.to_string() + " does not sum to the node's " +
                         std::to_string(t.leaf_count(v)) + " leaves");
    }
    rebuild(t, v, p.parts(), work);
}

void advance_at(Cotree& t, NodeId pivot, WorkCounter* work) {
    thread_local std::vector<Part> current;
    thread_local std::vector<Part> successor;

    current.clear();
    for (NodeId c : t.children(pivot)) current.push_back(t.leaf_count(c));
    detail::next_partition_into(current, successor, nullptr);
    rebuild(t, pivot, successor, work);

    // Walk from the pivot to the root, resetting everything to the right of
    // the path. T(x) is cloned after its own subtree has been updated.
    for (NodeId x = pivot; x != kNoNode; x = t.parent(x)) {
        const NodeId p = t.parent(x);
        if (p == kNoNode) break;
        const std::size_t k = t.children(p).size();
        for (std::size_t j = t.slot(x) + 1; j < k; ++j) {
            const NodeId y = t.children(p)[j];
            if (work != nullptr) ++work->visited;
            if (t.leaf_count(y) == t.leaf_count(x)) {
                t.copy_subtree(x, y, work);
            } else {
                reset_to_min(t, y, work);
            }
        }
    }
}

bool next_tree(Cotree& t, WorkCounter* work) {
#ifndef NDEBUG
    check_successor_input(t);
#endif
    const NodeId pivot = find_pivot_node(t, work);
    if (pivot == kNoNode) return false;
    advance_at(t, pivot, work);
    return true;
}

void check_successor_input(const Cotree& t) {
    if (!is_labeled(t)) throw UsageError("next_tree requires a labeled tree");
    if (!is_ordered(t)) throw UsageError("next_tree requires an ordered tree");
}

} // namespace cograph
