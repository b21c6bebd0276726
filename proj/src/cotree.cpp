#include "cograph/cotree.hpp"

#include <utility>

#include "cograph/errors.hpp"

namespace cograph {

Cotree::Cotree() {
    root_ = allocate(nullptr);
}

NodeId Cotree::allocate(WorkCounter* work) {
    NodeId id;
    if (!free_.empty()) {
        id = free_.back();
        free_.pop_back();
    } else {
        id = NodeId{static_cast<std::uint32_t>(nodes_.size())};
        nodes_.emplace_back();
    }
    Node& n = node(id);
    n.parent = kNoNode;
    n.slot = 0;
    n.leaf_count = 1;
    n.children.clear();
    ++live_;
    if (work != nullptr) ++work->created;
    return id;
}

NodeId Cotree::add_child(NodeId parent, WorkCounter* work) {
    const NodeId id = allocate(work);
    Node& p = node(parent);
    Node& c = node(id);
    c.parent = parent;
    c.slot = static_cast<std::uint32_t>(p.children.size());
    p.children.push_back(id);
    return id;
}

void Cotree::clear_children(NodeId v, WorkCounter* work) {
    scratch_.assign(node(v).children.begin(), node(v).children.end());
    node(v).children.clear();
    while (!scratch_.empty()) {
        const NodeId x = scratch_.back();
        scratch_.pop_back();
        Node& n = node(x);
        scratch_.insert(scratch_.end(), n.children.begin(), n.children.end());
        n.children.clear();
        n.parent = kNoNode;
        free_.push_back(x);
        --live_;
        if (work != nullptr) ++work->deleted;
    }
}

void Cotree::copy_subtree(NodeId src, NodeId dst, WorkCounter* work) {
    clear_children(dst, work);
    // (source, destination) pairs still to be filled in. Indices are re-read
    // on every iteration because allocate() may grow nodes_.
    std::vector<std::pair<NodeId, NodeId>> pending{{src, dst}};
    while (!pending.empty()) {
        const auto [from, to] = pending.back();
        pending.pop_back();
        const std::size_t k = node(from).children.size();
        for (std::size_t i = 0; i < k; ++i) {
            const NodeId c = node(from).children[i];
            const NodeId d = add_child(to, work);
            node(d).leaf_count = node(c).leaf_count;
            if (!node(c).children.empty()) pending.emplace_back(c, d);
        }
    }
}

std::vector<NodeId> Cotree::preorder() const {
    std::vector<NodeId> order;
    order.reserve(live_);
    std::vector<NodeId> stack{root_};
    while (!stack.empty()) {
        const NodeId v = stack.back();
        stack.pop_back();
        order.push_back(v);
        const auto& ch = node(v).children;
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
    }
    return order;
}

Cotree min_tree(std::uint32_t n) {
    if (n < 2) throw UsageError("min_tree requires n >= 2");
    Cotree t;
    for (std::uint32_t i = 0; i < n; ++i) t.add_child(t.root());
    t.set_leaf_count(t.root(), n);
    return t;
}

Partition induced_partition(const Cotree& t, NodeId v) {
    if (t.is_leaf(v)) throw UsageError("a leaf does not induce a partition");
    std::vector<Part> parts;
    parts.reserve(t.children(v).size());
    for (NodeId c : t.children(v)) parts.push_back(t.leaf_count(c));
    return Partition(std::move(parts));
}

namespace {

NodeOrdering from_less(bool less) { return less ? NodeOrdering::Less : NodeOrdering::Greater; }

} // namespace

NodeOrdering compare_nodes(const Cotree& t1, NodeId v, const Cotree& t2, NodeId w) {
    const std::uint32_t lv = t1.leaf_count(v);
    const std::uint32_t lw = t2.leaf_count(w);
    if (lv != lw) return from_less(lv < lw);
    if (lv == 1) return NodeOrdering::Equivalent;

    const auto cv = t1.children(v);
    const auto cw = t2.children(w);
    const std::size_t common = std::min(cv.size(), cw.size());
    for (std::size_t i = 0; i < common; ++i) {
        const std::uint32_t a = t1.leaf_count(cv[i]);
        const std::uint32_t b = t2.leaf_count(cw[i]);
        if (a != b) return from_less(a < b);
    }
    if (cv.size() != cw.size()) return from_less(cv.size() < cw.size());

    for (std::size_t i = 0; i < cv.size(); ++i) {
        const NodeOrdering r = compare_nodes(t1, cv[i], t2, cw[i]);
        if (r != NodeOrdering::Equivalent) return r;
    }
    return NodeOrdering::Equivalent;
}

NodeOrdering compare_trees(const Cotree& t1, const Cotree& t2) {
    if (t1.leaves() != t2.leaves()) {
        throw UsageError("cannot compare trees with " + std::to_string(t1.leaves()) + " and " +
                         std::to_string(t2.leaves()) + " leaves");
    }
    return compare_nodes(t1, t1.root(), t2, t2.root());
}

void relabel_in_place(Cotree& t) {
    const std::vector<NodeId> order = t.preorder();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto ch = t.children(*it);
        if (ch.empty()) {
            t.set_leaf_count(*it, 1);
            continue;
        }
        if (ch.size() < 2) throw ValidationError("internal node with fewer than two children");
        std::uint32_t sum = 0;
        for (NodeId c : ch) sum += t.leaf_count(c);
        t.set_leaf_count(*it, sum);
    }
}

Cotree relabel(Cotree t) {
    relabel_in_place(t);
    return t;
}

bool is_ordered(const Cotree& t) {
    for (NodeId v : t.preorder()) {
        const auto ch = t.children(v);
        for (std::size_t i = 1; i < ch.size(); ++i) {
            if (compare_nodes(t, ch[i - 1], t, ch[i]) == NodeOrdering::Greater) return false;
        }
    }
    return true;
}

bool is_labeled(const Cotree& t) {
    for (NodeId v : t.preorder()) {
        const auto ch = t.children(v);
        if (ch.empty()) {
            if (t.leaf_count(v) != 1) return false;
            continue;
        }
        std::uint32_t sum = 0;
        for (NodeId c : ch) sum += t.leaf_count(c);
        if (sum != t.leaf_count(v)) return false;
    }
    return true;
}

void serialize_to(const Cotree& t, NodeId v, std::string& out) {
    if (t.is_leaf(v)) {
        out += '1';
        return;
    }
    out += '(';
    bool first = true;
    for (NodeId c : t.children(v)) {
        if (!first) out += ' ';
        first = false;
        serialize_to(t, c, out);
    }
    out += ')';
}

std::string serialize(const Cotree& t, NodeId v) {
    std::string out;
    out.reserve(4 * static_cast<std::size_t>(t.leaf_count(v)));
    serialize_to(t, v, out);
    return out;
}

std::string serialize(const Cotree& t) { return serialize(t, t.root()); }

Cotree parse(std::string_view text) {
    Cotree t;
    std::vector<NodeId> open;
    bool root_used = false;
    std::size_t pos = 0;

    auto fail = [&](const std::string& what) -> ParseError { return ParseError(what, pos); };

    for (;;) {
        // Expect the start of a tree at pos.
        if (pos >= text.size()) throw fail("unexpected end of input, expected '1' or '('");
        const char c = text[pos];
        if (c == '(') {
            if (!root_used) {
                open.push_back(t.root());
                root_used = true;
            } else {
                open.push_back(t.add_child(open.back()));
            }
            ++pos;
            continue;
        }
        if (c != '1') throw fail(std::string("unexpected character '") + c + "', expected '1' or '('");
        if (!root_used) {
            root_used = true;
        } else {
            t.add_child(open.back());
        }
        ++pos;

        // A tree just ended: close as many nodes as the text asks for.
        for (;;) {
            if (open.empty()) {
                if (pos != text.size()) throw fail("trailing characters after tree");
                relabel_in_place(t);
                return t;
            }
            if (pos >= text.size()) throw fail("unexpected end of input, expected ' ' or ')'");
            if (text[pos] == ' ') {
                ++pos;
                break;
            }
            if (text[pos] != ')') {
                throw fail(std::string("unexpected character '") + text[pos] + "', expected ' ' or ')'");
            }
            if (t.children(open.back()).size() < 2) {
                throw fail("internal node needs at least two children");
            }
            open.pop_back();
            ++pos;
        }
    }
}

} // namespace cograph
