#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "cograph/errors.hpp"
#include "cograph/oracle.hpp"
#include "cograph/successor.hpp"

using namespace cograph;

namespace {

std::string advanced(const std::string& text) {
    Cotree t = parse(text);
    REQUIRE(next_tree(t));
    return serialize(t);
}

} // namespace

TEST_CASE("is_exhausted") {
    const Cotree t = parse("((1 1 (1 1)) (1 1 1 1) (1 1 1 1) ((1 1) (1 1 1)))");
    const auto ch = t.children(t.root());
    CHECK(is_exhausted(t, t.children(ch[0])[0]));
    CHECK(is_exhausted(t, ch[3]));
    CHECK_FALSE(is_exhausted(t, ch[0]));
    CHECK_FALSE(is_exhausted(t, ch[1]));
    CHECK(is_exhausted(t, t.children(ch[0])[2]));
    CHECK(is_exhausted(parse("(1 1)"), parse("(1 1)").root()));
}

TEST_CASE("find_pivot examples") {
    const Cotree m = min_tree(4);
    const PivotResult at_root = find_pivot(m);
    REQUIRE(at_root.node.has_value());
    CHECK(*at_root.node == m.root());
    CHECK(at_root.path_to_root == std::vector<NodeId>{m.root()});

    CHECK_FALSE(find_pivot(parse("((1 1) (1 1))")).node.has_value());
    CHECK(find_pivot(parse("((1 1) (1 1))")).path_to_root.empty());

    const Cotree t = parse("(1 (1 1 1))");
    const PivotResult inner = find_pivot(t);
    REQUIRE(inner.node.has_value());
    CHECK(*inner.node == t.children(t.root())[1]);
    CHECK(inner.path_to_root == std::vector<NodeId>{*inner.node, t.root()});

    CHECK_FALSE(find_pivot(min_tree(2)).node.has_value());
}

TEST_CASE("find_pivot scans right to left, children first") {
    // Both (1 1 1) nodes are pivot candidates; the right one is met first.
    const Cotree t = parse("((1 1 1) (1 1 1))");
    const PivotResult p = find_pivot(t);
    REQUIRE(p.node.has_value());
    CHECK(*p.node == t.children(t.root())[1]);
}

TEST_CASE("split_siblings") {
    const Cotree t = parse("(1 1 (1 1) (1 1 1))");
    const auto ch = t.children(t.root());
    const SiblingSplit s = split_siblings(t, ch[2]);
    CHECK(s.before == std::vector<NodeId>{ch[0], ch[1]});
    CHECK(s.self == ch[2]);
    CHECK(s.after == std::vector<NodeId>{ch[3]});
    const SiblingSplit r = split_siblings(t, t.root());
    CHECK(r.before.empty());
    CHECK(r.after.empty());
}

TEST_CASE("rebuild_node") {
    Cotree t = parse("(1 (1 (1 (1 1))))");
    NodeId v = t.children(t.root())[1];
    rebuild_node(t, v, {1, 3});
    CHECK(serialize(t, v) == "(1 (1 1 1))");

    Cotree five = min_tree(5);
    rebuild_node(five, five.root(), {2, 3});
    CHECK(serialize(five) == "((1 1) (1 1 1))");
    CHECK(five.node_count() == 8);
    CHECK(is_labeled(five));

    Cotree three = parse("(1 1 (1 (1 1)))");
    v = three.children(three.root())[2];
    rebuild_node(three, v, {1, 1, 1});
    CHECK(serialize(three, v) == "(1 1 1)");
    CHECK(three.node_count() == 7);

    CHECK_THROWS_AS(rebuild_node(three, v, {1, 1}), UsageError);
}

TEST_CASE("next_tree examples") {
    CHECK(advanced("(1 1 1 1)") == "(1 1 (1 1))");
    CHECK(advanced("(1 1 (1 1))") == "(1 (1 1 1))");
    CHECK(advanced("(1 (1 (1 1)))") == "((1 1) (1 1))");

    Cotree max = parse("((1 1) (1 1))");
    CHECK_FALSE(next_tree(max));
    CHECK(serialize(max) == "((1 1) (1 1))");

    Cotree two = min_tree(2);
    CHECK_FALSE(next_tree(two));
}

TEST_CASE("equal-sized right siblings receive copies of the updated subtree") {
    CHECK(advanced("(1 (1 1 1) (1 1 1))") == "(1 (1 1 1) (1 (1 1)))");
    CHECK(advanced("(1 (1 1 1) (1 (1 1)))") == "(1 (1 (1 1)) (1 (1 1)))");
    // Nested copy: the inner change is propagated to both outer siblings.
    CHECK(advanced("((1 1 1 1) (1 1 1 1))") == "((1 1 1 1) (1 1 (1 1)))");
    CHECK(advanced("((1 1 1 1) ((1 1) (1 1)))") == "((1 1 (1 1)) (1 1 (1 1)))");
}

TEST_CASE("larger right siblings are reset to stars") {
    CHECK(advanced("((1 1 1) ((1 1) (1 (1 1))))") == "((1 (1 1)) (1 1 1 1 1))");
    CHECK(advanced("((1 1 1) ((1 1) (1 1 1)))") == "((1 1 1) ((1 1) (1 (1 1))))");
    CHECK(advanced("(1 1 ((1 1) (1 1)))") == "(1 (1 1) (1 1 1))");
}

TEST_CASE("next_tree chain equals brute force for n = 2..9") {
    for (std::uint32_t n = 2; n <= 9; ++n) {
        CAPTURE(n);
        const auto expected = oracle::all_trees(n);
        Cotree t = min_tree(n);
        std::size_t i = 0;
        bool more = true;
        while (more) {
            REQUIRE(i < expected.size());
            CHECK(serialize(t) == serialize(expected[i]));
            CHECK(is_ordered(t));
            CHECK(is_labeled(t));
            CHECK(t.leaves() == n);
            CHECK(t.node_count() <= 2 * n - 1);
            Cotree before = t;
            more = next_tree(t);
            if (more) {
                CHECK(compare_trees(before, t) == NodeOrdering::Less);
            } else {
                CHECK(serialize(before) == serialize(t));
                CHECK_FALSE(find_pivot(t).node.has_value());
            }
            ++i;
        }
        CHECK(i == expected.size());
    }
}

TEST_CASE("per-step work is linear in n") {
    double lo = 1e9;
    double hi = 0;
    for (std::uint32_t n = 8; n <= 18; ++n) {
        Cotree t = min_tree(n);
        std::uint64_t worst = 0;
        for (;;) {
            WorkCounter w;
            if (!next_tree(t, &w)) {
                worst = std::max(worst, w.total());
                break;
            }
            worst = std::max(worst, w.total());
        }
        const double c = static_cast<double>(worst) / n;
        lo = std::min(lo, c);
        hi = std::max(hi, c);
        CHECK(worst <= 8ull * n);
    }
    CHECK(hi / lo < 2.0);
}

TEST_CASE("check_successor_input rejects unordered or unlabeled trees") {
    CHECK_NOTHROW(check_successor_input(parse("(1 (1 1))")));
    CHECK_THROWS_AS(check_successor_input(parse("((1 1) 1)")), UsageError);
    Cotree unlabeled;
    unlabeled.add_child(unlabeled.root());
    unlabeled.add_child(unlabeled.root());
    CHECK_THROWS_AS(check_successor_input(unlabeled), UsageError);
}
