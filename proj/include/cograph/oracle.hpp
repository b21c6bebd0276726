#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <vector>

#include "cograph/cotree.hpp"
#include "cograph/graph.hpp"
#include "cograph/partition.hpp"

// Brute-force ground truth for small n. Nothing in here calls the successor
// machinery or the node order, so the two can be checked against each other.
namespace cograph::oracle {

// Every partition of n with at least two parts, lexicographically sorted.
// Requires 2 <= n <= 20.
std::vector<Partition> all_partitions(std::uint32_t n);

// Every tree with n leaves whose internal nodes have at least two children,
// one representative per equivalence class, each ordered, sorted ascending.
// Requires 2 <= n <= 12.
std::vector<Cotree> all_trees(std::uint32_t n);

// Flat integer key whose lexicographic order coincides with the recursive
// node order: key(leaf) = [1], key(v) = [l(v), a_1..a_k, key(v_1)..key(v_k)]
// with children sorted by key.
std::vector<std::uint32_t> tree_key(const Cotree& t, NodeId v);

// Minimum adjacency bit string over all vertex relabelings. Bit e stands for
// the e-th pair in column order (0,1), (0,2), (1,2), (0,3), ...
struct CanonicalGraphForm {
    std::uint32_t n = 0;
    std::uint64_t bits = 0;

    friend auto operator<=>(const CanonicalGraphForm&, const CanonicalGraphForm&) = default;
};

// Requires at most 8 vertices.
CanonicalGraphForm canonical_form(const SimpleGraph& g);

bool is_p4_free(const SimpleGraph& g);

// Canonical forms of all P4-free graphs on n labeled vertices. Supports
// 1 <= n <= 6; n == 7 only with allow_long (it takes a while).
std::set<CanonicalGraphForm> cograph_forms_bruteforce(std::uint32_t n, bool allow_long = false,
                                                      unsigned threads = 1);

std::uint64_t count_cographs_bruteforce(std::uint32_t n, bool allow_long = false,
                                        unsigned threads = 1);

} // namespace cograph::oracle
