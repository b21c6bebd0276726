#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "cograph/cotree.hpp"

namespace cograph {

// Type of the cotree root: 0 = disjoint union, 1 = join.
enum class RootType : std::uint8_t { Union = 0, Join = 1 };

constexpr int bit(RootType r) noexcept { return static_cast<int>(r); }

// One generated cograph. `tree` refers to the generator's current tree and
// stays valid until the generator is advanced again or destroyed.
struct CographHandle {
    std::reference_wrapper<const Cotree> tree;
    RootType root_type;
    std::uint64_t ordinal;
};

// Pull-based enumeration of all unlabeled cographs on n vertices. For every
// tree of the family, in increasing order, yields the union-rooted cograph
// and then the join-rooted one. n == 1 yields the single-vertex graph once.
class CographGenerator {
public:
    explicit CographGenerator(std::uint32_t n, WorkCounter* work = nullptr);

    std::optional<CographHandle> next();

    std::uint32_t n() const noexcept { return n_; }
    const Cotree& tree() const noexcept { return tree_; }
    // 1-based position of the current tree in the enumeration.
    std::uint64_t index() const noexcept { return index_; }
    bool finished() const noexcept { return finished_; }

    // Counting mode: moves to the next tree, skipping the pending outputs of
    // the current one. Returns false once the last tree has been passed.
    bool advance_tree();

private:
    std::uint32_t n_;
    Cotree tree_;
    std::uint64_t index_ = 1;
    std::uint64_t emitted_ = 0;
    bool finished_ = false;
    bool join_next_ = false;
    bool advance_pending_ = false;
    WorkCounter* work_;
};

// Number of unlabeled cographs on n vertices, without building any output.
// threads > 1 splits the work by the partition induced at the root.
std::uint64_t count_cographs(std::uint32_t n, unsigned threads = 1);

// Number of trees whose root induces exactly `root`. The sub-enumeration
// starts at the smallest such tree and stops when the pivot reaches the root.
std::uint64_t count_trees_with_root(const Partition& root);

} // namespace cograph
