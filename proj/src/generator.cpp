#include "cograph/generator.hpp"

#include <atomic>
#include <thread>
#include <vector>

#include "cograph/errors.hpp"
#include "cograph/successor.hpp"

namespace cograph {

namespace {

Cotree first_tree(std::uint32_t n, WorkCounter* work) {
    Cotree t;
    if (work != nullptr) ++work->created;
    if (n == 1) return t;
    for (std::uint32_t i = 0; i < n; ++i) t.add_child(t.root(), work);
    t.set_leaf_count(t.root(), n);
    return t;
}

} // namespace

CographGenerator::CographGenerator(std::uint32_t n, WorkCounter* work)
    : n_(n), work_(work) {
    if (n < 1) throw UsageError("cograph generation requires n >= 1");
    tree_ = first_tree(n, work);
}

std::optional<CographHandle> CographGenerator::next() {
    if (finished_) return std::nullopt;
    if (n_ == 1) {
        finished_ = true;
        return CographHandle{tree_, RootType::Union, emitted_++};
    }
    if (join_next_) {
        join_next_ = false;
        advance_pending_ = true;
        return CographHandle{tree_, RootType::Join, emitted_++};
    }
    if (advance_pending_) {
        advance_pending_ = false;
        if (!next_tree(tree_, work_)) {
            finished_ = true;
            return std::nullopt;
        }
        ++index_;
    }
    join_next_ = true;
    return CographHandle{tree_, RootType::Union, emitted_++};
}

bool CographGenerator::advance_tree() {
    if (finished_) return false;
    join_next_ = false;
    advance_pending_ = false;
    if (n_ == 1 || !next_tree(tree_, work_)) {
        finished_ = true;
        return false;
    }
    ++index_;
    return true;
}

std::uint64_t count_trees_with_root(const Partition& root) {
    Cotree t = min_tree(root.sum());
    rebuild_node(t, t.root(), root);
    std::uint64_t trees = 1;
    for (;;) {
        const NodeId pivot = find_pivot_node(t);
        if (pivot == kNoNode || pivot == t.root()) break;
        advance_at(t, pivot);
        ++trees;
    }
    return trees;
}

std::uint64_t count_cographs(std::uint32_t n, unsigned threads) {
    if (n < 1) throw UsageError("cograph counting requires n >= 1");
    if (n == 1) return 1;

    if (threads <= 1) {
        Cotree t = min_tree(n);
        std::uint64_t trees = 1;
        while (next_tree(t)) ++trees;
        return 2 * trees;
    }

    std::vector<Partition> roots;
    for (std::optional<Partition> p = min_partition(n); p; p = next_partition(*p)) {
        roots.push_back(*p);
    }

    std::atomic<std::size_t> next_job{0};
    std::atomic<std::uint64_t> trees{0};
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) {
        workers.emplace_back([&] {
            std::uint64_t local = 0;
            for (std::size_t job = next_job++; job < roots.size(); job = next_job++) {
                local += count_trees_with_root(roots[job]);
            }
            trees += local;
        });
    }
    workers.clear();
    return 2 * trees.load();
}

} // namespace cograph
