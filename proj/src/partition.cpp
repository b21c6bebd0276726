#include "cograph/partition.hpp"

#include <algorithm>
#include <numeric>

#include "cograph/errors.hpp"

namespace cograph {

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
    if (parts_.size() < 2) {
        throw UsageError("a partition needs at least two parts");
    }
    if (std::ranges::find(parts_, Part{0}) != parts_.end()) {
        throw UsageError("partition parts must be positive");
    }
    if (!std::ranges::is_sorted(parts_)) {
        throw UsageError("partition parts must be non-decreasing");
    }
    sum_ = std::accumulate(parts_.begin(), parts_.end(), std::uint32_t{0});
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i != 0) s += ',';
        s += std::to_string(parts_[i]);
    }
    s += ')';
    return s;
}

std::strong_ordering compare_partitions(const Partition& a, const Partition& b) {
    if (a.sum() != b.sum()) {
        throw UsageError("cannot compare partitions of " + std::to_string(a.sum()) +
                         " and " + std::to_string(b.sum()));
    }
    const std::size_t common = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
    }
    // Two distinct partitions of the same n cannot be prefixes of each other.
    return a.size() <=> b.size();
}

Partition min_partition(std::uint32_t n) {
    if (n < 2) throw UsageError("min_partition requires n >= 2");
    return Partition(std::vector<Part>(n, 1));
}

bool is_max_partition(const Partition& a) noexcept {
    return a.size() == 2 && a[0] == a.sum() / 2;
}

namespace detail {

bool next_partition_into(std::span<const Part> a, std::vector<Part>& out, std::uint64_t* ops) {
    const std::size_t k = a.size();
    std::uint32_t n = 0;
    for (Part x : a) n += x;

    out.clear();
    std::uint64_t written = 0;
    auto emit = [&](Part x) {
        out.push_back(x);
        ++written;
    };

    bool found = true;
    if (a[0] != n / 2) {
        out.assign(a.begin(), a.end() - 2);
        written += k - 2;
        Part prev = a[k - 2];
        Part last = a[k - 1];
        if (last - prev <= 1) {
            emit(prev + last);
        } else {
            ++prev;
            --last;
            const Part q = last / prev;
            const Part r = last % prev;
            if (q > 1) {
                for (Part i = 0; i < q; ++i) emit(prev);
                emit(prev + r);
            } else {
                emit(prev);
                emit(last);
            }
        }
    } else if (n == 3 && a[1] != 2) {
        // (1,1,1) is the only partition whose first part is floor(n/2) yet
        // is not the maximum.
        emit(1);
        emit(2);
    } else {
        found = false;
    }

    if (ops != nullptr) *ops += written;
    return found;
}

} // namespace detail

std::optional<Partition> next_partition(const Partition& a, std::uint64_t* ops) {
    std::vector<Part> out;
    if (!detail::next_partition_into(a.parts(), out, ops)) return std::nullopt;
    return Partition(std::move(out));
}

} // namespace cograph
