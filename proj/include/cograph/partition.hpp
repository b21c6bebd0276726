#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cograph {

using Part = std::uint32_t;

// A partition of n into at least two parts, stored as a non-decreasing
// sequence. Construction validates the shape; the sum is cached.
class Partition {
public:
    explicit Partition(std::vector<Part> parts);
    Partition(std::initializer_list<Part> parts) : Partition(std::vector<Part>(parts)) {}

    std::span<const Part> parts() const noexcept { return parts_; }
    std::size_t size() const noexcept { return parts_.size(); }
    Part operator[](std::size_t i) const { return parts_[i]; }
    std::uint32_t sum() const noexcept { return sum_; }

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<Part> parts_;
    std::uint32_t sum_ = 0;
};

// Lexicographic order on partitions of the same integer. Throws UsageError
// when the two partitions do not sum to the same value.
std::strong_ordering compare_partitions(const Partition& a, const Partition& b);

// (1, 1, ..., 1) with n parts. Requires n >= 2.
Partition min_partition(std::uint32_t n);

// True for (floor(n/2), ceil(n/2)), the largest partition of n.
bool is_max_partition(const Partition& a) noexcept;

// Immediate lexicographic successor, or nullopt when `a` is the maximum.
// When `ops` is non-null it is incremented once per part written.
std::optional<Partition> next_partition(const Partition& a, std::uint64_t* ops = nullptr);

namespace detail {

// Allocation-free core of next_partition: writes the successor of `a` into
// `out` and returns true, or returns false when `a` is maximal. `a` is
// assumed valid. Returns the number of parts written through `ops`.
bool next_partition_into(std::span<const Part> a, std::vector<Part>& out,
                         std::uint64_t* ops = nullptr);

} // namespace detail

} // namespace cograph
