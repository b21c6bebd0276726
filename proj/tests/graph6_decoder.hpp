#pragma once

// Test-only graph6 reader written from the format description, kept apart
// from the encoder it checks.

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

namespace testing_support {

struct DecodedGraph {
    std::uint64_t n = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges; // i < j, column order
};

inline DecodedGraph decode_graph6(std::string_view s) {
    auto value = [&](std::size_t i) -> std::uint64_t {
        if (i >= s.size() || s[i] < 63 || s[i] > 126) throw std::runtime_error("bad graph6 byte");
        return static_cast<std::uint64_t>(s[i] - 63);
    };
    DecodedGraph g;
    std::size_t pos = 0;
    if (!s.empty() && s[0] == '~') {
        if (s.size() > 1 && s[1] == '~') {
            for (std::size_t i = 2; i < 8; ++i) g.n = (g.n << 6) | value(i);
            pos = 8;
        } else {
            for (std::size_t i = 1; i < 4; ++i) g.n = (g.n << 6) | value(i);
            pos = 4;
        }
    } else {
        g.n = value(0);
        pos = 1;
    }
    const std::uint64_t bits = g.n * (g.n - (g.n > 0 ? 1 : 0)) / 2;
    const std::size_t expected_len = pos + static_cast<std::size_t>((bits + 5) / 6);
    if (s.size() != expected_len) throw std::runtime_error("graph6 length mismatch");
    std::uint64_t k = 0;
    for (std::uint64_t j = 1; j < g.n; ++j) {
        for (std::uint64_t i = 0; i < j; ++i, ++k) {
            const std::uint64_t byte = value(pos + static_cast<std::size_t>(k / 6));
            if ((byte >> (5 - k % 6)) & 1U) g.edges.emplace_back(i, j);
        }
    }
    // Padding bits must be zero.
    for (; k % 6 != 0; ++k) {
        if ((value(pos + static_cast<std::size_t>(k / 6)) >> (5 - k % 6)) & 1U) {
            throw std::runtime_error("nonzero padding");
        }
    }
    return g;
}

} // namespace testing_support
