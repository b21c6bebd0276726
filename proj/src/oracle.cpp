#include "cograph/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "cograph/errors.hpp"

namespace cograph::oracle {

namespace {

void partitions_from(std::uint32_t remaining, Part smallest, std::vector<Part>& prefix,
                     std::vector<std::vector<Part>>& out) {
    if (remaining == 0) {
        if (prefix.size() >= 2) out.push_back(prefix);
        return;
    }
    for (Part a = smallest; a <= remaining; ++a) {
        prefix.push_back(a);
        partitions_from(remaining - a, a, prefix, out);
        prefix.pop_back();
    }
}

std::vector<std::vector<Part>> raw_partitions(std::uint32_t n) {
    std::vector<std::vector<Part>> out;
    std::vector<Part> prefix;
    partitions_from(n, 1, prefix, out);
    std::ranges::sort(out);
    return out;
}

struct Shape {
    std::vector<std::uint32_t> key;
    std::string text;
};

// Fills children left to right; equal-sized neighbours take non-decreasing
// shape indices so each multiset of children is produced exactly once.
void choose_children(const std::vector<std::vector<Shape>>& shapes, const std::vector<Part>& parts,
                     std::size_t pos, std::size_t prev_index, std::vector<const Shape*>& picked,
                     std::uint32_t total, std::vector<Shape>& out) {
    if (pos == parts.size()) {
        Shape s;
        s.key.push_back(total);
        s.key.insert(s.key.end(), parts.begin(), parts.end());
        s.text = "(";
        for (std::size_t i = 0; i < picked.size(); ++i) {
            s.key.insert(s.key.end(), picked[i]->key.begin(), picked[i]->key.end());
            if (i != 0) s.text += ' ';
            s.text += picked[i]->text;
        }
        s.text += ')';
        out.push_back(std::move(s));
        return;
    }
    const auto& options = shapes[parts[pos]];
    const std::size_t start = (pos > 0 && parts[pos] == parts[pos - 1]) ? prev_index : 0;
    for (std::size_t i = start; i < options.size(); ++i) {
        picked.push_back(&options[i]);
        choose_children(shapes, parts, pos + 1, i, picked, total, out);
        picked.pop_back();
    }
}

// Pair index of {i, j}, i < j, in column order.
constexpr unsigned pair_bit(unsigned i, unsigned j) { return j * (j - 1) / 2 + i; }

std::uint64_t to_mask(const SimpleGraph& g) {
    std::uint64_t mask = 0;
    for (const auto& [u, v] : g.edges()) mask |= std::uint64_t{1} << pair_bit(u, v);
    return mask;
}

// Relabeling tables: for each permutation, the image of every pair bit.
std::vector<std::vector<std::uint8_t>> relabel_tables(unsigned n) {
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0U);
    std::vector<std::vector<std::uint8_t>> tables;
    do {
        std::vector<std::uint8_t> table(n * (n - 1) / 2);
        for (unsigned j = 1; j < n; ++j) {
            for (unsigned i = 0; i < j; ++i) {
                const unsigned a = std::min(perm[i], perm[j]);
                const unsigned b = std::max(perm[i], perm[j]);
                table[pair_bit(i, j)] = static_cast<std::uint8_t>(pair_bit(a, b));
            }
        }
        tables.push_back(std::move(table));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return tables;
}

const std::vector<std::vector<std::uint8_t>>& cached_relabel_tables(unsigned n) {
    static std::mutex guard;
    static std::array<std::vector<std::vector<std::uint8_t>>, 9> cache;
    std::lock_guard lock(guard);
    if (cache[n].empty()) cache[n] = relabel_tables(n);
    return cache[n];
}

std::uint64_t min_relabeling(std::uint64_t mask, const std::vector<std::vector<std::uint8_t>>& tables) {
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& table : tables) {
        std::uint64_t image = 0;
        for (std::uint64_t m = mask; m != 0; m &= m - 1) {
            image |= std::uint64_t{1} << table[static_cast<unsigned>(std::countr_zero(m))];
        }
        best = std::min(best, image);
    }
    return best;
}

bool mask_is_p4_free(std::uint64_t mask, unsigned n) {
    auto adjacent = [mask](unsigned i, unsigned j) {
        return ((mask >> (i < j ? pair_bit(i, j) : pair_bit(j, i))) & 1U) != 0;
    };
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = a + 1; b < n; ++b)
            for (unsigned c = b + 1; c < n; ++c)
                for (unsigned d = c + 1; d < n; ++d) {
                    const std::array<unsigned, 4> q{a, b, c, d};
                    std::array<int, 4> deg{};
                    int edges = 0;
                    for (int x = 0; x < 4; ++x)
                        for (int y = x + 1; y < 4; ++y)
                            if (adjacent(q[x], q[y])) {
                                ++edges;
                                ++deg[x];
                                ++deg[y];
                            }
                    // Three edges with degrees {1,1,2,2} is exactly an induced P4.
                    if (edges == 3 && std::ranges::count(deg, 2) == 2 && std::ranges::count(deg, 1) == 2) {
                        return false;
                    }
                }
    return true;
}

} // namespace

std::vector<Partition> all_partitions(std::uint32_t n) {
    if (n < 2 || n > 20) throw UsageError("all_partitions supports 2 <= n <= 20");
    std::vector<Partition> out;
    for (auto& p : raw_partitions(n)) out.emplace_back(std::move(p));
    return out;
}

std::vector<Cotree> all_trees(std::uint32_t n) {
    if (n < 2 || n > 12) throw UsageError("all_trees supports 2 <= n <= 12");
    std::vector<std::vector<Shape>> shapes(n + 1);
    shapes[1].push_back(Shape{{1}, "1"});
    for (std::uint32_t s = 2; s <= n; ++s) {
        std::vector<Shape> found;
        for (const auto& parts : raw_partitions(s)) {
            std::vector<const Shape*> picked;
            choose_children(shapes, parts, 0, 0, picked, s, found);
        }
        std::ranges::sort(found, {}, &Shape::key);
        std::set<std::string> seen;
        for (auto& shape : found) {
            if (seen.insert(shape.text).second) shapes[s].push_back(std::move(shape));
        }
    }
    std::vector<Cotree> trees;
    trees.reserve(shapes[n].size());
    for (const auto& shape : shapes[n]) trees.push_back(parse(shape.text));
    return trees;
}

std::vector<std::uint32_t> tree_key(const Cotree& t, NodeId v) {
    if (t.is_leaf(v)) return {1};
    std::vector<std::vector<std::uint32_t>> child_keys;
    for (NodeId c : t.children(v)) child_keys.push_back(tree_key(t, c));
    std::ranges::sort(child_keys);
    std::vector<std::uint32_t> key{t.leaf_count(v)};
    for (const auto& k : child_keys) key.push_back(k.front());
    for (const auto& k : child_keys) key.insert(key.end(), k.begin(), k.end());
    return key;
}

CanonicalGraphForm canonical_form(const SimpleGraph& g) {
    const std::uint32_t n = g.vertex_count();
    if (n > 8) throw UsageError("canonical_form supports at most 8 vertices");
    if (n < 2) return {n, 0};
    return {n, min_relabeling(to_mask(g), cached_relabel_tables(n))};
}

bool is_p4_free(const SimpleGraph& g) {
    const std::uint32_t n = g.vertex_count();
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = a + 1; b < n; ++b)
            for (std::uint32_t c = b + 1; c < n; ++c)
                for (std::uint32_t d = c + 1; d < n; ++d) {
                    const std::array<std::uint32_t, 4> q{a, b, c, d};
                    std::array<int, 4> deg{};
                    int edges = 0;
                    for (int x = 0; x < 4; ++x)
                        for (int y = x + 1; y < 4; ++y)
                            if (g.has_edge(q[x], q[y])) {
                                ++edges;
                                ++deg[x];
                                ++deg[y];
                            }
                    if (edges == 3 && std::ranges::count(deg, 2) == 2 && std::ranges::count(deg, 1) == 2) {
                        return false;
                    }
                }
    return true;
}

std::set<CanonicalGraphForm> cograph_forms_bruteforce(std::uint32_t n, bool allow_long, unsigned threads) {
    if (n < 1 || n > 7 || (n == 7 && !allow_long)) {
        throw UsageError("brute-force cograph enumeration supports 1 <= n <= 6 (7 with the long flag)");
    }
    if (n == 1) return {CanonicalGraphForm{1, 0}};

    const unsigned pairs = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << pairs;
    const auto& tables = cached_relabel_tables(n);
    threads = std::max(1U, threads);

    // Workers take disjoint residue classes of the labeled-graph masks.
    std::set<CanonicalGraphForm> forms;
    std::mutex merge;
    auto work = [&](unsigned worker) {
        std::set<std::uint64_t> local;
        for (std::uint64_t mask = worker; mask < total; mask += threads) {
            if (mask_is_p4_free(mask, n)) local.insert(min_relabeling(mask, tables));
        }
        std::lock_guard lock(merge);
        for (std::uint64_t bits : local) forms.insert({n, bits});
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    }
    return forms;
}

std::uint64_t count_cographs_bruteforce(std::uint32_t n, bool allow_long, unsigned threads) {
    return cograph_forms_bruteforce(n, allow_long, threads).size();
}

} // namespace cograph::oracle
