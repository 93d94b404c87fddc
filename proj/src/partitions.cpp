#include "sf2/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace sf2 {

Partition::Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

std::uint32_t Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), std::uint32_t{0});
}

Partition Partition::conjugate() const {
    std::vector<std::uint32_t> cols;
    if (!parts_.empty()) {
        cols.resize(parts_[0]);
        for (std::uint32_t r = 0; r < length(); ++r)
            for (std::uint32_t c = 0; c < parts_[r]; ++c) cols[c]++;
    }
    return Partition(std::move(cols));
}

bool Partition::is_self_conjugate() const { return *this == conjugate(); }

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (std::uint32_t r = 0; r < inner.length(); ++r)
        if (parts_[r] < inner.parts_[r]) return false;
    return true;
}

std::string Partition::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ']';
    return out;
}

Partition Partition::parse(std::string_view text) {
    std::size_t i = 0;
    auto fail = [&](const char* msg) -> void {
        throw std::invalid_argument(std::string("partition parse error at position ") +
                                    std::to_string(i) + ": " + msg);
    };
    if (i >= text.size() || text[i] != '[') fail("expected '['");
    ++i;
    std::vector<std::uint32_t> parts;
    if (i < text.size() && text[i] == ']') {
        ++i;
    } else {
        for (;;) {
            if (i >= text.size() || text[i] < '0' || text[i] > '9') fail("expected digit");
            std::uint64_t v = 0;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
                v = v * 10 + (text[i] - '0');
                if (v > 1'000'000) fail("part too large");
                ++i;
            }
            if (v == 0) fail("part must be positive");
            parts.push_back(static_cast<std::uint32_t>(v));
            if (i < text.size() && text[i] == ',') { ++i; continue; }
            if (i < text.size() && text[i] == ']') { ++i; break; }
            fail("expected ',' or ']'");
        }
    }
    if (i != text.size()) fail("trailing input");
    return Partition(std::move(parts));
}

bool partition_precedes(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.parts() > b.parts();  // lexicographically decreasing
}

Partition gamma_hook(std::uint32_t j) {
    if (j == 0) throw std::invalid_argument("gamma_hook requires j >= 1");
    std::vector<std::uint32_t> parts{j};
    parts.insert(parts.end(), j - 1, 1);
    return Partition(std::move(parts));
}

Partition square_partition(std::uint32_t j) {
    return Partition(std::vector<std::uint32_t>(j, j));
}

namespace {

void enumerate_rec(std::uint32_t remaining, std::uint32_t max_part,
                   std::vector<std::uint32_t>& stack, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(stack));
        return;
    }
    for (std::uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
        stack.push_back(part);
        enumerate_rec(remaining - part, part, stack, out);
        stack.pop_back();
    }
}

// Cells of mu/lam as (row, col) pairs, rows and cols 0-based.
std::vector<std::pair<std::uint32_t, std::uint32_t>> skew_cells(const Partition& outer,
                                                                const Partition& inner) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> cells;
    for (std::uint32_t r = 0; r < outer.length(); ++r) {
        std::uint32_t lo = r < inner.length() ? inner.parts()[r] : 0;
        for (std::uint32_t c = lo; c < outer.parts()[r]; ++c) cells.emplace_back(r, c);
    }
    return cells;
}

// Explicit cell-set predicate: edge-connected and no 2x2 block.
bool is_border_strip(const Partition& outer, const Partition& inner) {
    auto cells = skew_cells(outer, inner);
    if (cells.empty()) return false;
    auto has = [&](std::uint32_t r, std::uint32_t c) {
        return std::binary_search(cells.begin(), cells.end(), std::make_pair(r, c));
    };
    for (auto [r, c] : cells)
        if (has(r, c + 1) && has(r + 1, c) && has(r + 1, c + 1)) return false;
    // BFS over 4-adjacency from the first cell.
    std::vector<bool> seen(cells.size(), false);
    std::vector<std::size_t> queue{0};
    seen[0] = true;
    std::size_t reached = 1;
    auto index_of = [&](std::uint32_t r, std::uint32_t c) -> std::size_t {
        auto it = std::lower_bound(cells.begin(), cells.end(), std::make_pair(r, c));
        return static_cast<std::size_t>(it - cells.begin());
    };
    while (!queue.empty()) {
        auto [r, c] = cells[queue.back()];
        queue.pop_back();
        const std::pair<std::uint32_t, std::uint32_t> nbrs[4] = {
            {r + 1, c}, {r, c + 1}, {r == 0 ? r : r - 1, c}, {r, c == 0 ? c : c - 1}};
        for (auto [nr, nc] : nbrs) {
            if (nr == r && nc == c) continue;
            if (!has(nr, nc)) continue;
            std::size_t j = index_of(nr, nc);
            if (!seen[j]) {
                seen[j] = true;
                ++reached;
                queue.push_back(j);
            }
        }
    }
    return reached == cells.size();
}

}  // namespace

std::vector<Partition> enumerate_partitions(std::uint32_t d) {
    std::vector<Partition> out;
    std::vector<std::uint32_t> stack;
    enumerate_rec(d, d == 0 ? 1 : d, stack, out);
    return out;
}

std::uint32_t partition_count(std::uint32_t d) {
    // Euler's recurrence with generalized pentagonal numbers.
    static thread_local std::vector<std::uint64_t> cache{1};
    while (cache.size() <= d) {
        std::uint32_t n = static_cast<std::uint32_t>(cache.size());
        std::uint64_t sum = 0;
        for (std::uint32_t k = 1;; ++k) {
            std::uint32_t g1 = k * (3 * k - 1) / 2;
            std::uint32_t g2 = k * (3 * k + 1) / 2;
            if (g1 > n) break;
            std::uint64_t term = cache[n - g1] + (g2 <= n ? cache[n - g2] : 0);
            if (k % 2) sum += term; else sum -= term;
        }
        cache.push_back(sum);
    }
    return static_cast<std::uint32_t>(cache[d]);
}

std::vector<Partition> border_strip_additions(const Partition& lam, std::uint32_t k) {
    if (k == 0) throw std::invalid_argument("border strip size must be positive");
    std::vector<Partition> out;
    for (const Partition& mu : enumerate_partitions(lam.size() + k))
        if (mu.contains(lam) && is_border_strip(mu, lam)) out.push_back(mu);
    return out;
}

std::uint32_t count_self_conjugate(std::uint32_t d) {
    std::uint32_t n = 0;
    for (const Partition& lam : enumerate_partitions(d))
        if (lam.is_self_conjugate()) ++n;
    return n;
}

}  // namespace sf2
