#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sf2 {

/// Integer partition: weakly decreasing sequence of positive parts.
/// The empty partition is allowed everywhere.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<std::uint32_t> parts);

    const std::vector<std::uint32_t>& parts() const { return parts_; }
    std::uint32_t size() const;  // number of boxes
    std::uint32_t length() const { return static_cast<std::uint32_t>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;
    bool is_self_conjugate() const;
    /// Young-diagram containment: inner fits inside *this row by row.
    bool contains(const Partition& inner) const;

    /// Text form "[3,1,1]"; the empty partition renders as "[]".
    std::string to_string() const;
    static Partition parse(std::string_view text);

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<std::uint32_t> parts_;
};

/// Canonical display/enumeration order: larger size first, then
/// lexicographically decreasing parts.
bool partition_precedes(const Partition& a, const Partition& b);

/// The symmetric hook (j, 1^{j-1}) with 2j-1 boxes; requires j >= 1.
Partition gamma_hook(std::uint32_t j);

/// The j x j square (j repeated j times); j = 0 gives the empty partition.
Partition square_partition(std::uint32_t j);

/// All partitions of d in lexicographically decreasing order; size p(d).
std::vector<Partition> enumerate_partitions(std::uint32_t d);

/// p(d), the number of partitions of d.
std::uint32_t partition_count(std::uint32_t d);

/// All mu containing lam with |mu| = |lam| + k such that mu/lam is a border
/// strip: edge-connected and containing no 2x2 block. Requires k >= 1.
std::vector<Partition> border_strip_additions(const Partition& lam, std::uint32_t k);

/// Number of self-conjugate partitions of d.
std::uint32_t count_self_conjugate(std::uint32_t d);

}  // namespace sf2
