#pragma once

#include "sf2/omega.hpp"
#include "sf2/partitions.hpp"

#include <vector>

namespace sf2 {

/// GF(2) combination of Schur polynomials, kept as a partition set in
/// canonical order (size descending, then lexicographically decreasing).
class SchurExpr {
public:
    SchurExpr() = default;
    explicit SchurExpr(std::uint32_t max_degree) : max_degree_(max_degree) {}
    static SchurExpr single(Partition lam, std::uint32_t max_degree);

    std::uint32_t max_degree() const { return max_degree_; }
    const std::vector<Partition>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::uint32_t top_size() const;  // largest partition size; 0 when zero

    SchurExpr operator+(const SchurExpr& o) const;  // XOR of partition sets
    SchurExpr& operator+=(const SchurExpr& o) { return *this = *this + o; }

    std::string to_string() const;  // "s[3,1] + s[2,2]"; zero renders "0"

    bool operator==(const SchurExpr&) const = default;

private:
    std::uint32_t max_degree_ = 0;
    std::vector<Partition> terms_;
};

SchurExpr parse_schur(std::string_view text, std::uint32_t max_degree);

/// omega acts on the Schur basis by conjugating each partition.
SchurExpr omega_on_schur(const SchurExpr& e);

/// Murnaghan-Nakayama product p_k * e over GF(2): each partition is replaced
/// by the sum of its border-strip additions of size k (all signs are 1).
/// Rejects products that would overflow the truncation degree.
SchurExpr mn_multiply(std::uint32_t k, const SchurExpr& e);

/// Reduction mod I in Schur coordinates: modulo the span of s_lam + s_conj,
/// each partition is replaced by its conjugation-class representative and
/// duplicate representatives cancel. Result listed in canonical order.
std::vector<Partition> reduce_mod_I(const std::vector<Partition>& lams);

/// The product claim p_{2j+1} * s_{Sq(j)} = s_{Sq(j+1)} in S/I, checked by
/// pure partition combinatorics (no ring truncation involved).
bool sq_claim_holds(std::uint32_t j);

/// Schur basis over GF(2) realized through the Jacobi-Trudi determinant with
/// w_i in the role of h_i (the generator realization is a free choice; the
/// e-realization is recovered through omega). Conversion matrices for every
/// degree <= N are built eagerly, so instances are immutable and shareable.
class SchurTable {
public:
    explicit SchurTable(std::uint32_t max_degree);

    std::uint32_t max_degree() const { return n_; }
    const std::vector<Partition>& partitions_of(std::uint32_t d) const;

    /// s_lam expanded in w-coordinates (Jacobi-Trudi determinant over GF(2)).
    const Poly& schur_in_w(const Partition& lam) const;

    SchurExpr to_schur(const Poly& x) const;
    Poly from_schur(const SchurExpr& e) const;

    /// Basis of S_d in Schur coordinates: one vector {lam} per self-conjugate
    /// lam, one vector {lam, conj(lam)} per non-self-conjugate pair; ambient
    /// order is partitions_of(d). Dimension (p(d) + sc(d)) / 2.
    std::vector<gf2::BitVec> s_basis_of_S(std::uint32_t d) const;

private:
    struct DegreeData {
        std::vector<Partition> partitions;  // canonical order
        std::vector<Poly> schur_w;          // aligned with partitions
        MonomialBasis basis;
        gf2::BitMatrix inverse;  // solves schur-matrix * c = v
    };
    std::uint32_t n_;
    std::vector<DegreeData> by_degree_;

    const DegreeData& at(std::uint32_t d) const;
};

/// Jacobi-Trudi determinant for one partition, standalone (used by the
/// table and directly testable).
Poly jacobi_trudi_in_w(const Partition& lam, std::uint32_t max_degree);

}  // namespace sf2
