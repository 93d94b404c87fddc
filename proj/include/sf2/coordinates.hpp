#pragma once

#include "sf2/omega.hpp"

#include <vector>

namespace sf2 {

/// Power sums p_k in w-coordinates, solved from the Newton identity (odd k)
/// and p_{2k} = p_k^2 (even k), plus the change of coordinates between
/// F2[w1,w2,...] and the mixed system F2[p1,w2,p3,w4,...].
class PowerSumTable {
public:
    explicit PowerSumTable(const OmegaTable& omega);

    std::uint32_t max_degree() const { return omega_->max_degree(); }
    const OmegaTable& omega() const { return *omega_; }

    /// p_k in w-coordinates, homogeneous of degree k; 1 <= k <= N.
    const Poly& p(std::uint32_t k) const;

    /// Rewrite x (w-coordinates) over the generators {p1, w2, p3, w4, ...}.
    Poly to_mixed(const Poly& x) const;
    /// Substitute the w-coordinate expressions back; inverse of to_mixed.
    Poly from_mixed(const Poly& y) const;

    /// Monomial in p-variables evaluated in w-coordinates.
    Poly p_monomial_in_w(const Mono& pmono) const;

private:
    const OmegaTable* omega_;
    std::vector<Poly> p_;            // w-coordinates, index 0 unused
    std::vector<Poly> w_odd_mixed_;  // w_k (odd k) in mixed coordinates
};

/// One basis element p * a * d(w_{2i_1}) ... d(w_{2i_n}): square-free p-part
/// over odd power sums, square-free a-part over even w's, and a weakly
/// increasing multiset of d-factor indices.
struct StandardFormTerm {
    Mono p_part;
    Mono a_part;
    std::vector<std::uint32_t> d_part;  // factor i means d(w_{2i})

    std::uint32_t degree() const;
    std::string to_string() const;  // "w2*d[w2]"; the empty term renders "1"
    bool operator==(const StandardFormTerm&) const = default;
};

/// Canonical order: degree first, then exponent vectors read p's, then
/// even w's, then d-factors, larger exponent first.
bool sf_term_precedes(const StandardFormTerm& a, const StandardFormTerm& b);

struct StandardForm {
    std::uint32_t max_degree = 0;
    std::vector<StandardFormTerm> terms;  // canonical order, GF(2) set semantics

    bool is_zero() const { return terms.empty(); }
    std::string to_string() const;
};

/// Per-degree change of basis between the w-monomial basis of R_d and the
/// standard-form basis, built eagerly for every d <= N. Construction verifies
/// that the standard-form terms of each degree really form a basis.
class StandardFormTable {
public:
    explicit StandardFormTable(const PowerSumTable& ps);

    std::uint32_t max_degree() const { return ps_->max_degree(); }
    const PowerSumTable& power_sums() const { return *ps_; }

    const std::vector<StandardFormTerm>& basis(std::uint32_t d) const;

    StandardForm decompose(const Poly& x) const;
    Poly evaluate_term(const StandardFormTerm& t) const;
    Poly evaluate(const StandardForm& s) const;

private:
    struct DegreeData {
        std::vector<StandardFormTerm> terms;
        MonomialBasis basis;
        gf2::BitMatrix inverse;  // solves evaluation-matrix * c = v
    };
    const PowerSumTable* ps_;
    std::vector<DegreeData> by_degree_;
};

/// All standard-form terms of the given degree, canonical order.
std::vector<StandardFormTerm> standard_form_terms(std::uint32_t d);

/// Square-free monomials in the even w generators with total degree d,
/// canonical term order. Degree 0 yields the unit monomial.
std::vector<Mono> square_free_even_w_monomials(std::uint32_t d);

}  // namespace sf2
