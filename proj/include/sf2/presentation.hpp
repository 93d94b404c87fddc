#pragma once

#include "sf2/verifier.hpp"

#include <map>
#include <span>

namespace sf2 {

/// Generator delta_a of the free PS-algebra F: a is a square-free monomial
/// in the even w generators of positive degree.
struct DeltaGen {
    Mono a;
    std::uint32_t degree = 0;
    std::string name;  // "D[w2*w4]"
};

/// The free commutative PS-algebra F on the delta generators, its relation
/// ideal (the p^2 relations and the delta^2 relations), graded dimensions of
/// the quotient, and the evaluation map back into R.
class Presentation {
public:
    /// Monomial of F: free exponents over the odd power sums plus a multiset
    /// of delta generators, recorded as (generator id, exponent) ascending.
    struct FMono {
        Mono p_part;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> d_part;
        bool operator==(const FMono&) const = default;
    };
    struct FPoly {
        std::vector<FMono> terms;  // canonical order, GF(2) set semantics
        bool is_zero() const { return terms.empty(); }
        bool operator==(const FPoly&) const = default;
    };

    Presentation(const StandardFormTable& sf, std::uint32_t presentation_degree);

    std::uint32_t max_degree() const { return sf_->max_degree(); }
    std::uint32_t presentation_degree() const { return pres_degree_; }

    const std::vector<DeltaGen>& delta_gens() const { return gens_; }
    std::uint32_t delta_gen_id(const Mono& a) const;

    std::uint32_t fdegree(const FMono& m) const;
    std::uint32_t fdegree(const FPoly& f) const;  // top degree; requires homogeneous
    bool fmono_precedes(const FMono& a, const FMono& b) const;

    FPoly fzero() const { return {}; }
    FPoly fmono(FMono m) const { return FPoly{{std::move(m)}}; }
    FPoly fadd(const FPoly& a, const FPoly& b) const;
    FPoly fmul(const FMono& a, const FMono& b) const;
    FPoly fmul(const FMono& a, const FPoly& b) const;
    FPoly fmul(const FPoly& a, const FPoly& b) const;

    /// delta of an arbitrary ring element through its standard form; terms
    /// with trivial a-part vanish.
    FPoly delta_extended(const Poly& x) const;

    /// p_k^2 + sum_i [delta(w_{2i} w_{2(k-i)}) + delta(w_{2i}) delta(w_{2(k-i)})],
    /// for odd k with 2k <= max degree; homogeneous of degree 2k.
    FPoly relation_p_squared(std::uint32_t k) const;

    /// delta(yz) delta(x) + delta(xz) delta(y) + delta(xy) delta(z)
    /// + delta(x) delta(y) delta(z) for square-free even monomials; the
    /// pairwise products are rewritten through delta_extended when they
    /// leave the generator set.
    FPoly relation_delta2(const Mono& x, const Mono& y, const Mono& z) const;

    /// All p^2 and delta^2 relations of degree <= presentation_degree.
    const std::vector<FPoly>& relations() const { return relations_; }

    const std::vector<FMono>& fmonomials(std::uint32_t d) const;
    std::uint32_t stilde_graded_dim(std::uint32_t d) const;
    std::uint32_t stilde_graded_dim(std::uint32_t d, std::span<const FPoly> rels) const;

    /// Membership of a homogeneous element in the relation ideal slice.
    bool ideal_contains(const FPoly& f) const;

    /// Evaluation into R: p stays p, delta_a becomes d(a).
    Poly evaluate(const FPoly& f) const;
    Poly evaluate(const FMono& m) const;

    std::string render(const FPoly& f) const;
    std::string render(const FMono& m) const;

    /// Degreewise presentation theorem: dim F_d/ideal_d = dim S_d, the
    /// evaluation map hits all of S_d, and every relation evaluates to zero.
    CheckReport verify(const GradedFamily& fam) const;

private:
    const StandardFormTable* sf_;
    std::uint32_t pres_degree_;
    std::vector<DeltaGen> gens_;
    std::map<std::string, std::uint32_t> gen_by_name_;
    std::vector<std::vector<FMono>> fmono_by_degree_;        // d <= presentation degree
    std::vector<gf2::EchelonAccumulator> ideal_by_degree_;   // slices of the relation ideal
    std::vector<FPoly> relations_;

    gf2::BitVec fvec(std::uint32_t d, const FPoly& f) const;
    void build_ideal_slice(std::uint32_t d, std::span<const FPoly> rels,
                           gf2::EchelonAccumulator& acc) const;
};

}  // namespace sf2
