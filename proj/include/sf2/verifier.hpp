#pragma once

#include "sf2/coordinates.hpp"
#include "sf2/schur.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sf2 {

struct DegreeOutcome {
    int degree = 0;
    bool pass = false;
    // Insertion-ordered (name, value) pairs; rendered verbatim in reports.
    std::vector<std::pair<std::string, long long>> dims;
    std::optional<std::string> witness;
};

struct CheckReport {
    std::string check;
    bool conjecture = false;  // evidence-only: never asserted, never fails a run
    std::vector<DegreeOutcome> degrees;

    bool pass() const;
    const DegreeOutcome* first_failure() const;
};

/// Per-degree subspace family over the w-monomial ambient bases:
/// S_d (kernel of d), I^n_d, RI^n_d (n = 1..3), Q(R)_d and the S + RI^n
/// slices. Read-only after construction; degrees build independently and in
/// parallel when jobs > 1.
class GradedFamily {
public:
    explicit GradedFamily(const PowerSumTable& ps, unsigned jobs = 1);

    std::uint32_t max_degree() const;
    const OmegaTable& omega() const { return ps_->omega(); }
    const PowerSumTable& power_sums() const { return *ps_; }

    const MonomialBasis& basis(std::uint32_t d) const;
    const gf2::GradedSubspace& S(std::uint32_t d) const;
    const gf2::GradedSubspace& I(std::uint32_t d) const { return Ipow(1, d); }
    const gf2::GradedSubspace& Ipow(unsigned n, std::uint32_t d) const;   // n = 1..3
    const gf2::GradedSubspace& RIpow(unsigned n, std::uint32_t d) const;  // n = 1..3
    const gf2::GradedSubspace& QR(std::uint32_t d) const;
    const gf2::GradedSubspace& S_plus_RI(unsigned n, std::uint32_t d) const;  // n = 1..2

    /// d(m) for the j-th basis monomial of degree d (precomputed).
    const Poly& dd_of_basis(std::uint32_t d, std::size_t j) const;

    gf2::BitVec vec(const Poly& x) const;  // homogeneous x
    Poly poly(const gf2::BitVec& v, std::uint32_t d) const;
    std::string render(const gf2::BitVec& v, std::uint32_t d) const;

private:
    struct DegreeSlice {
        MonomialBasis basis;
        std::vector<Poly> dd_basis;
        gf2::GradedSubspace S, I1, I2, I3, RI1, RI2, RI3, QR, SRI1, SRI2;
    };
    const PowerSumTable* ps_;
    std::vector<DegreeSlice> slices_;

    void build_degree(std::uint32_t d);
};

// --- Degreewise checks. Single-degree forms implement the spec contracts;
// --- the range forms fold degrees 0..dmax into one report.

CheckReport check_transversality(unsigned n, const GradedFamily& fam, std::uint32_t d);
CheckReport check_transversality(unsigned n, const GradedFamily& fam, std::uint32_t dmin,
                                 std::uint32_t dmax);

CheckReport check_Q_equals_RI(const GradedFamily& fam, std::uint32_t d);
CheckReport check_Q_equals_RI(const GradedFamily& fam, std::uint32_t dmin, std::uint32_t dmax);

CheckReport check_ses_dims(const GradedFamily& fam, std::uint32_t d);
CheckReport check_ses_dims(const GradedFamily& fam, std::uint32_t dmin, std::uint32_t dmax);

CheckReport check_preimage_lemma(const GradedFamily& fam, unsigned n, std::uint32_t d);
CheckReport check_preimage_lemma(const GradedFamily& fam, unsigned n, std::uint32_t dmin,
                                 std::uint32_t dmax);

/// Kernel of d on Omega^0 = R/RI: the d-preimage of RI^2 equals S + RI.
CheckReport check_kernel_omega0(const GradedFamily& fam, std::uint32_t d);
CheckReport check_kernel_omega0(const GradedFamily& fam, std::uint32_t dmin, std::uint32_t dmax);

/// dim(S/I)_d = sc(d) and the square-free odd-p monomials span S_d mod I_d.
CheckReport check_exterior_SI(const GradedFamily& fam, std::uint32_t d);
CheckReport check_exterior_SI(const GradedFamily& fam, std::uint32_t dmin, std::uint32_t dmax);

/// The d(w_{2i_1})...d(w_{2i_n}) products over R/RI coset representatives
/// form a basis of RI^n_d / RI^{n+1}_d (rank check); n = 0..2.
CheckReport check_omega_basis(const GradedFamily& fam, unsigned n, std::uint32_t d);
CheckReport check_omega_basis(const GradedFamily& fam, unsigned n, std::uint32_t dmin,
                              std::uint32_t dmax);

/// Normality: N(w_j) lies in I for every generator within the truncation.
CheckReport check_normality(const GradedFamily& fam);

/// N(x+y) + N(x) + N(y) lies in I for random x, y of bounded degree.
CheckReport check_norm_additive_mod_I(const GradedFamily& fam, unsigned samples,
                                      std::uint64_t seed);

/// x^2 lies in RI for random homogeneous x of positive bounded degree.
CheckReport check_squares_in_RI(const GradedFamily& fam, unsigned samples, std::uint64_t seed);

/// Exterior-algebra top-form divisibility on n generators over GF(2):
/// every nonzero x admits y with x ^ y = top form, verified by explicit
/// wedge multiplication with early exit per x.
CheckReport check_top_form_divisibility(unsigned n);

/// Deterministic random homogeneous polynomial (test/check sampling).
Poly random_homogeneous(std::uint32_t degree, std::uint32_t max_degree, std::uint64_t seed);

}  // namespace sf2
