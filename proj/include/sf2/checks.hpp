#pragma once

#include "sf2/presentation.hpp"

namespace sf2 {

/// omega is an involution and d squares to zero on every monomial of each
/// degree slice, and the defining recursion sum w_i wbar_{k-i} = 0 holds.
CheckReport check_involution_soundness(const OmegaTable& om);

/// Degreewise formal-series identities:
/// wbar = W(1 + wbar), W + wbar = W wbar = W^2 (1 + wbar), W+ wbar+ = 1.
CheckReport check_formal_series(const OmegaTable& om);

/// Thick Leibniz defect vanishes for random tuples of up to four homogeneous
/// elements of degree <= 8.
CheckReport check_thick_leibniz(const OmegaTable& om, unsigned tuples, std::uint64_t seed);

/// Power-sum suite: both odd/even product formulae for p_k, p_k^2 = p_{2k},
/// the p^2 corollary for odd k and the w_{2k}^2 corollary.
CheckReport check_newton_suite(const PowerSumTable& ps);

/// Per degree: standard-form term count equals p(d) and evaluate after
/// decompose is the identity on the full monomial basis of R_d.
CheckReport check_standard_form_bijection(const StandardFormTable& sf);

/// Mixed-coordinate round trip on every monomial of each degree slice.
CheckReport check_mixed_coordinates(const PowerSumTable& ps);

/// Schur suite: omega conjugates the Jacobi-Trudi realization, to_schur
/// inverts it, Murnaghan-Nakayama products agree with ring multiplication,
/// p_k is the hook sum, p_{2j-1} = s_{Gamma(j)} mod I (and p_{2j} = 0),
/// the square-growth claim, and the S_d basis count.
CheckReport check_schur_suite(const SchurTable& st, const PowerSumTable& ps);

/// Criterion oracle: dim S_d from the kernel rank against the purely
/// combinatorial (p(d) + sc(d)) / 2.
CheckReport check_dims_oracle(const GradedFamily& fam);

}  // namespace sf2
