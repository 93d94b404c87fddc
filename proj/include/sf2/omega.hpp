#pragma once

#include "sf2/ring.hpp"

#include <span>
#include <vector>

namespace sf2 {

/// The omega involution on R_{<=N}, built once from the defining recursion
/// sum_{i=0..k} w_i * wbar_{k-i} = 0 (wbar_0 = 1), and the derived operators
/// d(x) = x + omega(x) and N(x) = x * omega(x).
class OmegaTable {
public:
    explicit OmegaTable(std::uint32_t max_degree);

    std::uint32_t max_degree() const { return n_; }

    /// omega(w_k), homogeneous of degree k; 1 <= k <= N.
    const Poly& wbar(std::uint32_t k) const;
    /// d(w_k) = w_k + omega(w_k).
    const Poly& dw(std::uint32_t k) const;

    /// Ring-homomorphic extension to any x in w-coordinates.
    Poly omega(const Poly& x) const;
    Poly dd(const Poly& x) const { return x + omega(x); }
    Poly norm(const Poly& x) const { return x * omega(x); }

    /// d(prod xs) + sum over nonempty T of x_{T^c} * prod_{i in T} d(x_i);
    /// identically zero, kept as a property check.
    Poly thick_leibniz_defect(std::span<const Poly> xs) const;

private:
    std::uint32_t n_;
    std::vector<Poly> wbar_;  // index 0 holds the unit
    std::vector<Poly> dw_;
};

}  // namespace sf2
