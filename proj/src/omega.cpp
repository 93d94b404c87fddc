#include "sf2/omega.hpp"

#include <stdexcept>

namespace sf2 {

OmegaTable::OmegaTable(std::uint32_t max_degree) : n_(max_degree) {
    if (n_ < 1) throw std::invalid_argument("max degree must be at least 1");
    wbar_.reserve(n_ + 1);
    dw_.reserve(n_ + 1);
    wbar_.push_back(Poly::one(n_));
    dw_.push_back(Poly::zero(n_));
    for (std::uint32_t k = 1; k <= n_; ++k) {
        // Over GF(2) the recursion solves as wbar_k = sum_{i=1..k} w_i wbar_{k-i}.
        Poly acc(n_);
        for (std::uint32_t i = 1; i <= k; ++i) acc += Poly::w(i, n_) * wbar_[k - i];
        dw_.push_back(Poly::w(k, n_) + acc);
        wbar_.push_back(std::move(acc));
    }
}

const Poly& OmegaTable::wbar(std::uint32_t k) const {
    if (k > n_) throw std::out_of_range("wbar index above truncation degree");
    return wbar_[k];
}

const Poly& OmegaTable::dw(std::uint32_t k) const {
    if (k > n_) throw std::out_of_range("dw index above truncation degree");
    return dw_[k];
}

Poly OmegaTable::omega(const Poly& x) const {
    if (x.max_degree() != n_)
        throw std::invalid_argument("truncation degree mismatch in omega");
    Poly out(n_);
    for (const Mono& t : x.terms()) {
        Poly image = Poly::one(n_);
        for (const auto& [v, e] : t.factors()) {
            if (v.kind() != VarKind::W)
                throw std::invalid_argument("omega expects w-coordinates");
            image *= wbar_[v.index()].pow(e);
        }
        out += image;
    }
    return out;
}

Poly OmegaTable::thick_leibniz_defect(std::span<const Poly> xs) const {
    if (xs.empty()) throw std::invalid_argument("thick Leibniz defect needs elements");
    if (xs.size() > 20) throw std::invalid_argument("too many factors");
    std::vector<Poly> dxs;
    dxs.reserve(xs.size());
    Poly product = Poly::one(n_);
    for (const Poly& x : xs) {
        dxs.push_back(dd(x));
        product *= x;
    }
    Poly defect = dd(product);
    const std::uint32_t n = static_cast<std::uint32_t>(xs.size());
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Poly term = Poly::one(n_);
        for (std::uint32_t i = 0; i < n; ++i)
            term *= (mask >> i) & 1u ? dxs[i] : xs[i];
        defect += term;
    }
    return defect;
}

}  // namespace sf2
