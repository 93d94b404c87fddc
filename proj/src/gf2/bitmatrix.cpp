#include "sf2/gf2/bitmatrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sf2::gf2 {

std::optional<std::size_t> BitVec::first_set() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
    return std::nullopt;
}

std::size_t BitVec::popcount() const {
    std::size_t n = 0;
    for (Word w : w_) n += std::popcount(w);
    return n;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitVec BitMatrix::row_vec(std::size_t r) const {
    BitVec v(cols_);
    std::copy(row(r), row(r) + wpr_, v.words());
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVec& v) {
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    std::copy(v.words(), v.words() + wpr_, row(r));
}

void BitMatrix::append_row(const BitVec& v) {
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), v.words(), v.words() + wpr_);
    ++rows_;
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a != b) std::swap_ranges(row(a), row(a) + wpr_, row(b));
}

std::vector<std::size_t> BitMatrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
        std::size_t pr = lead;
        while (pr < rows_ && !get(pr, col)) ++pr;
        if (pr == rows_) continue;
        swap_rows(lead, pr);
        for (std::size_t r = 0; r < rows_; ++r)
            if (r != lead && get(r, col)) xor_rows(r, lead);
        pivots.push_back(col);
        ++lead;
    }
    return pivots;
}

std::size_t BitMatrix::rank() const {
    BitMatrix copy = *this;
    return copy.rref().size();
}

BitMatrix BitMatrix::kernel() const {
    BitMatrix red = *this;
    std::vector<std::size_t> pivots = red.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    BitMatrix ker(cols_ - pivots.size(), cols_);
    std::size_t k = 0;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        ker.set(k, f);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (red.get(r, f)) ker.set(k, pivots[r]);
        ++k;
    }
    ker.rref();  // normalize basis presentation
    return ker;
}

bool EchelonAccumulator::add_row(BitVec v) {
    if (v.size() != ncols_) throw std::invalid_argument("row length mismatch");
    for (const auto& [piv, row] : rows_)
        if (v.get(piv)) v.xor_with(row);
    auto piv = v.first_set();
    if (!piv) return false;
    // Keep existing rows fully reduced against the new pivot.
    for (auto& [p, row] : rows_)
        if (row.get(*piv)) row.xor_with(v);
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), *piv,
                                [](const auto& e, std::size_t x) { return e.first < x; });
    rows_.insert(pos, {*piv, std::move(v)});
    return true;
}

BitVec EchelonAccumulator::reduce(BitVec v) const {
    if (v.size() != ncols_) throw std::invalid_argument("row length mismatch");
    for (const auto& [piv, row] : rows_)
        if (v.get(piv)) v.xor_with(row);
    return v;
}

bool EchelonAccumulator::contains(BitVec v) const { return reduce(std::move(v)).is_zero(); }

std::vector<std::size_t> EchelonAccumulator::pivots() const {
    std::vector<std::size_t> out;
    out.reserve(rows_.size());
    for (const auto& [piv, row] : rows_) out.push_back(piv);
    return out;
}

BitMatrix EchelonAccumulator::to_matrix() const {
    BitMatrix m(rows_.size(), ncols_);
    for (std::size_t r = 0; r < rows_.size(); ++r) m.set_row(r, rows_[r].second);
    return m;
}

GradedSubspace GradedSubspace::from_rows(int degree, std::string tag, std::size_t ambient_dim,
                                         const std::vector<BitVec>& rows) {
    EchelonAccumulator acc(ambient_dim);
    for (const BitVec& r : rows) acc.add_row(r);
    return from_accumulator(degree, std::move(tag), acc);
}

GradedSubspace GradedSubspace::from_accumulator(int degree, std::string tag,
                                                const EchelonAccumulator& acc) {
    GradedSubspace s;
    s.degree_ = degree;
    s.tag_ = std::move(tag);
    s.ambient_ = acc.cols();
    s.m_ = acc.to_matrix();
    s.pivots_ = acc.pivots();
    return s;
}

bool GradedSubspace::contains(const BitVec& v) const { return reduce(v).is_zero(); }

BitVec GradedSubspace::reduce(BitVec v) const {
    if (v.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
    for (std::size_t r = 0; r < m_.rows(); ++r)
        if (v.get(pivots_[r])) row_xor(v.words(), m_.row(r), m_.words_per_row());
    return v;
}

bool GradedSubspace::subspace_of(const GradedSubspace& other) const {
    for (std::size_t r = 0; r < m_.rows(); ++r)
        if (!other.contains(m_.row_vec(r))) return false;
    return true;
}

bool GradedSubspace::same_space(const GradedSubspace& other) const {
    return ambient_ == other.ambient_ && m_ == other.m_;
}

std::optional<BitVec> GradedSubspace::first_row_not_in(const GradedSubspace& other) const {
    for (std::size_t r = 0; r < m_.rows(); ++r) {
        BitVec v = m_.row_vec(r);
        if (!other.contains(v)) return v;
    }
    return std::nullopt;
}

namespace {

void require_compatible(const GradedSubspace& a, const GradedSubspace& b) {
    if (a.degree() != b.degree() || a.ambient_dim() != b.ambient_dim() || a.tag() != b.tag())
        throw std::invalid_argument("mismatched ambient basis");
}

}  // namespace

GradedSubspace intersect(const GradedSubspace& a, const GradedSubspace& b) {
    require_compatible(a, b);
    const std::size_t n = a.ambient_dim();
    // Zassenhaus: rows [x | x] for x in A and [y | 0] for y in B; after
    // elimination, rows with zero left half carry the intersection on the right.
    BitMatrix z(a.dim() + b.dim(), 2 * n);
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (a.rows().get(r, c)) {
                z.set(r, c);
                z.set(r, n + c);
            }
    for (std::size_t r = 0; r < b.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (b.rows().get(r, c)) z.set(a.dim() + r, c);
    z.rref();

    EchelonAccumulator acc(n);
    for (std::size_t r = 0; r < z.rows(); ++r) {
        bool left_zero = true;
        for (std::size_t c = 0; c < n && left_zero; ++c) left_zero = !z.get(r, c);
        if (!left_zero) continue;
        BitVec v(n);
        for (std::size_t c = 0; c < n; ++c)
            if (z.get(r, n + c)) v.set(c);
        acc.add_row(std::move(v));
    }
    return GradedSubspace::from_accumulator(a.degree(), a.tag(), acc);
}

GradedSubspace subspace_sum(const GradedSubspace& a, const GradedSubspace& b) {
    require_compatible(a, b);
    EchelonAccumulator acc(a.ambient_dim());
    for (std::size_t r = 0; r < a.dim(); ++r) acc.add_row(a.rows().row_vec(r));
    for (std::size_t r = 0; r < b.dim(); ++r) acc.add_row(b.rows().row_vec(r));
    return GradedSubspace::from_accumulator(a.degree(), a.tag(), acc);
}

}  // namespace sf2::gf2
