#pragma once

#include "sf2/gf2/rowops.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sf2::gf2 {

/// Packed bit vector over GF(2).
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }
    std::size_t word_count() const { return w_.size(); }
    Word* words() { return w_.data(); }
    const Word* words() const { return w_.data(); }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true) {
        Word mask = Word{1} << (i & 63);
        if (v) w_[i >> 6] |= mask; else w_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= Word{1} << (i & 63); }

    void xor_with(const BitVec& o) { row_xor(w_.data(), o.w_.data(), w_.size()); }
    bool is_zero() const { return row_is_zero(w_.data(), w_.size()); }
    std::optional<std::size_t> first_set() const;
    std::size_t popcount() const;

    bool operator==(const BitVec&) const = default;

private:
    std::size_t nbits_ = 0;
    std::vector<Word> w_;
};

/// Dense bit matrix with word-packed rows; the workhorse for rank, kernel,
/// and echelon computations over GF(2).
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v = true) {
        Word mask = Word{1} << (c & 63);
        Word& w = data_[r * wpr_ + (c >> 6)];
        if (v) w |= mask; else w &= ~mask;
    }

    Word* row(std::size_t r) { return data_.data() + r * wpr_; }
    const Word* row(std::size_t r) const { return data_.data() + r * wpr_; }
    BitVec row_vec(std::size_t r) const;
    void set_row(std::size_t r, const BitVec& v);
    void append_row(const BitVec& v);

    void xor_rows(std::size_t dst, std::size_t src) { row_xor(row(dst), row(src), wpr_); }
    void swap_rows(std::size_t a, std::size_t b);
    bool row_zero(std::size_t r) const { return row_is_zero(row(r), wpr_); }

    /// In-place Gauss-Jordan to reduced row echelon form.
    /// Returns the pivot columns in ascending order; rank = pivot count.
    std::vector<std::size_t> rref();

    std::size_t rank() const;

    /// Basis of the right null space {v : M v = 0}, one solution per row,
    /// itself in reduced row echelon form.
    BitMatrix kernel() const;

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<Word> data_;
};

/// Streaming echelon basis: rows are added one at a time and kept fully
/// reduced, so huge spanning sets never need to be materialized.
class EchelonAccumulator {
public:
    explicit EchelonAccumulator(std::size_t ncols) : ncols_(ncols) {}

    std::size_t cols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }

    /// Returns true if the row was independent of the current span.
    bool add_row(BitVec row);
    /// Membership test against the current span.
    bool contains(BitVec row) const;
    /// Fully reduce v against the current echelon rows.
    BitVec reduce(BitVec v) const;

    const std::vector<std::pair<std::size_t, BitVec>>& rows() const { return rows_; }
    std::vector<std::size_t> pivots() const;
    BitMatrix to_matrix() const;

private:
    std::size_t ncols_;
    std::vector<std::pair<std::size_t, BitVec>> rows_;  // (pivot, row), pivots ascending
};

/// Row space of a homogeneous slice, held in reduced row echelon form with no
/// zero rows. The ambient basis is owned by the caller; a (degree, tag,
/// dimension) triple guards against mixing incompatible ambients.
class GradedSubspace {
public:
    GradedSubspace() = default;

    static GradedSubspace from_rows(int degree, std::string tag, std::size_t ambient_dim,
                                    const std::vector<BitVec>& rows);
    static GradedSubspace from_accumulator(int degree, std::string tag,
                                           const EchelonAccumulator& acc);

    int degree() const { return degree_; }
    const std::string& tag() const { return tag_; }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return m_.rows(); }
    const BitMatrix& rows() const { return m_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const BitVec& v) const;
    BitVec reduce(BitVec v) const;
    bool subspace_of(const GradedSubspace& other) const;
    bool same_space(const GradedSubspace& other) const;
    /// Witness extraction for failed comparisons.
    std::optional<BitVec> first_row_not_in(const GradedSubspace& other) const;

private:
    int degree_ = 0;
    std::string tag_;
    std::size_t ambient_ = 0;
    BitMatrix m_;
    std::vector<std::size_t> pivots_;
};

/// A ∩ B via the Zassenhaus block trick. Requires matching ambients.
GradedSubspace intersect(const GradedSubspace& a, const GradedSubspace& b);
/// A + B as the row space of the stacked rows.
GradedSubspace subspace_sum(const GradedSubspace& a, const GradedSubspace& b);

}  // namespace sf2::gf2
