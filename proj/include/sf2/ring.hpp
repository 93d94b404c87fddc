#pragma once

#include "sf2/gf2/bitmatrix.hpp"

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sf2 {

/// Generator of the ambient polynomial ring: w_i or p_i, both of degree i.
/// Codes interleave by index so exponent vectors read w1, p1, w2, p2, ...
enum class VarKind : std::uint8_t { W = 0, P = 1 };

struct Var {
    std::uint32_t code = 0;

    static Var w(std::uint32_t index) { return Var{index << 1}; }
    static Var p(std::uint32_t index) { return Var{(index << 1) | 1u}; }

    VarKind kind() const { return static_cast<VarKind>(code & 1u); }
    std::uint32_t index() const { return code >> 1; }
    std::uint32_t degree() const { return index(); }
    std::string to_string() const;

    auto operator<=>(const Var&) const = default;
};

/// Sparse monomial: factors sorted by variable code, exponents >= 1.
class Mono {
public:
    Mono() = default;
    static Mono unit() { return Mono{}; }
    static Mono var(Var v, std::uint32_t exp = 1);

    const std::vector<std::pair<Var, std::uint32_t>>& factors() const { return f_; }
    bool is_unit() const { return f_.empty(); }
    std::uint32_t degree() const;
    std::uint32_t exponent_of(Var v) const;
    std::size_t factor_count() const { return f_.size(); }

    Mono times(const Mono& o) const;
    Mono pow(std::uint32_t e) const;
    /// All exponents <= 1.
    bool square_free() const;
    /// Exponents of the named generator family only.
    bool square_free_in(VarKind kind) const;
    bool uses_only(VarKind kind) const;

    std::string to_string() const;  // "w1^2*w3"; unit renders as "1"

    bool operator==(const Mono&) const = default;

private:
    std::vector<std::pair<Var, std::uint32_t>> f_;
};

/// Canonical term order: higher degree first; within a degree, exponent
/// vectors compared lexicographically reading from w1 upward, larger
/// exponent first. Fixes render output and ambient basis order.
bool term_precedes(const Mono& a, const Mono& b);

struct ParseError : std::runtime_error {
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error("syntax error at position " + std::to_string(pos) + ": " + what),
          position(pos) {}
    std::size_t position;
};

struct DegreeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Element of the truncated ring R_{<=N}: a GF(2) set of monomials (term
/// presence encodes the coefficient), with products above the truncation
/// degree discarded. The grading is multiplicative, so every graded piece
/// of degree <= N is computed exactly.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::uint32_t max_degree) : max_degree_(max_degree) {}

    static Poly zero(std::uint32_t max_degree) { return Poly(max_degree); }
    static Poly one(std::uint32_t max_degree);
    /// Single monomial; silently zero if the degree exceeds the truncation.
    static Poly monomial(const Mono& m, std::uint32_t max_degree);
    static Poly w(std::uint32_t index, std::uint32_t max_degree);
    static Poly p(std::uint32_t index, std::uint32_t max_degree);

    std::uint32_t max_degree() const { return max_degree_; }
    const std::vector<Mono>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    bool contains_term(const Mono& m) const;
    bool is_one() const { return terms_.size() == 1 && terms_[0].is_unit(); }

    /// Largest term degree; zero polynomial reports 0.
    std::uint32_t top_degree() const;
    bool is_homogeneous() const;
    bool uses_only(VarKind kind) const;

    Poly operator+(const Poly& o) const;  // symmetric difference of term sets
    Poly operator*(const Poly& o) const;  // truncating product
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly pow(std::uint32_t e) const;
    Poly square() const;  // char 2: squares termwise
    Poly graded_component(std::uint32_t d) const;

    std::string to_string() const;  // canonical; zero renders as "0"

    bool operator==(const Poly&) const = default;

private:
    friend Poly poly_from_sorted_terms(std::vector<Mono> terms, std::uint32_t max_degree);
    std::uint32_t max_degree_ = 0;
    std::vector<Mono> terms_;  // canonical order, no duplicates
};

/// Grammar (bit-exact on output):
///   poly   := '0' | term (' + ' term)*
///   term   := '1' | factor ('*' factor)*
///   factor := gen ('^' posint)?
///   gen    := 'w' posint | 'p' posint
/// Whitespace is tolerated anywhere between tokens on input. The '1' term
/// carries the constant component (R_0 is one-dimensional).
Poly parse_poly(std::string_view text, std::uint32_t max_degree);

enum class GenSet { AllW, EvenW, MixedPW };

/// Ordered monomial basis of the degree-d slice over the named generators;
/// the ambient basis behind every GradedSubspace over R.
class MonomialBasis {
public:
    MonomialBasis() = default;
    MonomialBasis(std::uint32_t degree, GenSet gens);

    std::uint32_t degree() const { return degree_; }
    GenSet gens() const { return gens_; }
    std::size_t dim() const { return monos_.size(); }
    const std::vector<Mono>& monos() const { return monos_; }
    const Mono& mono(std::size_t i) const { return monos_[i]; }
    std::size_t index_of(const Mono& m) const;  // throws if absent

    /// x must be supported on this slice (homogeneous of this degree).
    gf2::BitVec to_vec(const Poly& x) const;
    Poly to_poly(const gf2::BitVec& v, std::uint32_t max_degree) const;
    const char* tag() const;  // ambient tag for GradedSubspace guards

private:
    std::uint32_t degree_ = 0;
    GenSet gens_ = GenSet::AllW;
    std::vector<Mono> monos_;
};

}  // namespace sf2
