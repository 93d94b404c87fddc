#include "sf2/ring.hpp"

#include <algorithm>
#include <cctype>

namespace sf2 {

std::string Var::to_string() const {
    return (kind() == VarKind::W ? "w" : "p") + std::to_string(index());
}

Mono Mono::var(Var v, std::uint32_t exp) {
    Mono m;
    if (exp > 0) m.f_.emplace_back(v, exp);
    return m;
}

std::uint32_t Mono::degree() const {
    std::uint32_t d = 0;
    for (const auto& [v, e] : f_) d += v.degree() * e;
    return d;
}

std::uint32_t Mono::exponent_of(Var v) const {
    for (const auto& [var, e] : f_)
        if (var == v) return e;
    return 0;
}

Mono Mono::times(const Mono& o) const {
    Mono out;
    out.f_.reserve(f_.size() + o.f_.size());
    std::size_t i = 0, j = 0;
    while (i < f_.size() || j < o.f_.size()) {
        if (j == o.f_.size() || (i < f_.size() && f_[i].first < o.f_[j].first))
            out.f_.push_back(f_[i++]);
        else if (i == f_.size() || o.f_[j].first < f_[i].first)
            out.f_.push_back(o.f_[j++]);
        else {
            out.f_.emplace_back(f_[i].first, f_[i].second + o.f_[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

Mono Mono::pow(std::uint32_t e) const {
    Mono out;
    if (e == 0) return out;
    out.f_ = f_;
    for (auto& [v, exp] : out.f_) exp *= e;
    return out;
}

bool Mono::square_free() const {
    return std::all_of(f_.begin(), f_.end(), [](const auto& fe) { return fe.second <= 1; });
}

bool Mono::square_free_in(VarKind kind) const {
    return std::all_of(f_.begin(), f_.end(), [kind](const auto& fe) {
        return fe.first.kind() != kind || fe.second <= 1;
    });
}

bool Mono::uses_only(VarKind kind) const {
    return std::all_of(f_.begin(), f_.end(),
                       [kind](const auto& fe) { return fe.first.kind() == kind; });
}

std::string Mono::to_string() const {
    if (f_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < f_.size(); ++i) {
        if (i) out += '*';
        out += f_[i].first.to_string();
        if (f_[i].second > 1) out += "^" + std::to_string(f_[i].second);
    }
    return out;
}

bool term_precedes(const Mono& a, const Mono& b) {
    std::uint32_t da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0, j = 0;
    while (i < fa.size() && j < fb.size()) {
        if (fa[i].first == fb[j].first) {
            if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second;
            ++i;
            ++j;
        } else if (fa[i].first < fb[j].first) {
            return true;  // a has a positive exponent where b has zero
        } else {
            return false;
        }
    }
    return i < fa.size();
}

namespace {
bool term_less_canonical(const Mono& a, const Mono& b) { return term_precedes(a, b); }
}  // namespace

Poly poly_from_sorted_terms(std::vector<Mono> terms, std::uint32_t max_degree) {
    Poly out(max_degree);
    out.terms_ = std::move(terms);
    return out;
}

Poly Poly::one(std::uint32_t max_degree) {
    return poly_from_sorted_terms({Mono::unit()}, max_degree);
}

Poly Poly::monomial(const Mono& m, std::uint32_t max_degree) {
    if (m.degree() > max_degree) return Poly(max_degree);
    return poly_from_sorted_terms({m}, max_degree);
}

Poly Poly::w(std::uint32_t index, std::uint32_t max_degree) {
    return monomial(Mono::var(Var::w(index)), max_degree);
}

Poly Poly::p(std::uint32_t index, std::uint32_t max_degree) {
    return monomial(Mono::var(Var::p(index)), max_degree);
}

bool Poly::contains_term(const Mono& m) const {
    return std::binary_search(terms_.begin(), terms_.end(), m, term_less_canonical);
}

std::uint32_t Poly::top_degree() const {
    return terms_.empty() ? 0 : terms_.front().degree();
}

bool Poly::is_homogeneous() const {
    return terms_.empty() || terms_.front().degree() == terms_.back().degree();
}

bool Poly::uses_only(VarKind kind) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [kind](const Mono& m) { return m.uses_only(kind); });
}

Poly Poly::operator+(const Poly& o) const {
    if (max_degree_ != o.max_degree_)
        throw std::invalid_argument("truncation degree mismatch in +");
    std::vector<Mono> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size())
            out.push_back(terms_[i++]);
        else if (i == terms_.size())
            out.push_back(o.terms_[j++]);
        else if (term_precedes(terms_[i], o.terms_[j]))
            out.push_back(terms_[i++]);
        else if (term_precedes(o.terms_[j], terms_[i]))
            out.push_back(o.terms_[j++]);
        else {
            ++i;  // equal terms cancel over GF(2)
            ++j;
        }
    }
    return poly_from_sorted_terms(std::move(out), max_degree_);
}

Poly Poly::operator*(const Poly& o) const {
    if (max_degree_ != o.max_degree_)
        throw std::invalid_argument("truncation degree mismatch in *");
    std::vector<Mono> acc;
    acc.reserve(terms_.size() * o.terms_.size() / 2 + 1);
    for (const Mono& a : terms_) {
        std::uint32_t da = a.degree();
        for (const Mono& b : o.terms_) {
            if (da + b.degree() > max_degree_) continue;
            acc.push_back(a.times(b));
        }
    }
    std::sort(acc.begin(), acc.end(), term_less_canonical);
    // XOR semantics: keep terms that occur an odd number of times.
    std::vector<Mono> out;
    for (std::size_t i = 0; i < acc.size();) {
        std::size_t j = i;
        while (j < acc.size() && acc[j] == acc[i]) ++j;
        if ((j - i) & 1) out.push_back(acc[i]);
        i = j;
    }
    return poly_from_sorted_terms(std::move(out), max_degree_);
}

Poly Poly::square() const {
    std::vector<Mono> out;
    out.reserve(terms_.size());
    for (const Mono& t : terms_) {
        Mono sq = t.pow(2);
        if (sq.degree() <= max_degree_) out.push_back(std::move(sq));
    }
    std::sort(out.begin(), out.end(), term_less_canonical);
    return poly_from_sorted_terms(std::move(out), max_degree_);
}

Poly Poly::pow(std::uint32_t e) const {
    Poly result = Poly::one(max_degree_);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base.square();
        e >>= 1;
    }
    return result;
}

Poly Poly::graded_component(std::uint32_t d) const {
    std::vector<Mono> out;
    for (const Mono& t : terms_)
        if (t.degree() == d) out.push_back(t);
    return poly_from_sorted_terms(std::move(out), max_degree_);
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) out += " + ";
        out += terms_[i].to_string();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;
    std::uint32_t max_degree;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    std::uint32_t parse_posint(const char* what) {
        skip_ws();
        std::size_t start = pos;
        std::uint64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1'000'000) throw ParseError(start, std::string(what) + " too large");
            ++pos;
        }
        if (pos == start) throw ParseError(pos, std::string("expected ") + what);
        if (v == 0) throw ParseError(start, std::string(what) + " must be positive");
        return static_cast<std::uint32_t>(v);
    }

    Mono parse_term() {
        // The unit monomial is spelled "1" (constant terms exist in R_0).
        if (peek() == '1') {
            ++pos;
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                throw ParseError(pos - 1, "unexpected number; coefficients are implicit");
            return Mono::unit();
        }
        Mono m;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != 'w' && c != 'p') throw ParseError(pos, "expected generator 'w' or 'p'");
            ++pos;
            std::uint32_t index = parse_posint("generator index");
            std::uint32_t exp = 1;
            if (peek() == '^') {
                ++pos;
                exp = parse_posint("exponent");
            }
            m = m.times(Mono::var(c == 'w' ? Var::w(index) : Var::p(index), exp));
            if (peek() == '*') {
                ++pos;
                continue;
            }
            break;
        }
        return m;
    }

    Poly parse() {
        skip_ws();
        if (peek() == '0') {
            std::size_t zero_at = pos;
            ++pos;
            if (!eof()) throw ParseError(pos, "unexpected input after '0'");
            (void)zero_at;
            return Poly::zero(max_degree);
        }
        Poly out(max_degree);
        for (;;) {
            std::size_t term_at = pos;
            Mono m = parse_term();
            if (m.degree() > max_degree)
                throw DegreeError("term degree " + std::to_string(m.degree()) +
                                  " exceeds truncation degree " + std::to_string(max_degree) +
                                  " (at position " + std::to_string(term_at) + ")");
            out += Poly::monomial(m, max_degree);
            if (peek() == '+') {
                ++pos;
                continue;
            }
            break;
        }
        if (!eof()) throw ParseError(pos, "unexpected trailing input");
        return out;
    }
};

void enumerate_slice(std::uint32_t remaining, std::uint32_t max_gen_degree, GenSet gens,
                     Mono& acc, std::vector<Mono>& out) {
    if (remaining == 0) {
        out.push_back(acc);
        return;
    }
    // Pick the generator of largest degree first; within a monomial the
    // factors multiply in, so each generator is chosen with an exponent.
    for (std::uint32_t d = std::min(remaining, max_gen_degree); d >= 1; --d) {
        Var v = Var::w(d);
        if (gens == GenSet::EvenW && (d % 2)) continue;
        if (gens == GenSet::MixedPW && (d % 2)) v = Var::p(d);
        for (std::uint32_t e = 1; e * d <= remaining; ++e) {
            Mono saved = acc;
            acc = acc.times(Mono::var(v, e));
            enumerate_slice(remaining - e * d, d - 1, gens, acc, out);
            acc = saved;
        }
    }
}

}  // namespace

Poly parse_poly(std::string_view text, std::uint32_t max_degree) {
    Parser p{text, 0, max_degree};
    return p.parse();
}

MonomialBasis::MonomialBasis(std::uint32_t degree, GenSet gens) : degree_(degree), gens_(gens) {
    Mono acc;
    enumerate_slice(degree, degree, gens, acc, monos_);
    std::sort(monos_.begin(), monos_.end(), term_less_canonical);
}

std::size_t MonomialBasis::index_of(const Mono& m) const {
    auto it = std::lower_bound(monos_.begin(), monos_.end(), m, term_less_canonical);
    if (it == monos_.end() || !(*it == m))
        throw std::invalid_argument("monomial not in ambient basis: " + m.to_string());
    return static_cast<std::size_t>(it - monos_.begin());
}

gf2::BitVec MonomialBasis::to_vec(const Poly& x) const {
    gf2::BitVec v(monos_.size());
    for (const Mono& t : x.terms()) {
        if (t.degree() != degree_)
            throw std::invalid_argument("polynomial not supported on this graded slice");
        v.set(index_of(t));
    }
    return v;
}

Poly MonomialBasis::to_poly(const gf2::BitVec& v, std::uint32_t max_degree) const {
    if (v.size() != monos_.size()) throw std::invalid_argument("ambient dimension mismatch");
    Poly out(max_degree);
    for (std::size_t i = 0; i < monos_.size(); ++i)
        if (v.get(i)) out += Poly::monomial(monos_[i], max_degree);
    return out;
}

const char* MonomialBasis::tag() const {
    switch (gens_) {
        case GenSet::AllW: return "w";
        case GenSet::EvenW: return "w-even";
        case GenSet::MixedPW: return "p-odd/w-even";
    }
    return "?";
}

}  // namespace sf2
