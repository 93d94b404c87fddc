#include "sf2/coordinates.hpp"

#include <algorithm>
#include <stdexcept>

namespace sf2 {

namespace {

// Largest odd divisor and its 2-adic cofactor exponent.
std::pair<std::uint32_t, std::uint32_t> odd_core(std::uint32_t k) {
    std::uint32_t a = 0;
    while (k % 2 == 0) {
        k /= 2;
        ++a;
    }
    return {k, a};
}

}  // namespace

PowerSumTable::PowerSumTable(const OmegaTable& omega) : omega_(&omega) {
    const std::uint32_t n = omega.max_degree();
    p_.assign(1, Poly::zero(n));
    for (std::uint32_t k = 1; k <= n; ++k) {
        if (k % 2 == 0) {
            p_.push_back(p_[k / 2].square());
        } else {
            Poly acc = Poly::w(k, n);
            for (std::uint32_t j = 1; j < k; ++j) acc += p_[k - j] * Poly::w(j, n);
            p_.push_back(std::move(acc));
        }
    }

    // w_k for odd k in mixed coordinates, from the Newton identity:
    // w_k = p_k + sum_{j=1..k-1} p_{k-j} w_j, with p_{2^a m} = p_m^{2^a}.
    auto p_mixed = [n](std::uint32_t k) {
        auto [m, a] = odd_core(k);
        return Poly::monomial(Mono::var(Var::p(m), 1u << a), n);
    };
    w_odd_mixed_.assign(n + 1, Poly::zero(n));
    for (std::uint32_t k = 1; k <= n; k += 2) {
        Poly acc = p_mixed(k);
        for (std::uint32_t j = 1; j < k; ++j) {
            Poly wj = (j % 2 == 0) ? Poly::w(j, n) : w_odd_mixed_[j];
            acc += p_mixed(k - j) * wj;
        }
        w_odd_mixed_[k] = std::move(acc);
    }
}

const Poly& PowerSumTable::p(std::uint32_t k) const {
    if (k == 0 || k > max_degree()) throw std::out_of_range("power sum index out of range");
    return p_[k];
}

Poly PowerSumTable::to_mixed(const Poly& x) const {
    const std::uint32_t n = max_degree();
    Poly out(n);
    for (const Mono& t : x.terms()) {
        Poly image = Poly::one(n);
        for (const auto& [v, e] : t.factors()) {
            if (v.kind() != VarKind::W)
                throw std::invalid_argument("to_mixed expects w-coordinates");
            if (v.index() % 2 == 0)
                image *= Poly::monomial(Mono::var(v, e), n);
            else
                image *= w_odd_mixed_[v.index()].pow(e);
        }
        out += image;
    }
    return out;
}

Poly PowerSumTable::from_mixed(const Poly& y) const {
    const std::uint32_t n = max_degree();
    Poly out(n);
    for (const Mono& t : y.terms()) {
        Poly image = Poly::one(n);
        for (const auto& [v, e] : t.factors()) {
            // Accepts any w generator (already a w-coordinate element); only
            // p's need substitution.
            if (v.kind() == VarKind::W)
                image *= Poly::monomial(Mono::var(v, e), n);
            else
                image *= p_[v.index()].pow(e);
        }
        out += image;
    }
    return out;
}

Poly PowerSumTable::p_monomial_in_w(const Mono& pmono) const {
    Poly out = Poly::one(max_degree());
    for (const auto& [v, e] : pmono.factors()) {
        if (v.kind() != VarKind::P) throw std::invalid_argument("expected p-variables only");
        out *= p(v.index()).pow(e);
    }
    return out;
}

std::uint32_t StandardFormTerm::degree() const {
    std::uint32_t d = p_part.degree() + a_part.degree();
    for (std::uint32_t i : d_part) d += 2 * i;
    return d;
}

std::string StandardFormTerm::to_string() const {
    std::string out;
    auto push = [&out](const std::string& s) {
        if (!out.empty()) out += '*';
        out += s;
    };
    if (!p_part.is_unit()) push(p_part.to_string());
    if (!a_part.is_unit()) push(a_part.to_string());
    for (std::uint32_t i : d_part) push("d[w" + std::to_string(2 * i) + "]");
    return out.empty() ? "1" : out;
}

bool sf_term_precedes(const StandardFormTerm& a, const StandardFormTerm& b) {
    std::uint32_t da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    // Flatten to (group, index, exponent) with groups: p's, then a's, then d's.
    auto flatten = [](const StandardFormTerm& t) {
        std::vector<std::pair<std::uint64_t, std::uint32_t>> seq;
        for (const auto& [v, e] : t.p_part.factors())
            seq.emplace_back((std::uint64_t{0} << 32) | v.index(), e);
        for (const auto& [v, e] : t.a_part.factors())
            seq.emplace_back((std::uint64_t{1} << 32) | v.index(), e);
        for (std::size_t i = 0; i < t.d_part.size();) {
            std::size_t j = i;
            while (j < t.d_part.size() && t.d_part[j] == t.d_part[i]) ++j;
            seq.emplace_back((std::uint64_t{2} << 32) | t.d_part[i],
                             static_cast<std::uint32_t>(j - i));
            i = j;
        }
        return seq;
    };
    auto fa = flatten(a), fb = flatten(b);
    std::size_t i = 0, j = 0;
    while (i < fa.size() && j < fb.size()) {
        if (fa[i].first == fb[j].first) {
            if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second;
            ++i;
            ++j;
        } else {
            return fa[i].first < fb[j].first;
        }
    }
    return i < fa.size();
}

std::string StandardForm::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out += " + ";
        out += terms[i].to_string();
    }
    return out;
}

namespace {

// Partitions of `target` into distinct parts of the given parity, largest
// part first during recursion; each one is a square-free monomial support.
void distinct_parts_rec(std::uint32_t target, std::uint32_t max_part, bool odd,
                        std::vector<std::uint32_t>& stack,
                        std::vector<std::vector<std::uint32_t>>& out) {
    if (target == 0) {
        out.push_back(stack);
        return;
    }
    const std::uint32_t min_part = odd ? 1 : 2;
    if (max_part < min_part) return;
    std::uint32_t part = std::min(target, max_part);
    if ((part % 2 == 1) != odd) --part;
    for (; part >= min_part; part -= 2) {
        stack.push_back(part);
        distinct_parts_rec(target - part, part >= 2 ? part - 2 : 0, odd, stack, out);
        stack.pop_back();
        if (part < 2) break;  // unsigned guard
    }
}

std::vector<std::vector<std::uint32_t>> distinct_parts(std::uint32_t target, bool odd) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> stack;
    distinct_parts_rec(target, target, odd, stack, out);
    return out;
}

Mono mono_from_parts(const std::vector<std::uint32_t>& parts, VarKind kind) {
    Mono m;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it)
        m = m.times(Mono::var(kind == VarKind::P ? Var::p(*it) : Var::w(*it)));
    return m;
}

void d_multisets_rec(std::uint32_t half, std::uint32_t max_part,
                     std::vector<std::uint32_t>& stack,
                     std::vector<std::vector<std::uint32_t>>& out) {
    if (half == 0) {
        std::vector<std::uint32_t> asc(stack.rbegin(), stack.rend());
        out.push_back(std::move(asc));
        return;
    }
    for (std::uint32_t part = std::min(half, max_part); part >= 1; --part) {
        stack.push_back(part);
        d_multisets_rec(half - part, part, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Mono> square_free_even_w_monomials(std::uint32_t d) {
    std::vector<Mono> out;
    for (const auto& parts : distinct_parts(d, /*odd=*/false))
        out.push_back(mono_from_parts(parts, VarKind::W));
    std::sort(out.begin(), out.end(), term_precedes);
    return out;
}

std::vector<StandardFormTerm> standard_form_terms(std::uint32_t d) {
    std::vector<StandardFormTerm> out;
    for (std::uint32_t pd = 0; pd <= d; ++pd) {
        auto pchoices = distinct_parts(pd, /*odd=*/true);
        if (pchoices.empty()) continue;
        for (std::uint32_t ad = 0; pd + ad <= d; ++ad) {
            if ((d - pd - ad) % 2) continue;
            auto achoices = distinct_parts(ad, /*odd=*/false);
            if (achoices.empty()) continue;
            std::uint32_t half = (d - pd - ad) / 2;
            std::vector<std::vector<std::uint32_t>> dchoices;
            std::vector<std::uint32_t> stack;
            d_multisets_rec(half, half == 0 ? 1 : half, stack, dchoices);
            for (const auto& pp : pchoices)
                for (const auto& aa : achoices)
                    for (const auto& dp : dchoices)
                        out.push_back(StandardFormTerm{mono_from_parts(pp, VarKind::P),
                                                       mono_from_parts(aa, VarKind::W), dp});
        }
    }
    std::sort(out.begin(), out.end(), sf_term_precedes);
    return out;
}

StandardFormTable::StandardFormTable(const PowerSumTable& ps) : ps_(&ps) {
    const std::uint32_t n = ps.max_degree();
    by_degree_.reserve(n + 1);
    for (std::uint32_t d = 0; d <= n; ++d) {
        DegreeData data{standard_form_terms(d), MonomialBasis(d, GenSet::AllW), {}};
        const std::size_t dim = data.basis.dim();
        if (data.terms.size() != dim)
            throw std::logic_error("standard form term count differs from p(d) at degree " +
                                   std::to_string(d));
        // Columns are the evaluated terms; invert via [M | I].
        gf2::BitMatrix aug(dim, 2 * dim);
        for (std::size_t j = 0; j < dim; ++j) {
            gf2::BitVec col = data.basis.to_vec(evaluate_term(data.terms[j]));
            for (std::size_t i = 0; i < dim; ++i)
                if (col.get(i)) aug.set(i, j);
        }
        for (std::size_t i = 0; i < dim; ++i) aug.set(i, dim + i);
        auto pivots = aug.rref();
        bool invertible = pivots.size() >= dim;
        for (std::size_t i = 0; invertible && i < dim; ++i) invertible = pivots[i] == i;
        if (!invertible)
            throw std::logic_error("standard form terms are not a basis at degree " +
                                   std::to_string(d));
        gf2::BitMatrix inv(dim, dim);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c)
                if (aug.get(r, dim + c)) inv.set(r, c);
        data.inverse = std::move(inv);
        by_degree_.push_back(std::move(data));
    }
}

const std::vector<StandardFormTerm>& StandardFormTable::basis(std::uint32_t d) const {
    if (d > max_degree()) throw std::out_of_range("degree above truncation");
    return by_degree_[d].terms;
}

Poly StandardFormTable::evaluate_term(const StandardFormTerm& t) const {
    const OmegaTable& om = ps_->omega();
    Poly out = ps_->p_monomial_in_w(t.p_part);
    out *= Poly::monomial(t.a_part, max_degree());
    for (std::uint32_t i : t.d_part) out *= om.dw(2 * i);
    return out;
}

Poly StandardFormTable::evaluate(const StandardForm& s) const {
    Poly out(max_degree());
    for (const StandardFormTerm& t : s.terms) out += evaluate_term(t);
    return out;
}

StandardForm StandardFormTable::decompose(const Poly& x) const {
    if (x.max_degree() != max_degree())
        throw std::invalid_argument("truncation degree mismatch in decompose");
    StandardForm out{max_degree(), {}};
    for (std::uint32_t d = 0; d <= max_degree(); ++d) {
        Poly comp = x.graded_component(d);
        if (comp.is_zero()) continue;
        const DegreeData& data = by_degree_[d];
        gf2::BitVec v = data.basis.to_vec(comp);
        for (std::size_t i = 0; i < data.terms.size(); ++i)
            if (gf2::row_and_parity(data.inverse.row(i), v.words(), v.word_count()))
                out.terms.push_back(data.terms[i]);
    }
    std::sort(out.terms.begin(), out.terms.end(), sf_term_precedes);
    return out;
}

}  // namespace sf2
