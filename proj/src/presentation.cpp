#include "sf2/presentation.hpp"

#include <algorithm>
#include <stdexcept>

namespace sf2 {

namespace {

bool delta_gen_precedes(const DeltaGen& a, const DeltaGen& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return term_precedes(a.a, b.a);
}

std::string delta_name(const Mono& a) { return "D[" + a.to_string() + "]"; }

}  // namespace

Presentation::Presentation(const StandardFormTable& sf, std::uint32_t presentation_degree)
    : sf_(&sf), pres_degree_(presentation_degree) {
    const std::uint32_t n = max_degree();
    if (pres_degree_ > n)
        throw std::invalid_argument("presentation degree above truncation degree");

    for (std::uint32_t d = 2; d <= n; d += 2)
        for (Mono& a : square_free_even_w_monomials(d))
            gens_.push_back(DeltaGen{std::move(a), d, ""});
    std::sort(gens_.begin(), gens_.end(), delta_gen_precedes);
    for (std::uint32_t id = 0; id < gens_.size(); ++id) {
        gens_[id].name = delta_name(gens_[id].a);
        gen_by_name_.emplace(gens_[id].name, id);
    }

    // F_d monomial lists for every slice within the presentation budget.
    fmono_by_degree_.resize(pres_degree_ + 1);
    struct FGen {
        bool is_p;
        std::uint32_t idx;  // p index or delta id
        std::uint32_t degree;
    };
    std::vector<FGen> fgens;
    for (std::uint32_t k = 1; k <= pres_degree_; k += 2) fgens.push_back({true, k, k});
    for (std::uint32_t id = 0; id < gens_.size(); ++id)
        if (gens_[id].degree <= pres_degree_) fgens.push_back({false, id, gens_[id].degree});

    for (std::uint32_t d = 0; d <= pres_degree_; ++d) {
        std::vector<FMono> monos;
        FMono acc;
        auto rec = [&](auto&& self, std::size_t gi, std::uint32_t remaining) -> void {
            if (remaining == 0) {
                FMono sorted = acc;
                std::sort(sorted.d_part.begin(), sorted.d_part.end());
                monos.push_back(std::move(sorted));
                return;
            }
            if (gi == fgens.size()) return;
            const FGen& g = fgens[gi];
            self(self, gi + 1, remaining);  // exponent 0
            if (g.degree > remaining) return;
            FMono saved = acc;
            for (std::uint32_t e = 1; e * g.degree <= remaining; ++e) {
                if (g.is_p)
                    acc.p_part = saved.p_part.times(Mono::var(Var::p(g.idx), e));
                else {
                    acc.d_part = saved.d_part;
                    acc.d_part.emplace_back(g.idx, e);
                }
                self(self, gi + 1, remaining - e * g.degree);
            }
            acc = saved;
        };
        rec(rec, 0, d);
        std::sort(monos.begin(), monos.end(),
                  [this](const FMono& a, const FMono& b) { return fmono_precedes(a, b); });
        fmono_by_degree_[d] = std::move(monos);
    }

    // Relation set: exactly the theorem's hypothesis list within budget.
    for (std::uint32_t k = 1; 2 * k <= pres_degree_; k += 2)
        relations_.push_back(relation_p_squared(k));
    for (std::uint32_t x = 0; x < gens_.size(); ++x)
        for (std::uint32_t y = x; y < gens_.size(); ++y) {
            if (gens_[x].degree + gens_[y].degree >= pres_degree_) continue;
            for (std::uint32_t z = y; z < gens_.size(); ++z) {
                if (gens_[x].degree + gens_[y].degree + gens_[z].degree > pres_degree_) continue;
                FPoly rel = relation_delta2(gens_[x].a, gens_[y].a, gens_[z].a);
                if (!rel.is_zero()) relations_.push_back(std::move(rel));
            }
        }

    ideal_by_degree_.reserve(pres_degree_ + 1);
    for (std::uint32_t d = 0; d <= pres_degree_; ++d) {
        gf2::EchelonAccumulator acc(fmono_by_degree_[d].size());
        build_ideal_slice(d, relations_, acc);
        ideal_by_degree_.push_back(std::move(acc));
    }
}

std::uint32_t Presentation::delta_gen_id(const Mono& a) const {
    auto it = gen_by_name_.find(delta_name(a));
    if (it == gen_by_name_.end())
        throw std::invalid_argument("not a delta generator: " + a.to_string());
    return it->second;
}

std::uint32_t Presentation::fdegree(const FMono& m) const {
    std::uint32_t d = m.p_part.degree();
    for (const auto& [id, e] : m.d_part) d += gens_[id].degree * e;
    return d;
}

std::uint32_t Presentation::fdegree(const FPoly& f) const {
    std::uint32_t d = 0;
    for (const FMono& m : f.terms) d = std::max(d, fdegree(m));
    return d;
}

bool Presentation::fmono_precedes(const FMono& a, const FMono& b) const {
    std::uint32_t da = fdegree(a), db = fdegree(b);
    if (da != db) return da > db;
    // Exponent vectors read over p's (index ascending) then deltas (id
    // ascending); at the first difference the larger exponent precedes.
    auto flatten = [](const FMono& m) {
        std::vector<std::pair<std::uint64_t, std::uint32_t>> seq;
        for (const auto& [v, e] : m.p_part.factors())
            seq.emplace_back((std::uint64_t{0} << 32) | v.index(), e);
        for (const auto& [id, e] : m.d_part) seq.emplace_back((std::uint64_t{1} << 32) | id, e);
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

Presentation::FPoly Presentation::fadd(const FPoly& a, const FPoly& b) const {
    FPoly out;
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size())
            out.terms.push_back(a.terms[i++]);
        else if (i == a.terms.size())
            out.terms.push_back(b.terms[j++]);
        else if (a.terms[i] == b.terms[j]) {
            ++i;
            ++j;
        } else if (fmono_precedes(a.terms[i], b.terms[j]))
            out.terms.push_back(a.terms[i++]);
        else
            out.terms.push_back(b.terms[j++]);
    }
    return out;
}

Presentation::FPoly Presentation::fmul(const FMono& a, const FMono& b) const {
    FMono out;
    out.p_part = a.p_part.times(b.p_part);
    std::size_t i = 0, j = 0;
    while (i < a.d_part.size() || j < b.d_part.size()) {
        if (j == b.d_part.size())
            out.d_part.push_back(a.d_part[i++]);
        else if (i == a.d_part.size())
            out.d_part.push_back(b.d_part[j++]);
        else if (a.d_part[i].first == b.d_part[j].first) {
            out.d_part.emplace_back(a.d_part[i].first, a.d_part[i].second + b.d_part[j].second);
            ++i;
            ++j;
        } else if (a.d_part[i].first < b.d_part[j].first)
            out.d_part.push_back(a.d_part[i++]);
        else
            out.d_part.push_back(b.d_part[j++]);
    }
    return fmono(std::move(out));
}

Presentation::FPoly Presentation::fmul(const FMono& a, const FPoly& b) const {
    FPoly out;
    for (const FMono& m : b.terms) out = fadd(out, fmul(a, m));
    return out;
}

Presentation::FPoly Presentation::fmul(const FPoly& a, const FPoly& b) const {
    FPoly out;
    for (const FMono& m : a.terms) out = fadd(out, fmul(m, b));
    return out;
}

Presentation::FPoly Presentation::delta_extended(const Poly& x) const {
    FPoly out;
    for (const StandardFormTerm& t : sf_->decompose(x).terms) {
        if (t.a_part.is_unit()) continue;  // delta of a trivial a-part vanishes
        FMono m;
        m.p_part = t.p_part;
        m.d_part.emplace_back(delta_gen_id(t.a_part), 1);
        for (std::uint32_t i : t.d_part) {
            FMono factor;
            factor.d_part.emplace_back(delta_gen_id(Mono::var(Var::w(2 * i))), 1);
            m = fmul(m, factor).terms.front();
        }
        out = fadd(out, fmono(std::move(m)));
    }
    return out;
}

Presentation::FPoly Presentation::relation_p_squared(std::uint32_t k) const {
    if (k % 2 == 0) throw std::invalid_argument("p^2 relation needs odd k");
    if (2 * k > max_degree()) throw std::invalid_argument("p^2 relation above truncation");
    FMono psq;
    psq.p_part = Mono::var(Var::p(k), 2);
    FPoly out = fmono(std::move(psq));
    // i = 0 contributes delta(w_{2k}) alone (w_0 = 1, delta(w_0) = 0).
    {
        FMono m;
        m.d_part.emplace_back(delta_gen_id(Mono::var(Var::w(2 * k))), 1);
        out = fadd(out, fmono(std::move(m)));
    }
    for (std::uint32_t i = 1; 2 * i <= k - 1; ++i) {
        Mono pair = Mono::var(Var::w(2 * i)).times(Mono::var(Var::w(2 * (k - i))));
        FMono joint;
        joint.d_part.emplace_back(delta_gen_id(pair), 1);
        out = fadd(out, fmono(std::move(joint)));
        FMono split;
        split.d_part.emplace_back(delta_gen_id(Mono::var(Var::w(2 * i))), 1);
        split.d_part.emplace_back(delta_gen_id(Mono::var(Var::w(2 * (k - i)))), 1);
        std::sort(split.d_part.begin(), split.d_part.end());
        out = fadd(out, fmono(std::move(split)));
    }
    return out;
}

Presentation::FPoly Presentation::relation_delta2(const Mono& x, const Mono& y,
                                                  const Mono& z) const {
    auto check = [](const Mono& m) {
        if (m.is_unit() || !m.square_free() || !m.uses_only(VarKind::W))
            throw std::invalid_argument("delta^2 arguments must be delta generators");
        for (const auto& [v, e] : m.factors())
            if (v.index() % 2) throw std::invalid_argument("delta^2 arguments use even w only");
    };
    check(x);
    check(y);
    check(z);
    auto delta_of_product = [this](const Mono& a, const Mono& b) {
        Mono prod = a.times(b);
        if (prod.square_free()) {
            FMono m;
            m.d_part.emplace_back(delta_gen_id(prod), 1);
            return fmono(std::move(m));
        }
        return delta_extended(Poly::monomial(prod, max_degree()));
    };
    auto gen = [this](const Mono& a) {
        FMono m;
        m.d_part.emplace_back(delta_gen_id(a), 1);
        return m;
    };
    FPoly out = fmul(gen(x), delta_of_product(y, z));
    out = fadd(out, fmul(gen(y), delta_of_product(x, z)));
    out = fadd(out, fmul(gen(z), delta_of_product(x, y)));
    out = fadd(out, fmul(gen(x), fmul(gen(y), fmono(gen(z)))));
    return out;
}

const std::vector<Presentation::FMono>& Presentation::fmonomials(std::uint32_t d) const {
    if (d > pres_degree_) throw std::out_of_range("degree above presentation budget");
    return fmono_by_degree_[d];
}

gf2::BitVec Presentation::fvec(std::uint32_t d, const FPoly& f) const {
    const std::vector<FMono>& basis = fmonomials(d);
    gf2::BitVec v(basis.size());
    for (const FMono& m : f.terms) {
        auto it = std::lower_bound(basis.begin(), basis.end(), m,
                                   [this](const FMono& a, const FMono& b) {
                                       return fmono_precedes(a, b);
                                   });
        if (it == basis.end() || !(*it == m))
            throw std::logic_error("F-monomial missing from slice basis");
        v.flip(static_cast<std::size_t>(it - basis.begin()));
    }
    return v;
}

void Presentation::build_ideal_slice(std::uint32_t d, std::span<const FPoly> rels,
                                     gf2::EchelonAccumulator& acc) const {
    for (const FPoly& r : rels) {
        if (r.is_zero()) continue;
        std::uint32_t rd = fdegree(r.terms.front());
        if (rd > d) continue;
        for (const FMono& m : fmonomials(d - rd)) acc.add_row(fvec(d, fmul(m, r)));
    }
}

std::uint32_t Presentation::stilde_graded_dim(std::uint32_t d) const {
    if (d > pres_degree_) throw std::out_of_range("degree above presentation budget");
    return static_cast<std::uint32_t>(fmono_by_degree_[d].size() - ideal_by_degree_[d].rank());
}

std::uint32_t Presentation::stilde_graded_dim(std::uint32_t d,
                                              std::span<const FPoly> rels) const {
    gf2::EchelonAccumulator acc(fmonomials(d).size());
    build_ideal_slice(d, rels, acc);
    return static_cast<std::uint32_t>(fmonomials(d).size() - acc.rank());
}

bool Presentation::ideal_contains(const FPoly& f) const {
    if (f.is_zero()) return true;
    std::uint32_t d = fdegree(f.terms.front());
    for (const FMono& m : f.terms)
        if (fdegree(m) != d) throw std::invalid_argument("ideal membership needs homogeneous input");
    if (d > pres_degree_) throw std::out_of_range("degree above presentation budget");
    return ideal_by_degree_[d].contains(fvec(d, f));
}

Poly Presentation::evaluate(const FMono& m) const {
    const PowerSumTable& ps = sf_->power_sums();
    const OmegaTable& om = ps.omega();
    Poly out = ps.p_monomial_in_w(m.p_part);
    for (const auto& [id, e] : m.d_part)
        out *= om.dd(Poly::monomial(gens_[id].a, max_degree())).pow(e);
    return out;
}

Poly Presentation::evaluate(const FPoly& f) const {
    Poly out(max_degree());
    for (const FMono& m : f.terms) out += evaluate(m);
    return out;
}

std::string Presentation::render(const FMono& m) const {
    std::string out;
    auto push = [&out](const std::string& s) {
        if (!out.empty()) out += '*';
        out += s;
    };
    if (!m.p_part.is_unit()) push(m.p_part.to_string());
    for (auto it = m.d_part.rbegin(); it != m.d_part.rend(); ++it) {
        std::string f = gens_[it->first].name;
        if (it->second > 1) f += "^" + std::to_string(it->second);
        push(f);
    }
    return out.empty() ? "1" : out;
}

std::string Presentation::render(const FPoly& f) const {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.terms.size(); ++i) {
        if (i) out += " + ";
        out += render(f.terms[i]);
    }
    return out;
}

CheckReport Presentation::verify(const GradedFamily& fam) const {
    if (fam.max_degree() != max_degree())
        throw std::invalid_argument("family truncation degree mismatch");
    CheckReport rep{"presentation", false, {}};

    bool relations_vanish = true;
    for (const FPoly& r : relations_)
        if (!evaluate(r).is_zero()) relations_vanish = false;

    for (std::uint32_t d = 0; d <= pres_degree_; ++d) {
        long long f_dim = (long long)fmono_by_degree_[d].size();
        long long ideal_rank = (long long)ideal_by_degree_[d].rank();
        long long stilde = f_dim - ideal_rank;
        long long s_dim = (long long)fam.S(d).dim();

        // Surjectivity of evaluation onto S_d, with the image inside S_d.
        bool image_in_S = true;
        gf2::EchelonAccumulator image(fam.basis(d).dim());
        for (const FMono& m : fmono_by_degree_[d]) {
            Poly val = evaluate(m);
            if (val.is_zero()) continue;
            gf2::BitVec v = fam.basis(d).to_vec(val);
            if (!fam.S(d).contains(v)) image_in_S = false;
            image.add_row(std::move(v));
        }
        long long image_rank = (long long)image.rank();

        bool pass = stilde == s_dim && image_rank == s_dim && image_in_S && relations_vanish;
        DegreeOutcome o{static_cast<int>(d), pass,
                        {{"dim_F", f_dim},
                         {"ideal_rank", ideal_rank},
                         {"dim_Stilde", stilde},
                         {"dim_S", s_dim},
                         {"eval_rank", image_rank}},
                        {}};
        rep.degrees.push_back(std::move(o));
    }
    return rep;
}

}  // namespace sf2
