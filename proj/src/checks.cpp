#include "sf2/checks.hpp"

#include <random>

namespace sf2 {

CheckReport check_involution_soundness(const OmegaTable& om) {
    const std::uint32_t n = om.max_degree();
    CheckReport rep{"involution", false, {}};
    for (std::uint32_t d = 0; d <= n; ++d) {
        MonomialBasis basis(d, GenSet::AllW);
        bool ok = true;
        std::optional<std::string> witness;
        for (const Mono& m : basis.monos()) {
            Poly x = Poly::monomial(m, n);
            if (om.omega(om.omega(x)) != x || !om.dd(om.dd(x)).is_zero()) {
                ok = false;
                witness = m.to_string();
                break;
            }
        }
        bool recursion = true;
        if (d >= 1) {
            Poly sum = om.wbar(d);  // i = 0 term
            for (std::uint32_t i = 1; i <= d; ++i)
                sum += Poly::w(i, n) * (i == d ? Poly::one(n) : om.wbar(d - i));
            recursion = sum.is_zero();
        }
        DegreeOutcome o{static_cast<int>(d), ok && recursion,
                        {{"monomials", (long long)basis.dim()},
                         {"recursion_ok", recursion ? 1 : 0}},
                        witness};
        rep.degrees.push_back(std::move(o));
    }
    return rep;
}

CheckReport check_formal_series(const OmegaTable& om) {
    const std::uint32_t n = om.max_degree();
    CheckReport rep{"formal-series", false, {}};
    for (std::uint32_t d = 1; d <= n; ++d) {
        // wbar = W (1 + wbar), degree d.
        Poly rhs_a = Poly::w(d, n);
        for (std::uint32_t i = 1; i < d; ++i) rhs_a += Poly::w(i, n) * om.wbar(d - i);
        bool a = om.wbar(d) == rhs_a;

        // W + wbar = W wbar, degree d.
        Poly w_wbar(n);
        for (std::uint32_t i = 1; i < d; ++i) w_wbar += Poly::w(i, n) * om.wbar(d - i);
        bool b = Poly::w(d, n) + om.wbar(d) == w_wbar;

        // W wbar = W^2 (1 + wbar), degree d.
        Poly rhs_c(n);
        if (d % 2 == 0) rhs_c += Poly::monomial(Mono::var(Var::w(d / 2), 2), n);
        for (std::uint32_t i = 1; 2 * i < d; ++i)
            rhs_c += Poly::monomial(Mono::var(Var::w(i), 2), n) * om.wbar(d - 2 * i);
        bool c = w_wbar == rhs_c;

        // W+ wbar+ = 1: the degree-d coefficient vanishes.
        Poly conv = om.wbar(d) + Poly::w(d, n);  // i = 0 and i = d terms
        for (std::uint32_t i = 1; i < d; ++i) conv += Poly::w(i, n) * om.wbar(d - i);
        bool e = conv.is_zero();

        DegreeOutcome o{static_cast<int>(d), a && b && c && e,
                        {{"omega_recursion", a ? 1 : 0},
                         {"sum_eq_product", b ? 1 : 0},
                         {"square_form", c ? 1 : 0},
                         {"unit_convolution", e ? 1 : 0}},
                        {}};
        rep.degrees.push_back(std::move(o));
    }
    return rep;
}

CheckReport check_thick_leibniz(const OmegaTable& om, unsigned tuples, std::uint64_t seed) {
    CheckReport rep{"thick-leibniz", false, {}};
    std::mt19937_64 rng(seed);
    const std::uint32_t cap = std::min<std::uint32_t>(8, om.max_degree());
    for (unsigned t = 0; t < tuples; ++t) {
        unsigned count = 1 + rng() % 4;
        std::vector<Poly> xs;
        for (unsigned i = 0; i < count; ++i)
            xs.push_back(random_homogeneous(1 + rng() % cap, om.max_degree(), rng()));
        Poly defect = om.thick_leibniz_defect(xs);
        DegreeOutcome o{static_cast<int>(t), defect.is_zero(),
                        {{"sample", (long long)t}, {"factors", (long long)count}},
                        {}};
        if (!o.pass) o.witness = defect.to_string();
        rep.degrees.push_back(std::move(o));
    }
    return rep;
}

CheckReport check_newton_suite(const PowerSumTable& ps) {
    const OmegaTable& om = ps.omega();
    const std::uint32_t n = om.max_degree();
    CheckReport rep{"newton", false, {}};
    for (std::uint32_t k = 1; k <= n; ++k) {
        Poly odd_sum(n), even_sum(n);
        for (std::uint32_t i = 0; i <= k; ++i) {
            Poly wi = i == 0 ? Poly::one(n) : Poly::w(i, n);
            Poly term = wi * om.wbar(k - i);
            (i % 2 ? odd_sum : even_sum) += term;
        }
        bool odd_ok = ps.p(k) == odd_sum;
        bool even_ok = ps.p(k) == even_sum;

        bool square_ok = true;
        if (2 * k <= n) square_ok = ps.p(k).square() == ps.p(2 * k);

        bool p2_cor_ok = true;
        if (k % 2 == 1 && 2 * k <= n) {
            Poly rhs(n);
            for (std::uint32_t i = 0; 2 * i <= k - 1; ++i) {
                Poly pair = i == 0 ? Poly::w(2 * k, n)
                                   : Poly::w(2 * i, n) * Poly::w(2 * (k - i), n);
                rhs += om.dd(pair);
                if (i > 0) rhs += om.dw(2 * i) * om.dw(2 * (k - i));
            }
            p2_cor_ok = ps.p(k).square() == rhs;
        }

        bool w2_cor_ok = true;
        if (4 * k <= n) {
            Poly rhs = Poly::w(2 * k, n) * om.dw(2 * k) + ps.p(k).square().square();
            for (std::uint32_t i = 0; i < k; ++i) {
                Poly pair = i == 0 ? Poly::w(4 * k, n)
                                   : Poly::w(2 * i, n) * Poly::w(4 * k - 2 * i, n);
                rhs += om.dd(pair);
                if (i > 0) rhs += om.dw(2 * i) * om.dw(4 * k - 2 * i);
            }
            w2_cor_ok = Poly::w(2 * k, n).square() == rhs;
        }

        DegreeOutcome o{static_cast<int>(k),
                        odd_ok && even_ok && square_ok && p2_cor_ok && w2_cor_ok,
                        {{"odd_formula", odd_ok ? 1 : 0},
                         {"even_formula", even_ok ? 1 : 0},
                         {"square", square_ok ? 1 : 0},
                         {"p2_corollary", p2_cor_ok ? 1 : 0},
                         {"w2_corollary", w2_cor_ok ? 1 : 0}},
                        {}};
        rep.degrees.push_back(std::move(o));
    }
    return rep;
}

CheckReport check_standard_form_bijection(const StandardFormTable& sf) {
    const std::uint32_t n = sf.max_degree();
    CheckReport rep{"standard-form", false, {}};
    for (std::uint32_t d = 0; d <= n; ++d) {
        bool count_ok = sf.basis(d).size() == partition_count(d);
        bool roundtrip_ok = true;
        std::optional<std::string> witness;
        MonomialBasis basis(d, GenSet::AllW);
        for (const Mono& m : basis.monos()) {
            Poly x = Poly::monomial(m, n);
            if (sf.evaluate(sf.decompose(x)) != x) {
                roundtrip_ok = false;
                witness = m.to_string();
                break;
            }
        }
        DegreeOutcome o{static_cast<int>(d), count_ok && roundtrip_ok,
                        {{"terms", (long long)sf.basis(d).size()},
                         {"p_d", (long long)partition_count(d)}},
                        witness};
        rep.degrees.push_back(std::move(o));
    }
    return rep;
}

CheckReport check_mixed_coordinates(const PowerSumTable& ps) {
    const std::uint32_t n = ps.max_degree();
    CheckReport rep{"mixed-coordinates", false, {}};
    for (std::uint32_t d = 0; d <= n; ++d) {
        bool ok = true;
        std::optional<std::string> witness;
        MonomialBasis all_w(d, GenSet::AllW), mixed(d, GenSet::MixedPW);
        for (const Mono& m : all_w.monos()) {
            Poly x = Poly::monomial(m, n);
            if (ps.from_mixed(ps.to_mixed(x)) != x) {
                ok = false;
                witness = m.to_string();
                break;
            }
        }
        for (const Mono& m : mixed.monos()) {
            Poly y = Poly::monomial(m, n);
            if (ps.to_mixed(ps.from_mixed(y)) != y) {
                ok = false;
                witness = m.to_string();
                break;
            }
        }
        rep.degrees.push_back(DegreeOutcome{static_cast<int>(d), ok, {}, witness});
    }
    return rep;
}

namespace {

std::vector<Partition> hook_partitions(std::uint32_t k) {
    std::vector<Partition> out;
    for (std::uint32_t arm = k; arm >= 1; --arm) {
        std::vector<std::uint32_t> parts{arm};
        parts.insert(parts.end(), k - arm, 1);
        out.push_back(Partition(std::move(parts)));
    }
    return out;
}

}  // namespace

CheckReport check_schur_suite(const SchurTable& st, const PowerSumTable& ps) {
    const std::uint32_t n = st.max_degree();
    const OmegaTable& om = ps.omega();
    const std::uint32_t cap = std::min<std::uint32_t>(10, n);
    CheckReport rep{"schur", false, {}};

    for (std::uint32_t d = 0; d <= cap; ++d) {
        bool conj_ok = true, singleton_ok = true, mn_ok = true, hooks_ok = true;
        bool gamma_ok = true, basis_ok = true;
        std::optional<std::string> witness;

        for (const Partition& lam : st.partitions_of(d)) {
            if (om.omega(st.schur_in_w(lam)) != st.schur_in_w(lam.conjugate())) {
                conj_ok = false;
                witness = "omega s" + lam.to_string();
            }
            SchurExpr single = st.to_schur(st.schur_in_w(lam));
            if (!(single == SchurExpr::single(lam, n))) {
                singleton_ok = false;
                witness = "to_schur s" + lam.to_string();
            }
        }

        // Murnaghan-Nakayama against ring multiplication, total degree d.
        for (std::uint32_t k = 1; k < d; ++k) {
            for (const Partition& lam : st.partitions_of(d - k)) {
                SchurExpr via_mn = mn_multiply(k, SchurExpr::single(lam, n));
                SchurExpr via_ring = st.to_schur(ps.p(k) * st.schur_in_w(lam));
                if (!(via_mn == via_ring)) {
                    mn_ok = false;
                    witness = "mn k=" + std::to_string(k) + " s" + lam.to_string();
                }
            }
        }

        if (d >= 1) {
            SchurExpr hooks(n);
            for (Partition& h : hook_partitions(d)) hooks += SchurExpr::single(std::move(h), n);
            hooks_ok = st.to_schur(ps.p(d)) == hooks;

            if (d % 2 == 1) {
                std::uint32_t j = (d + 1) / 2;
                gamma_ok = reduce_mod_I(st.to_schur(ps.p(d)).terms()) ==
                           std::vector<Partition>{gamma_hook(j)};
            } else {
                gamma_ok = reduce_mod_I(st.to_schur(ps.p(d)).terms()).empty();
            }
        }

        basis_ok = 2 * st.s_basis_of_S(d).size() == partition_count(d) + count_self_conjugate(d);

        bool pass = conj_ok && singleton_ok && mn_ok && hooks_ok && gamma_ok && basis_ok;
        DegreeOutcome o{static_cast<int>(d), pass,
                        {{"conjugation", conj_ok ? 1 : 0},
                         {"round_trip", singleton_ok ? 1 : 0},
                         {"mn_agreement", mn_ok ? 1 : 0},
                         {"hook_formula", hooks_ok ? 1 : 0},
                         {"mod_I_reduction", gamma_ok ? 1 : 0},
                         {"s_basis_count", basis_ok ? 1 : 0}},
                        witness};
        rep.degrees.push_back(std::move(o));
    }

    // Square-growth claim, combinatorial (sizes run past the truncation).
    for (std::uint32_t j = 0; j <= 4; ++j) {
        bool ok = sq_claim_holds(j);
        rep.degrees.push_back(DegreeOutcome{static_cast<int>((j + 1) * (j + 1)), ok,
                                            {{"sq_claim_j", (long long)j}},
                                            ok ? std::optional<std::string>{}
                                               : std::optional<std::string>{"Sq claim j=" +
                                                                            std::to_string(j)}});
    }
    return rep;
}

CheckReport check_dims_oracle(const GradedFamily& fam) {
    CheckReport rep{"dims-oracle", false, {}};
    for (std::uint32_t d = 0; d <= fam.max_degree(); ++d) {
        long long kernel_dim = (long long)fam.S(d).dim();
        long long combinatorial = (partition_count(d) + count_self_conjugate(d)) / 2;
        rep.degrees.push_back(DegreeOutcome{
            static_cast<int>(d), kernel_dim == combinatorial,
            {{"kernel_rank", kernel_dim}, {"combinatorial", combinatorial}},
            {}});
    }
    return rep;
}

}  // namespace sf2
