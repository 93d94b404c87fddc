#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sf2/presentation.hpp"

#include <random>

using namespace sf2;

namespace {
constexpr std::uint32_t N = 12;
constexpr std::uint32_t NP = 10;

struct Tables {
    OmegaTable om{N};
    PowerSumTable ps{om};
    StandardFormTable sf{ps};
    Presentation pres{sf, NP};
    GradedFamily fam{ps, 2};
};
Tables& tables() {
    static Tables t;
    return t;
}
Poly parse(const char* text) { return parse_poly(text, N); }
using FMono = Presentation::FMono;
using FPoly = Presentation::FPoly;
Mono wmono(std::initializer_list<std::uint32_t> evens) {
    Mono m;
    for (std::uint32_t i : evens) m = m.times(Mono::var(Var::w(i)));
    return m;
}
}  // namespace

TEST_CASE("delta generator enumeration") {
    Presentation p2(tables().sf, 2);
    // Generators always cover the full truncation degree.
    auto degrees_up_to = [](const Presentation& p, std::uint32_t bound) {
        std::vector<std::string> names;
        for (const DeltaGen& g : p.delta_gens())
            if (g.degree <= bound) names.push_back(g.name);
        return names;
    };
    CHECK(degrees_up_to(p2, 2) == std::vector<std::string>{"D[w2]"});
    CHECK(degrees_up_to(p2, 3) == std::vector<std::string>{"D[w2]"});
    CHECK(degrees_up_to(p2, 6) ==
          std::vector<std::string>{"D[w2]", "D[w4]", "D[w2*w4]", "D[w6]"});
}

TEST_CASE("delta_extended: frozen cases") {
    const Presentation& pres = tables().pres;
    CHECK(pres.render(pres.delta_extended(parse("w2"))) == "D[w2]");
    CHECK(pres.delta_extended(parse("w1^2")).is_zero());  // standard form has a = 1
    CHECK(pres.render(pres.delta_extended(parse("w2^2"))) == "D[w2]^2");
    // Linearity.
    Poly x = parse("w2 + w2^2");
    CHECK(pres.delta_extended(x) ==
          pres.fadd(pres.delta_extended(parse("w2")), pres.delta_extended(parse("w2^2"))));
}

TEST_CASE("p^2 relations: frozen cases") {
    const Presentation& pres = tables().pres;
    CHECK(pres.render(pres.relation_p_squared(1)) == "p1^2 + D[w2]");
    CHECK(pres.render(pres.relation_p_squared(3)) == "p3^2 + D[w4]*D[w2] + D[w2*w4] + D[w6]");
    for (std::uint32_t k = 1; 2 * k <= N; k += 2) {
        FPoly r = pres.relation_p_squared(k);
        for (const auto& m : r.terms) CHECK(pres.fdegree(m) == 2 * k);
    }
    CHECK_THROWS_AS(pres.relation_p_squared(2), std::invalid_argument);
}

TEST_CASE("delta^2 relations: frozen oracle outputs and symmetry") {
    const Presentation& pres = tables().pres;
    Mono w2 = wmono({2}), w4 = wmono({4}), w24 = wmono({2, 4});
    // Both triples collapse to zero over GF(2): delta(w2^2) = D[w2]^2 exactly.
    CHECK(pres.relation_delta2(w2, w2, w2).is_zero());
    CHECK(pres.relation_delta2(w2, w2, w4).is_zero());

    // A genuinely nonzero relation appears at degree 12.
    Presentation pres12(tables().sf, 12);
    Mono w6 = wmono({6});
    FPoly r = pres12.relation_delta2(w2, w4, w6);
    CHECK_FALSE(r.is_zero());
    CHECK(pres12.fdegree(r) == 12);

    // Invariance under all six argument orders.
    std::vector<std::vector<Mono>> orders = {{w2, w4, w24}, {w2, w24, w4}, {w4, w2, w24},
                                             {w4, w24, w2}, {w24, w2, w4}, {w24, w4, w2}};
    FPoly first = pres.relation_delta2(orders[0][0], orders[0][1], orders[0][2]);
    for (const auto& o : orders) CHECK(pres.relation_delta2(o[0], o[1], o[2]) == first);

    CHECK_THROWS_AS(pres.relation_delta2(Mono::var(Var::w(3)), w2, w2), std::invalid_argument);
    CHECK_THROWS_AS(pres.relation_delta2(Mono::unit(), w2, w2), std::invalid_argument);
}

TEST_CASE("graded dimensions of the quotient match S") {
    const Presentation& pres = tables().pres;
    const GradedFamily& fam = tables().fam;
    std::uint32_t expected[] = {1, 1, 1, 2, 3, 4, 6};
    for (std::uint32_t d = 0; d <= 6; ++d) CHECK(pres.stilde_graded_dim(d) == expected[d]);
    for (std::uint32_t d = 0; d <= NP; ++d)
        CHECK(pres.stilde_graded_dim(d) == fam.S(d).dim());
}

TEST_CASE("dimension is monotone as relations are added") {
    const Presentation& pres = tables().pres;
    const auto& rels = pres.relations();
    for (std::uint32_t d = 0; d <= NP; ++d) {
        std::uint32_t prev = pres.stilde_graded_dim(d, std::span<const FPoly>{});
        for (std::size_t take = 1; take <= rels.size(); ++take) {
            std::uint32_t now =
                pres.stilde_graded_dim(d, std::span<const FPoly>(rels.data(), take));
            CHECK(now <= prev);
            prev = now;
        }
    }
}

TEST_CASE("evaluation kills relations and respects grading") {
    const Presentation& pres = tables().pres;
    for (const FPoly& r : pres.relations()) CHECK(pres.evaluate(r).is_zero());

    FPoly r3 = pres.relation_p_squared(3);
    for (const auto& m : r3.terms) {
        Poly val = pres.evaluate(m);
        CHECK(val.is_homogeneous());
        CHECK((val.is_zero() || val.top_degree() == pres.fdegree(m)));
    }
}

TEST_CASE("full presentation theorem degreewise") {
    auto rep = tables().pres.verify(tables().fam);
    CHECK(rep.pass());
    REQUIRE(rep.degrees.size() == NP + 1);
    CHECK(rep.degrees[0].dims[0] == std::pair<std::string, long long>{"dim_F", 1});
}

TEST_CASE("delta-calculus lemmas as ideal membership") {
    const Presentation& pres = tables().pres;
    const OmegaTable& om = tables().om;
    std::mt19937_64 rng(0xde17a);

    auto random_x = [&](std::uint32_t max_deg) {
        std::uint32_t d = rng() % (max_deg + 1);
        return random_homogeneous(d, N, rng());
    };

    // delta(x d(y)) + delta(x) delta(y) in the ideal, y a generator monomial.
    for (int trial = 0; trial < 40; ++trial) {
        const DeltaGen& g = pres.delta_gens()[rng() % pres.delta_gens().size()];
        if (g.degree > NP) continue;
        Poly x = random_x(NP - g.degree);
        Poly dy = om.dd(Poly::monomial(g.a, N));
        FMono dg;
        dg.d_part.emplace_back(pres.delta_gen_id(g.a), 1);
        FPoly defect = pres.fadd(pres.delta_extended(x * dy),
                                 pres.fmul(dg, pres.delta_extended(x)));
        CHECK(pres.ideal_contains(defect));
    }

    // delta(d(y)) in the ideal.
    for (int trial = 0; trial < 20; ++trial) {
        Poly y = random_x(NP);
        CHECK(pres.ideal_contains(pres.delta_extended(om.dd(y))));
    }

    // delta(p_k x) + p_k delta(x) in the ideal for odd k.
    for (int trial = 0; trial < 40; ++trial) {
        std::uint32_t k = 1 + 2 * (rng() % 3);  // 1, 3, 5
        if (k > NP) continue;
        Poly x = random_x(NP - k);
        FMono pk;
        pk.p_part = Mono::var(Var::p(k));
        FPoly defect = pres.fadd(pres.delta_extended(tables().ps.p(k) * x),
                                 pres.fmul(pk, pres.delta_extended(x)));
        CHECK(pres.ideal_contains(defect));
    }
}

TEST_CASE("squared-generator rewriting agrees with the w^2 corollary route") {
    // delta(w_{2k}^2) computed through the standard form must agree, modulo
    // the ideal, with the term-by-term route through the w^2 corollary.
    const Presentation& pres = tables().pres;
    const OmegaTable& om = tables().om;
    for (std::uint32_t k = 1; 4 * k <= NP; ++k) {
        Poly w2k = Poly::w(2 * k, N);
        FPoly via_standard = pres.delta_extended(w2k * w2k);

        FMono dg;
        dg.d_part.emplace_back(pres.delta_gen_id(Mono::var(Var::w(2 * k))), 1);
        FPoly via_corollary = pres.fmul(dg, pres.fmono(dg));  // delta(w2k)^2
        via_corollary =
            pres.fadd(via_corollary, pres.delta_extended(tables().ps.p(k).square().square()));
        for (std::uint32_t i = 0; i < k; ++i) {
            Poly pair = i == 0 ? Poly::w(4 * k, N)
                               : Poly::w(2 * i, N) * Poly::w(4 * k - 2 * i, N);
            via_corollary = pres.fadd(via_corollary, pres.delta_extended(om.dd(pair)));
            if (i > 0)
                via_corollary = pres.fadd(
                    via_corollary,
                    pres.delta_extended(om.dw(2 * i) * om.dw(4 * k - 2 * i)));
        }
        CHECK(pres.ideal_contains(pres.fadd(via_standard, via_corollary)));
    }
}

TEST_CASE("fmonomial enumeration counts") {
    const Presentation& pres = tables().pres;
    CHECK(pres.fmonomials(0).size() == 1);
    CHECK(pres.fmonomials(1).size() == 1);   // p1
    CHECK(pres.fmonomials(2).size() == 2);   // p1^2, D[w2]
    CHECK(pres.fmonomials(3).size() == 3);   // p1^3, p3, p1 D[w2]
    CHECK(pres.fmonomials(4).size() == 5);
    CHECK(pres.fmonomials(6).size() == 12);
}
