#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sf2/checks.hpp"
#include "sf2/report.hpp"

using namespace sf2;

namespace {
constexpr std::uint32_t N = 10;
const GradedFamily& family() {
    static OmegaTable om(N);
    static PowerSumTable ps(om);
    static GradedFamily fam(ps, 2);
    return fam;
}
}  // namespace

TEST_CASE("graded dimensions of S and I") {
    const GradedFamily& fam = family();
    std::size_t expected[] = {1, 1, 1, 2, 3, 4, 6};
    for (std::uint32_t d = 0; d <= 6; ++d) CHECK(fam.S(d).dim() == expected[d]);

    CHECK(fam.Ipow(1, 2).dim() == 1);
    CHECK(fam.Ipow(1, 2).contains(fam.basis(2).to_vec(parse_poly("w1^2", N))));
    CHECK(fam.Ipow(1, 0).dim() == 0);
    CHECK(fam.S(0).dim() == 1);
}

TEST_CASE("subspace chain I^{n+1} inside I^n inside S; RI^{n+1} inside RI^n") {
    const GradedFamily& fam = family();
    for (std::uint32_t d = 0; d <= N; ++d) {
        CHECK(fam.Ipow(1, d).subspace_of(fam.S(d)));
        CHECK(fam.Ipow(2, d).subspace_of(fam.Ipow(1, d)));
        CHECK(fam.Ipow(3, d).subspace_of(fam.Ipow(2, d)));
        CHECK(fam.RIpow(2, d).subspace_of(fam.RIpow(1, d)));
        CHECK(fam.RIpow(3, d).subspace_of(fam.RIpow(2, d)));
        CHECK(fam.Ipow(1, d).subspace_of(fam.RIpow(1, d)));
    }
}

TEST_CASE("transversality theorems and the n = 3 evidence") {
    const GradedFamily& fam = family();
    auto t1 = check_transversality(1, fam, 0, N);
    auto t2 = check_transversality(2, fam, 0, N);
    CHECK(t1.pass());
    CHECK(t2.pass());
    CHECK_FALSE(t1.conjecture);
    CHECK(t1.check == "transversality-1");

    auto t3 = check_transversality(3, fam, 0, N);
    CHECK(t3.conjecture);  // evidence only, never asserted
    CHECK(t3.check == "conjecture-n3");
    CHECK(t3.pass());      // the evidence happens to be positive
}

TEST_CASE("ideal of squares equals RI") {
    const GradedFamily& fam = family();
    CHECK(check_Q_equals_RI(fam, 0, N).pass());
    CHECK(fam.QR(2).dim() == 1);
    CHECK(fam.QR(2).contains(fam.basis(2).to_vec(parse_poly("w1^2", N))));
    CHECK(check_Q_equals_RI(fam, 0).degrees[0].pass);
    CHECK(check_Q_equals_RI(fam, 1).degrees[0].pass);
}

TEST_CASE("fundamental short exact sequence dimensions") {
    const GradedFamily& fam = family();
    auto rep = check_ses_dims(fam, 0, N);
    CHECK(rep.pass());
    auto d2 = check_ses_dims(fam, 2).degrees[0];
    CHECK(d2.pass);
    CHECK(d2.dims[0] == std::pair<std::string, long long>{"dim_R/RI", 1});
    CHECK(d2.dims[1] == std::pair<std::string, long long>{"dim_S/I", 0});
    CHECK(d2.dims[2] == std::pair<std::string, long long>{"dim_I/I2", 1});
}

TEST_CASE("preimage lemma and the kernel on Omega^0") {
    const GradedFamily& fam = family();
    CHECK(check_preimage_lemma(fam, 1, 0, N).pass());
    CHECK(check_preimage_lemma(fam, 2, 0, N).pass());
    CHECK(check_kernel_omega0(fam, 0, N).pass());

    // Observed dimension at n = 1, d = 2 (golden from the rank computation).
    auto rep = check_preimage_lemma(fam, 1, 2);
    REQUIRE(rep.degrees.size() == 1);
    CHECK(rep.degrees[0].pass);
    CHECK(rep.degrees[0].dims[1] == std::pair<std::string, long long>{"dim_preimage", 1});
}

TEST_CASE("exterior structure of S/I") {
    const GradedFamily& fam = family();
    auto rep = check_exterior_SI(fam, 0, N);
    CHECK(rep.pass());
    auto at = [&](std::uint32_t d) { return check_exterior_SI(fam, d).degrees[0]; };
    CHECK(at(4).dims[0] == std::pair<std::string, long long>{"dim_S/I", 1});  // p1*p3
    CHECK(at(2).dims[0] == std::pair<std::string, long long>{"dim_S/I", 0});
    CHECK(at(8).dims[0] == std::pair<std::string, long long>{"dim_S/I", 2});  // p1p7, p3p5
}

TEST_CASE("Omega^n quotient bases") {
    const GradedFamily& fam = family();
    for (unsigned n = 0; n <= 2; ++n) CHECK(check_omega_basis(fam, n, 0, N).pass());
    auto rep = check_omega_basis(fam, 1, 2);
    REQUIRE(rep.degrees.size() == 1);
    CHECK(rep.degrees[0].dims[3] == std::pair<std::string, long long>{"candidates", 1});
}

TEST_CASE("normality and the norm as a ring map") {
    const GradedFamily& fam = family();
    CHECK(check_normality(fam).pass());
    CHECK(check_norm_additive_mod_I(fam, 25, 0x51ceULL).pass());
    CHECK(check_squares_in_RI(fam, 25, 0x51ceULL).pass());
}

TEST_CASE("top form divisibility, exhaustive for small ranks") {
    for (unsigned n = 1; n <= 3; ++n) {
        auto rep = check_top_form_divisibility(n);
        CHECK(rep.pass());
        CHECK(rep.degrees[0].dims[1].second == (1ll << (1u << n)) - 1);
    }
    CHECK_THROWS_AS(check_top_form_divisibility(5), std::out_of_range);
}

TEST_CASE("dims oracle: two independent paths agree") {
    CHECK(check_dims_oracle(family()).pass());
}

TEST_CASE("witness extraction renders a polynomial") {
    const GradedFamily& fam = family();
    // S_1 strictly contains I_1; the defect vector is w1.
    auto w = fam.S(1).first_row_not_in(fam.Ipow(1, 1));
    REQUIRE(w.has_value());
    CHECK(fam.render(*w, 1) == "w1");
}

TEST_CASE("failing comparisons produce a witness in reports") {
    // Deliberately compare S against I where they differ.
    const GradedFamily& fam = family();
    auto meet = intersect(fam.S(1), fam.S(1));
    CHECK(meet.same_space(fam.S(1)));
    CHECK_FALSE(fam.S(1).same_space(fam.Ipow(1, 1)));
}

TEST_CASE("json report shape") {
    const GradedFamily& fam = family();
    auto rep = check_transversality(3, fam, 0, 4);
    auto j = report_json(rep);
    CHECK(j["check"] == "conjecture-n3");
    CHECK(j["status"] == "evidence");
    CHECK(j["degrees"].is_array());
    CHECK(j["degrees"].size() == 5);
    CHECK(j["degrees"][0]["status"] == "evidence");
    CHECK(j["degrees"][0].contains("dims"));

    auto t1 = report_json(check_transversality(1, fam, 0, 1));
    CHECK(t1["status"] == "theorem");
    CHECK(t1["pass"] == true);
}

TEST_CASE("random homogeneous sampler is deterministic and homogeneous") {
    Poly a = random_homogeneous(5, N, 123);
    Poly b = random_homogeneous(5, N, 123);
    CHECK(a == b);
    CHECK_FALSE(a.is_zero());
    CHECK(a.is_homogeneous());
    CHECK(a.top_degree() == 5);
}
