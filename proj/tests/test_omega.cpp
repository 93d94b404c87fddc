#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "sf2/checks.hpp"

using namespace sf2;

namespace {
constexpr std::uint32_t N = 12;
const OmegaTable& table() {
    static OmegaTable om(N);
    return om;
}
Poly parse(const char* text) { return parse_poly(text, N); }
}  // namespace

TEST_CASE("omega on generators, cross-checked by the composition sum") {
    const OmegaTable& om = table();
    CHECK(om.wbar(1) == parse("w1"));
    CHECK(om.wbar(2) == parse("w2 + w1^2"));
    CHECK(om.wbar(3) == parse("w3 + w1^3"));
    for (std::uint32_t k = 1; k <= 10; ++k)
        CHECK(om.wbar(k) == oracle::omega_wk_by_compositions(k, N));
}

TEST_CASE("omega is a ring homomorphism and an involution") {
    const OmegaTable& om = table();
    CHECK(om.omega(Poly::one(N)) == Poly::one(N));
    CHECK(om.omega(parse("w1^2")) == parse("w1^2"));
    CHECK(om.omega(om.omega(parse("w4"))) == parse("w4"));
    for (std::uint32_t d = 0; d <= 10; ++d) {
        MonomialBasis basis(d, GenSet::AllW);
        for (const Mono& m : basis.monos()) {
            Poly x = Poly::monomial(m, N);
            Poly wx = om.omega(x);
            CHECK(om.omega(wx) == x);
            CHECK(wx.is_homogeneous());
            CHECK((wx.is_zero() || wx.top_degree() == d));
        }
    }
    // Multiplicativity on a couple of products.
    Poly a = parse("w2 + w3"), b = parse("w1*w2 + w4");
    CHECK(om.omega(a * b) == om.omega(a) * om.omega(b));
}

TEST_CASE("the defining recursion holds for every k") {
    const OmegaTable& om = table();
    for (std::uint32_t k = 1; k <= N; ++k) {
        Poly sum = om.wbar(k);
        for (std::uint32_t i = 1; i < k; ++i) sum += Poly::w(i, N) * om.wbar(k - i);
        sum += Poly::w(k, N);
        CHECK(sum.is_zero());
    }
}

TEST_CASE("d operator: values and d squared zero") {
    const OmegaTable& om = table();
    CHECK(om.dd(parse("w1")).is_zero());
    CHECK(om.dd(parse("w2")) == parse("w1^2"));
    CHECK(om.dd(parse("w4")) == parse("w1^4 + w2^2 + w1^2*w2"));
    for (std::uint32_t d = 0; d <= 10; ++d) {
        MonomialBasis basis(d, GenSet::AllW);
        for (const Mono& m : basis.monos())
            CHECK(om.dd(om.dd(Poly::monomial(m, N))).is_zero());
    }
}

TEST_CASE("d(w_{2i}) in terms of squares") {
    const OmegaTable& om = table();
    for (std::uint32_t i = 1; 2 * i <= N; ++i) {
        Poly rhs = Poly::monomial(Mono::var(Var::w(i), 2), N);
        for (std::uint32_t k = 1; k < i; ++k)
            rhs += om.wbar(2 * (i - k)) * Poly::monomial(Mono::var(Var::w(k), 2), N);
        CHECK(om.dw(2 * i) == rhs);
    }
}

TEST_CASE("norm values") {
    const OmegaTable& om = table();
    CHECK(om.norm(Poly::one(N)) == Poly::one(N));
    CHECK(om.norm(parse("w1")) == parse("w1^2"));
    CHECK(om.norm(parse("w2")) == parse("w2^2 + w2*w1^2"));
}

TEST_CASE("thick Leibniz defect vanishes") {
    const OmegaTable& om = table();
    std::vector<Poly> one{parse("w1")};
    CHECK(om.thick_leibniz_defect(one).is_zero());
    std::vector<Poly> two{parse("w2"), parse("w2")};
    CHECK(om.thick_leibniz_defect(two).is_zero());
    std::vector<Poly> three{parse("w2"), parse("w3"), parse("w4")};
    CHECK(om.thick_leibniz_defect(three).is_zero());
    CHECK(check_thick_leibniz(om, 50, 0xfeedULL).pass());
}

TEST_CASE("formal series identities degreewise") {
    CHECK(check_formal_series(table()).pass());
}

TEST_CASE("involution soundness check") {
    CHECK(check_involution_soundness(table()).pass());
}

TEST_CASE("omega rejects p-coordinates and mismatched truncations") {
    const OmegaTable& om = table();
    CHECK_THROWS_AS(om.omega(parse("p1")), std::invalid_argument);
    CHECK_THROWS_AS(om.omega(Poly::w(1, 8)), std::invalid_argument);
}
