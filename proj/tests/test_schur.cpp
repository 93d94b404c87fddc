#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sf2/checks.hpp"

using namespace sf2;

namespace {
constexpr std::uint32_t N = 10;
const SchurTable& table() {
    static SchurTable st(N);
    return st;
}
const PowerSumTable& powers() {
    static OmegaTable om(N);
    static PowerSumTable ps(om);
    return ps;
}
Poly parse(const char* text) { return parse_poly(text, N); }
Partition P(std::vector<std::uint32_t> parts) { return Partition(std::move(parts)); }
SchurExpr S(std::vector<std::uint32_t> parts) { return SchurExpr::single(P(std::move(parts)), N); }
}  // namespace

TEST_CASE("Jacobi-Trudi realization: frozen cases") {
    const SchurTable& st = table();
    for (std::uint32_t n = 1; n <= 6; ++n) CHECK(st.schur_in_w(P({n})) == Poly::w(n, N));
    CHECK(st.schur_in_w(P({1, 1})) == parse("w2 + w1^2"));
    CHECK(st.schur_in_w(P({2, 1})) == parse("w1*w2 + w3"));
    CHECK(st.schur_in_w(P({})) == Poly::one(N));
}

TEST_CASE("e_n realization recovered through omega") {
    const SchurTable& st = table();
    const OmegaTable& om = powers().omega();
    for (std::uint32_t n = 1; n <= 8; ++n) {
        Partition column(std::vector<std::uint32_t>(n, 1));
        CHECK(st.schur_in_w(column) == om.wbar(n));
    }
}

TEST_CASE("to_schur: frozen cases") {
    const SchurTable& st = table();
    CHECK(st.to_schur(parse("w3")) == S({3}));
    CHECK(st.to_schur(parse("w1^2")) == S({2}) + S({1, 1}));
    CHECK(st.to_schur(powers().p(3)) == S({3}) + S({2, 1}) + S({1, 1, 1}));
    CHECK(st.to_schur(Poly::zero(N)).is_zero());
}

TEST_CASE("omega on the Schur basis conjugates") {
    CHECK(omega_on_schur(S({3})) == S({1, 1, 1}));
    CHECK(omega_on_schur(S({2, 1})) == S({2, 1}));
    CHECK(omega_on_schur(SchurExpr(N)).is_zero());
}

TEST_CASE("Murnaghan-Nakayama products: frozen cases") {
    SchurExpr empty = SchurExpr::single(P({}), N);
    CHECK(mn_multiply(3, empty) == S({3}) + S({2, 1}) + S({1, 1, 1}));
    CHECK(mn_multiply(3, S({1})) == S({4}) + S({2, 2}) + S({1, 1, 1, 1}));
    CHECK(mn_multiply(1, S({1})) == S({2}) + S({1, 1}));
    CHECK_THROWS_AS(mn_multiply(N, S({1})), DegreeError);
}

TEST_CASE("schur text form") {
    CHECK((S({3, 1}) + S({2, 2})).to_string() == "s[3,1] + s[2,2]");
    CHECK(SchurExpr(N).to_string() == "0");
    CHECK(parse_schur("s[3,1] + s[2,2]", N) == S({3, 1}) + S({2, 2}));
    CHECK(parse_schur("0", N).is_zero());
    CHECK(parse_schur("s[]", N) == SchurExpr::single(P({}), N));
    CHECK(parse_schur("s[2] + s[2]", N).is_zero());
    CHECK_THROWS_AS(parse_schur("s[1,2]", N), ParseError);
    CHECK_THROWS_AS(parse_schur("s[11]", N), DegreeError);
}

TEST_CASE("mod-I reduction and the Gamma lemma") {
    const SchurTable& st = table();
    const PowerSumTable& ps = powers();
    // p_{2j-1} = s_{Gamma(j)} mod I; p_{2j} = 0 mod I.
    for (std::uint32_t j = 1; 2 * j - 1 <= N; ++j)
        CHECK(reduce_mod_I(st.to_schur(ps.p(2 * j - 1)).terms()) ==
              std::vector<Partition>{gamma_hook(j)});
    for (std::uint32_t j = 1; 2 * j <= N; ++j)
        CHECK(reduce_mod_I(st.to_schur(ps.p(2 * j)).terms()).empty());
    // A conjugate pair cancels, a self-conjugate survives.
    CHECK(reduce_mod_I({P({3}), P({1, 1, 1})}).empty());
    CHECK(reduce_mod_I({P({2, 1})}) == std::vector<Partition>{P({2, 1})});
}

TEST_CASE("square-growth claim") {
    for (std::uint32_t j = 0; j <= 4; ++j) CHECK(sq_claim_holds(j));
    // Ring-side cross-check within the truncation: the same statement through
    // the SchurExpr product route.
    for (std::uint32_t j = 0; (j + 1) * (j + 1) <= N; ++j) {
        SchurExpr sq = SchurExpr::single(square_partition(j), N);
        CHECK(reduce_mod_I(mn_multiply(2 * j + 1, sq).terms()) ==
              reduce_mod_I({square_partition(j + 1)}));
    }
}

TEST_CASE("basis of S_d in Schur coordinates") {
    const SchurTable& st = table();
    auto b1 = st.s_basis_of_S(1);
    CHECK(b1.size() == 1);

    auto b2 = st.s_basis_of_S(2);
    REQUIRE(b2.size() == 1);
    CHECK(b2[0].popcount() == 2);  // the pair {(2),(1,1)}

    auto b4 = st.s_basis_of_S(4);
    REQUIRE(b4.size() == 3);
    // Partitions of 4 in canonical order: (4),(3,1),(2,2),(2,1,1),(1^4).
    const auto& parts = st.partitions_of(4);
    auto vec_for = [&](std::vector<std::vector<std::uint32_t>> lams) {
        gf2::BitVec v(parts.size());
        for (auto& l : lams)
            for (std::size_t i = 0; i < parts.size(); ++i)
                if (parts[i] == P(l)) v.set(i);
        return v;
    };
    CHECK(b4[0] == vec_for({{4}, {1, 1, 1, 1}}));
    CHECK(b4[1] == vec_for({{3, 1}, {2, 1, 1}}));
    CHECK(b4[2] == vec_for({{2, 2}}));

    for (std::uint32_t d = 0; d <= N; ++d)
        CHECK(2 * st.s_basis_of_S(d).size() == partition_count(d) + count_self_conjugate(d));
}

TEST_CASE("s_basis vectors are omega-invariant in the ring") {
    const SchurTable& st = table();
    const OmegaTable& om = powers().omega();
    for (std::uint32_t d = 0; d <= 8; ++d) {
        const auto& parts = st.partitions_of(d);
        for (const auto& v : st.s_basis_of_S(d)) {
            SchurExpr e(N);
            for (std::size_t i = 0; i < parts.size(); ++i)
                if (v.get(i)) e += SchurExpr::single(parts[i], N);
            Poly x = st.from_schur(e);
            CHECK(om.omega(x) == x);
        }
    }
}

TEST_CASE("full schur suite") { CHECK(check_schur_suite(table(), powers()).pass()); }
