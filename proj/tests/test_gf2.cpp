#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "sf2/gf2/bitmatrix.hpp"

#include <random>

using namespace sf2::gf2;

namespace {

BitVec vec_of(std::initializer_list<int> bits) {
    BitVec v(bits.size());
    std::size_t i = 0;
    for (int b : bits) v.set(i++, b != 0);
    return v;
}

BitMatrix matrix_of(std::initializer_list<std::initializer_list<int>> rows) {
    auto it = rows.begin();
    BitMatrix m(rows.size(), it->size());
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (int b : row) m.set(r, c++, b != 0);
        ++r;
    }
    return m;
}

std::vector<std::vector<bool>> rows_as_bools(const BitMatrix& m) {
    std::vector<std::vector<bool>> out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<bool> row(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c) row[c] = m.get(r, c);
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace

TEST_CASE("row kernel variants agree with the scalar reference") {
    std::mt19937_64 rng(42);
    for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{2}, std::size_t{3},
                          std::size_t{5}, std::size_t{8}, std::size_t{13}, std::size_t{64},
                          std::size_t{129}}) {
        std::vector<Word> a(n), b(n);
        for (auto& w : a) w = rng();
        for (auto& w : b) w = rng();

        std::vector<Word> via_scalar = a, via_dispatch = a;
        row_xor_scalar(via_scalar.data(), b.data(), n);
        row_xor(via_dispatch.data(), b.data(), n);
        CHECK(via_scalar == via_dispatch);

        CHECK(row_is_zero_scalar(a.data(), n) == row_is_zero(a.data(), n));
        CHECK(row_and_parity_scalar(a.data(), b.data(), n) == row_and_parity(a.data(), b.data(), n));

#if defined(__x86_64__) || defined(_M_X64)
        if (cpu_supports_avx2()) {
            std::vector<Word> via_avx = a;
            row_xor_avx2(via_avx.data(), b.data(), n);
            CHECK(via_scalar == via_avx);
            CHECK(row_is_zero_scalar(a.data(), n) == row_is_zero_avx2(a.data(), n));
            CHECK(row_and_parity_scalar(a.data(), b.data(), n) ==
                  row_and_parity_avx2(a.data(), b.data(), n));
        }
#endif
    }
    CHECK(active_backend() != nullptr);
}

TEST_CASE("row_and_parity equals direct popcount parity") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 1 + rng() % 9;
        std::vector<Word> a(n), b(n);
        for (auto& w : a) w = rng();
        for (auto& w : b) w = rng();
        std::size_t total = 0;
        for (std::size_t i = 0; i < n; ++i) total += std::popcount(a[i] & b[i]);
        CHECK(row_and_parity(a.data(), b.data(), n) == ((total & 1) != 0));
    }
}

TEST_CASE("rref: frozen small cases") {
    BitMatrix id = BitMatrix::identity(3);
    BitMatrix m = id;
    CHECK(m.rref().size() == 3);
    CHECK(m == id);

    BitMatrix z(2, 5);
    CHECK(z.rref().empty());
    CHECK(z == BitMatrix(2, 5));

    // Third row is the XOR of the first two.
    BitMatrix dep = matrix_of({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(dep.rank() == 2);
}

TEST_CASE("rref idempotent, rank shuffle-invariant") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 12;
        BitMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (rng() & 1) m.set(r, c);
        BitMatrix once = m;
        once.rref();
        BitMatrix twice = once;
        twice.rref();
        CHECK(once == twice);

        BitMatrix shuffled = m;
        for (std::size_t r = 0; r + 1 < rows; ++r) shuffled.swap_rows(r, r + rng() % (rows - r));
        CHECK(shuffled.rank() == m.rank());
    }
}

TEST_CASE("kernel: frozen small cases") {
    CHECK(BitMatrix::identity(4).kernel().rows() == 0);
    CHECK(BitMatrix(3, 5).kernel().rows() == 5);

    BitMatrix m = matrix_of({{1, 1}});
    BitMatrix k = m.kernel();
    REQUIRE(k.rows() == 1);
    CHECK(k.get(0, 0));
    CHECK(k.get(0, 1));
    // Exhaustive: of the four vectors only 00 and 11 are annihilated.
}

TEST_CASE("kernel rows satisfy M v = 0 and count cols minus rank") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 10;
        BitMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (rng() & 1) m.set(r, c);
        BitMatrix k = m.kernel();
        CHECK(k.rows() == cols - m.rank());
        for (std::size_t kr = 0; kr < k.rows(); ++kr)
            for (std::size_t r = 0; r < rows; ++r) {
                bool dot = false;
                for (std::size_t c = 0; c < cols; ++c) dot ^= m.get(r, c) && k.get(kr, c);
                CHECK_FALSE(dot);
            }
    }
}

namespace {

GradedSubspace space_of(std::initializer_list<std::initializer_list<int>> rows,
                        std::size_t ambient) {
    std::vector<BitVec> vecs;
    for (const auto& row : rows) {
        BitVec v(ambient);
        std::size_t c = 0;
        for (int b : row) v.set(c++, b != 0);
        vecs.push_back(std::move(v));
    }
    return GradedSubspace::from_rows(0, "t", ambient, vecs);
}

}  // namespace

TEST_CASE("subspace intersection: frozen cases") {
    auto a = space_of({{1, 1, 0}, {0, 0, 1}}, 3);
    auto b = space_of({{1, 1, 1}}, 3);
    auto meet = intersect(a, b);
    CHECK(meet.dim() == 1);
    CHECK(meet.contains(vec_of({1, 1, 1})));

    CHECK(intersect(a, a).same_space(a));
    auto zero = space_of({}, 3);
    CHECK(intersect(a, zero).dim() == 0);
}

TEST_CASE("subspace membership") {
    auto a = space_of({{1, 0, 0}}, 3);
    CHECK(a.contains(vec_of({0, 0, 0})));
    CHECK_FALSE(a.contains(vec_of({0, 1, 0})));
    auto b = space_of({{1, 1, 0}, {0, 1, 1}}, 3);
    CHECK(b.contains(vec_of({1, 0, 1})));
}

TEST_CASE("mismatched ambients are rejected") {
    auto a = space_of({{1, 0}}, 2);
    auto b = space_of({{1, 0, 0}}, 3);
    CHECK_THROWS_AS(intersect(a, b), std::invalid_argument);
    CHECK_THROWS_AS(subspace_sum(a, b), std::invalid_argument);
    CHECK_THROWS_AS(a.contains(vec_of({1, 0, 0})), std::invalid_argument);
}

TEST_CASE("dimension formula and brute-force span agreement") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t ambient = 4 + rng() % 17;  // up to 20
        auto random_space = [&](std::size_t nrows) {
            std::vector<BitVec> rows;
            for (std::size_t r = 0; r < nrows; ++r) {
                BitVec v(ambient);
                for (std::size_t c = 0; c < ambient; ++c)
                    if (rng() & 1) v.set(c);
                rows.push_back(std::move(v));
            }
            return GradedSubspace::from_rows(0, "t", ambient, rows);
        };
        auto a = random_space(1 + rng() % 5);
        auto b = random_space(1 + rng() % 5);
        auto meet = intersect(a, b);
        auto join = subspace_sum(a, b);
        CHECK(meet.dim() + join.dim() == a.dim() + b.dim());
        CHECK(meet.subspace_of(a));
        CHECK(meet.subspace_of(b));
        CHECK(a.subspace_of(join));
        CHECK(b.subspace_of(join));

        if (ambient <= 12 && a.dim() <= 6 && b.dim() <= 6) {
            auto sa = sf2::oracle::span_set(rows_as_bools(a.rows()));
            auto sb = sf2::oracle::span_set(rows_as_bools(b.rows()));
            std::size_t common = 0;
            for (const auto& v : sa)
                if (sb.count(v)) ++common;
            CHECK((std::size_t{1} << meet.dim()) == common);
        }
    }
}

TEST_CASE("echelon accumulator matches batch elimination") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t cols = 2 + rng() % 14;
        std::size_t nrows = 1 + rng() % 10;
        EchelonAccumulator acc(cols);
        BitMatrix batch(0, cols);
        for (std::size_t r = 0; r < nrows; ++r) {
            BitVec v(cols);
            for (std::size_t c = 0; c < cols; ++c)
                if (rng() & 1) v.set(c);
            batch.append_row(v);
            acc.add_row(std::move(v));
        }
        CHECK(acc.rank() == batch.rank());
        for (std::size_t r = 0; r < batch.rows(); ++r) CHECK(acc.contains(batch.row_vec(r)));
        BitMatrix reduced = batch;
        reduced.rref();
        BitMatrix from_acc = acc.to_matrix();
        for (std::size_t r = 0; r < from_acc.rows(); ++r)
            CHECK(from_acc.row_vec(r) == reduced.row_vec(r));
    }
}

TEST_CASE("witness extraction") {
    auto big = space_of({{1, 0, 0}, {0, 1, 0}}, 3);
    auto small = space_of({{0, 1, 0}}, 3);
    auto w = big.first_row_not_in(small);
    REQUIRE(w.has_value());
    CHECK(*w == vec_of({1, 0, 0}));
    CHECK_FALSE(small.first_row_not_in(big).has_value());
}
