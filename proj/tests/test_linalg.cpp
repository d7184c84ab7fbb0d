#include <doctest.h>

#include <stdexcept>

#include "shalika/errors.hpp"
#include "shalika/linalg.hpp"
#include "test_support.hpp"

using namespace shalika;
using shalika::testing::Rng;
using shalika::testing::random_invertible;
using shalika::testing::random_matrix;
using shalika::testing::random_parabolic;
using shalika::testing::random_shalika;

TEST_CASE("products") {
    PrimeField f2(2), f3(3), f5(5);
    Rng rng(1);
    const Matrix m = random_matrix(f5, 2, 2, rng);
    CHECK(Matrix::identity(f5, 2) * m == m);

    const Matrix u = Matrix::from_rows(f2, {{1, 1}, {0, 1}});
    CHECK(u * u == Matrix::identity(f2, 2));

    CHECK(Matrix::from_rows(f3, {{2}}) * Matrix::from_rows(f3, {{2}}) ==
          Matrix::from_rows(f3, {{1}}));

    const Matrix a = random_matrix(f3, 3, 3, rng);
    const Matrix b = random_matrix(f3, 3, 3, rng);
    const Matrix c = random_matrix(f3, 3, 3, rng);
    CHECK(a * (b + c) == a * b + a * c);

    CHECK_THROWS_AS(Matrix(f2, 2, 3) * Matrix(f2, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(Matrix(f2, 2, 2) * Matrix(f3, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(Matrix(f2, 2, 2) + Matrix(f2, 2, 3), std::invalid_argument);
}

TEST_CASE("rref examples") {
    PrimeField f2(2), f5(5);
    auto z = rref(Matrix(f5, 3, 4));
    CHECK(z.matrix == Matrix(f5, 3, 4));
    CHECK(z.pivots.empty());
    CHECK(z.rank == 0);

    auto id = rref(Matrix::identity(f5, 3));
    CHECK(id.matrix == Matrix::identity(f5, 3));
    CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});
    CHECK(id.rank == 3);

    auto dep = rref(Matrix::from_rows(f2, {{1, 1}, {1, 1}}));
    CHECK(dep.matrix == Matrix::from_rows(f2, {{1, 1}, {0, 0}}));
    CHECK(dep.pivots == std::vector<std::size_t>{0});
    CHECK(dep.rank == 1);
}

TEST_CASE("rref is idempotent and rank is submultiplicative") {
    Rng rng(2);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        PrimeField f(p);
        for (int trial = 0; trial < 50; ++trial) {
            const Matrix m = random_matrix(f, 4, 5, rng);
            const auto r = rref(m);
            CHECK(rref(r.matrix).matrix == r.matrix);
            CHECK(rank(m) == r.rank);

            const Matrix a = random_matrix(f, 4, 4, rng);
            const Matrix b = random_matrix(f, 4, 4, rng);
            CHECK(rank(a * b) <= std::min(rank(a), rank(b)));
        }
    }
}

TEST_CASE("inverse") {
    PrimeField f5(5);
    CHECK(inverse(Matrix::identity(f5, 3)) == Matrix::identity(f5, 3));
    CHECK(inverse(Matrix::from_rows(f5, {{2, 0}, {0, 3}})) ==
          Matrix::from_rows(f5, {{3, 0}, {0, 2}}));
    CHECK_THROWS_AS(inverse(Matrix::from_rows(f5, {{1, 2}, {2, 4}})),
                    singular_matrix_error);
    CHECK_THROWS_AS(inverse(Matrix(f5, 2, 3)), std::invalid_argument);

    Rng rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const Matrix g = random_invertible(f5, 4, rng);
        CHECK(g * inverse(g) == Matrix::identity(f5, 4));
    }
}

TEST_CASE("kernel and solve") {
    PrimeField f5(5);
    const Matrix m = Matrix::from_rows(f5, {{1, 2, 3}, {2, 4, 2}});
    const Matrix k = kernel(m);
    CHECK(k.rows() == 1);
    // every kernel row v satisfies m v = 0
    CHECK((m * k.transpose()).is_zero());

    auto x = solve(m, {0, 0});
    REQUIRE(x.has_value());
    CHECK(*x == std::vector<std::uint32_t>{0, 0, 0});

    auto y = solve(Matrix::from_rows(f5, {{1, 0}, {0, 1}, {1, 1}}), {1, 2, 3});
    REQUIRE(y.has_value());
    CHECK(*y == std::vector<std::uint32_t>{1, 2});

    auto none = solve(Matrix::from_rows(f5, {{1, 0}, {1, 0}}), {1, 2});
    CHECK(!none.has_value());
}

TEST_CASE("parabolic membership") {
    PrimeField f2(2), f5(5);
    CHECK(is_in_parabolic(Matrix::identity(f2, 4), 2));

    Matrix swap14 = Matrix(f2, 4, 4);
    swap14.set(0, 3, 1);
    swap14.set(3, 0, 1);
    swap14.set(1, 1, 1);
    swap14.set(2, 2, 1);
    CHECK(!is_in_parabolic(swap14, 2));

    const Matrix upper = Matrix::from_rows(
        f5, {{1, 2, 3, 4}, {0, 1, 2, 3}, {0, 0, 1, 2}, {0, 0, 0, 1}});
    for (std::size_t r = 1; r < 4; ++r) CHECK(is_in_parabolic(upper, r));

    CHECK_THROWS_AS(is_in_parabolic(Matrix::identity(f2, 4), 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(is_in_parabolic(Matrix::identity(f2, 4), 4),
                    std::invalid_argument);
}

TEST_CASE("shalika membership") {
    PrimeField f3(3);
    CHECK(is_in_shalika(Matrix::identity(f3, 4), 2));

    Rng rng(4);
    const Matrix h = random_invertible(f3, 2, rng);
    Matrix diag(f3, 4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            diag.set(i, j, h(i, j));
            diag.set(2 + i, 2 + j, h(i, j));
        }
    CHECK(is_in_shalika(diag, 2));

    Matrix mixed = Matrix::from_rows(
        f3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 1}});
    CHECK(!is_in_shalika(mixed, 2));

    CHECK_THROWS_AS(is_in_shalika(Matrix::identity(f3, 3), 1),
                    std::invalid_argument);
}

TEST_CASE("S and P are closed under product and inverse") {
    Rng rng(5);
    for (std::uint32_t p : {2u, 5u}) {
        PrimeField f(p);
        for (int trial = 0; trial < 25; ++trial) {
            const Matrix s1 = random_shalika(f, 2, rng);
            const Matrix s2 = random_shalika(f, 2, rng);
            CHECK(is_in_shalika(s1, 2));
            CHECK(is_in_shalika(s1 * s2, 2));
            CHECK(is_in_shalika(inverse(s1), 2));

            const Matrix q1 = random_parabolic(f, 4, 3, rng);
            const Matrix q2 = random_parabolic(f, 4, 3, rng);
            CHECK(is_in_parabolic(q1, 3));
            CHECK(is_in_parabolic(q1 * q2, 3));
            CHECK(is_in_parabolic(inverse(q1), 3));
        }
    }
}

TEST_CASE("canonical key round-trips") {
    Rng rng(6);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        PrimeField f(p);
        for (int trial = 0; trial < 40; ++trial) {
            const Matrix m = random_matrix(f, 4, 4, rng);
            CHECK(Matrix::from_key(f, 4, 4, m.key()) == m);
        }
    }
    // 8x8 over F_2 hits exactly 64 bits
    PrimeField f2(2);
    Rng rng2(7);
    const Matrix big = random_matrix(f2, 8, 8, rng2);
    CHECK(Matrix::from_key(f2, 8, 8, big.key()) == big);
}
