#include <doctest.h>

#include <random>
#include <stdexcept>

#include "shalika/gf.hpp"

using namespace shalika;

TEST_CASE("modular arithmetic examples") {
    PrimeField f7(7), f2(2), f5(5);
    CHECK(Fp(3, f7) + Fp(5, f7) == Fp(1, f7));
    CHECK(Fp(1, f2) + Fp(1, f2) == Fp(0, f2));
    CHECK(Fp(2, f5) * Fp(3, f5) == Fp(1, f5));
    CHECK(Fp(2, f7) - Fp(5, f7) == Fp(4, f7));
    CHECK((-Fp(3, f7)).value() == 4);
    CHECK(Fp(-1, f7).value() == 6); // constructor reduces
}

TEST_CASE("inverses") {
    PrimeField f7(7), f2(2), f13(13);
    CHECK(inv(Fp(3, f7)).value() == 5);
    CHECK(inv(Fp(1, f2)).value() == 1);
    CHECK(inv(Fp(2, f13)).value() == 7);
    CHECK(Fp(6, f7) / Fp(3, f7) == Fp(2, f7));
    CHECK_THROWS_AS(inv(Fp(0, f7)), std::domain_error);
    CHECK_THROWS_AS(Fp(1, f7) / Fp(0, f7), std::domain_error);
}

TEST_CASE("operations across fields are rejected") {
    PrimeField f7(7), f5(5);
    CHECK_THROWS_AS(Fp(1, f7) + Fp(1, f5), std::invalid_argument);
    CHECK_THROWS_AS(Fp(1, f7) * Fp(1, f5), std::invalid_argument);
}

TEST_CASE("modulus validation") {
    CHECK_THROWS_AS(PrimeField(0), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(91), std::invalid_argument);  // 7 * 13
    CHECK_THROWS_AS(PrimeField(65537), std::invalid_argument); // prime, too big
    CHECK_NOTHROW(PrimeField(2));
    CHECK_NOTHROW(PrimeField(65521)); // largest prime below 2^16
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(20240901);
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u}) {
        PrimeField f(p);
        std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
        for (int trial = 0; trial < 300; ++trial) {
            Fp a(d(rng), f), b(d(rng), f), c(d(rng), f);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a + b == b + a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == Fp(0, f));
            if (!a.is_zero()) CHECK(a * inv(a) == Fp(1, f));
        }
    }
}

TEST_CASE("fermat: a^(p-1) = 1 for all nonzero a") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u}) {
        PrimeField f(p);
        for (std::uint32_t a = 1; a < p; ++a) {
            Fp acc(1, f), base(a, f);
            for (std::uint32_t e = 0; e + 1 < p; ++e) acc *= base;
            CHECK(acc == Fp(1, f));
        }
    }
}
