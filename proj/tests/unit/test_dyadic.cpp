#include "doctest.h"
#include "psi3ut/dyadic.hpp"
#include "psi3ut/rng.hpp"

using namespace psi3ut;

namespace {

// Exhaustive-search inverse mod 2^N, independent of mpz_invert.
Integer brute_inverse_mod_pow2(const Integer& x, unsigned n) {
    Integer modulus = Integer(1) << n;
    for (Integer y = 1; y < modulus; y += 2)
        if ((x * y) % modulus == 1) return y;
    throw std::logic_error("no inverse found");
}

Rational random_rational(CounterRng& rng) {
    Integer num = rng.next_bits(24) - (Integer(1) << 23);
    Integer den = rng.next_bits(16) + 1;
    Rational q(num, den);
    q.canonicalize();
    return q;
}

} // namespace

TEST_CASE("nu2 of rationals") {
    CHECK(nu2(Rational(8, 1)) == Valuation(3));
    CHECK(nu2(Rational(5, 3)) == Valuation(0));
    CHECK(nu2(Rational(3, 8)) == Valuation(-3));
    CHECK(nu2(Rational(-12, 5)) == Valuation(2));
    CHECK(nu2(Rational(0)) == std::nullopt);
    CHECK(nu2(Integer(0)) == std::nullopt);
}

TEST_CASE("nu2 is additive on products and ultrametric on sums") {
    CounterRng rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        Rational a = random_rational(rng);
        Rational b = random_rational(rng);
        if (a == 0 || b == 0) continue;
        CHECK(*nu2(a * b) == *nu2(a) + *nu2(b));
        Rational s = a + b;
        long lo = std::min(*nu2(a), *nu2(b));
        if (s != 0) CHECK(*nu2(s) >= lo);
        if (*nu2(a) != *nu2(b)) {
            REQUIRE(s != 0);
            CHECK(*nu2(s) == lo);
        }
    }
}

TEST_CASE("residue inverse") {
    CHECK(Z2Residue(1, 16).inv() == Z2Residue(1, 16));
    CHECK(Z2Residue(3, 4).inv() == Z2Residue(brute_inverse_mod_pow2(3, 4), 4));
    CHECK(Z2Residue(3, 4).inv().value() == 11);
    CHECK_THROWS_AS(Z2Residue(2, 16).inv(), EvenNotInvertible);

    CounterRng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        Z2Residue x = rng.next_odd_residue(64);
        CHECK(x * x.inv() == Z2Residue::one(64));
        CHECK(x.inv().inv() == x);
    }
}

TEST_CASE("residue_from_rational") {
    CHECK(residue_from_rational(Rational(9), 16).value() == 9);
    CHECK(residue_from_rational(Rational(1, 3), 4).value() == 11);
    CHECK_THROWS_AS(residue_from_rational(Rational(1, 2), 16), NotTwoAdicallyIntegral);
}

TEST_CASE("residue_from_rational is a ring homomorphism") {
    CounterRng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        Rational a = random_rational(rng);
        Rational b = random_rational(rng);
        if (!two_integral(a) || !two_integral(b)) continue;
        CHECK(residue_from_rational(a * b, 32) ==
              residue_from_rational(a, 32) * residue_from_rational(b, 32));
        CHECK(residue_from_rational(a + b, 32) ==
              residue_from_rational(a, 32) + residue_from_rational(b, 32));
    }
}

TEST_CASE("residue arithmetic stays reduced and rejects mixed moduli") {
    Z2Residue a(100, 5);
    CHECK(a.value() == 4); // 100 mod 32
    Z2Residue b(-1, 5);
    CHECK(b.value() == 31);
    CHECK_THROWS_AS(a + Z2Residue(1, 6), ModulusMismatch);
}

TEST_CASE("rational string round trip") {
    CHECK(rational_to_string(Rational(-3, 4)) == "-3/4");
    CHECK(rational_to_string(Rational(7)) == "7");
    CHECK(rational_from_string("-3/4") == Rational(-3, 4));
    CHECK(rational_from_string("10/4") == Rational(5, 2));
}
