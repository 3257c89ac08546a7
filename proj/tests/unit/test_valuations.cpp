#include "doctest.h"
#include "psi3ut/valuations.hpp"

using namespace psi3ut;

TEST_CASE("nu2 on positive integers") {
    CHECK(nu2_positive(Integer(8)) == 3);
    CHECK(nu2_positive(Integer(12)) == 2);
    CHECK(nu2_positive(Integer(9)) == 0);
    CHECK_THROWS_AS(nu2_positive(Integer(0)), ZeroInput);
}

TEST_CASE("alpha is the binary digit sum") {
    CHECK(alpha(Integer(5)) == 2);
    CHECK(alpha(Integer(7)) == 3);
    CHECK(alpha(Integer(0)) == 0);
    CHECK(alpha(Integer(1024)) == 1);
}

TEST_CASE("factorial valuation closed form vs Legendre sum") {
    CHECK(nu2_factorial(1) == 0);
    CHECK(nu2_factorial(4) == 3);
    CHECK(nu2_factorial(7) == 4);
    for (unsigned long l = 0; l <= 512; ++l) CHECK(nu2_factorial(l) == nu2_factorial_oracle(l));
}

TEST_CASE("valuation of 9^l - 1") {
    CHECK(nu2_nine_pow_minus_one(1) == 3); // 9 - 1 = 2^3
    CHECK(nu2_nine_pow_minus_one(2) == 4); // 80 = 2^4 * 5
    CHECK(nu2_nine_pow_minus_one(6) == 4);
    CHECK(nu2_nine_pow_minus_one_oracle(2) == 4);
    CHECK(nu2_nine_pow_minus_one_oracle(6) == 4);
    CHECK_THROWS_AS(nu2_nine_pow_minus_one(0), ZeroInput);
    for (unsigned long l = 1; l <= 600; ++l)
        CHECK(nu2_nine_pow_minus_one(l) == nu2_nine_pow_minus_one_oracle(l));
}

TEST_CASE("doubling tower: nu2(9^(2^j) - 1) = j + 3") {
    for (unsigned j = 0; j <= 10; ++j) CHECK(nu2_nine_pow_minus_one_oracle(1ul << j) == j + 3);
}

TEST_CASE("valuation of prod (9^l - 9^(i-1))") {
    CHECK(nu2_iota_product(1) == 3);  // 9 - 1 = 2^3
    CHECK(nu2_iota_product(2) == 7);  // 80 * 72 = 5760 = 2^7 * 45
    CHECK(nu2_iota_product(4) == 15); // 16 - alpha(4)
    CHECK(nu2_iota_product_oracle(2) == 7);
    CHECK(nu2_iota_product_oracle(4) == 15);
    CHECK_THROWS_AS(nu2_iota_product(0), ZeroInput);
    for (unsigned long l = 1; l <= 64; ++l)
        CHECK(nu2_iota_product(l) == nu2_iota_product_oracle(l));
}

TEST_CASE("beta exponents") {
    CHECK(beta(1, 0) == 1);
    CHECK(beta(2, 1) == 3);
    CHECK(beta(2, 0) == 3);
    CHECK_THROWS_AS(beta(1, 2), IndexOrder);

    // At i = k the first case applies for every k >= 1 (4k - alpha(k) > 2k)
    // and collapses to 0: the leading coefficient of a generator carries no
    // 2-power. This is what makes the z-expansion leading term a unit.
    for (unsigned long k = 0; k <= 200; ++k) CHECK(beta(k, k) == 0);

    // On the boundary 4i - alpha(i) = 2k the two branch formulas coincide,
    // so the "<=" tie-break is value-neutral; check that explicitly.
    for (unsigned long k = 0; k <= 200; ++k) {
        for (unsigned long i = 0; i <= k; ++i) {
            if (4 * i - alpha(Integer(i)) != 2 * k) continue;
            CHECK(4 * (k - i) - alpha(Integer(k)) + alpha(Integer(i)) == 2 * k - alpha(Integer(k)));
            CHECK(beta(k, i) == 2 * k - alpha(Integer(k)));
        }
    }
}

TEST_CASE("binomial digit-sum inequality") {
    // alpha(i) + alpha(k-i) - alpha(k) is the carry count of i + (k-i), i.e.
    // nu2 of the binomial coefficient, hence nonnegative.
    unsigned long violations = 0;
    for (unsigned long k = 0; k <= 1024; ++k)
        for (unsigned long i = 0; i <= k; ++i)
            if (alpha(Integer(i)) + alpha(Integer(k - i)) < alpha(Integer(k))) ++violations;
    CHECK(violations == 0);
}

TEST_CASE("valuation reports") {
    auto nine = nine_pow_reports(16);
    REQUIRE(nine.size() == 16);
    CHECK(nine.front().input == 1);
    CHECK(nine.front().formula_value == 3);
    for (const auto& r : nine) CHECK(r.agree);

    auto iota = iota_product_reports(16);
    REQUIRE(iota.size() == 16);
    for (const auto& r : iota) CHECK(r.agree);
}
