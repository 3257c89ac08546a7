#pragma once

#include <vector>

#include "psi3ut/dyadic.hpp"

namespace psi3ut {

// Closed-form 2-adic valuation identities together with brute-force
// big-integer oracles. The formulas and the oracles share no code: the
// oracles multiply/factor actual integers so the identities get verified,
// not assumed.

// Largest e with 2^e | n, for n >= 1. ZeroInput on 0.
unsigned long nu2_positive(const Integer& n);

// Number of 1s in the binary expansion; alpha(0) = 0.
unsigned long alpha(const Integer& n);

// nu2(l!) via the closed form l - alpha(l).
unsigned long nu2_factorial(unsigned long l);

// Legendre-sum oracle: sum_{j>=1} floor(l / 2^j).
unsigned long nu2_factorial_oracle(unsigned long l);

// nu2(9^l - 1) via the closed form nu2(l) + 3, l >= 1. ZeroInput on 0.
unsigned long nu2_nine_pow_minus_one(unsigned long l);

// Exact big-integer nu2(9^l - 1).
unsigned long nu2_nine_pow_minus_one_oracle(unsigned long l);

// nu2 of prod_{i=1}^{l} (9^l - 9^{i-1}) via the closed form 4l - alpha(l).
unsigned long nu2_iota_product(unsigned long l);

// Exact big-integer nu2 of the product itself.
unsigned long nu2_iota_product_oracle(unsigned long l);

// The two-case exponent of the z-generator expansion:
//   4(k-i) - alpha(k) + alpha(i)  if 4i - alpha(i) > 2k,
//   2k - alpha(k)                 if 4i - alpha(i) <= 2k.
// IndexOrder if i > k.
unsigned long beta(unsigned long k, unsigned long i);

Integer nine_pow(unsigned long e);

struct ValuationReport {
    unsigned long input;
    unsigned long formula_value;
    unsigned long oracle_value;
    bool agree; // agree <=> formula_value == oracle_value

    static ValuationReport make(unsigned long input, unsigned long formula,
                                unsigned long oracle) {
        return {input, formula, oracle, formula == oracle};
    }
};

// One report per l in [1, max] for nu2(9^l - 1).
std::vector<ValuationReport> nine_pow_reports(unsigned long max);

// One report per l in [1, max] for the iota product valuation.
std::vector<ValuationReport> iota_product_reports(unsigned long max);

} // namespace psi3ut
