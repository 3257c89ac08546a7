#include "psi3ut/valuations.hpp"

namespace psi3ut {

unsigned long nu2_positive(const Integer& n) {
    if (n == 0) throw ZeroInput("nu2 of 0 is not an integer");
    return mpz_scan1(n.get_mpz_t(), 0);
}

unsigned long alpha(const Integer& n) {
    if (n < 0) throw Error("alpha is defined on naturals");
    return mpz_popcount(n.get_mpz_t());
}

unsigned long nu2_factorial(unsigned long l) { return l - alpha(Integer(l)); }

unsigned long nu2_factorial_oracle(unsigned long l) {
    unsigned long total = 0;
    for (unsigned long q = l / 2; q > 0; q /= 2) total += q;
    return total;
}

Integer nine_pow(unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 9, e);
    return r;
}

unsigned long nu2_nine_pow_minus_one(unsigned long l) {
    if (l == 0) throw ZeroInput("9^0 - 1 = 0 has no finite valuation");
    return nu2_positive(Integer(l)) + 3;
}

unsigned long nu2_nine_pow_minus_one_oracle(unsigned long l) {
    if (l == 0) throw ZeroInput("9^0 - 1 = 0 has no finite valuation");
    return nu2_positive(nine_pow(l) - 1);
}

unsigned long nu2_iota_product(unsigned long l) {
    if (l == 0) throw ZeroInput("empty product");
    return 4 * l - alpha(Integer(l));
}

unsigned long nu2_iota_product_oracle(unsigned long l) {
    if (l == 0) throw ZeroInput("empty product");
    Integer nine_l = nine_pow(l);
    Integer product = 1;
    for (unsigned long i = 1; i <= l; ++i) product *= nine_l - nine_pow(i - 1);
    return nu2_positive(product);
}

unsigned long beta(unsigned long k, unsigned long i) {
    if (i > k) throw IndexOrder("beta requires i <= k");
    unsigned long ai = alpha(Integer(i));
    if (4 * i - ai > 2 * k) return 4 * (k - i) + ai - alpha(Integer(k));
    return 2 * k - alpha(Integer(k));
}

std::vector<ValuationReport> nine_pow_reports(unsigned long max) {
    std::vector<ValuationReport> out;
    out.reserve(max);
    for (unsigned long l = 1; l <= max; ++l)
        out.push_back(ValuationReport::make(l, nu2_nine_pow_minus_one(l),
                                            nu2_nine_pow_minus_one_oracle(l)));
    return out;
}

std::vector<ValuationReport> iota_product_reports(unsigned long max) {
    std::vector<ValuationReport> out;
    out.reserve(max);
    for (unsigned long l = 1; l <= max; ++l)
        out.push_back(ValuationReport::make(l, nu2_iota_product(l),
                                            nu2_iota_product_oracle(l)));
    return out;
}

} // namespace psi3ut
