#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "psi3ut/errors.hpp"

namespace psi3ut {

using Integer = mpz_class;

// Exact rational with exact 2-adic valuation. mpq_class is kept canonical
// (lowest terms, denominator >= 1, zero is 0/1), which is exactly the
// invariant set this type needs.
using Rational = mpq_class;

// 2-adic valuations take values in Z ∪ {+inf}; nullopt encodes nu2(0) = +inf
// so that no arithmetic is ever done on the sentinel.
using Valuation = std::optional<long>;

// nu2 of a nonzero integer = index of the lowest set bit; nu2(0) = +inf.
Valuation nu2(const Integer& n);

// nu2(num) - nu2(den); exact for all rationals, +inf for 0.
Valuation nu2(const Rational& q);

// True iff nu2(q) >= 0, i.e. q lies in the 2-adically integral subring.
bool two_integral(const Rational& q);

Rational rational_from_string(const std::string& s); // "num/den" or "num"
std::string rational_to_string(const Rational& q);

// Residue modulo 2^N. Arithmetic between residues requires equal modulus
// exponents; the exponent travels with the value so mixed-modulus bugs
// surface immediately instead of silently truncating.
class Z2Residue {
  public:
    Z2Residue(Integer value, unsigned mod2exp);

    static Z2Residue zero(unsigned mod2exp) { return {0, mod2exp}; }
    static Z2Residue one(unsigned mod2exp) { return {1, mod2exp}; }

    const Integer& value() const { return value_; }
    unsigned mod2exp() const { return mod2exp_; }

    bool is_zero() const { return value_ == 0; }
    bool is_unit() const { return mpz_odd_p(value_.get_mpz_t()) != 0; }

    Z2Residue operator-() const;
    Z2Residue& operator+=(const Z2Residue& rhs);
    Z2Residue& operator-=(const Z2Residue& rhs);
    Z2Residue& operator*=(const Z2Residue& rhs);

    friend Z2Residue operator+(Z2Residue a, const Z2Residue& b) { return a += b; }
    friend Z2Residue operator-(Z2Residue a, const Z2Residue& b) { return a -= b; }
    friend Z2Residue operator*(Z2Residue a, const Z2Residue& b) { return a *= b; }
    friend bool operator==(const Z2Residue& a, const Z2Residue& b) {
        return a.mod2exp_ == b.mod2exp_ && a.value_ == b.value_;
    }

    // Inverse of a unit (odd value); EvenNotInvertible otherwise.
    Z2Residue inv() const;

    std::string str() const { return value_.get_str(); }

  private:
    Integer value_; // canonical representative in [0, 2^N)
    unsigned mod2exp_;

    void reduce();
    void require_same_modulus(const Z2Residue& other) const;
};

inline Z2Residue residue_inv(const Z2Residue& x) { return x.inv(); }

// Embedding of the 2-adically integral rationals into Z/2^N:
// num * den^{-1} mod 2^N. NotTwoAdicallyIntegral if nu2(q) < 0.
Z2Residue residue_from_rational(const Rational& q, unsigned mod2exp);

} // namespace psi3ut
