#include "psi3ut/dyadic.hpp"

namespace psi3ut {

Valuation nu2(const Integer& n) {
    if (n == 0) return std::nullopt;
    // mpz_scan1 sees negative numbers in two's complement, whose trailing
    // zero count agrees with that of |n|.
    return static_cast<long>(mpz_scan1(n.get_mpz_t(), 0));
}

Valuation nu2(const Rational& q) {
    if (q == 0) return std::nullopt;
    long num = static_cast<long>(mpz_scan1(q.get_num_mpz_t(), 0));
    long den = static_cast<long>(mpz_scan1(q.get_den_mpz_t(), 0));
    return num - den;
}

bool two_integral(const Rational& q) {
    Valuation v = nu2(q);
    return !v.has_value() || *v >= 0;
}

Rational rational_from_string(const std::string& s) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw Error("malformed rational: " + s);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Z2Residue::Z2Residue(Integer value, unsigned mod2exp)
    : value_(std::move(value)), mod2exp_(mod2exp) {
    if (mod2exp_ == 0) throw Error("modulus exponent must be positive");
    reduce();
}

void Z2Residue::reduce() {
    // Floor remainder keeps the representative in [0, 2^N) for negatives too.
    mpz_fdiv_r_2exp(value_.get_mpz_t(), value_.get_mpz_t(), mod2exp_);
}

void Z2Residue::require_same_modulus(const Z2Residue& other) const {
    if (mod2exp_ != other.mod2exp_)
        throw ModulusMismatch("residues have moduli 2^" + std::to_string(mod2exp_) +
                              " and 2^" + std::to_string(other.mod2exp_));
}

Z2Residue Z2Residue::operator-() const { return {-value_, mod2exp_}; }

Z2Residue& Z2Residue::operator+=(const Z2Residue& rhs) {
    require_same_modulus(rhs);
    value_ += rhs.value_;
    reduce();
    return *this;
}

Z2Residue& Z2Residue::operator-=(const Z2Residue& rhs) {
    require_same_modulus(rhs);
    value_ -= rhs.value_;
    reduce();
    return *this;
}

Z2Residue& Z2Residue::operator*=(const Z2Residue& rhs) {
    require_same_modulus(rhs);
    value_ *= rhs.value_;
    reduce();
    return *this;
}

Z2Residue Z2Residue::inv() const {
    if (!is_unit())
        throw EvenNotInvertible("residue " + value_.get_str() + " is even");
    Integer modulus = 1;
    modulus <<= mod2exp_;
    Integer r;
    mpz_invert(r.get_mpz_t(), value_.get_mpz_t(), modulus.get_mpz_t());
    return {std::move(r), mod2exp_};
}

Z2Residue residue_from_rational(const Rational& q, unsigned mod2exp) {
    Valuation v = nu2(q);
    if (v.has_value() && *v < 0)
        throw NotTwoAdicallyIntegral("nu2 = " + std::to_string(*v) + " < 0 for " +
                                     rational_to_string(q));
    Z2Residue num(q.get_num(), mod2exp);
    Z2Residue den(q.get_den(), mod2exp);
    return num * den.inv();
}

} // namespace psi3ut
