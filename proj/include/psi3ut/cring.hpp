#pragma once

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "psi3ut/dyadic.hpp"

namespace psi3ut {

// The graded ring Q2[u/2, v^2/4] in the coordinates U = u/2, W = v^2/4.
// A monomial U^a W^b has degree 2a + 4b, and an element lies in the
// integral subring Z2[u/2, v^2/4] iff every coefficient has nu2 >= 0 —
// this coordinate choice turns subring membership into a coefficient test.
struct Monomial {
    unsigned a; // exponent of U = u/2
    unsigned b; // exponent of W = v^2/4

    unsigned degree() const { return 2 * a + 4 * b; }
    auto operator<=>(const Monomial&) const = default;
};

class GradedElement {
  public:
    GradedElement() = default; // zero

    static GradedElement one() { return monomial(0, 0, 1); }
    static GradedElement monomial(unsigned a, unsigned b, Rational coeff);
    // u = 2U and v^2 = 4W as ring elements.
    static GradedElement u() { return monomial(1, 0, 2); }
    static GradedElement v_squared() { return monomial(0, 1, 4); }

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Homogeneous degree; nullopt for 0 or inhomogeneous elements.
    std::optional<unsigned> degree() const;

    Rational coeff(unsigned a, unsigned b) const;

    GradedElement& operator+=(const GradedElement& rhs);
    GradedElement& operator-=(const GradedElement& rhs);
    friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
    friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
    friend GradedElement operator*(const GradedElement& a, const GradedElement& b);
    friend GradedElement operator*(const Rational& c, const GradedElement& x);
    friend bool operator==(const GradedElement& a, const GradedElement& b) {
        return a.terms_ == b.terms_;
    }

    // Multiplication by u^j = 2^j U^j.
    GradedElement mul_u_pow(unsigned j) const;

    // Exact division by 2^e (coefficients are rational, so always exact).
    GradedElement div_pow2(unsigned long e) const;

  private:
    std::map<Monomial, Rational> terms_; // no zero coefficients stored

    void add_term(const Monomial& m, const Rational& c);
};

// The ring endomorphism U -> U, W -> 9W (u fixed, v^2 -> 9v^2), applied
// coefficient-linearly. This is the action of 1 ∧ psi^3 on the ring side.
GradedElement psi3_apply(const GradedElement& x);

// True iff every coefficient has nu2 >= 0.
bool is_integral(const GradedElement& x);

// c_{4k} = prod_{i=1}^{k} (v^2 - 9^{i-1} u^2) / (9^k - 9^{i-1}); c_0 = 1.
GradedElement c_element(unsigned k);

// f_{4k} = 2^{2k - alpha(k)} c_{4k}: the integral normalization, and sharply
// so (f_{4k}/2 is no longer integral).
GradedElement f_element(unsigned k);

// g_{4m,4l} = u^{2(m-l)} f_{4l} / 2^{min(2l - alpha(l), 2(m-l))} for l <= m;
// the min-exponent form unifies the two rationalisation cases. IndexOrder
// if l > m.
GradedElement g_element(unsigned m, unsigned l);

// Coefficient vector of a homogeneous degree-4k element in the basis
// {g_{4k,4l}}_{l=0..k}.
struct GBasisVector {
    unsigned degree_index = 0;     // k
    std::vector<Rational> coeffs;  // length k+1, entry l = coefficient of g_{4k,4l}
};

// Exact expansion of x (homogeneous of degree 4m) in {g_{4m,4l}}. The
// g-vectors are triangular in the W-degree, so this is a back-substitution
// over exact rationals. NotInSpan if x has a monomial of any other degree.
GBasisVector express_in_g(const GradedElement& x, unsigned m);

// Column l = express_in_g(psi3_apply(g_{4k,4l}), k). Each column has the
// diagonal entry 9^l and (for l >= 1) a single sub-entry at row l-1.
using RationalMatrix = std::vector<std::vector<Rational>>;
RationalMatrix psi3_degree_matrix(unsigned k);

} // namespace psi3ut
