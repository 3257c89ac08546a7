#include "psi3ut/cring.hpp"

#include "psi3ut/valuations.hpp"

namespace psi3ut {

GradedElement GradedElement::monomial(unsigned a, unsigned b, Rational coeff) {
    GradedElement x;
    x.add_term({a, b}, coeff);
    return x;
}

void GradedElement::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::optional<unsigned> GradedElement::degree() const {
    if (terms_.empty()) return std::nullopt;
    unsigned d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return std::nullopt;
    return d;
}

Rational GradedElement::coeff(unsigned a, unsigned b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Rational(0) : it->second;
}

GradedElement& GradedElement::operator+=(const GradedElement& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

GradedElement operator*(const GradedElement& a, const GradedElement& b) {
    GradedElement out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add_term({ma.a + mb.a, ma.b + mb.b}, ca * cb);
    return out;
}

GradedElement operator*(const Rational& c, const GradedElement& x) {
    GradedElement out;
    if (c == 0) return out;
    for (const auto& [m, cx] : x.terms_) out.terms_.emplace(m, c * cx);
    return out;
}

GradedElement GradedElement::mul_u_pow(unsigned j) const {
    GradedElement out;
    Rational two_j(Integer(1) << j);
    for (const auto& [m, c] : terms_) out.terms_.emplace(Monomial{m.a + j, m.b}, two_j * c);
    return out;
}

GradedElement GradedElement::div_pow2(unsigned long e) const {
    GradedElement out;
    Rational scale(1, Integer(1) << e);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, scale * c);
    return out;
}

GradedElement psi3_apply(const GradedElement& x) {
    GradedElement out;
    for (const auto& [m, c] : x.terms()) {
        Rational nine_b(nine_pow(m.b));
        out += GradedElement::monomial(m.a, m.b, nine_b * c);
    }
    return out;
}

bool is_integral(const GradedElement& x) {
    for (const auto& [m, c] : x.terms())
        if (!two_integral(c)) return false;
    return true;
}

GradedElement c_element(unsigned k) {
    GradedElement num = GradedElement::one();
    Rational den(1);
    const GradedElement u2 = GradedElement::monomial(2, 0, 4); // u^2 = 4U^2
    const GradedElement v2 = GradedElement::v_squared();
    const Integer nine_k = nine_pow(k);
    for (unsigned i = 1; i <= k; ++i) {
        num = num * (v2 - Rational(nine_pow(i - 1)) * u2);
        den *= Rational(nine_k - nine_pow(i - 1));
    }
    return Rational(1 / den) * num;
}

GradedElement f_element(unsigned k) {
    unsigned long e = 2ul * k - alpha(Integer(k));
    return Rational(Integer(1) << e) * c_element(k);
}

GradedElement g_element(unsigned m, unsigned l) {
    if (l > m) throw IndexOrder("g_{4m,4l} requires l <= m");
    unsigned long e = std::min<unsigned long>(2ul * l - alpha(Integer(l)), 2ul * (m - l));
    return f_element(l).mul_u_pow(2 * (m - l)).div_pow2(e);
}

namespace {

// A degree-4m homogeneous element is determined by its coefficients on
// U^{2m-2b} W^b, b = 0..m.
std::vector<Rational> w_profile(const GradedElement& p, unsigned m) {
    std::vector<Rational> v(m + 1, Rational(0));
    for (const auto& [mon, c] : p.terms()) {
        if (mon.degree() != 4 * m)
            throw NotInSpan("monomial of degree " + std::to_string(mon.degree()) +
                            " outside the degree-" + std::to_string(4 * m) + " span");
        v[mon.b] = c;
    }
    return v;
}

// g_{4m,4l} has W-degree exactly l, so the system is triangular: solve from
// b = m downward.
std::vector<Rational> solve_against_g(std::vector<Rational> target,
                                      const std::vector<std::vector<Rational>>& basis) {
    const unsigned m = static_cast<unsigned>(basis.size()) - 1;
    std::vector<Rational> coeffs(m + 1, Rational(0));
    for (int l = static_cast<int>(m); l >= 0; --l) {
        Rational c = target[l] / basis[l][l];
        coeffs[l] = c;
        if (c != 0)
            for (unsigned b = 0; b <= static_cast<unsigned>(l); ++b)
                target[b] -= c * basis[l][b];
    }
    return coeffs;
}

std::vector<std::vector<Rational>> g_basis_profiles(unsigned m) {
    std::vector<std::vector<Rational>> basis(m + 1);
    for (unsigned l = 0; l <= m; ++l) basis[l] = w_profile(g_element(m, l), m);
    return basis;
}

} // namespace

GBasisVector express_in_g(const GradedElement& x, unsigned m) {
    GBasisVector out;
    out.degree_index = m;
    out.coeffs = solve_against_g(w_profile(x, m), g_basis_profiles(m));
    return out;
}

RationalMatrix psi3_degree_matrix(unsigned k) {
    // Build the basis profiles once; psi3 acts on a profile by scaling the
    // W^b coefficient with 9^b, so no polynomial arithmetic is needed here.
    std::vector<std::vector<Rational>> basis = g_basis_profiles(k);
    RationalMatrix mat(k + 1, std::vector<Rational>(k + 1, Rational(0)));
    for (unsigned l = 0; l <= k; ++l) {
        std::vector<Rational> image = basis[l];
        for (unsigned b = 0; b <= k; ++b)
            if (image[b] != 0) image[b] *= Rational(nine_pow(b));
        std::vector<Rational> col = solve_against_g(std::move(image), basis);
        for (unsigned i = 0; i <= k; ++i) mat[i][l] = col[i];
    }
    return mat;
}

} // namespace psi3ut
