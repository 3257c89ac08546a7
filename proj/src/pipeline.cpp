#include "psi3ut/pipeline.hpp"

#include "psi3ut/cring.hpp"
#include "psi3ut/rng.hpp"
#include "psi3ut/valuations.hpp"

namespace psi3ut {

PipelineParams PipelineParams::sample(unsigned n, std::uint64_t seed, unsigned mod2exp) {
    PipelineParams p(n, seed, mod2exp);
    CounterRng rng(seed);
    p.lambda_.resize(n);
    for (unsigned k = 0; k < n; ++k) {
        p.lambda_[k].reserve(k + 1);
        for (unsigned i = 0; i < k; ++i) p.lambda_[k].push_back(rng.next_residue(mod2exp));
        // Leading coefficient of a generator is a unit; z_0 = 1 pins (0,0).
        if (k == 0)
            p.lambda_[k].push_back(Z2Residue::one(mod2exp));
        else
            p.lambda_[k].push_back(rng.next_odd_residue(mod2exp));
    }
    p.mu_.resize(n);
    for (unsigned k = 0; k < n; ++k) {
        p.mu_[k].reserve(k);
        for (unsigned l = 0; l < k; ++l) p.mu_[k].push_back(rng.next_odd_residue(mod2exp));
    }
    return p;
}

const Z2Residue& PipelineParams::lambda(unsigned k, unsigned i) const {
    if (k >= n_ || i > k) throw IndexRange("lambda index out of range");
    return lambda_[k][i];
}

const Z2Residue& PipelineParams::mu(unsigned k, unsigned l) const {
    if (k >= n_ || l >= k) throw IndexRange("mu index out of range");
    return mu_[k][l];
}

namespace {

// Exact integer lift of z_{4k}: entry i = 2^{beta(k,i)} lambda(k,i) for
// i < k, leading entry lambda(k,k).
std::vector<Integer> build_z_lift(unsigned k, const PipelineParams& p) {
    std::vector<Integer> z;
    z.reserve(k + 1);
    for (unsigned i = 0; i < k; ++i)
        z.push_back((Integer(1) << beta(k, i)) * p.lambda(k, i).value());
    z.push_back(p.lambda(k, k).value());
    return z;
}

std::vector<Integer> iota_image_lift(unsigned k, unsigned l, const PipelineParams& p) {
    if (l > k) throw IndexOrder("iota_{k,l} requires l <= k");
    if (l == k) return build_z_lift(k, p);
    std::vector<Integer> zl = build_z_lift(l, p);
    // 2(k-l) + alpha(l) >= alpha(k) since alpha is subadditive.
    unsigned long outer = 2ul * (k - l) + alpha(Integer(l)) - alpha(Integer(k));
    std::vector<Integer> out(k + 1, Integer(0));
    for (unsigned i = 0; i <= l; ++i)
        out[i] = p.mu(k, l).value() * (Integer(1) << (outer + u_power_multiplier(k, l, i))) * zl[i];
    return out;
}

} // namespace

std::vector<Z2Residue> build_z(unsigned k, const PipelineParams& p) {
    if (k >= p.n()) throw IndexRange("build_z requires k < n");
    std::vector<Integer> lift = build_z_lift(k, p);
    std::vector<Z2Residue> out;
    out.reserve(lift.size());
    for (Integer& v : lift) out.emplace_back(std::move(v), p.mod2exp());
    return out;
}

unsigned long u_power_multiplier(unsigned k, unsigned l, unsigned i) {
    if (i > l || l > k) throw IndexOrder("u_power_multiplier requires i <= l <= k");
    unsigned long rationalised = 4ul * i - alpha(Integer(i)); // 4i - alpha(i)
    if (rationalised <= 2ul * l) return 0;
    if (rationalised <= 2ul * k) return rationalised - 2ul * l;
    return 2ul * (k - l);
}

std::vector<Z2Residue> iota_image(unsigned k, unsigned l, const PipelineParams& p) {
    if (k >= p.n()) throw IndexRange("iota_image requires k < n");
    std::vector<Integer> lift = iota_image_lift(k, l, p);
    std::vector<Z2Residue> out;
    out.reserve(lift.size());
    for (Integer& v : lift) out.emplace_back(std::move(v), p.mod2exp());
    return out;
}

UTMatrix extract_A(const PipelineParams& p) {
    const unsigned n = p.n();
    UTMatrix a(n, p.mod2exp());
    for (unsigned k = 0; k < n; ++k) {
        std::vector<Integer> z = build_z_lift(k, p);
        RationalMatrix action = psi3_degree_matrix(k);

        // (1 ∧ psi^3)_* z_{4k} in the g-basis, exactly.
        std::vector<Rational> lhs(k + 1, Rational(0));
        for (unsigned i = 0; i <= k; ++i)
            for (unsigned j = 0; j <= k; ++j) lhs[i] += action[i][j] * Rational(z[j]);

        std::vector<std::vector<Integer>> iotas;
        iotas.reserve(k + 1);
        for (unsigned l = 0; l <= k; ++l) iotas.push_back(iota_image_lift(k, l, p));

        // Match coefficients from i = k downward; the iota images are
        // triangular (support i <= l), so each step isolates one unknown.
        std::vector<Rational> column(k + 1, Rational(0));
        for (int i = static_cast<int>(k); i >= 0; --i) {
            Rational rem = lhs[i];
            for (unsigned l = i + 1; l <= k; ++l) rem -= column[l] * Rational(iotas[l][i]);
            column[i] = rem / Rational(iotas[i][i]);
        }

        for (unsigned l = 0; l <= k; ++l) {
            try {
                a.set(l, k, residue_from_rational(column[l], p.mod2exp()).value());
            } catch (const NotTwoAdicallyIntegral&) {
                throw NonUnitDivision("A entry (" + std::to_string(l) + "," + std::to_string(k) +
                                      ") is not 2-adically integral");
            }
        }
    }
    return a;
}

std::pair<UTMatrix, UTMatrix> normalize_D(const UTMatrix& a) {
    const unsigned n = a.size();
    const unsigned N = a.mod2exp();
    for (unsigned k = 0; k < n; ++k) {
        Integer expected = nine_pow(k);
        mpz_fdiv_r_2exp(expected.get_mpz_t(), expected.get_mpz_t(), N);
        if (a.at(k, k) != expected)
            throw HypothesisViolation("diagonal entry " + std::to_string(k) + " is not 9^k");
        if (k + 1 < n && mpz_odd_p(a.at(k, k + 1).get_mpz_t()) == 0)
            throw NonUnitSuperdiagonal("superdiagonal entry " + std::to_string(k) + " is even");
    }

    UTMatrix d(n, N);
    Z2Residue acc = Z2Residue::one(N);
    d.set(0, 0, acc.value());
    for (unsigned k = 1; k < n; ++k) {
        acc *= a.entry(k - 1, k);
        d.set(k, k, acc.value());
    }

    UTMatrix c(n, N);
    for (unsigned s = 0; s < n; ++s) {
        Z2Residue ds = d.entry(s, s);
        for (unsigned t = s; t < n; ++t)
            c.set(s, t, (ds * a.entry(s, t) * d.entry(t, t).inv()).value());
    }
    return {std::move(d), std::move(c)};
}

EndToEndReport end_to_end(unsigned n, std::uint64_t seed, unsigned mod2exp) {
    PipelineParams p = PipelineParams::sample(n, seed, mod2exp);
    UTMatrix a = extract_A(p);
    auto [d, c] = normalize_D(a);
    UTMatrix u = conjugate_solve(c);
    bool ok = similarity_check(u, c);
    return {n, seed, mod2exp, std::move(a), std::move(d), std::move(c), std::move(u), ok};
}

UTMatrix build_Bu(unsigned u, unsigned n, unsigned mod2exp) {
    if (u == 0) throw ZeroInput("B_u requires u >= 1");
    UTMatrix b = build_B(n, mod2exp);
    Integer shift = nine_pow(u - 1);
    for (unsigned k = 0; k < n; ++k) b.set(k, k, b.at(k, k) - shift);
    return b;
}

UTMatrix xn_product(unsigned n, unsigned size, unsigned mod2exp) {
    if (n == 0) throw ZeroInput("X_n requires n >= 1");
    if (size < n) throw SizeTooSmall("X_n needs a block of size at least n");
    UTMatrix acc = build_Bu(1, size, mod2exp);
    for (unsigned u = 2; u <= n; ++u) acc = mat_mul(acc, build_Bu(u, size, mod2exp));
    return acc;
}

Z2Residue xn_formula_path(unsigned s, unsigned t, unsigned n, unsigned mod2exp) {
    if (s == 0) throw ZeroInput("row index s is 1-based");
    if (n == 0) throw ZeroInput("X_n requires n >= 1");
    Z2Residue total = Z2Residue::zero(mod2exp);
    if (t > n) return total;

    // Enumerate the step positions 1 <= u_1 < ... < u_t <= n.
    std::vector<unsigned> steps(t);
    for (unsigned i = 0; i < t; ++i) steps[i] = i + 1;
    while (true) {
        Z2Residue term = Z2Residue::one(mod2exp);
        unsigned taken = 0; // c(u): steps strictly before u
        for (unsigned u = 1; u <= n; ++u) {
            if (taken < t && steps[taken] == u) {
                ++taken;
                continue;
            }
            term *= Z2Residue(nine_pow(s - 1 + taken) - nine_pow(u - 1), mod2exp);
        }
        total += term;

        if (t == 0) break;
        int i = static_cast<int>(t) - 1;
        while (i >= 0 && steps[i] == n - (t - 1 - i)) --i;
        if (i < 0) break;
        ++steps[i];
        for (unsigned j = i + 1; j < t; ++j) steps[j] = steps[j - 1] + 1;
    }
    return total;
}

namespace {

// Product over j in [lo, hi] of (base - 9^{j-1}); empty when hi < lo.
Z2Residue displayed_factor(const Integer& base, long lo, long hi, unsigned mod2exp) {
    Z2Residue prod = Z2Residue::one(mod2exp);
    for (long j = lo; j <= hi; ++j) prod *= Z2Residue(base - nine_pow(j - 1), mod2exp);
    return prod;
}

} // namespace

Z2Residue xn_formula_displayed(unsigned s, unsigned t, unsigned n, unsigned mod2exp) {
    if (s == 0 || t == 0 || t > n) throw IndexRange("the displayed formula covers 1 <= t <= n");
    Z2Residue total = Z2Residue::zero(mod2exp);
    std::vector<unsigned> ks(t);
    for (unsigned i = 0; i < t; ++i) ks[i] = i + 1;
    while (true) {
        Z2Residue term = Z2Residue::one(mod2exp);
        for (unsigned i = 1; i <= t; ++i) {
            long k_i = ks[i - 1];
            if (i == t) {
                // Printed last factor, with its index bounds and exponent
                // taken at face value.
                term *= displayed_factor(nine_pow(s + t + 1), 1, static_cast<long>(n) - k_i - 1,
                                         mod2exp);
            } else if (i == 1) {
                term *= displayed_factor(nine_pow(s - 1), static_cast<long>(n) - k_i + 1, n,
                                         mod2exp);
            } else {
                long prev = ks[i - 2];
                term *= displayed_factor(nine_pow(s + i - 2), static_cast<long>(n) - k_i + 1,
                                         static_cast<long>(n) - prev - 1, mod2exp);
            }
        }
        total += term;

        int i = static_cast<int>(t) - 1;
        while (i >= 0 && ks[i] == n - (t - 1 - i)) --i;
        if (i < 0) break;
        ++ks[i];
        for (unsigned j = i + 1; j < t; ++j) ks[j] = ks[j - 1] + 1;
    }
    return total;
}

bool xn_vanishing_check(unsigned n, unsigned size, unsigned mod2exp) {
    UTMatrix x = xn_product(n, size, mod2exp);
    for (unsigned j = 0; j < n; ++j)
        for (unsigned i = 0; i <= j; ++i)
            if (x.at(i, j) != 0) return false;
    return true;
}

XnReport make_xn_report(unsigned n, unsigned size, unsigned mod2exp) {
    UTMatrix brute = xn_product(n, size, mod2exp);

    UTMatrix path(size, mod2exp);
    for (unsigned i = 0; i < size; ++i)
        for (unsigned j = i; j < size; ++j)
            path.set(i, j, xn_formula_path(i + 1, j - i, n, mod2exp).value());

    UTMatrix displayed(size, mod2exp);
    std::vector<XnEntryAgreement> agreement;
    for (unsigned i = 0; i < size; ++i) {
        for (unsigned t = 1; t <= n && i + t < size; ++t) {
            Z2Residue v = xn_formula_displayed(i + 1, t, n, mod2exp);
            displayed.set(i, i + t, v.value());
            agreement.push_back(
                {i + 1, t, v.value(), brute.at(i, i + t), v.value() == brute.at(i, i + t)});
        }
    }

    bool vanish = xn_vanishing_check(n, size, mod2exp);
    bool path_ok = (path == brute);
    return {n,      size,    mod2exp, std::move(brute),    std::move(path),
            std::move(displayed), vanish, path_ok, std::move(agreement)};
}

} // namespace psi3ut
