#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "psi3ut/utmatrix.hpp"

namespace psi3ut {

// Seeded assignment of the undetermined 2-adic constants: lambda(k,i) for
// 0 <= i <= k < n (leading lambda(k,k) a unit, lambda(0,0) = 1 since z_0 = 1)
// and mu(k,l), a unit, for 0 <= l < k < n. Draws come from a counter-based
// stream, so a (n, seed, mod2exp) triple pins every value.
class PipelineParams {
  public:
    static PipelineParams sample(unsigned n, std::uint64_t seed, unsigned mod2exp);

    unsigned n() const { return n_; }
    std::uint64_t seed() const { return seed_; }
    unsigned mod2exp() const { return mod2exp_; }

    const Z2Residue& lambda(unsigned k, unsigned i) const; // IndexRange
    const Z2Residue& mu(unsigned k, unsigned l) const;     // IndexRange

  private:
    PipelineParams(unsigned n, std::uint64_t seed, unsigned mod2exp)
        : n_(n), seed_(seed), mod2exp_(mod2exp) {}

    unsigned n_;
    std::uint64_t seed_;
    unsigned mod2exp_;
    std::vector<std::vector<Z2Residue>> lambda_; // lambda_[k][i], i <= k
    std::vector<std::vector<Z2Residue>> mu_;     // mu_[k][l], l < k
};

// z_{4k} in the g-basis: leading coefficient lambda(k,k) (no 2-power, as in
// the worked k = 1, 2 expansions) and 2^{beta(k,i)} lambda(k,i) below.
std::vector<Z2Residue> build_z(unsigned k, const PipelineParams& p); // IndexRange

// Exponent e with u^{2k-2l} g_{4l,4i} = 2^e g_{4k,4i}, for i <= l <= k:
//   0                  if 4i - alpha(i) <= 2l <= 2k,
//   4i - alpha(i) - 2l if 2l < 4i - alpha(i) <= 2k,
//   2k - 2l            if 2l < 2k < 4i - alpha(i).
unsigned long u_power_multiplier(unsigned k, unsigned l, unsigned i); // IndexOrder

// (iota_{k,l})_* z_{4k} expanded in the degree-4k g-basis:
// mu(k,l) 2^{2k-2l-alpha(k)+alpha(l)} u^{2k-2l} z_{4l}; identity for l = k.
std::vector<Z2Residue> iota_image(unsigned k, unsigned l, const PipelineParams& p); // IndexOrder

// The matrix A of 1 ∧ psi^3 in the z/iota presentation: for each column k,
// solve sum_{l<=k} A_{l,k} (iota_{k,l})_* z_{4k} = (1 ∧ psi^3)_* z_{4k} by
// matching g_{4k,4i} coefficients from i = k downward. The solve runs over
// exact rationals on canonical integer lifts; entries map into Z/2^N at the
// end. NonUnitDivision if an entry fails to be 2-adically integral.
UTMatrix extract_A(const PipelineParams& p);

// Conjugation by D = diag(1, A_{0,1}, A_{0,1} A_{1,2}, ...) normalizing the
// superdiagonal to 1. Returns (D, C = D A D^{-1}). NonUnitSuperdiagonal if a
// superdiagonal entry is even; HypothesisViolation if the diagonal is not
// (1, 9, 81, ...).
std::pair<UTMatrix, UTMatrix> normalize_D(const UTMatrix& a);

struct EndToEndReport {
    unsigned n;
    std::uint64_t seed;
    unsigned mod2exp;
    UTMatrix a; // extracted matrix of 1 ∧ psi^3
    UTMatrix d; // normalizing diagonal
    UTMatrix c; // D A D^{-1}, in the solver's hypothesis class
    UTMatrix u; // conjugating matrix with U B = C U
    bool check; // similarity_check(u, c)
};

// extract_A -> normalize_D -> conjugate_solve -> similarity_check.
EndToEndReport end_to_end(unsigned n, std::uint64_t seed, unsigned mod2exp);

// B_u = B - 9^{u-1} I, u >= 1 (ZeroInput on 0).
UTMatrix build_Bu(unsigned u, unsigned n, unsigned mod2exp);

// X_n = B_1 B_2 ... B_n on a size x size block. SizeTooSmall if size < n.
UTMatrix xn_product(unsigned n, unsigned size, unsigned mod2exp);

// Closed-form oracle for (X_n)_{s-1, s-1+t} (1-based row index s, as in
// hand calculations): sum over 1 <= u_1 < ... < u_t <= n of
//   prod_{u not chosen} (9^{s-1+c(u)} - 9^{u-1}),  c(u) = #{i : u_i < u},
// i.e. the expansion of the bidiagonal product over step/stay choices.
Z2Residue xn_formula_path(unsigned s, unsigned t, unsigned n, unsigned mod2exp);

// The commonly displayed closed form evaluated verbatim (empty products = 1,
// and the collapsed t = 1 case read through the printed last factor). Not an
// oracle: its output is only compared against xn_formula_path and recorded.
Z2Residue xn_formula_displayed(unsigned s, unsigned t, unsigned n, unsigned mod2exp);

// True iff columns 0..n-1 of X_n vanish identically mod 2^N.
bool xn_vanishing_check(unsigned n, unsigned size, unsigned mod2exp); // SizeTooSmall

struct XnEntryAgreement {
    unsigned s; // 1-based row
    unsigned t; // offset, 1 <= t <= n
    Integer displayed;
    Integer oracle;
    bool agree;
};

struct XnReport {
    unsigned n;
    unsigned size;
    unsigned mod2exp;
    UTMatrix brute;             // iterated product
    UTMatrix formula_path;      // path-formula oracle, every entry
    UTMatrix formula_displayed; // verbatim display; only offsets 1 <= t <= n are covered
    bool vanishing_ok;
    bool path_matches_brute; // the twin oracles must agree exactly
    std::vector<XnEntryAgreement> displayed_agreement;
};

XnReport make_xn_report(unsigned n, unsigned size, unsigned mod2exp);

} // namespace psi3ut
