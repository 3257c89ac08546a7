#pragma once

#include <map>
#include <utility>
#include <vector>

#include "psi3ut/dyadic.hpp"

namespace psi3ut {

// Leading principal n x n block of an infinite upper-triangular matrix over
// Z/2^N. For upper-triangular matrices the m x m block of a product depends
// only on the m x m blocks of the factors, so finite truncations are exact.
// Entries are stored as canonical representatives in [0, 2^N); the strict
// lower part is identically zero by construction.
class UTMatrix {
  public:
    UTMatrix(unsigned size, unsigned mod2exp);

    static UTMatrix identity(unsigned size, unsigned mod2exp);

    unsigned size() const { return size_; }
    unsigned mod2exp() const { return mod2exp_; }

    const Integer& at(unsigned i, unsigned j) const { return entries_[i * size_ + j]; }

    // Reduces mod 2^N; writing a nonzero value below the diagonal is a
    // programming error, not a domain error.
    void set(unsigned i, unsigned j, Integer v);

    Z2Residue entry(unsigned i, unsigned j) const { return {at(i, j), mod2exp_}; }

    UTMatrix leading_block(unsigned m) const;

    friend bool operator==(const UTMatrix& a, const UTMatrix& b) = default;

  private:
    unsigned size_;
    unsigned mod2exp_;
    std::vector<Integer> entries_; // row-major

    friend UTMatrix mat_mul(const UTMatrix& x, const UTMatrix& y);
};

// Product mod 2^N. SizeMismatch if sizes or moduli differ.
UTMatrix mat_mul(const UTMatrix& x, const UTMatrix& y);

// Two-sided inverse mod 2^N via back-substitution. NonUnitDiagonal unless
// every diagonal entry is odd.
UTMatrix mat_inv(const UTMatrix& x);

// The canonical bidiagonal matrix: diagonal 9^k, superdiagonal 1.
UTMatrix build_B(unsigned n, unsigned mod2exp);

// Same diagonal and superdiagonal as B, with prescribed entries above the
// superdiagonal (absent pairs are 0). Keys are 0-based (i, j), j >= i + 2.
UTMatrix build_C(unsigned n, unsigned mod2exp,
                 const std::map<std::pair<unsigned, unsigned>, Integer>& upper);

// True iff u * B = c * u entrywise mod 2^N (B of matching size). Requires u
// invertible (NonUnitDiagonal) and matching shapes (SizeMismatch).
bool similarity_check(const UTMatrix& u, const UTMatrix& c);

// Constructive conjugation: returns an invertible upper-triangular U with
// U B = C U mod 2^N, where C must have diagonal 9^k and superdiagonal 1
// (HypothesisViolation otherwise). The diagonal of U follows the ansatz
//   U_{j,j} = 1 + sum_{m=1..j} (9^m - 9^{m-1}) U_{m-1,m},
// under which the (j,j) and (j,j+1) equations hold identically; the
// remaining equations form an affine-linear system in the strict upper
// entries, solved by exact Gaussian elimination over Z/2^N with odd pivots
// (NonUnitPivot if none is available for a nonzero row). Non-pivot unknowns
// are fixed to 0, making the output deterministic.
UTMatrix conjugate_solve(const UTMatrix& c);

} // namespace psi3ut
