#include "psi3ut/utmatrix.hpp"

#include "psi3ut/valuations.hpp"

namespace psi3ut {

namespace {

void reduce2exp(Integer& v, unsigned mod2exp) {
    mpz_fdiv_r_2exp(v.get_mpz_t(), v.get_mpz_t(), mod2exp);
}

Integer invert_odd(const Integer& v, unsigned mod2exp) {
    Integer modulus = Integer(1) << mod2exp;
    Integer r;
    mpz_invert(r.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

} // namespace

UTMatrix::UTMatrix(unsigned size, unsigned mod2exp)
    : size_(size), mod2exp_(mod2exp), entries_(static_cast<std::size_t>(size) * size, Integer(0)) {
    if (size_ == 0) throw Error("matrix size must be positive");
    if (mod2exp_ == 0) throw Error("modulus exponent must be positive");
}

UTMatrix UTMatrix::identity(unsigned size, unsigned mod2exp) {
    UTMatrix m(size, mod2exp);
    for (unsigned i = 0; i < size; ++i) m.set(i, i, 1);
    return m;
}

void UTMatrix::set(unsigned i, unsigned j, Integer v) {
    reduce2exp(v, mod2exp_);
    if (j < i && v != 0) throw Error("write below the diagonal");
    entries_[i * size_ + j] = std::move(v);
}

UTMatrix UTMatrix::leading_block(unsigned m) const {
    if (m == 0 || m > size_) throw SizeMismatch("leading block size out of range");
    UTMatrix out(m, mod2exp_);
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = i; j < m; ++j) out.set(i, j, at(i, j));
    return out;
}

UTMatrix mat_mul(const UTMatrix& x, const UTMatrix& y) {
    if (x.size() != y.size() || x.mod2exp() != y.mod2exp())
        throw SizeMismatch("product requires equal sizes and moduli");
    const unsigned n = x.size();
    UTMatrix out(n, x.mod2exp());
    Integer acc;
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = i; j < n; ++j) {
            acc = 0;
            for (unsigned k = i; k <= j; ++k) acc += x.at(i, k) * y.at(k, j);
            out.set(i, j, acc);
        }
    }
    return out;
}

UTMatrix mat_inv(const UTMatrix& x) {
    const unsigned n = x.size();
    for (unsigned i = 0; i < n; ++i)
        if (mpz_odd_p(x.at(i, i).get_mpz_t()) == 0)
            throw NonUnitDiagonal("diagonal entry " + std::to_string(i) + " is even");
    UTMatrix out(n, x.mod2exp());
    for (unsigned j = 0; j < n; ++j) {
        out.set(j, j, invert_odd(x.at(j, j), x.mod2exp()));
        for (int i = static_cast<int>(j) - 1; i >= 0; --i) {
            Integer acc = 0;
            for (unsigned m = i + 1; m <= j; ++m) acc += x.at(i, m) * out.at(m, j);
            out.set(i, j, -invert_odd(x.at(i, i), x.mod2exp()) * acc);
        }
    }
    return out;
}

UTMatrix build_B(unsigned n, unsigned mod2exp) {
    UTMatrix b(n, mod2exp);
    for (unsigned k = 0; k < n; ++k) {
        b.set(k, k, nine_pow(k));
        if (k + 1 < n) b.set(k, k + 1, 1);
    }
    return b;
}

UTMatrix build_C(unsigned n, unsigned mod2exp,
                 const std::map<std::pair<unsigned, unsigned>, Integer>& upper) {
    UTMatrix c = build_B(n, mod2exp);
    for (const auto& [ij, v] : upper) {
        auto [i, j] = ij;
        if (j < i + 2 || j >= n)
            throw Error("upper entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") outside the strict upper range");
        c.set(i, j, v);
    }
    return c;
}

bool similarity_check(const UTMatrix& u, const UTMatrix& c) {
    if (u.size() != c.size() || u.mod2exp() != c.mod2exp())
        throw SizeMismatch("similarity check requires equal sizes and moduli");
    for (unsigned i = 0; i < u.size(); ++i)
        if (mpz_odd_p(u.at(i, i).get_mpz_t()) == 0)
            throw NonUnitDiagonal("conjugating matrix is not invertible");
    UTMatrix b = build_B(u.size(), u.mod2exp());
    return mat_mul(u, b) == mat_mul(c, u);
}

namespace {

// Affine rows of the conjugation system: coefficients over the strict upper
// unknowns u_{s,t} (ordered by (t, s)) plus a constant term in the last slot.
struct LinearSystem {
    unsigned n;
    unsigned mod2exp;
    unsigned nvars;
    std::vector<Integer> nine; // 9^k mod 2^N

    unsigned var(unsigned s, unsigned t) const { return t * (t - 1) / 2 + s; }

    // row += coef * U_{a,b} with the diagonal ansatz substituted.
    void add_entry(std::vector<Integer>& row, unsigned a, unsigned b, const Integer& coef) const {
        if (a > b) return;
        if (a < b) {
            row[var(a, b)] += coef;
            return;
        }
        row[nvars] += coef; // constant part of U_{a,a}
        for (unsigned m = 1; m <= a; ++m)
            row[var(m - 1, m)] += coef * (nine[m] - nine[m - 1]);
    }

    std::vector<Integer> equation(const UTMatrix& c, unsigned s, unsigned t) const {
        std::vector<Integer> row(nvars + 1, Integer(0));
        // (U B)_{s,t}
        add_entry(row, s, t, nine[t]);
        if (t > 0) add_entry(row, s, t - 1, 1);
        // - (C U)_{s,t}
        for (unsigned m = s; m <= t; ++m) add_entry(row, m, t, -c.at(s, m));
        for (Integer& v : row) reduce2exp(v, mod2exp);
        return row;
    }
};

} // namespace

UTMatrix conjugate_solve(const UTMatrix& c) {
    const unsigned n = c.size();
    const unsigned N = c.mod2exp();

    LinearSystem sys;
    sys.n = n;
    sys.mod2exp = N;
    sys.nvars = n * (n - 1) / 2;
    sys.nine.reserve(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        Integer p = nine_pow(k);
        reduce2exp(p, N);
        sys.nine.push_back(p);
    }

    for (unsigned k = 0; k < n; ++k) {
        if (c.at(k, k) != sys.nine[k])
            throw HypothesisViolation("diagonal entry " + std::to_string(k) + " is not 9^k");
        if (k + 1 < n && c.at(k, k + 1) != 1)
            throw HypothesisViolation("superdiagonal entry " + std::to_string(k) + " is not 1");
    }

    const unsigned V = sys.nvars;
    std::vector<std::vector<Integer>> rows;
    for (unsigned t = 0; t < n; ++t) {
        for (unsigned s = 0; s <= t; ++s) {
            std::vector<Integer> row = sys.equation(c, s, t);
            if (t - s <= 1) {
                // Under the ansatz these equations hold identically; anything
                // else means the hypothesis check above was insufficient.
                for (const Integer& v : row)
                    if (v != 0)
                        throw HypothesisViolation("diagonal/superdiagonal equations not identities");
            } else {
                rows.push_back(std::move(row));
            }
        }
    }

    // Gauss-Jordan over Z/2^N with odd pivots only. Pivot search prefers the
    // earliest column, so the free (zeroed) unknowns accumulate in the last
    // column, mirroring the column-by-column recursion of the hand solution.
    std::vector<int> pivot_of_col(V, -1);
    std::vector<unsigned> col_of_row;
    std::vector<std::vector<Integer>> reduced;
    for (auto& row : rows) {
        for (std::size_t r = 0; r < reduced.size(); ++r) {
            const unsigned pc = col_of_row[r];
            if (row[pc] == 0) continue;
            Integer factor = row[pc];
            for (unsigned j = 0; j <= V; ++j) {
                row[j] -= factor * reduced[r][j];
                reduce2exp(row[j], N);
            }
        }
        unsigned pc = V;
        for (unsigned j = 0; j < V; ++j) {
            if (mpz_odd_p(row[j].get_mpz_t())) {
                pc = j;
                break;
            }
        }
        if (pc == V) {
            bool zero = true;
            for (const Integer& v : row)
                if (v != 0) zero = false;
            if (zero) continue; // dependent equation
            throw NonUnitPivot("no odd pivot available for a nonzero equation");
        }
        Integer inv = invert_odd(row[pc], N);
        for (unsigned j = 0; j <= V; ++j) {
            row[j] *= inv;
            reduce2exp(row[j], N);
        }
        for (std::size_t r = 0; r < reduced.size(); ++r) {
            if (reduced[r][pc] == 0) continue;
            Integer factor = reduced[r][pc];
            for (unsigned j = 0; j <= V; ++j) {
                reduced[r][j] -= factor * row[j];
                reduce2exp(reduced[r][j], N);
            }
        }
        pivot_of_col[pc] = static_cast<int>(reduced.size());
        col_of_row.push_back(pc);
        reduced.push_back(std::move(row));
    }

    // Pivot unknowns from the constants, free unknowns fixed to 0.
    std::vector<Integer> solution(V, Integer(0));
    for (unsigned j = 0; j < V; ++j) {
        if (pivot_of_col[j] < 0) continue;
        Integer v = -reduced[pivot_of_col[j]][V];
        reduce2exp(v, N);
        solution[j] = std::move(v);
    }

    UTMatrix u(n, N);
    Integer diag = 1;
    u.set(0, 0, diag);
    for (unsigned j = 1; j < n; ++j) {
        diag += (sys.nine[j] - sys.nine[j - 1]) * solution[sys.var(j - 1, j)];
        reduce2exp(diag, N);
        u.set(j, j, diag);
    }
    for (unsigned t = 1; t < n; ++t)
        for (unsigned s = 0; s < t; ++s) u.set(s, t, solution[sys.var(s, t)]);
    return u;
}

} // namespace psi3ut
