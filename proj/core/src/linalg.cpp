#include "flasque/linalg.hpp"

#include <algorithm>

#include "flasque/arith.hpp"
#include "flasque/errors.hpp"

namespace flasque {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

bool divides(const Integer& d, const Integer& x) { return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0; }

// Shared Smith reduction; U and V are only updated when non-null.
std::vector<Integer> smith_reduce(IntMatrix& B, IntMatrix* U, IntMatrix* V) {
    const std::size_t m = B.rows(), n = B.cols();
    std::vector<Integer> diag;
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            // Smallest nonzero |entry| in the active block.
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    const auto& v = B(i, j);
                    if (sgn(v) == 0) continue;
                    if (pi == m || cmpabs(v, B(pi, pj)) < 0) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == m) return diag;
            B.swap_rows(t, pi);
            if (U) U->swap_rows(t, pi);
            B.swap_cols(t, pj);
            if (V) V->swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (sgn(B(i, t)) == 0) continue;
                Integer q = floor_div(B(i, t), B(t, t));
                B.row_submul(i, t, q);
                if (U) U->row_submul(i, t, q);
                if (sgn(B(i, t)) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (sgn(B(t, j)) == 0) continue;
                Integer q = floor_div(B(t, j), B(t, t));
                B.col_submul(j, t, q);
                if (V) V->col_submul(j, t, q);
                if (sgn(B(t, j)) != 0) clean = false;
            }
            if (!clean) continue;

            bool bad = false;
            for (std::size_t i = t + 1; i < m && !bad; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!divides(B(t, t), B(i, j))) {
                        // row t += row i brings the offending entry into the pivot row.
                        B.row_submul(t, i, Integer(-1));
                        if (U) U->row_submul(t, i, Integer(-1));
                        bad = true;
                        break;
                    }
            if (!bad) break;
        }
        if (sgn(B(t, t)) < 0) {
            B.negate_row(t);
            if (U) U->negate_row(t);
        }
        diag.push_back(B(t, t));
    }
    return diag;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A) {
    SmithForm s;
    s.D = A;
    s.U = IntMatrix::identity(A.rows());
    s.V = IntMatrix::identity(A.cols());
    s.diagonal = smith_reduce(s.D, &s.U, &s.V);
    s.rank = s.diagonal.size();
    return s;
}

std::vector<Integer> smith_diagonal(const IntMatrix& A) {
    IntMatrix B = A;
    return smith_reduce(B, nullptr, nullptr);
}

CokernelInvariants cokernel_invariants(const IntMatrix& A) {
    CokernelInvariants out;
    auto diag = smith_diagonal(A);
    for (const auto& d : diag)
        if (d != 1) out.torsion.push_back(d);
    out.free_rank = A.rows() - diag.size();
    return out;
}

bool solvable_at_p(const IntMatrix& A, const IntMatrix& b, std::uint64_t p) {
    if (!is_prime(p)) throw ArgumentError(std::to_string(p) + " is not prime");
    if (b.rows() != A.rows() || b.cols() != 1) throw ArgumentError("solvable_at_p: shape mismatch");
    auto da = smith_diagonal(A);
    auto dab = smith_diagonal(hstack(A, b));
    if (da.size() != dab.size()) return false;
    // Over the local ring the determinantal divisors must agree in p-adic valuation.
    const Integer P(static_cast<unsigned long>(p));
    auto val = [&](const std::vector<Integer>& ds) {
        std::size_t v = 0;
        for (const auto& d : ds) v += mpz_remove(Integer().get_mpz_t(), d.get_mpz_t(), P.get_mpz_t());
        return v;
    };
    return val(da) == val(dab);
}

ColumnEchelon column_echelon(const IntMatrix& A, bool track_inverse) {
    ColumnEchelon e;
    e.form = A;
    e.transform = IntMatrix::identity(A.cols());
    if (track_inverse) e.inverse_transform = IntMatrix::identity(A.cols());
    IntMatrix& E = e.form;
    const std::size_t m = A.rows(), n = A.cols();
    std::size_t c = 0;
    for (std::size_t i = 0; i < m && c < n; ++i) {
        for (;;) {
            std::size_t best = n;
            for (std::size_t j = c; j < n; ++j)
                if (sgn(E(i, j)) != 0 && (best == n || cmpabs(E(i, j), E(i, best)) < 0)) best = j;
            if (best == n) break;
            if (best != c) {
                E.swap_cols(c, best);
                e.transform.swap_cols(c, best);
                if (track_inverse) e.inverse_transform.swap_rows(c, best);
            }
            bool clean = true;
            for (std::size_t j = c + 1; j < n; ++j) {
                if (sgn(E(i, j)) == 0) continue;
                Integer q = floor_div(E(i, j), E(i, c));
                E.col_submul(j, c, q);
                e.transform.col_submul(j, c, q);
                if (track_inverse) e.inverse_transform.row_submul(c, j, -q);
                if (sgn(E(i, j)) != 0) clean = false;
            }
            if (clean) break;
        }
        if (sgn(E(i, c)) == 0) continue;
        if (sgn(E(i, c)) < 0) {
            E.negate_col(c);
            e.transform.negate_col(c);
            if (track_inverse) e.inverse_transform.negate_row(c);
        }
        e.pivot_rows.push_back(i);
        ++c;
    }
    e.rank = c;
    return e;
}

IntMatrix hermite_normal_form(const IntMatrix& A) {
    auto e = column_echelon(A);
    IntMatrix& H = e.form;
    for (std::size_t k = 0; k < e.rank; ++k) {
        const std::size_t i = e.pivot_rows[k];
        for (std::size_t j = 0; j < k; ++j) {
            Integer q = floor_div(H(i, j), H(i, k));
            H.col_submul(j, k, q);
        }
    }
    return H.submatrix(0, H.rows(), 0, e.rank);
}

std::size_t rank(const IntMatrix& A) { return column_echelon(A).rank; }

namespace {

std::size_t rank_mod_2(const std::vector<std::uint64_t>& a, std::size_t m, std::size_t n) {
    // Columns as bitsets over the row index.
    const std::size_t words = (m + 63) / 64;
    std::vector<std::uint64_t> bits(n * words, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a[i * n + j] & 1) bits[j * words + i / 64] |= std::uint64_t{1} << (i % 64);
    std::size_t rk = 0;
    for (std::size_t bit = 0; bit < m && rk < n; ++bit) {
        const std::size_t w = bit / 64;
        const std::uint64_t mask = std::uint64_t{1} << (bit % 64);
        std::size_t piv = rk;
        while (piv < n && !(bits[piv * words + w] & mask)) ++piv;
        if (piv == n) continue;
        if (piv != rk)
            for (std::size_t k = 0; k < words; ++k) std::swap(bits[piv * words + k], bits[rk * words + k]);
        for (std::size_t j = rk + 1; j < n; ++j)
            if (bits[j * words + w] & mask)
                for (std::size_t k = w; k < words; ++k) bits[j * words + k] ^= bits[rk * words + k];
        ++rk;
    }
    return rk;
}

std::uint64_t inverse_mod(std::uint64_t x, std::uint64_t p) {
    std::uint64_t result = 1, e = p - 2;
    while (e) {
        if (e & 1) result = result * x % p;
        x = x * x % p;
        e >>= 1;
    }
    return result;
}

}  // namespace

std::size_t rank_mod_p(std::vector<std::uint64_t> a, std::size_t m, std::size_t n, std::uint64_t p) {
    if (p < 2 || p >= (1ull << 31)) throw ArgumentError("rank_mod_p needs 2 <= p < 2^31");
    if (a.size() != m * n) throw ArgumentError("rank_mod_p: entry count does not match the shape");
    if (p == 2) return rank_mod_2(a, m, n);
    std::size_t rk = 0;
    for (std::size_t col = 0; col < n && rk < m; ++col) {
        std::size_t piv = rk;
        while (piv < m && a[piv * n + col] == 0) ++piv;
        if (piv == m) continue;
        if (piv != rk)
            for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[rk * n + j]);
        const std::uint64_t s = inverse_mod(a[rk * n + col], p);
        for (std::size_t j = col; j < n; ++j) a[rk * n + j] = a[rk * n + j] * s % p;
        for (std::size_t i = rk + 1; i < m; ++i) {
            const std::uint64_t f = a[i * n + col];
            if (!f) continue;
            for (std::size_t j = col; j < n; ++j)
                a[i * n + j] = (a[i * n + j] + (p - f) * a[rk * n + j]) % p;
        }
        ++rk;
    }
    return rk;
}

std::vector<std::uint64_t> residues(const IntMatrix& A, std::uint64_t p) {
    std::vector<std::uint64_t> out(A.rows() * A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            out[i * A.cols() + j] = mpz_fdiv_ui(A(i, j).get_mpz_t(), static_cast<unsigned long>(p));
    return out;
}

std::size_t rank_mod_p(const IntMatrix& A, std::uint64_t p) {
    if (p < 2 || p >= (1ull << 31)) throw ArgumentError("rank_mod_p needs 2 <= p < 2^31");
    return rank_mod_p(residues(A, p), A.rows(), A.cols(), p);
}

IntMatrix kernel_basis(const IntMatrix& A) {
    auto e = column_echelon(A);
    return e.transform.submatrix(0, A.cols(), e.rank, A.cols() - e.rank);
}

std::optional<IntMatrix> solve_in_lattice(const IntMatrix& B, const IntMatrix& Y) {
    if (B.rows() != Y.rows()) throw ArgumentError("solve_in_lattice: row mismatch");
    auto e = column_echelon(B);
    if (e.rank != B.cols()) throw ArgumentError("solve_in_lattice: basis columns are dependent");
    const std::size_t k = e.rank;
    IntMatrix Z(k, Y.cols());
    for (std::size_t c = 0; c < Y.cols(); ++c) {
        std::vector<Integer> residual(Y.rows());
        for (std::size_t i = 0; i < Y.rows(); ++i) residual[i] = Y(i, c);
        // Forward substitution along the pivot rows.
        for (std::size_t t = 0; t < k; ++t) {
            const std::size_t row = e.pivot_rows[t];
            const Integer& piv = e.form(row, t);
            if (!divides(piv, residual[row])) return std::nullopt;
            Integer z;
            mpz_divexact(z.get_mpz_t(), residual[row].get_mpz_t(), piv.get_mpz_t());
            Z(t, c) = z;
            if (sgn(z) != 0)
                for (std::size_t i = row; i < Y.rows(); ++i)
                    if (sgn(e.form(i, t)) != 0) mpz_submul(residual[i].get_mpz_t(), z.get_mpz_t(), e.form(i, t).get_mpz_t());
        }
        for (const auto& r : residual)
            if (sgn(r) != 0) return std::nullopt;
    }
    return e.transform.submatrix(0, B.cols(), 0, k) * Z;
}

CokernelInvariants quotient_invariants(const IntMatrix& basis, const IntMatrix& generators) {
    if (generators.cols() == 0) {
        CokernelInvariants out;
        out.free_rank = basis.cols();
        return out;
    }
    auto coords = solve_in_lattice(basis, generators);
    if (!coords) throw ArgumentError("quotient_invariants: generators are not inside the lattice");
    return cokernel_invariants(*coords);
}

IntMatrix inverse_unimodular(const IntMatrix& A) {
    if (!A.is_square()) throw ArgumentError("inverse of a non-square matrix");
    auto e = column_echelon(A);
    if (e.rank != A.cols()) throw ArgumentError("matrix is singular");
    // A * T = E lower triangular with positive pivots; unimodular iff every pivot is 1.
    for (std::size_t k = 0; k < e.rank; ++k)
        if (e.form(e.pivot_rows[k], k) != 1) throw ArgumentError("matrix is not unimodular");
    auto x = solve_in_lattice(A, IntMatrix::identity(A.rows()));
    if (!x) throw ConstructionError("unimodular inverse failed");
    return *x;
}

}  // namespace flasque
