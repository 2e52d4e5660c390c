#include "flasque/int_matrix.hpp"

#include <sstream>

#include "flasque/errors.hpp"

namespace flasque {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw ArgumentError("ragged matrix rows");
        std::size_t j = 0;
        for (long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
    std::size_t c = rows.empty() ? cols : rows.front().size();
    IntMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw ArgumentError("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::column_vector(const std::vector<Integer>& entries) {
    IntMatrix m(entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::submatrix(std::size_t row0, std::size_t nrows, std::size_t col0, std::size_t ncols) const {
    if (row0 + nrows > rows_ || col0 + ncols > cols_) throw ArgumentError("submatrix out of range");
    IntMatrix s(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) s(i, j) = (*this)(row0 + i, col0 + j);
    return s;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& cols) const {
    IntMatrix s(rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(i, cols.at(j));
    return s;
}

bool IntMatrix::is_zero() const {
    for (const auto& v : data_)
        if (sgn(v) != 0) return false;
    return true;
}

Integer IntMatrix::determinant() const {
    if (!is_square()) throw ArgumentError("determinant of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && sgn(a(swap, k)) == 0) ++swap;
            if (swap == n) return 0;
            a.swap_rows(k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = v;
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

bool IntMatrix::is_unimodular() const {
    if (!is_square()) return false;
    return abs(determinant()) == 1;
}

bool IntMatrix::is_permutation_matrix() const {
    if (!is_square()) return false;
    std::vector<int> col_hits(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        int row_hits = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            const auto& v = (*this)(i, j);
            if (v == 1) {
                ++row_hits;
                ++col_hits[j];
            } else if (sgn(v) != 0) {
                return false;
            }
        }
        if (row_hits != 1) return false;
    }
    for (int h : col_hits)
        if (h != 1) return false;
    return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) mpz_swap((*this)(a, j).get_mpz_t(), (*this)(b, j).get_mpz_t());
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) mpz_swap((*this)(i, a).get_mpz_t(), (*this)(i, b).get_mpz_t());
}

void IntMatrix::row_submul(std::size_t dst, std::size_t src, const Integer& q) {
    if (sgn(q) == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) {
        const auto& s = (*this)(src, j);
        if (sgn(s) != 0) mpz_submul((*this)(dst, j).get_mpz_t(), q.get_mpz_t(), s.get_mpz_t());
    }
}

void IntMatrix::col_submul(std::size_t dst, std::size_t src, const Integer& q) {
    if (sgn(q) == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) {
        const auto& s = (*this)(i, src);
        if (sgn(s) != 0) mpz_submul((*this)(i, dst).get_mpz_t(), q.get_mpz_t(), s.get_mpz_t());
    }
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) mpz_neg((*this)(r, j).get_mpz_t(), (*this)(r, j).get_mpz_t());
}

void IntMatrix::negate_col(std::size_t c) {
    for (std::size_t i = 0; i < rows_; ++i) mpz_neg((*this)(i, c).get_mpz_t(), (*this)(i, c).get_mpz_t());
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw ArgumentError("matrix product shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const auto& bkj = b(k, j);
                if (sgn(bkj) != 0) mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), bkj.get_mpz_t());
            }
        }
    return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ArgumentError("matrix sum shape mismatch");
    IntMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ArgumentError("matrix difference shape mismatch");
    IntMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
}

IntMatrix operator*(const Integer& s, const IntMatrix& a) {
    IntMatrix c = a;
    for (auto& v : c.data_) v *= s;
    return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ',';
            os << (*this)(i, j);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw ArgumentError("hstack row mismatch");
    IntMatrix c(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
    }
    return c;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols()) throw ArgumentError("vstack column mismatch");
    IntMatrix c(a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) c(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i) c(a.rows() + i, j) = b(i, j);
    }
    return c;
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    IntMatrix out(r, c);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
        r0 += b.rows();
        c0 += b.cols();
    }
    return out;
}

IntMatrix permutation_matrix(const Permutation& perm) {
    const auto n = static_cast<std::size_t>(perm.degree());
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(static_cast<std::size_t>(perm(static_cast<int>(i) + 1) - 1), i) = 1;
    return m;
}

}  // namespace flasque
