#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "flasque/permutation.hpp"

namespace flasque {

using Integer = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols = 0);
    /// A single column vector.
    static IntMatrix column_vector(const std::vector<Integer>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix transpose() const;
    IntMatrix submatrix(std::size_t row0, std::size_t nrows, std::size_t col0, std::size_t ncols) const;
    IntMatrix column(std::size_t j) const { return submatrix(0, rows_, j, 1); }
    IntMatrix select_columns(const std::vector<std::size_t>& cols) const;

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    /// Fraction-free (Bareiss) determinant of a square matrix.
    Integer determinant() const;
    bool is_unimodular() const;
    bool is_permutation_matrix() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] -= q * row[src]
    void row_submul(std::size_t dst, std::size_t src, const Integer& q);
    /// col[dst] -= q * col[src]
    void col_submul(std::size_t dst, std::size_t src, const Integer& q);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const Integer& s, const IntMatrix& a);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);
/// Matrix of the permutation sending basis vector i to basis vector perm(i+1)-1.
IntMatrix permutation_matrix(const Permutation& perm);

}  // namespace flasque
