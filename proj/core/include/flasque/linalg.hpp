#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flasque/int_matrix.hpp"

namespace flasque {

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_r, d_i > 0.
struct SmithForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    /// Nonzero diagonal entries d_1, ..., d_rank.
    std::vector<Integer> diagonal;
    std::size_t rank = 0;
};

/// Pivot rule: smallest nonzero absolute value in the active block, ties
/// broken by lowest row and then lowest column, so the transforms are
/// reproducible run to run.
SmithForm smith_normal_form(const IntMatrix& A);

/// Nonzero invariant factors only; skips the transforms.
std::vector<Integer> smith_diagonal(const IntMatrix& A);

struct CokernelInvariants {
    /// Elementary divisors greater than one, in divisibility order.
    std::vector<Integer> torsion;
    std::size_t free_rank = 0;
};

/// Structure of Z^rows / (column span of A).
CokernelInvariants cokernel_invariants(const IntMatrix& A);

/// Whether A x = b has a solution with every denominator prime to p.
bool solvable_at_p(const IntMatrix& A, const IntMatrix& b, std::uint64_t p);

/// A * transform = form, with `form` in column echelon shape: column k < rank
/// has its leading nonzero (positive) entry in row pivot_rows[k], strictly
/// increasing in k, and columns >= rank vanish.
struct ColumnEchelon {
    IntMatrix form;
    IntMatrix transform;
    /// Inverse of `transform`; only filled when requested.
    IntMatrix inverse_transform;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_rows;
};

ColumnEchelon column_echelon(const IntMatrix& A, bool track_inverse = false);

/// Column Hermite normal form: echelon form with entries left of each pivot
/// reduced into [0, pivot). Zero columns are dropped.
IntMatrix hermite_normal_form(const IntMatrix& A);

std::size_t rank(const IntMatrix& A);
std::size_t rank_mod_p(const IntMatrix& A, std::uint64_t p);
/// Same on a row-major m x n array already reduced into [0, p).
std::size_t rank_mod_p(std::vector<std::uint64_t> entries, std::size_t m, std::size_t n, std::uint64_t p);
/// Entries of A reduced into [0, p), row-major.
std::vector<std::uint64_t> residues(const IntMatrix& A, std::uint64_t p);

/// Columns form a basis of the integer kernel {x : A x = 0}. The basis is
/// saturated (Z^cols / span is torsion free).
IntMatrix kernel_basis(const IntMatrix& A);

/// Integer X with B X = Y, or nullopt if some column of Y is outside the
/// lattice spanned by the (independent) columns of B.
std::optional<IntMatrix> solve_in_lattice(const IntMatrix& B, const IntMatrix& Y);

/// Structure of L / S where L is spanned by the independent columns of
/// `basis` and S by the columns of `generators` (which must lie in L).
CokernelInvariants quotient_invariants(const IntMatrix& basis, const IntMatrix& generators);

/// Inverse of a unimodular matrix; throws ArgumentError otherwise.
IntMatrix inverse_unimodular(const IntMatrix& A);

}  // namespace flasque
