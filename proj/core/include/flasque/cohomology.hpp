#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "flasque/group.hpp"
#include "flasque/lattice.hpp"

namespace flasque {

/// A finite abelian group given by its elementary divisors (all > 1).
struct TateGroup {
    int degree = 0;
    std::vector<Integer> invariants;

    bool is_zero() const { return invariants.empty(); }
    /// e.g. "[2,2]"; "[]" for the zero group.
    std::string to_string() const;
    friend bool operator==(const TateGroup&, const TateGroup&) = default;
};

/// M^H / N_H M.
TateGroup tate_h0(const FiniteGroup& H, const GLattice& M);
/// ker N_H / I_H M.
TateGroup tate_h_minus1(const FiniteGroup& H, const GLattice& M);
/// Z^1(H, M) / B^1(H, M).
TateGroup tate_h1(const FiniteGroup& H, const GLattice& M);
/// Dispatches on degree in {-1, 0, 1}.
TateGroup tate_cohomology(int degree, const FiniteGroup& H, const GLattice& M);

/// Character sum: (1/|G|) sum of traces over the enumerated group G acting on M.
std::size_t fixed_rank(const GLattice& M);

/// Whether H^-1(H, M) vanishes, decided by comparing ranks of
/// [A(h_1) - 1 | ... | A(h_k) - 1] over Q and over F_q for q | |H|, where
/// h_i are the generators of H. `trace_sum` is the sum of tr A(h) over H.
bool h_minus1_vanishes(std::uint64_t order, const std::vector<IntMatrix>& generator_actions, const Integer& trace_sum);

struct FlasqueReport {
    bool holds = true;
    std::size_t subgroups_checked = 0;
    /// First subgroup representative where the relevant cohomology is nonzero.
    std::optional<FiniteGroup> failing_subgroup;
};

/// Ĥ^-1(H, M) = 0 for one H per conjugacy class of subgroups of M.group().
FlasqueReport flasque_report(const GLattice& M, const std::vector<FiniteGroup>& subgroup_reps);
FlasqueReport flasque_report(const GLattice& M, std::size_t limit = kDefaultSubgroupLimit);
/// Ĥ^1(H, M) = 0 for every H, via Ĥ^1(H, M) dual to Ĥ^-1(H, M^dual).
FlasqueReport coflasque_report(const GLattice& M, const std::vector<FiniteGroup>& subgroup_reps);
FlasqueReport coflasque_report(const GLattice& M, std::size_t limit = kDefaultSubgroupLimit);

bool is_flasque(const GLattice& M, std::size_t limit = kDefaultSubgroupLimit);
bool is_coflasque(const GLattice& M, std::size_t limit = kDefaultSubgroupLimit);

/// Same predicates computed from the full Tate groups (slower; used to
/// cross-check the rank test).
bool is_flasque_exact(const GLattice& M, std::size_t limit = kDefaultSubgroupLimit);
bool is_coflasque_exact(const GLattice& M, std::size_t limit = kDefaultSubgroupLimit);

}  // namespace flasque
