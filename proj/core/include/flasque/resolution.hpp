#pragma once

#include <cstddef>
#include <vector>

#include "flasque/cohomology.hpp"
#include "flasque/lattice.hpp"

namespace flasque {

enum class CoverStrategy {
    /// Walk subgroup classes from the largest order down and only add
    /// Z[G/H] summands for generators of coker(Q^H -> M^H).
    Greedy,
    /// One Z[G/H] summand for every basis vector of M^H, for every class.
    FullFixedBasis,
};

struct ResolutionOptions {
    CoverStrategy strategy = CoverStrategy::Greedy;
    std::size_t subgroup_limit = kDefaultSubgroupLimit;
    /// Run the flasque / coflasque check on the constructed lattice.
    bool verify = true;
};

/// 0 -> C -> Q -> M -> 0 with Q permutation and C coflasque.
struct CoflasqueCover {
    GLattice M;
    GLattice Q;
    GLattice C;
    /// Q -> M, rank(M) x rank(Q).
    IntMatrix projection;
    /// C -> Q, rank(Q) x rank(C).
    IntMatrix inclusion;
    /// Stabilizer of each Z[G/H] summand of Q, in order.
    std::vector<FiniteGroup> summands;
};

/// 0 -> M -> P -> F -> 0 with P permutation and F flasque.
struct FlasqueResolution {
    GLattice M;
    GLattice P;
    GLattice F;
    /// M -> P, rank(P) x rank(M).
    IntMatrix inject;
    /// P -> F, rank(F) x rank(P).
    IntMatrix project;
    std::vector<FiniteGroup> summands;
    std::size_t subgroups_checked = 0;
};

CoflasqueCover coflasque_cover(const GLattice& M, const std::vector<FiniteGroup>& subgroup_reps,
                               const ResolutionOptions& options = {});
CoflasqueCover coflasque_cover(const GLattice& M, const ResolutionOptions& options = {});

/// Dual of the coflasque cover of the dual. Verification failures throw
/// ConstructionError.
FlasqueResolution flasque_resolution(const GLattice& M, const std::vector<FiniteGroup>& subgroup_reps,
                                     const ResolutionOptions& options = {});
FlasqueResolution flasque_resolution(const GLattice& M, const ResolutionOptions& options = {});

/// Representative F of the flasque class of M.
GLattice rho(const GLattice& M, const ResolutionOptions& options = {});

/// Exactness, equivariance and rank bookkeeping of a resolution. Does not
/// rerun the flasque test.
bool is_exact(const FlasqueResolution& res);

}  // namespace flasque
