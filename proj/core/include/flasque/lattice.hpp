#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "flasque/group.hpp"
#include "flasque/int_matrix.hpp"

namespace flasque {

/// g -> matrix of g in the lattice basis (column convention: A(g) e_j is the
/// image of the j-th basis vector).
using ActionEvaluator = std::function<IntMatrix(const Permutation&)>;

/// g -> permutation of {1..rank} describing how g moves basis vectors.
using BasisPermutation = std::function<Permutation(const Permutation&)>;

/// Marks a lattice whose basis is permuted by the group.
struct PermutationBasisTag {
    std::vector<std::string> labels;
    BasisPermutation basis_action;
};

/// Remembers that a lattice is I_{G/H} = ker(eps) or J_{G/H} = I_{G/H}^dual
/// in the standard basis, together with the coset permutation lattice it
/// came from. Survives restriction to subgroups.
struct NormOneOrigin {
    enum class Kind { AugmentationKernel, NormOne };
    Kind kind = Kind::NormOne;
    std::size_t coset_count = 0;
    std::vector<std::string> coset_labels;
    BasisPermutation coset_action;
};

/// A free Z-module of finite rank with a linear action of `group`.
///
/// The action is given by an evaluator valid on every element of the group,
/// so lattices over large symmetric groups can still be restricted to small
/// subgroups without enumerating the big group.
class GLattice {
public:
    GLattice(FiniteGroup group, std::size_t rank, ActionEvaluator action, std::string label = {});

    /// Lattice defined by one matrix per generator of `group` (which must be
    /// enumerated so that every element has a word). Checks the homomorphism
    /// property and throws ArgumentError when it fails.
    static GLattice from_generator_matrices(FiniteGroup group, std::vector<IntMatrix> matrices,
                                            std::string label = {});

    const FiniteGroup& group() const { return d_->group; }
    std::size_t rank() const { return d_->rank; }
    const std::string& label() const { return d_->label; }

    IntMatrix action(const Permutation& g) const { return d_->action(g); }
    const std::vector<IntMatrix>& generator_matrices() const { return d_->generator_matrices; }
    /// Matrices of every element of an enumerated subgroup H, in H.elements() order.
    std::vector<IntMatrix> element_matrices(const FiniteGroup& H) const;

    const std::optional<PermutationBasisTag>& permutation_tag() const { return d_->tag; }
    const std::optional<NormOneOrigin>& norm_one_origin() const { return d_->origin; }

    GLattice with_tag(PermutationBasisTag tag) const;
    GLattice with_origin(NormOneOrigin origin) const;
    GLattice relabeled(std::string label) const;

private:
    struct Data {
        FiniteGroup group;
        std::size_t rank = 0;
        ActionEvaluator action;
        std::string label;
        std::vector<IntMatrix> generator_matrices;
        std::optional<PermutationBasisTag> tag;
        std::optional<NormOneOrigin> origin;
    };
    explicit GLattice(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

/// Checks that every generator matrix is unimodular and, for enumerated
/// groups, that A(s g) = A(s) A(g) for every generator s and element g.
bool is_valid_action(const GLattice& M);

/// Z[G/H] with basis the cosets in CosetSpace order.
GLattice permutation_lattice(const FiniteGroup& G, const FiniteGroup& H);
/// Direct sum of Z[G/H_i] over the list, tagged.
GLattice permutation_lattice(const FiniteGroup& G, const std::vector<FiniteGroup>& stabilizers);
/// Rank one, trivial action.
GLattice trivial_lattice(const FiniteGroup& G);
/// Rank one, g acts by its sign as a permutation.
GLattice sign_lattice(const FiniteGroup& G);
GLattice zero_lattice(const FiniteGroup& G);

struct AugmentationSequence {
    GLattice ambient;
    /// 1 x rank, all ones.
    IntMatrix epsilon;
    /// I_{G/H}, basis e_i - e_r for i < r.
    GLattice kernel;
    /// rank x (rank - 1).
    IntMatrix inclusion;
};

AugmentationSequence augmentation_sequence(const FiniteGroup& G, const FiniteGroup& H);

/// J_{G/H}, the dual of the augmentation kernel.
GLattice norm_one_lattice(const FiniteGroup& G, const FiniteGroup& H);

/// A^dual(g) = A(g^-1)^T.
GLattice dual(const GLattice& M);

/// Same module viewed over a subgroup P.
GLattice restrict(const GLattice& M, const FiniteGroup& P);

GLattice direct_sum(const GLattice& a, const GLattice& b);

/// Sub- or quotient-lattice transport: given B (rank x k) whose columns span
/// a G-stable saturated sublattice, the action on that sublattice in the
/// basis B. `left_inverse` (k x rank) must satisfy left_inverse * B = 1.
GLattice sublattice(const GLattice& M, IntMatrix basis, IntMatrix left_inverse, std::string label = {});

struct OrbitSummand {
    FiniteGroup stabilizer;
    std::size_t multiplicity = 0;
};

struct BasisOrbit {
    /// 0-based basis indices, the first one is the orbit representative.
    std::vector<std::size_t> points;
    FiniteGroup stabilizer;
};

/// Orbits of P (enumerated, P <= M.group()) on the permutation basis of M,
/// ordered by smallest point.
std::vector<BasisOrbit> basis_orbits(const GLattice& M, const FiniteGroup& P);

/// Stabilizers of orbit representatives grouped by equality, sorted by
/// decreasing order and then by element list.
std::vector<OrbitSummand> orbit_decomposition(const GLattice& M, const FiniteGroup& P);

/// Equality of two decompositions as multisets of (subgroup, multiplicity).
bool same_decomposition(const std::vector<OrbitSummand>& a, const std::vector<OrbitSummand>& b);

/// Tagged lattices over the same enumerated group with the same stabilizer
/// multiset up to conjugacy.
bool is_perm_isomorphic(const GLattice& a, const GLattice& b);

/// J_P (+) Z[P]^(t-1) for a restricted norm one lattice whose coset set is
/// P-free with t orbits.
struct FreeRestrictionDecomposition {
    std::size_t t = 0;
    GLattice jp;
    GLattice free_part;
    /// Columns are the new basis in the old coordinates.
    IntMatrix basis_change;
    IntMatrix inverse;
};

/// Throws UnsupportedCase when the coset set is not P-free with t orbits or
/// the lattice carries no norm one origin; ConstructionError if the
/// intertwining check fails.
FreeRestrictionDecomposition free_restriction_decomposition(const GLattice& J, std::size_t t);

}  // namespace flasque
