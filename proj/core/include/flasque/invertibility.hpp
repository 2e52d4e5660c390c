#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flasque/group.hpp"
#include "flasque/lattice.hpp"
#include "flasque/witness.hpp"

namespace flasque {

enum class Verdict { PInvertible, NotPInvertible, Unknown };

std::string verdict_name(Verdict v);

enum class CertificateTag {
    OddPHyperplanes,
    EvenSHyperplanes,
    KleinFreeJP,
    KleinThreeLines,
    Endo11Thm43,
    /// Noncyclic Sylow subgroup acting freely on G/H with H a Hall subgroup.
    HallFreeJP,
};

std::string tag_name(CertificateTag tag);

/// Evidence that rho(J_{G/H}) is not p-invertible: a p-subgroup P and the
/// orbit structure of G/H under P that one of the encoded criteria rejects.
struct Certificate {
    CertificateTag criterion = CertificateTag::OddPHyperplanes;
    /// Proposition label, e.g. "oddprimeS"; "mainS" for the n = 4 case.
    std::string proposition;
    FiniteGroup witness_subgroup;
    /// Designated elements rho_i of the witness.
    std::vector<Permutation> designated;
    std::size_t rank = 0;
    /// orbit_decomposition of Z[G/H] restricted to the witness.
    std::vector<OrbitSummand> decomposition;
    /// Orbit count t when the restriction is free and J = J_P + Z[P]^(t-1)
    /// was exhibited.
    std::optional<std::size_t> free_rank;
};

struct RuleApplication {
    std::string name;
    std::string paper_ref;
    /// Whether the rule's hypotheses held; a rule that fires decides the verdict
    /// unless an earlier rule already did.
    bool fired = false;
    Verdict outcome = Verdict::Unknown;
    /// Ordered key/value evidence.
    std::vector<std::pair<std::string, std::string>> witness;
};

struct Decision {
    Verdict verdict = Verdict::Unknown;
    std::vector<RuleApplication> trace;
    std::vector<Certificate> certificates;
};

/// Restriction of M to a Sylow p-subgroup of its group.
struct SylowReduction {
    FiniteGroup sylow;
    GLattice lattice;
};

SylowReduction reduce_to_sylow(const GLattice& M, std::uint64_t p);

/// PInvertible when p does not divide [G:H].
std::optional<RuleApplication> rule_coprime_index(const FiniteGroup& G, const FiniteGroup& H, std::uint64_t p);
/// PInvertible when a Sylow p-subgroup of G is cyclic.
std::optional<RuleApplication> rule_cyclic_sylow(const FiniteGroup& G, std::uint64_t p);
/// NotPInvertible when p | [G:H], H is Hall and the Sylow p-subgroup is not
/// cyclic. The certificate is appended to `certificates`.
std::optional<RuleApplication> rule_hall_necessity(const FiniteGroup& G, const FiniteGroup& H, std::uint64_t p,
                                                   std::vector<Certificate>* certificates = nullptr);

struct SplittingWitness {
    std::uint64_t index = 0;
    FiniteGroup sylow_of_h;
    /// eps(s(1)) = 1 for s(1) = (1/index) * sum of cosets.
    bool section_is_right_inverse = false;
    bool section_is_equivariant = false;
    /// 1/index lies in Z_(p).
    bool p_integral = false;
    /// The integral section 1 -> H (the coset fixed by the Sylow subgroup of H)
    /// is also equivariant.
    bool integral_section_equivariant = false;

    bool ok() const {
        return section_is_right_inverse && section_is_equivariant && p_integral && integral_section_equivariant;
    }
};

/// Splitting of 0 -> I -> Z[G/H] -> Z -> 0 over Z_(p) as P-lattices, P a
/// Sylow p-subgroup of H. Throws ArgumentError when p divides [G:H].
SplittingWitness verify_splitting_prime_to_p(const FiniteGroup& G, const FiniteGroup& H, std::uint64_t p);

/// Orbit decomposition stated by the proposition behind a witness subgroup.
std::vector<OrbitSummand> stated_decomposition(const WitnessSubgroup& w);

/// Certificate for (family, n, p), recomputing the orbit decomposition and
/// comparing it with the stated one. `stated` overrides the statement (used
/// for fault injection). Throws UnsupportedCase when nothing covers the case
/// and ConstructionError on any mismatch.
Certificate build_certificate(Family family, int n, std::uint64_t p,
                              const std::optional<std::vector<OrbitSummand>>& stated = std::nullopt);

/// Whether (G, H) is (S_n, S_{n-1}) or (A_n, A_{n-1}) with H fixing n.
std::optional<std::pair<Family, int>> recognize_family_pair(const FiniteGroup& G, const FiniteGroup& H);

/// Rules in fixed order: coprime index, cyclic Sylow, Hall necessity, family
/// certificates. Every rule is evaluated and recorded; the first one that
/// fires decides, and later ones must agree (ConstructionError otherwise).
Decision decide_p_invertibility(const FiniteGroup& G, const FiniteGroup& H, std::uint64_t p);

/// Verdict on rho_K(M) at p for a lattice M = J_{G/H} or I_{G/H} restricted
/// to a subgroup K (M must carry its norm one origin). Works on a Sylow
/// p-subgroup of K and only uses the criteria whose shape it recognizes.
Decision decide_restricted_lattice(const GLattice& M, std::uint64_t p);

}  // namespace flasque
