#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flasque/group.hpp"

namespace flasque {

enum class Family { Symmetric, Alternating };

/// The five elementary-abelian constructions used to refute p-invertibility
/// for the norm one lattice of S_n / S_{n-1} and A_n / A_{n-1}.
enum class Proposition { OddPrimeS, EvenS, OddPrimeA, EvenA1, EvenA2 };

std::string proposition_name(Proposition prop);
char family_letter(Family family);
Family parse_family(const std::string& text);

/// An elementary abelian p-subgroup together with its designated generators
/// rho_1, ..., rho_k (the last entry of `rhos` is rho_1 * rho_2 for EvenA2,
/// which has three named elements but rank two).
struct WitnessSubgroup {
    Proposition proposition;
    Family family;
    int n = 0;
    std::uint64_t p = 0;
    FiniteGroup group;
    std::vector<Permutation> rhos;
    /// Rank of the elementary abelian group.
    std::size_t rank = 0;
};

/// Which construction applies to (family, n, p), if any.
/// - OddPrimeS / OddPrimeA: p odd, p | n, n composite.
/// - EvenS: family S, p = 2, n even, n >= 6.
/// - EvenA1: family A, p = 2, 4 | n.
/// - EvenA2: family A, p = 2, n = 2 mod 4, n >= 6.
std::optional<Proposition> applicable_proposition(Family family, int n, std::uint64_t p);

/// Builds the witness subgroup. Throws UnsupportedCase naming the missing
/// hypothesis when no construction covers (family, n, p).
WitnessSubgroup witness_subgroup(Family family, int n, std::uint64_t p);

}  // namespace flasque
