#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flasque/group.hpp"
#include "flasque/invertibility.hpp"
#include "flasque/witness.hpp"

namespace flasque {

enum class Rationality { PRetractRational, NotPRetractRational, RetractRational, NotRetractRational, Unknown };

std::string rationality_name(Rationality r);

struct RationalityVerdict {
    /// "S_6 / S_5" style description of the pair.
    std::string subject;
    /// Empty for the all-primes summary.
    std::optional<std::uint64_t> p;
    Rationality verdict = Rationality::Unknown;
    /// One engine decision per prime examined.
    std::vector<std::pair<std::uint64_t, Decision>> traces;
    std::vector<std::string> notes;
};

/// The closed form: n prime, or gcd(p, n) = 1.
bool closed_form_p_retract_rational(int n, std::uint64_t p);

/// Verdict for the norm one torus of (S_n, S_{n-1}) or (A_n, A_{n-1}) at p.
/// Throws ArgumentError for n < 2 and for the degenerate alternating cases
/// n <= 3, ConstructionError if the engine contradicts the closed form.
RationalityVerdict classify_norm_one_family(Family family, int n, std::uint64_t p);

/// Same over every prime dividing |G|.
RationalityVerdict classify_norm_one_family(Family family, int n);

/// H normal: the Sylow p-subgroup of G/H must be cyclic. Otherwise the engine
/// decides and Unknown propagates.
RationalityVerdict classify_general(const FiniteGroup& G, const FiniteGroup& H, std::uint64_t p);

/// Conjunction of classify_general over the primes dividing |G|.
RationalityVerdict retract_summary(const FiniteGroup& G, const FiniteGroup& H);

}  // namespace flasque
