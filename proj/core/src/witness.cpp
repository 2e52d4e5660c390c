#include "flasque/witness.hpp"

#include <optional>

#include "flasque/arith.hpp"
#include "flasque/errors.hpp"

namespace flasque {

std::string proposition_name(Proposition prop) {
    switch (prop) {
        case Proposition::OddPrimeS: return "oddprimeS";
        case Proposition::EvenS: return "evenS";
        case Proposition::OddPrimeA: return "oddprimeA";
        case Proposition::EvenA1: return "evenA1";
        case Proposition::EvenA2: return "evenA2";
    }
    return "?";
}

char family_letter(Family family) { return family == Family::Symmetric ? 'S' : 'A'; }

Family parse_family(const std::string& text) {
    if (text == "S" || text == "s" || text == "symmetric") return Family::Symmetric;
    if (text == "A" || text == "a" || text == "alternating") return Family::Alternating;
    throw ArgumentError("unknown family '" + text + "' (expected S or A)");
}

std::optional<Proposition> applicable_proposition(Family family, int n, std::uint64_t p) {
    if (n < 2 || !is_prime(p)) return std::nullopt;
    const auto un = static_cast<std::uint64_t>(n);
    if (p != 2 && un % p == 0 && !is_prime(un))
        return family == Family::Symmetric ? Proposition::OddPrimeS : Proposition::OddPrimeA;
    if (p == 2 && family == Family::Symmetric && n % 2 == 0 && n >= 6) return Proposition::EvenS;
    if (p == 2 && family == Family::Alternating && n % 4 == 0) return Proposition::EvenA1;
    if (p == 2 && family == Family::Alternating && n % 4 == 2 && n >= 6) return Proposition::EvenA2;
    return std::nullopt;
}

namespace {

std::string missing_hypothesis(Family family, int n, std::uint64_t p) {
    if (!is_prime(p)) return std::to_string(p) + " is not prime";
    const auto un = static_cast<std::uint64_t>(n);
    if (p != 2) {
        if (un % p != 0) return "p = " + std::to_string(p) + " does not divide n = " + std::to_string(n);
        return "n = " + std::to_string(n) + " is prime, not composite";
    }
    if (n % 2 != 0) return "p = 2 but n = " + std::to_string(n) + " is odd";
    if (family == Family::Symmetric) return "p = 2 needs n >= 6 for the symmetric family (n = 4 has its own route)";
    return "p = 2 needs 4 | n, or n = 2 mod 4 with n >= 6";
}

}  // namespace

WitnessSubgroup witness_subgroup(Family family, int n, std::uint64_t p) {
    auto prop = applicable_proposition(family, n, p);
    if (!prop)
        throw UnsupportedCase(std::string("no witness construction for (") + family_letter(family) + ", " +
                              std::to_string(n) + ", " + std::to_string(p) + "): " + missing_hypothesis(family, n, p));
    if (n > kMaxDegree) throw SizeError("degree " + std::to_string(n) + " exceeds " + std::to_string(kMaxDegree));

    WitnessSubgroup w{*prop, family, n, p, FiniteGroup::trivial(n), {}, 0};
    const int ip = static_cast<int>(p);
    switch (*prop) {
        case Proposition::OddPrimeS:
        case Proposition::OddPrimeA: {
            // rho_i = ((i-1)p+1 ... ip)
            for (int i = 1; i <= n / ip; ++i) {
                std::vector<int> cycle;
                for (int j = (i - 1) * ip + 1; j <= i * ip; ++j) cycle.push_back(j);
                w.rhos.push_back(Permutation::from_cycles(n, {cycle}));
            }
            w.rank = w.rhos.size();
            break;
        }
        case Proposition::EvenS: {
            // rho_i = (2i-1 2i)
            for (int i = 1; i <= n / 2; ++i) w.rhos.push_back(Permutation::from_cycles(n, {{2 * i - 1, 2 * i}}));
            w.rank = w.rhos.size();
            break;
        }
        case Proposition::EvenA1: {
            // Blocks of four letters {4k+1..4k+4}; rho_1 = (a b)(c d), rho_2 = (a c)(b d) on each block.
            std::vector<std::vector<int>> c1, c2;
            for (int b = 0; b < n / 4; ++b) {
                int a = 4 * b + 1;
                c1.push_back({a, a + 1});
                c1.push_back({a + 2, a + 3});
                c2.push_back({a, a + 2});
                c2.push_back({a + 1, a + 3});
            }
            w.rhos = {Permutation::from_cycles(n, c1), Permutation::from_cycles(n, c2)};
            w.rank = 2;
            break;
        }
        case Proposition::EvenA2: {
            // rho_1 = (1 2)(3 4), rho_2 = (1 2)(5 6)(7 8)...(n-1 n), rho_3 = rho_1 rho_2.
            std::vector<std::vector<int>> c2{{1, 2}};
            for (int a = 5; a < n; a += 2) c2.push_back({a, a + 1});
            Permutation r1 = Permutation::from_cycles(n, {{1, 2}, {3, 4}});
            Permutation r2 = Permutation::from_cycles(n, c2);
            w.rhos = {r1, r2, r1 * r2};
            w.rank = 2;
            break;
        }
    }
    std::vector<Permutation> gens = w.rhos;
    if (*prop == Proposition::EvenA2) gens.pop_back();
    w.group = FiniteGroup::generated(n, std::move(gens), "P_" + proposition_name(*prop) + "(" + std::to_string(n) + ")");
    if (!is_elementary_abelian(w.group, p)) throw ConstructionError("witness subgroup is not elementary abelian");
    std::uint64_t expected = 1;
    for (std::size_t i = 0; i < w.rank; ++i) expected *= p;
    if (w.group.order() != expected) throw ConstructionError("witness subgroup has the wrong order");
    if (family == Family::Alternating)
        for (const auto& r : w.rhos)
            if (!r.is_even()) throw ConstructionError("witness generator is not in A_n");
    return w;
}

}  // namespace flasque
