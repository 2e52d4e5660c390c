#pragma once

// Reference Tate cohomology: H^-1(H, M) is the torsion of the coinvariants
// M / I_H M; H^1(H, M) is isomorphic to H^-1(H, M^dual). For permutation
// lattices Mackey plus Shapiro give H^0(H, Z[G/K]) as a sum of Z/|H ∩ gKg^-1|
// over H-orbits on G/K.

#include <map>

#include "bridge.hpp"
#include "flasque/lattice.hpp"

namespace oracle {

inline std::vector<Int> h_minus1(const flasque::FiniteGroup& H, const flasque::GLattice& M) {
    const std::size_t r = M.rank();
    Mat cols(r);
    for (const auto& h : H.elements()) {
        Mat A = to_mat(M.action(h));
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) cols[i].push_back(A[i][j] - (i == j ? 1 : 0));
        }
    }
    if (r == 0) return {};
    return cokernel_torsion(cols);
}

inline std::vector<Int> h1(const flasque::FiniteGroup& H, const flasque::GLattice& M) {
    return h_minus1(H, flasque::dual(M));
}

/// Orders |H ∩ gKg^-1| over the H-orbits on G/K.
inline std::vector<std::uint64_t> mackey_orders(const flasque::FiniteGroup& G, const flasque::FiniteGroup& K,
                                                const flasque::FiniteGroup& H) {
    std::map<std::set<Perm>, int> coset_index;
    std::vector<std::set<Perm>> cosets;
    auto kset = element_set(K);
    for (const auto& g : G.elements()) {
        std::set<Perm> c;
        for (const auto& k : kset) c.insert(compose(to_perm(g), k));
        if (coset_index.emplace(c, static_cast<int>(cosets.size())).second) cosets.push_back(c);
    }
    std::vector<bool> seen(cosets.size(), false);
    std::vector<std::uint64_t> out;
    for (std::size_t c = 0; c < cosets.size(); ++c) {
        if (seen[c]) continue;
        std::set<int> orbit;
        for (const auto& h : H.elements()) {
            std::set<Perm> image;
            for (const auto& x : cosets[c]) image.insert(compose(to_perm(h), x));
            orbit.insert(coset_index.at(image));
        }
        for (int o : orbit) seen[static_cast<std::size_t>(o)] = true;
        out.push_back(H.order() / orbit.size());
    }
    return out;
}

}  // namespace oracle
