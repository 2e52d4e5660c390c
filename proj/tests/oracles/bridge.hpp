#pragma once

// Conversions between library values and oracle values.

#include <set>

#include "flasque/group.hpp"
#include "flasque/int_matrix.hpp"
#include "oracles.hpp"

namespace oracle {

inline Mat to_mat(const flasque::IntMatrix& A) {
    Mat m(A.rows(), std::vector<Int>(A.cols()));
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) m[i][j] = A(i, j);
    return m;
}

inline flasque::IntMatrix from_mat(const Mat& m) {
    flasque::IntMatrix A(m.size(), m.empty() ? 0 : m[0].size());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) A(i, j) = m[i][j];
    return A;
}

inline Perm to_perm(const flasque::Permutation& g) {
    Perm p;
    for (int x : g.images()) p.push_back(x - 1);
    return p;
}

inline flasque::Permutation from_perm(const Perm& p) {
    std::vector<int> images;
    for (int x : p) images.push_back(x + 1);
    return flasque::Permutation(images);
}

inline std::set<Perm> element_set(const flasque::FiniteGroup& G) {
    std::set<Perm> out;
    for (const auto& g : G.elements()) out.insert(to_perm(g));
    return out;
}

}  // namespace oracle
