#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's linear algebra or group algorithms.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Int = mpz_class;
using Mat = std::vector<std::vector<Int>>;
using Perm = std::vector<int>;  // 0-based images

/// Nonzero invariant factors, by gcd-pivot elimination with Bezout row and
/// column combinations and a final divisibility repair.
inline std::vector<Int> smith_diagonal(Mat a) {
    const std::size_t m = a.size(), n = m ? a[0].size() : 0;
    std::vector<Int> diag;
    std::size_t t = 0;
    while (t < m && t < n) {
        std::size_t pi = m, pj = n;
        for (std::size_t j = t; j < n && pi == m; ++j)
            for (std::size_t i = t; i < m; ++i)
                if (a[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == m) break;
        std::swap(a[t], a[pi]);
        for (auto& row : a) std::swap(row[t], row[pj]);
        for (bool dirty = true; dirty;) {
            dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                if (a[i][t] % a[t][t] == 0) {
                    Int q = a[i][t] / a[t][t];
                    for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
                    continue;
                }
                Int g, s, u;
                mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), a[t][t].get_mpz_t(), a[i][t].get_mpz_t());
                Int x = a[t][t] / g, y = a[i][t] / g;
                for (std::size_t j = t; j < n; ++j) {
                    Int top = s * a[t][j] + u * a[i][j];
                    Int bot = -y * a[t][j] + x * a[i][j];
                    a[t][j] = top;
                    a[i][j] = bot;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                if (a[t][j] % a[t][t] == 0) {
                    Int q = a[t][j] / a[t][t];
                    for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
                    continue;
                }
                dirty = true;
                Int g, s, u;
                mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), a[t][t].get_mpz_t(), a[t][j].get_mpz_t());
                Int x = a[t][t] / g, y = a[t][j] / g;
                for (std::size_t i = t; i < m; ++i) {
                    Int left = s * a[i][t] + u * a[i][j];
                    Int right = -y * a[i][t] + x * a[i][j];
                    a[i][t] = left;
                    a[i][j] = right;
                }
            }
            if (!dirty)
                for (std::size_t i = t + 1; i < m && !dirty; ++i)
                    for (std::size_t j = t + 1; j < n; ++j)
                        if (a[i][j] % a[t][t] != 0) {
                            for (std::size_t k = t; k < n; ++k) a[t][k] += a[i][k];
                            dirty = true;
                            break;
                        }
        }
        diag.push_back(abs(a[t][t]));
        ++t;
    }
    return diag;
}

/// Elementary divisors > 1 of the torsion of Z^m / (column span of a).
inline std::vector<Int> cokernel_torsion(const Mat& a) {
    std::vector<Int> out;
    for (const auto& d : smith_diagonal(a))
        if (d > 1) out.push_back(d);
    return out;
}

/// Multiset of prime powers of a finite abelian group given by any list of
/// cyclic orders.
inline std::multiset<std::uint64_t> primary_parts(const std::vector<Int>& orders) {
    std::multiset<std::uint64_t> out;
    for (Int d : orders) {
        for (std::uint64_t q = 2; d > 1; ++q) {
            std::uint64_t pw = 1;
            while (d % q == 0) {
                d /= q;
                pw *= q;
            }
            if (pw > 1) out.insert(pw);
        }
    }
    return out;
}

inline Perm compose(const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i])];
    return c;
}

inline Perm identity(int n) {
    Perm p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    return p;
}

/// Closure of a generating set.
inline std::set<Perm> closure(int n, const std::vector<Perm>& gens) {
    std::set<Perm> seen{identity(n)};
    std::vector<Perm> frontier{identity(n)};
    while (!frontier.empty()) {
        Perm x = frontier.back();
        frontier.pop_back();
        for (const auto& g : gens) {
            Perm y = compose(g, x);
            if (seen.insert(y).second) frontier.push_back(y);
        }
    }
    return seen;
}

/// Every subgroup generated by at most two elements of the given group.
inline std::set<std::set<Perm>> two_generated_subgroups(int n, const std::set<Perm>& group) {
    std::set<std::set<Perm>> out;
    for (const auto& a : group)
        for (const auto& b : group) out.insert(closure(n, {a, b}));
    return out;
}

/// Orbits of a group on {0..n-1} with their point stabilizers (as element
/// sets), keyed by smallest point.
inline std::vector<std::pair<std::vector<int>, std::set<Perm>>> point_orbits(int n, const std::set<Perm>& group) {
    std::vector<std::pair<std::vector<int>, std::set<Perm>>> out;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int x = 0; x < n; ++x) {
        if (seen[static_cast<std::size_t>(x)]) continue;
        std::set<int> orbit;
        std::set<Perm> stab;
        for (const auto& g : group) {
            orbit.insert(g[static_cast<std::size_t>(x)]);
            if (g[static_cast<std::size_t>(x)] == x) stab.insert(g);
        }
        for (int y : orbit) seen[static_cast<std::size_t>(y)] = true;
        out.emplace_back(std::vector<int>(orbit.begin(), orbit.end()), std::move(stab));
    }
    return out;
}

inline Mat random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    Mat a(rows, std::vector<Int>(cols));
    for (auto& row : a)
        for (auto& x : row) x = dist(rng);
    return a;
}

}  // namespace oracle
