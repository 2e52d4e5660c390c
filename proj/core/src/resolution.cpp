#include "flasque/resolution.hpp"

#include "flasque/errors.hpp"
#include "flasque/linalg.hpp"

namespace flasque {

namespace {

// Columns are the H-orbit sums of the permutation basis of Q.
IntMatrix orbit_sums(const GLattice& Q, const FiniteGroup& H) {
    const std::size_t q = Q.rank();
    std::vector<std::size_t> root(q);
    for (std::size_t i = 0; i < q; ++i) root[i] = i;
    auto find = [&](std::size_t x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (const auto& s : H.generators()) {
        Permutation a = Q.permutation_tag()->basis_action(s);
        for (std::size_t i = 0; i < q; ++i) {
            std::size_t x = find(i), y = find(static_cast<std::size_t>(a(static_cast<int>(i) + 1) - 1));
            if (x != y) root[std::max(x, y)] = std::min(x, y);
        }
    }
    std::vector<std::size_t> column(q, q);
    std::size_t count = 0;
    for (std::size_t i = 0; i < q; ++i)
        if (find(i) == i) column[i] = count++;
    IntMatrix O(q, count);
    for (std::size_t i = 0; i < q; ++i) O(i, column[find(i)]) = 1;
    return O;
}

IntMatrix fixed_basis(const GLattice& M, const FiniteGroup& H) {
    const std::size_t r = M.rank();
    IntMatrix K = IntMatrix::identity(r);
    for (const auto& s : H.generators()) {
        if (K.cols() == 0) break;
        IntMatrix BK = (M.action(s) - IntMatrix::identity(r)) * K;
        if (!BK.is_zero()) K = K * kernel_basis(BK);
    }
    return K;
}

// pi restricted to the summand Z[G/H] generated by m: column c is g_c m.
IntMatrix summand_columns(const GLattice& M, const CosetSpace& cosets, const IntMatrix& m) {
    IntMatrix out(M.rank(), 0);
    for (const auto& g : cosets.representatives()) out = hstack(out, M.action(g) * m);
    return out;
}

}  // namespace

CoflasqueCover coflasque_cover(const GLattice& M, const std::vector<FiniteGroup>& reps, const ResolutionOptions& options) {
    const FiniteGroup& G = M.group();
    G.elements();
    std::vector<FiniteGroup> summands;
    IntMatrix pi(M.rank(), 0);
    GLattice Q = zero_lattice(G);

    for (const auto& H : reps) {
        IntMatrix K = fixed_basis(M, H);
        if (K.cols() == 0) continue;
        std::vector<IntMatrix> chosen;
        if (options.strategy == CoverStrategy::FullFixedBasis) {
            for (std::size_t j = 0; j < K.cols(); ++j) chosen.push_back(K.column(j));
        } else {
            IntMatrix image = pi * orbit_sums(Q, H);
            auto coords = solve_in_lattice(K, image);
            if (!coords) throw ConstructionError("image of Q^H is not inside M^H");
            auto snf = smith_normal_form(*coords);
            IntMatrix Uinv = inverse_unimodular(snf.U);
            for (std::size_t i = 0; i < K.cols(); ++i)
                if (i >= snf.rank || snf.diagonal[i] != 1) chosen.push_back(K * Uinv.column(i));
        }
        if (chosen.empty()) continue;
        CosetSpace cosets(G, H);
        for (const auto& m : chosen) {
            pi = hstack(pi, summand_columns(M, cosets, m));
            summands.push_back(H);
        }
        Q = permutation_lattice(G, summands);
    }

    auto echelon = column_echelon(pi, true);
    if (echelon.rank != M.rank()) throw ConstructionError("coflasque cover is not surjective");
    const std::size_t q = pi.cols(), c = q - echelon.rank;
    IntMatrix incl = echelon.transform.submatrix(0, q, echelon.rank, c);
    IntMatrix left = echelon.inverse_transform.submatrix(echelon.rank, c, 0, q);
    GLattice C = c == 0 ? zero_lattice(G) : sublattice(Q, incl, left, "C");
    if (options.verify && !coflasque_report(C, reps).holds)
        throw ConstructionError("kernel of the cover is not coflasque");
    return {M, std::move(Q), std::move(C), std::move(pi), std::move(incl), std::move(summands)};
}

CoflasqueCover coflasque_cover(const GLattice& M, const ResolutionOptions& options) {
    return coflasque_cover(M, subgroup_class_representatives(M.group(), options.subgroup_limit), options);
}

bool is_exact(const FlasqueResolution& res) {
    const std::size_t r = res.M.rank(), p = res.P.rank(), f = res.F.rank();
    if (r + f != p) return false;
    if (res.inject.rows() != p || res.inject.cols() != r) return false;
    if (res.project.rows() != f || res.project.cols() != p) return false;
    if (!(res.project * res.inject).is_zero()) return false;
    auto all_ones = [](const IntMatrix& A, std::size_t expected_rank) {
        auto d = smith_diagonal(A);
        if (d.size() != expected_rank) return false;
        for (const auto& x : d)
            if (x != 1) return false;
        return true;
    };
    if (!all_ones(res.inject, r) || !all_ones(res.project, f)) return false;
    const auto& gens = res.M.group().generators();
    for (std::size_t s = 0; s < gens.size(); ++s) {
        if (res.P.generator_matrices()[s] * res.inject != res.inject * res.M.generator_matrices()[s]) return false;
        if (res.F.generator_matrices()[s] * res.project != res.project * res.P.generator_matrices()[s]) return false;
    }
    return true;
}

FlasqueResolution flasque_resolution(const GLattice& M, const std::vector<FiniteGroup>& reps,
                                     const ResolutionOptions& options) {
    ResolutionOptions inner = options;
    inner.verify = false;
    CoflasqueCover cover = coflasque_cover(dual(M), reps, inner);
    FlasqueResolution res{M,
                          dual(cover.Q).relabeled("P"),
                          dual(cover.C).relabeled("F"),
                          cover.projection.transpose(),
                          cover.inclusion.transpose(),
                          cover.summands,
                          0};
    if (!is_exact(res)) throw ConstructionError("flasque resolution is not exact");
    if (options.verify) {
        auto report = flasque_report(res.F, reps);
        res.subgroups_checked = report.subgroups_checked;
        if (!report.holds)
            throw ConstructionError("resolution cokernel is not flasque at subgroup " +
                                    report.failing_subgroup->label());
    }
    return res;
}

FlasqueResolution flasque_resolution(const GLattice& M, const ResolutionOptions& options) {
    return flasque_resolution(M, subgroup_class_representatives(M.group(), options.subgroup_limit), options);
}

GLattice rho(const GLattice& M, const ResolutionOptions& options) { return flasque_resolution(M, options).F; }

}  // namespace flasque
