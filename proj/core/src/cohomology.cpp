#include "flasque/cohomology.hpp"

#include <algorithm>

#include "flasque/arith.hpp"
#include "flasque/errors.hpp"
#include "flasque/linalg.hpp"

namespace flasque {

std::string TateGroup::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < invariants.size(); ++i) {
        if (i) out += ",";
        out += invariants[i].get_str();
    }
    return out + "]";
}

namespace {

void check_subgroup(const FiniteGroup& H, const GLattice& M) {
    if (!H.is_subgroup_of(M.group())) throw ArgumentError("cohomology: subgroup is not inside the acting group");
    H.elements();
}

// [A(s_1) - 1 | ... | A(s_k) - 1] for the generators of H.
IntMatrix augmentation_image(const FiniteGroup& H, const GLattice& M) {
    const std::size_t r = M.rank();
    IntMatrix out(r, 0);
    for (const auto& s : H.generators()) out = hstack(out, M.action(s) - IntMatrix::identity(r));
    return out;
}

IntMatrix norm_matrix(const FiniteGroup& H, const GLattice& M) {
    IntMatrix N(M.rank(), M.rank());
    for (const auto& h : H.elements()) N = N + M.action(h);
    return N;
}

// Integer kernel of the vertical stack of `blocks`, computed block by block.
IntMatrix kernel_of_stack(std::size_t cols, const std::vector<IntMatrix>& blocks) {
    IntMatrix K = IntMatrix::identity(cols);
    for (const auto& B : blocks) {
        if (K.cols() == 0) break;
        IntMatrix BK = B * K;
        if (BK.is_zero()) continue;
        K = K * kernel_basis(BK);
    }
    return K;
}

TateGroup finish(int degree, const CokernelInvariants& q) {
    if (q.free_rank != 0) throw ConstructionError("Tate cohomology came out infinite");
    return {degree, q.torsion};
}

}  // namespace

TateGroup tate_h0(const FiniteGroup& H, const GLattice& M) {
    check_subgroup(H, M);
    const std::size_t r = M.rank();
    std::vector<IntMatrix> blocks;
    for (const auto& s : H.generators()) blocks.push_back(M.action(s) - IntMatrix::identity(r));
    IntMatrix fixed = kernel_of_stack(r, blocks);
    return finish(0, quotient_invariants(fixed, norm_matrix(H, M)));
}

TateGroup tate_h_minus1(const FiniteGroup& H, const GLattice& M) {
    check_subgroup(H, M);
    IntMatrix ker_norm = kernel_basis(norm_matrix(H, M));
    return finish(-1, quotient_invariants(ker_norm, augmentation_image(H, M)));
}

TateGroup tate_h1(const FiniteGroup& H, const GLattice& M) {
    check_subgroup(H, M);
    const std::size_t r = M.rank(), k = H.generators().size();
    const std::size_t n = H.order();
    if (k == 0 || r == 0) return {1, {}};
    const std::size_t unknowns = k * r;
    std::vector<IntMatrix> gens;
    for (const auto& s : H.generators()) gens.push_back(M.action(s));
    auto select = [&](std::size_t s) {
        IntMatrix E(r, unknowns);
        for (std::size_t i = 0; i < r; ++i) E(i, s * r + i) = 1;
        return E;
    };

    // f(x) as a linear function of (f(s_1), ..., f(s_k)), propagated along
    // the Schreier tree with f(s x) = f(s) + s f(x).
    std::vector<IntMatrix> F(n);
    const auto& order = H.bfs_order();
    F[order[0]] = IntMatrix(r, unknowns);
    for (std::size_t b = 1; b < n; ++b) {
        const std::size_t i = order[b];
        const std::size_t s = H.tree_generator(i);
        F[i] = select(s) + gens[s] * F[H.tree_parent(i)];
    }
    std::vector<IntMatrix> constraints;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t s = 0; s < k; ++s) {
            const std::size_t y = *H.index_of(H.generators()[s] * H.elements()[x]);
            if (y != order[0] && H.tree_parent(y) == x && H.tree_generator(y) == s) continue;
            IntMatrix c = select(s) + gens[s] * F[x] - F[y];
            if (!c.is_zero()) constraints.push_back(std::move(c));
        }
    IntMatrix cocycles = kernel_of_stack(unknowns, constraints);
    IntMatrix coboundaries(0, r);
    for (std::size_t s = 0; s < k; ++s) coboundaries = vstack(coboundaries, gens[s] - IntMatrix::identity(r));
    return finish(1, quotient_invariants(cocycles, coboundaries));
}

TateGroup tate_cohomology(int degree, const FiniteGroup& H, const GLattice& M) {
    switch (degree) {
        case -1: return tate_h_minus1(H, M);
        case 0: return tate_h0(H, M);
        case 1: return tate_h1(H, M);
        default: throw ArgumentError("Tate degree must be -1, 0 or 1");
    }
}

namespace {

Integer trace(const IntMatrix& A) {
    Integer t = 0;
    for (std::size_t i = 0; i < A.rows(); ++i) t += A(i, i);
    return t;
}

}  // namespace

std::size_t fixed_rank(const GLattice& M) {
    Integer sum = 0;
    for (const auto& g : M.group().elements()) sum += trace(M.action(g));
    const auto order = static_cast<unsigned long>(M.group().order());
    if (!mpz_divisible_ui_p(sum.get_mpz_t(), order)) throw ConstructionError("character sum not divisible");
    Integer q = sum / order;
    return q.get_ui();
}

bool h_minus1_vanishes(std::uint64_t order, const std::vector<IntMatrix>& generator_actions, const Integer& trace_sum) {
    if (generator_actions.empty() || order == 1) return true;
    const std::size_t r = generator_actions[0].rows();
    if (r == 0) return true;
    const Integer fixed = trace_sum / static_cast<unsigned long>(order);
    const std::size_t q_rank = r - fixed.get_ui();
    IntMatrix B(r, r * generator_actions.size());
    for (std::size_t k = 0; k < generator_actions.size(); ++k) {
        const auto& A = generator_actions[k];
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) B(i, k * r + j) = i == j ? Integer(A(i, j) - 1) : A(i, j);
    }
    for (auto q : prime_divisors(order))
        if (rank_mod_p(B, q) != q_rank) return false;
    return true;
}

FlasqueReport flasque_report(const GLattice& M, const std::vector<FiniteGroup>& reps) {
    FlasqueReport report;
    const std::size_t r = M.rank();
    if (r == 0) return report;
    const auto& G = M.group();
    std::vector<Integer> traces;
    // Residues of A(g) - 1 per element, for every prime dividing |G|.
    const auto primes = prime_divisors(G.order());
    std::vector<std::vector<std::vector<std::uint64_t>>> reduced(primes.size());
    for (const auto& g : G.elements()) {
        IntMatrix A = M.action(g);
        traces.push_back(trace(A));
        A = A - IntMatrix::identity(r);
        for (std::size_t k = 0; k < primes.size(); ++k) reduced[k].push_back(residues(A, primes[k]));
    }
    for (const auto& H : reps) {
        ++report.subgroups_checked;
        if (H.order() == 1) continue;
        Integer sum = 0;
        for (const auto& h : H.elements()) sum += traces[*G.index_of(h)];
        const std::size_t q_rank = r - Integer(sum / static_cast<unsigned long>(H.order())).get_ui();
        std::vector<std::size_t> gens;
        for (const auto& s : H.generators()) gens.push_back(*G.index_of(s));
        const std::size_t width = r * gens.size();
        bool ok = true;
        for (std::size_t k = 0; k < primes.size() && ok; ++k) {
            if (H.order() % primes[k]) continue;
            std::vector<std::uint64_t> B(r * width);
            for (std::size_t t = 0; t < gens.size(); ++t) {
                const auto& a = reduced[k][gens[t]];
                for (std::size_t i = 0; i < r; ++i)
                    std::copy_n(a.begin() + static_cast<std::ptrdiff_t>(i * r), r,
                                B.begin() + static_cast<std::ptrdiff_t>(i * width + t * r));
            }
            ok = rank_mod_p(std::move(B), r, width, primes[k]) == q_rank;
        }
        if (!ok) {
            report.holds = false;
            report.failing_subgroup = H;
            break;
        }
    }
    return report;
}

FlasqueReport flasque_report(const GLattice& M, std::size_t limit) {
    return flasque_report(M, subgroup_class_representatives(M.group(), limit));
}

FlasqueReport coflasque_report(const GLattice& M, const std::vector<FiniteGroup>& reps) {
    return flasque_report(dual(M), reps);
}

FlasqueReport coflasque_report(const GLattice& M, std::size_t limit) {
    return coflasque_report(M, subgroup_class_representatives(M.group(), limit));
}

bool is_flasque(const GLattice& M, std::size_t limit) { return flasque_report(M, limit).holds; }
bool is_coflasque(const GLattice& M, std::size_t limit) { return coflasque_report(M, limit).holds; }

bool is_flasque_exact(const GLattice& M, std::size_t limit) {
    for (const auto& H : subgroup_class_representatives(M.group(), limit))
        if (!tate_h_minus1(H, M).is_zero()) return false;
    return true;
}

bool is_coflasque_exact(const GLattice& M, std::size_t limit) {
    for (const auto& H : subgroup_class_representatives(M.group(), limit))
        if (!tate_h1(H, M).is_zero()) return false;
    return true;
}

}  // namespace flasque
