#include "flasque/lattice.hpp"

#include <algorithm>
#include <map>

#include "flasque/errors.hpp"
#include "flasque/linalg.hpp"

namespace flasque {

GLattice::GLattice(FiniteGroup group, std::size_t rank, ActionEvaluator action, std::string label) {
    auto d = std::make_shared<Data>();
    d->group = std::move(group);
    d->rank = rank;
    d->action = std::move(action);
    d->label = std::move(label);
    for (const auto& s : d->group.generators()) {
        IntMatrix m = d->action(s);
        if (m.rows() != rank || m.cols() != rank)
            throw ConstructionError("action matrix has the wrong shape for lattice " + d->label);
        d->generator_matrices.push_back(std::move(m));
    }
    d_ = std::move(d);
}

GLattice GLattice::from_generator_matrices(FiniteGroup group, std::vector<IntMatrix> matrices, std::string label) {
    if (matrices.size() != group.generators().size())
        throw ArgumentError("expected one matrix per generator (" + std::to_string(group.generators().size()) + ")");
    if (!group.is_enumerated()) throw SizeError("lattice from generator matrices needs an enumerated group");
    std::size_t rank = matrices.empty() ? 0 : matrices[0].rows();
    for (const auto& m : matrices)
        if (m.rows() != rank || m.cols() != rank) throw ArgumentError("generator matrices must be square of one size");
    auto mats = std::make_shared<const std::vector<IntMatrix>>(std::move(matrices));
    FiniteGroup g = group;
    GLattice out(
        std::move(group), rank,
        [mats, g, rank](const Permutation& x) {
            IntMatrix acc = IntMatrix::identity(rank);
            auto w = g.word(x);
            for (auto it = w.rbegin(); it != w.rend(); ++it) acc = (*mats)[*it] * acc;
            return acc;
        },
        std::move(label));
    if (!is_valid_action(out)) throw ArgumentError("generator matrices do not define a group action");
    return out;
}

std::vector<IntMatrix> GLattice::element_matrices(const FiniteGroup& H) const {
    std::vector<IntMatrix> out;
    out.reserve(H.order());
    for (const auto& h : H.elements()) out.push_back(action(h));
    return out;
}

GLattice GLattice::with_tag(PermutationBasisTag tag) const {
    auto d = std::make_shared<Data>(*d_);
    d->tag = std::move(tag);
    return GLattice(std::move(d));
}

GLattice GLattice::with_origin(NormOneOrigin origin) const {
    auto d = std::make_shared<Data>(*d_);
    d->origin = std::move(origin);
    return GLattice(std::move(d));
}

GLattice GLattice::relabeled(std::string label) const {
    auto d = std::make_shared<Data>(*d_);
    d->label = std::move(label);
    return GLattice(std::move(d));
}

bool is_valid_action(const GLattice& M) {
    for (const auto& m : M.generator_matrices())
        if (!m.is_unimodular()) return false;
    const auto& G = M.group();
    if (!G.is_enumerated()) return true;
    for (std::size_t s = 0; s < G.generators().size(); ++s)
        for (const auto& g : G.elements())
            if (M.action(G.generators()[s] * g) != M.generator_matrices()[s] * M.action(g)) return false;
    return true;
}

namespace {

std::string group_name(const FiniteGroup& G) { return G.label().empty() ? std::string("G") : G.label(); }

GLattice tagged_from_basis_action(const FiniteGroup& G, std::size_t rank, BasisPermutation basis_action,
                                  std::vector<std::string> labels, std::string label) {
    GLattice M(
        G, rank, [basis_action](const Permutation& g) { return permutation_matrix(basis_action(g)); },
        std::move(label));
    return M.with_tag({std::move(labels), std::move(basis_action)});
}

}  // namespace

GLattice permutation_lattice(const FiniteGroup& G, const FiniteGroup& H) {
    if (!H.is_subgroup_of(G)) throw ArgumentError("permutation_lattice: H is not a subgroup of G");
    auto cosets = std::make_shared<const CosetSpace>(G, H);
    return tagged_from_basis_action(
        G, cosets->size(), [cosets](const Permutation& g) { return cosets->action(g); }, cosets->labels(),
        "Z[" + group_name(G) + "/" + group_name(H) + "]");
}

GLattice permutation_lattice(const FiniteGroup& G, const std::vector<FiniteGroup>& stabilizers) {
    std::vector<std::shared_ptr<const CosetSpace>> spaces;
    std::vector<std::string> labels;
    std::size_t rank = 0;
    std::string name;
    for (const auto& H : stabilizers) {
        if (!H.is_subgroup_of(G)) throw ArgumentError("permutation_lattice: stabilizer is not a subgroup of G");
        spaces.push_back(std::make_shared<const CosetSpace>(G, H));
        for (const auto& l : spaces.back()->labels()) labels.push_back(group_name(H) + ":" + l);
        rank += spaces.back()->size();
        name += (name.empty() ? "" : "+") + std::string("Z[") + group_name(G) + "/" + group_name(H) + "]";
    }
    auto action = [spaces, rank](const Permutation& g) {
        std::vector<int> images;
        images.reserve(rank);
        int offset = 0;
        for (const auto& c : spaces) {
            Permutation a = c->action(g);
            for (int x : a.images()) images.push_back(x + offset);
            offset += static_cast<int>(c->size());
        }
        return rank == 0 ? Permutation() : Permutation(std::move(images));
    };
    if (rank == 0) return zero_lattice(G);
    return tagged_from_basis_action(G, rank, action, std::move(labels), name);
}

GLattice trivial_lattice(const FiniteGroup& G) {
    return permutation_lattice(G, G).relabeled("Z");
}

GLattice sign_lattice(const FiniteGroup& G) {
    return GLattice(
        G, 1, [](const Permutation& g) { return IntMatrix::from_rows({{g.is_even() ? 1L : -1L}}); }, "Z^sign");
}

GLattice zero_lattice(const FiniteGroup& G) {
    GLattice M(G, 0, [](const Permutation&) { return IntMatrix(0, 0); }, "0");
    return M.with_tag({{}, [](const Permutation&) { return Permutation(); }});
}

AugmentationSequence augmentation_sequence(const FiniteGroup& G, const FiniteGroup& H) {
    GLattice ambient = permutation_lattice(G, H);
    const std::size_t r = ambient.rank();
    IntMatrix eps(1, r);
    for (std::size_t i = 0; i < r; ++i) eps(0, i) = 1;
    IntMatrix incl(r, r - 1);
    for (std::size_t i = 0; i + 1 < r; ++i) {
        incl(i, i) = 1;
        incl(r - 1, i) = -1;
    }
    BasisPermutation coset_action = ambient.permutation_tag()->basis_action;
    GLattice kernel(
        G, r - 1,
        [coset_action, r](const Permutation& g) {
            Permutation s = coset_action(g);
            IntMatrix m(r - 1, r - 1);
            const auto last = static_cast<std::size_t>(s(static_cast<int>(r)) - 1);
            for (std::size_t c = 0; c + 1 < r; ++c) {
                const auto to = static_cast<std::size_t>(s(static_cast<int>(c) + 1) - 1);
                if (to + 1 < r) m(to, c) += 1;
                if (last + 1 < r) m(last, c) -= 1;
            }
            return m;
        },
        "I_{" + group_name(G) + "/" + group_name(H) + "}");
    kernel = kernel.with_origin(
        {NormOneOrigin::Kind::AugmentationKernel, r, ambient.permutation_tag()->labels, std::move(coset_action)});
    return {std::move(ambient), std::move(eps), std::move(kernel), std::move(incl)};
}

GLattice norm_one_lattice(const FiniteGroup& G, const FiniteGroup& H) {
    return dual(augmentation_sequence(G, H).kernel).relabeled("J_{" + group_name(G) + "/" + group_name(H) + "}");
}

GLattice dual(const GLattice& M) {
    GLattice D(
        M.group(), M.rank(), [M](const Permutation& g) { return M.action(g.inverse()).transpose(); },
        M.label().empty() ? std::string{} : M.label() + "^o");
    if (M.permutation_tag()) D = D.with_tag(*M.permutation_tag());
    if (M.norm_one_origin()) {
        NormOneOrigin o = *M.norm_one_origin();
        o.kind = o.kind == NormOneOrigin::Kind::NormOne ? NormOneOrigin::Kind::AugmentationKernel
                                                        : NormOneOrigin::Kind::NormOne;
        D = D.with_origin(std::move(o));
    }
    return D;
}

GLattice restrict(const GLattice& M, const FiniteGroup& P) {
    if (!P.is_subgroup_of(M.group())) throw ArgumentError("restrict: not a subgroup of the acting group");
    GLattice R(
        P, M.rank(), [M](const Permutation& g) { return M.action(g); },
        M.label() + "|" + group_name(P));
    if (M.permutation_tag()) R = R.with_tag(*M.permutation_tag());
    if (M.norm_one_origin()) R = R.with_origin(*M.norm_one_origin());
    return R;
}

GLattice direct_sum(const GLattice& a, const GLattice& b) {
    if (!(a.group() == b.group())) throw ArgumentError("direct_sum: lattices over different groups");
    GLattice S(
        a.group(), a.rank() + b.rank(),
        [a, b](const Permutation& g) { return block_diagonal({a.action(g), b.action(g)}); },
        a.label() + "+" + b.label());
    if (a.permutation_tag() && b.permutation_tag()) {
        auto ta = *a.permutation_tag(), tb = *b.permutation_tag();
        auto labels = ta.labels;
        labels.insert(labels.end(), tb.labels.begin(), tb.labels.end());
        const std::size_t ra = a.rank(), rb = b.rank();
        BasisPermutation act = [ta, tb, ra, rb](const Permutation& g) {
            std::vector<int> images;
            if (ra) images = ta.basis_action(g).images();
            if (rb) {
                Permutation pb = tb.basis_action(g);
                for (int x : pb.images()) images.push_back(x + static_cast<int>(ra));
            }
            return images.empty() ? Permutation() : Permutation(std::move(images));
        };
        S = S.with_tag({std::move(labels), std::move(act)});
    }
    return S;
}

GLattice sublattice(const GLattice& M, IntMatrix basis, IntMatrix left_inverse, std::string label) {
    if (basis.rows() != M.rank() || left_inverse.cols() != M.rank() || left_inverse.rows() != basis.cols())
        throw ArgumentError("sublattice: shape mismatch");
    if (left_inverse * basis != IntMatrix::identity(basis.cols()))
        throw ArgumentError("sublattice: left inverse does not invert the basis");
    const std::size_t k = basis.cols();
    auto B = std::make_shared<const IntMatrix>(std::move(basis));
    auto L = std::make_shared<const IntMatrix>(std::move(left_inverse));
    GLattice S(
        M.group(), k, [M, B, L](const Permutation& g) { return *L * (M.action(g) * *B); }, std::move(label));
    for (std::size_t s = 0; s < S.generator_matrices().size(); ++s)
        if (M.generator_matrices()[s] * *B != *B * S.generator_matrices()[s])
            throw ArgumentError("sublattice: span is not stable under the group");
    return S;
}

std::vector<BasisOrbit> basis_orbits(const GLattice& M, const FiniteGroup& P) {
    if (!M.permutation_tag()) throw ArgumentError("basis_orbits needs a permutation lattice");
    if (!P.is_subgroup_of(M.group())) throw ArgumentError("basis_orbits: not a subgroup of the acting group");
    const auto& act = M.permutation_tag()->basis_action;
    const std::size_t r = M.rank();
    std::vector<Permutation> gens;
    for (const auto& s : P.generators()) gens.push_back(act(s));
    std::vector<Permutation> element_actions;
    for (const auto& h : P.elements()) element_actions.push_back(act(h));

    std::vector<bool> seen(r, false);
    std::vector<BasisOrbit> out;
    for (std::size_t x = 0; x < r; ++x) {
        if (seen[x]) continue;
        std::vector<std::size_t> points{x};
        seen[x] = true;
        for (std::size_t head = 0; head < points.size(); ++head)
            for (const auto& s : gens) {
                auto y = static_cast<std::size_t>(s(static_cast<int>(points[head]) + 1) - 1);
                if (!seen[y]) {
                    seen[y] = true;
                    points.push_back(y);
                }
            }
        std::vector<Permutation> fixing;
        for (std::size_t i = 0; i < element_actions.size(); ++i)
            if (element_actions[i].fixes(static_cast<int>(x) + 1)) fixing.push_back(P.elements()[i]);
        out.push_back({std::move(points), subgroup_from_elements(P, std::move(fixing))});
    }
    return out;
}

std::vector<OrbitSummand> orbit_decomposition(const GLattice& M, const FiniteGroup& P) {
    std::map<std::vector<Permutation>, OrbitSummand> grouped;
    for (auto& orbit : basis_orbits(M, P)) {
        auto key = orbit.stabilizer.elements();
        auto it = grouped.find(key);
        if (it == grouped.end())
            grouped.emplace(std::move(key), OrbitSummand{std::move(orbit.stabilizer), 1});
        else
            ++it->second.multiplicity;
    }
    std::vector<OrbitSummand> out;
    for (auto& [key, s] : grouped) out.push_back(std::move(s));
    std::stable_sort(out.begin(), out.end(), [](const OrbitSummand& a, const OrbitSummand& b) {
        return a.stabilizer.order() > b.stabilizer.order();
    });
    return out;
}

bool same_decomposition(const std::vector<OrbitSummand>& a, const std::vector<OrbitSummand>& b) {
    auto normalize = [](const std::vector<OrbitSummand>& v) {
        std::map<std::vector<Permutation>, std::size_t> m;
        for (const auto& s : v)
            if (s.multiplicity) m[s.stabilizer.elements()] += s.multiplicity;
        return m;
    };
    return normalize(a) == normalize(b);
}

bool is_perm_isomorphic(const GLattice& a, const GLattice& b) {
    if (!a.permutation_tag() || !b.permutation_tag())
        throw ArgumentError("is_perm_isomorphic is only defined for permutation lattices");
    if (!(a.group() == b.group())) throw ArgumentError("is_perm_isomorphic: lattices over different groups");
    if (a.rank() != b.rank()) return false;
    const auto& G = a.group();
    auto classes = [&](const GLattice& M) {
        std::map<std::vector<std::uint32_t>, std::size_t> m;
        for (const auto& orbit : basis_orbits(M, G)) ++m[conjugacy_class_key(G, orbit.stabilizer)];
        return m;
    };
    return classes(a) == classes(b);
}

FreeRestrictionDecomposition free_restriction_decomposition(const GLattice& J, std::size_t t) {
    if (!J.norm_one_origin()) throw UnsupportedCase("free_restriction_decomposition needs a norm one lattice");
    if (t == 0) throw ArgumentError("multiplicity must be positive");
    const auto& origin = *J.norm_one_origin();
    const FiniteGroup& P = J.group();
    const std::size_t order = P.order();
    const std::size_t r = origin.coset_count;
    if (r != t * order)
        throw UnsupportedCase("coset set of size " + std::to_string(r) + " is not free of rank " + std::to_string(t));

    // Orbits of P on cosets; each must be regular.
    const auto& els = P.elements();
    std::vector<Permutation> acts;
    for (const auto& h : els) acts.push_back(origin.coset_action(h));
    std::vector<bool> seen(r, false);
    std::vector<std::size_t> reps;
    for (std::size_t x = 0; x < r; ++x) {
        if (seen[x]) continue;
        reps.push_back(x);
        for (const auto& a : acts) {
            auto y = static_cast<std::size_t>(a(static_cast<int>(x) + 1) - 1);
            if (seen[y]) throw UnsupportedCase("restriction to " + P.label() + " is not free");
            seen[y] = true;
        }
    }
    if (reps.size() != t) throw UnsupportedCase("restriction has " + std::to_string(reps.size()) + " orbits, not t");

    auto image = [&](std::size_t h, std::size_t x) {
        return static_cast<std::size_t>(acts[h](static_cast<int>(x) + 1) - 1);
    };
    // New basis of I in the coordinates e_i - e_r (i < r): the first r - 1
    // entries of the ambient vector.
    IntMatrix T(r - 1, r - 1);
    std::size_t col = 0;
    auto put = [&](std::size_t plus, std::size_t minus) {
        if (plus + 1 < r) T(plus, col) += 1;
        if (minus + 1 < r) T(minus, col) -= 1;
        ++col;
    };
    for (std::size_t h = 0; h + 1 < order; ++h) put(image(h, reps[0]), image(order - 1, reps[0]));
    for (std::size_t j = 1; j < t; ++j)
        for (std::size_t h = 0; h < order; ++h) put(image(h, reps[j]), image(h, reps[0]));
    if (!T.is_unimodular()) throw ConstructionError("free restriction basis is not unimodular");

    GLattice jp = norm_one_lattice(P, FiniteGroup::trivial(P.degree()));
    GLattice free_part = t > 1 ? permutation_lattice(P, std::vector<FiniteGroup>(t - 1, FiniteGroup::trivial(P.degree())))
                               : zero_lattice(P);
    if (origin.kind == NormOneOrigin::Kind::AugmentationKernel) jp = dual(jp);

    IntMatrix S, Sinv;
    if (origin.kind == NormOneOrigin::Kind::AugmentationKernel) {
        S = T;
        Sinv = inverse_unimodular(T);
    } else {
        Sinv = T.transpose();
        S = inverse_unimodular(Sinv);
    }
    for (std::size_t s = 0; s < P.generators().size(); ++s) {
        IntMatrix expected = block_diagonal({jp.generator_matrices()[s], free_part.generator_matrices()[s]});
        if (Sinv * J.generator_matrices()[s] * S != expected)
            throw ConstructionError("free restriction basis change does not intertwine the action");
    }
    return {t, std::move(jp), std::move(free_part), std::move(S), std::move(Sinv)};
}

}  // namespace flasque
