#include "flasque/invertibility.hpp"

#include <algorithm>
#include <numeric>

#include "flasque/arith.hpp"
#include "flasque/errors.hpp"
#include "flasque/linalg.hpp"

namespace flasque {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::PInvertible: return "PInvertible";
        case Verdict::NotPInvertible: return "NotPInvertible";
        case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

std::string tag_name(CertificateTag tag) {
    switch (tag) {
        case CertificateTag::OddPHyperplanes: return "ODD_P_HYPERPLANES";
        case CertificateTag::EvenSHyperplanes: return "EVEN_S_HYPERPLANES";
        case CertificateTag::KleinFreeJP: return "KLEIN_FREE_JP";
        case CertificateTag::KleinThreeLines: return "KLEIN_THREE_LINES";
        case CertificateTag::Endo11Thm43: return "ENDO11_THM43";
        case CertificateTag::HallFreeJP: return "FREE_JP";
    }
    return "?";
}

namespace {

constexpr std::size_t kExplicitDecompositionLimit = 600;

std::string generators_text(const FiniteGroup& P) {
    std::string out = "<";
    for (std::size_t i = 0; i < P.generators().size(); ++i) {
        if (i) out += ", ";
        out += P.generators()[i].to_cycle_string();
    }
    return out + ">";
}

std::string decomposition_text(const std::vector<OrbitSummand>& d) {
    std::string out;
    for (const auto& s : d) {
        if (!out.empty()) out += " + ";
        out += "Z[P/" + (s.stabilizer.order() == 1 ? std::string("1") : generators_text(s.stabilizer)) + "]";
        if (s.multiplicity != 1) out += "^" + std::to_string(s.multiplicity);
    }
    return out.empty() ? "0" : out;
}

bool is_p_power(std::uint64_t n, std::uint64_t p) {
    while (n > 1 && n % p == 0) n /= p;
    return n == 1;
}

std::size_t elementary_rank(const FiniteGroup& P, std::uint64_t p) {
    std::size_t m = 0;
    for (std::uint64_t n = P.order(); n > 1; n /= p) ++m;
    return m;
}

// Stabilizers are m distinct subgroups of index p in an elementary abelian
// group of rank m, each with multiplicity one, with trivial intersection.
bool hyperplane_shape(const FiniteGroup& P, std::uint64_t p, const std::vector<OrbitSummand>& d) {
    if (!is_elementary_abelian(P, p) || !is_p_power(P.order(), p)) return false;
    const std::size_t m = elementary_rank(P, p);
    if (d.size() != m) return false;
    std::vector<Permutation> common = P.elements();
    for (const auto& s : d) {
        if (s.multiplicity != 1 || s.stabilizer.order() * p != P.order()) return false;
        std::vector<Permutation> keep;
        std::set_intersection(common.begin(), common.end(), s.stabilizer.elements().begin(),
                              s.stabilizer.elements().end(), std::back_inserter(keep));
        common = std::move(keep);
    }
    return common.size() == 1;
}

// Klein four group with the three order-2 subgroups as stabilizers, two of
// them with multiplicity one.
bool three_lines_shape(const FiniteGroup& P, const std::vector<OrbitSummand>& d) {
    if (P.order() != 4 || !is_elementary_abelian(P, 2) || d.size() != 3) return false;
    std::size_t ones = 0;
    for (const auto& s : d) {
        if (s.stabilizer.order() != 2) return false;
        if (s.multiplicity == 1) ++ones;
    }
    return ones >= 2;
}

bool free_shape(const std::vector<OrbitSummand>& d) {
    return d.size() == 1 && d[0].stabilizer.order() == 1;
}

// Coset permutation lattice of a norm one origin, as a tagged lattice over P.
GLattice coset_lattice(const NormOneOrigin& origin, const FiniteGroup& P) {
    BasisPermutation act = origin.coset_action;
    GLattice Z(
        P, origin.coset_count, [act](const Permutation& g) { return permutation_matrix(act(g)); },
        "Z[cosets]");
    return Z.with_tag({origin.coset_labels, act});
}

FiniteGroup klein_in_s4() {
    return FiniteGroup::generated(
        4, {Permutation::from_cycles(4, {{1, 2}, {3, 4}}), Permutation::from_cycles(4, {{1, 3}, {2, 4}})},
        "V_4");
}

FiniteGroup family_group(Family family, int n) {
    return family == Family::Symmetric ? FiniteGroup::symmetric(n) : FiniteGroup::alternating(n);
}

std::optional<std::size_t> exhibit_free_decomposition(const GLattice& J, const FiniteGroup& P, std::size_t t) {
    if (J.rank() > kExplicitDecompositionLimit) return std::nullopt;
    free_restriction_decomposition(restrict(J, P), t);
    return t;
}

}  // namespace

SylowReduction reduce_to_sylow(const GLattice& M, std::uint64_t p) {
    FiniteGroup P = is_p_power(M.group().order(), p) ? M.group() : sylow_subgroup(M.group(), p);
    return {P, restrict(M, P)};
}

std::optional<RuleApplication> rule_coprime_index(const FiniteGroup& G, const FiniteGroup& H, std::uint64_t p) {
    if (!is_prime(p)) throw ArgumentError(std::to_string(p) + " is not prime");
    const std::uint64_t index = index_of_subgroup(G, H);
    if (index % p == 0) return std::nullopt;
    RuleApplication r{"coprime", "Prop coprime", true, Verdict::PInvertible, {}};
    r.witness.emplace_back("index", std::to_string(index));
    r.witness.emplace_back("p", std::to_string(p));
    auto split = verify_splitting_prime_to_p(G, H, p);
    r.witness.emplace_back("sylow_of_H_order", std::to_string(split.sylow_of_h.order()));
    r.witness.emplace_back("splitting", split.ok() ? "verified" : "FAILED");
    if (!split.ok()) throw ConstructionError("splitting check failed for a coprime index");
    return r;
}

std::optional<RuleApplication> rule_cyclic_sylow(const FiniteGroup& G, std::uint64_t p) {
    if (!is_prime(p)) throw ArgumentError(std::to_string(p) + " is not prime");
    FiniteGroup P = sylow_subgroup(G, p);
    if (!is_cyclic(P)) return std::nullopt;
    RuleApplication r{"cyclic_sylow", "Prop coprime", true, Verdict::PInvertible, {}};
    r.witness.emplace_back("sylow_order", std::to_string(P.order()));
    r.witness.emplace_back("sylow", generators_text(P));
    return r;
}

std::optional<RuleApplication> rule_hall_necessity(const FiniteGroup& G, const FiniteGroup& H, std::uint64_t p,
                                                   std::vector<Certificate>* certificates) {
    if (!is_prime(p)) throw ArgumentError(std::to_string(p) + " is not prime");
    const std::uint64_t index = index_of_subgroup(G, H);
    if (index % p != 0 || !is_hall(G, H)) return std::nullopt;
    FiniteGroup P = sylow_subgroup(G, p);
    if (is_cyclic(P)) return std::nullopt;

    Certificate c;
    c.criterion = CertificateTag::HallFreeJP;
    c.proposition = "hall_necessity";
    c.witness_subgroup = P;
    c.designated = P.generators();
    c.rank = P.generators().size();
    c.decomposition = orbit_decomposition(permutation_lattice(G, H), P);
    if (!free_shape(c.decomposition) || c.decomposition[0].multiplicity * P.order() != index)
        throw ConstructionError("Sylow subgroup does not act freely on the cosets of a Hall subgroup");
    const std::size_t t = c.decomposition[0].multiplicity;
    c.free_rank = exhibit_free_decomposition(norm_one_lattice(G, H), P, t);

    RuleApplication r{"hall_necessity", "Prop hall_necessity", true, Verdict::NotPInvertible, {}};
    r.witness.emplace_back("sylow", generators_text(P));
    r.witness.emplace_back("sylow_order", std::to_string(P.order()));
    r.witness.emplace_back("free_orbits", std::to_string(t));
    r.witness.emplace_back("criterion", tag_name(c.criterion));
    if (certificates) certificates->push_back(std::move(c));
    return r;
}

SplittingWitness verify_splitting_prime_to_p(const FiniteGroup& G, const FiniteGroup& H, std::uint64_t p) {
    if (!is_prime(p)) throw ArgumentError(std::to_string(p) + " is not prime");
    SplittingWitness w;
    w.index = index_of_subgroup(G, H);
    if (w.index % p == 0)
        throw ArgumentError("p = " + std::to_string(p) + " divides the index " + std::to_string(w.index));
    w.sylow_of_h = sylow_subgroup(H, p);
    GLattice Z = permutation_lattice(G, H);
    CosetSpace cosets(G, H);
    const std::size_t r = Z.rank();

    // s(1) = (1/index) * ones; work with ones and the scalar 1/index separately.
    IntMatrix ones(r, 1), eps(1, r), base(r, 1);
    for (std::size_t i = 0; i < r; ++i) {
        ones(i, 0) = 1;
        eps(0, i) = 1;
    }
    base(cosets.base_coset(), 0) = 1;
    w.section_is_right_inverse = (eps * ones)(0, 0) == static_cast<unsigned long>(w.index);
    w.p_integral = solvable_at_p(IntMatrix::from_rows({{static_cast<long>(w.index)}}), IntMatrix::from_rows({{1}}), p);
    w.section_is_equivariant = true;
    w.integral_section_equivariant = (eps * base)(0, 0) == 1;
    for (const auto& g : w.sylow_of_h.generators()) {
        IntMatrix A = Z.action(g);
        if (A * ones != ones) w.section_is_equivariant = false;
        if (A * base != base) w.integral_section_equivariant = false;
    }
    return w;
}

std::vector<OrbitSummand> stated_decomposition(const WitnessSubgroup& w) {
    const FiniteGroup& P = w.group;
    auto sub = [&](std::vector<Permutation> gens) { return subgroup_generated(P, std::move(gens)); };
    std::vector<OrbitSummand> out;
    switch (w.proposition) {
        case Proposition::OddPrimeS:
        case Proposition::OddPrimeA:
        case Proposition::EvenS:
            // P_i = <rho_j : j != i>
            for (std::size_t i = 0; i < w.rhos.size(); ++i) {
                std::vector<Permutation> gens;
                for (std::size_t j = 0; j < w.rhos.size(); ++j)
                    if (j != i) gens.push_back(w.rhos[j]);
                out.push_back({sub(gens), 1});
            }
            break;
        case Proposition::EvenA1:
            out.push_back({FiniteGroup::trivial(w.n), static_cast<std::size_t>(w.n / 4)});
            break;
        case Proposition::EvenA2:
            out.push_back({sub({w.rhos[0]}), static_cast<std::size_t>(w.n / 2 - 2)});
            out.push_back({sub({w.rhos[1]}), 1});
            out.push_back({sub({w.rhos[2]}), 1});
            break;
    }
    return out;
}

Certificate build_certificate(Family family, int n, std::uint64_t p,
                              const std::optional<std::vector<OrbitSummand>>& stated) {
    if (!is_prime(p)) throw ArgumentError(std::to_string(p) + " is not prime");
    const FiniteGroup G = family_group(family, n);
    const FiniteGroup H = point_stabilizer(G, n);
    const GLattice Z = permutation_lattice(G, H);
    Certificate c;

    if (family == Family::Symmetric && n == 4 && p == 2) {
        FiniteGroup V = klein_in_s4();
        c.criterion = CertificateTag::Endo11Thm43;
        c.proposition = "mainS";
        c.witness_subgroup = V;
        c.designated = V.generators();
        c.rank = 2;
        c.decomposition = orbit_decomposition(Z, V);
        auto expected = stated.value_or(std::vector<OrbitSummand>{{FiniteGroup::trivial(4), 1}});
        if (!same_decomposition(c.decomposition, expected))
            throw ConstructionError("mainS (n = 4): orbit decomposition " + decomposition_text(c.decomposition) +
                                    " differs from the stated " + decomposition_text(expected));
        c.free_rank = exhibit_free_decomposition(norm_one_lattice(G, H), V, 1);
        return c;
    }

    WitnessSubgroup w = witness_subgroup(family, n, p);
    c.proposition = proposition_name(w.proposition);
    c.witness_subgroup = w.group;
    c.designated = w.rhos;
    c.rank = w.rank;
    c.decomposition = orbit_decomposition(Z, w.group);
    auto expected = stated.value_or(stated_decomposition(w));
    if (!same_decomposition(c.decomposition, expected))
        throw ConstructionError(c.proposition + ": orbit decomposition " + decomposition_text(c.decomposition) +
                                " differs from the stated " + decomposition_text(expected));

    switch (w.proposition) {
        case Proposition::OddPrimeS:
        case Proposition::OddPrimeA:
            c.criterion = CertificateTag::OddPHyperplanes;
            if (p == 2 || w.rank < 2 || !hyperplane_shape(w.group, p, c.decomposition))
                throw ConstructionError(c.proposition + ": hyperplane criterion hypotheses fail");
            break;
        case Proposition::EvenS:
            c.criterion = CertificateTag::EvenSHyperplanes;
            if (p != 2 || w.rank < 3 || !hyperplane_shape(w.group, p, c.decomposition))
                throw ConstructionError(c.proposition + ": hyperplane criterion hypotheses fail");
            break;
        case Proposition::EvenA1:
            c.criterion = CertificateTag::KleinFreeJP;
            if (!free_shape(c.decomposition) || is_cyclic(w.group))
                throw ConstructionError(c.proposition + ": free Klein criterion hypotheses fail");
            c.free_rank = exhibit_free_decomposition(norm_one_lattice(G, H), w.group, c.decomposition[0].multiplicity);
            break;
        case Proposition::EvenA2:
            c.criterion = CertificateTag::KleinThreeLines;
            if (!three_lines_shape(w.group, c.decomposition))
                throw ConstructionError(c.proposition + ": three lines criterion hypotheses fail");
            break;
    }
    return c;
}

std::optional<std::pair<Family, int>> recognize_family_pair(const FiniteGroup& G, const FiniteGroup& H) {
    if (G.kind() == FiniteGroup::Kind::Generic || H.kind() != G.kind()) return std::nullopt;
    const int n = G.degree();
    if (static_cast<int>(G.support().size()) != n || static_cast<int>(H.support().size()) != n - 1) return std::nullopt;
    for (int i = 0; i + 1 < n; ++i)
        if (H.support()[static_cast<std::size_t>(i)] != i + 1) return std::nullopt;
    return std::make_pair(G.kind() == FiniteGroup::Kind::Symmetric ? Family::Symmetric : Family::Alternating, n);
}

namespace {

void record(Decision& d, RuleApplication r) {
    if (r.fired) {
        if (d.verdict == Verdict::Unknown)
            d.verdict = r.outcome;
        else if (d.verdict != r.outcome)
            throw ConstructionError("rule " + r.name + " contradicts an earlier rule");
    }
    d.trace.push_back(std::move(r));
}

RuleApplication not_applicable(std::string name, std::string ref, std::string why) {
    RuleApplication r{std::move(name), std::move(ref), false, Verdict::Unknown, {}};
    r.witness.emplace_back("skipped", std::move(why));
    return r;
}

}  // namespace

Decision decide_p_invertibility(const FiniteGroup& G, const FiniteGroup& H, std::uint64_t p) {
    if (!is_prime(p)) throw ArgumentError(std::to_string(p) + " is not prime");
    Decision d;
    const std::uint64_t index = index_of_subgroup(G, H);

    if (auto r = rule_coprime_index(G, H, p))
        record(d, std::move(*r));
    else
        record(d, not_applicable("coprime", "Prop coprime", "p divides [G:H] = " + std::to_string(index)));

    if (auto r = rule_cyclic_sylow(G, p))
        record(d, std::move(*r));
    else
        record(d, not_applicable("cyclic_sylow", "Prop coprime", "Sylow subgroup is not cyclic"));

    if (auto r = rule_hall_necessity(G, H, p, &d.certificates))
        record(d, std::move(*r));
    else
        record(d, not_applicable("hall_necessity", "Prop hall_necessity",
                                 index % p ? "p does not divide [G:H]"
                                 : !is_hall(G, H) ? "H is not a Hall subgroup"
                                                  : "Sylow subgroup is cyclic"));

    auto family = recognize_family_pair(G, H);
    if (!family) {
        record(d, not_applicable("family", "Theorem intromain", "(G, H) is not (S_n, S_n-1) or (A_n, A_n-1)"));
    } else {
        const auto [fam, n] = *family;
        const bool n4 = fam == Family::Symmetric && n == 4 && p == 2;
        auto prop = applicable_proposition(fam, n, p);
        if (!prop && !n4) {
            record(d, not_applicable("family", "Theorem intromain", "no proposition covers this (family, n, p)"));
        } else {
            Certificate c = build_certificate(fam, n, p);
            RuleApplication r{n4 ? "endo11_thm43" : c.proposition,
                              n4 ? "Theorem mainS (n = 4)" : "Prop " + c.proposition,
                              true,
                              Verdict::NotPInvertible,
                              {}};
            r.witness.emplace_back("witness", generators_text(c.witness_subgroup));
            r.witness.emplace_back("order", std::to_string(c.witness_subgroup.order()));
            r.witness.emplace_back("decomposition", decomposition_text(c.decomposition));
            r.witness.emplace_back("criterion", tag_name(c.criterion));
            if (c.free_rank) r.witness.emplace_back("free_rank", std::to_string(*c.free_rank));
            record(d, std::move(r));
            RuleApplication lift{"lemma22", "Lemma lemma22", true, Verdict::NotPInvertible, {}};
            lift.witness.emplace_back("from", "rho_P not invertible for P = " + c.witness_subgroup.label());
            record(d, std::move(lift));
            d.certificates.push_back(std::move(c));
        }
    }
    if (d.verdict == Verdict::NotPInvertible && d.certificates.empty())
        throw ConstructionError("negative verdict without a certificate");
    return d;
}

Decision decide_restricted_lattice(const GLattice& M, std::uint64_t p) {
    if (!is_prime(p)) throw ArgumentError(std::to_string(p) + " is not prime");
    Decision d;
    if (M.permutation_tag()) {
        RuleApplication r{"permutation", "Prop coprime", true, Verdict::PInvertible, {}};
        r.witness.emplace_back("reason", "permutation lattices have zero flasque class");
        record(d, std::move(r));
        return d;
    }
    auto [P, restricted] = reduce_to_sylow(M, p);
    RuleApplication reduce{"lemma22", "Lemma lemma22", false, Verdict::Unknown, {}};
    reduce.witness.emplace_back("sylow_order", std::to_string(P.order()));
    record(d, std::move(reduce));

    if (is_cyclic(P)) {
        RuleApplication r{"cyclic_sylow", "Prop coprime", true, Verdict::PInvertible, {}};
        r.witness.emplace_back("sylow", generators_text(P));
        record(d, std::move(r));
        return d;
    }
    if (!M.norm_one_origin()) {
        record(d, not_applicable("shape", "Theorem intromain", "lattice has no norm one origin"));
        return d;
    }
    const auto& origin = *M.norm_one_origin();
    auto decomposition = orbit_decomposition(coset_lattice(origin, P), P);

    for (const auto& s : decomposition)
        if (s.stabilizer.order() == P.order()) {
            RuleApplication r{"fixed_coset", "Prop coprime", true, Verdict::PInvertible, {}};
            r.witness.emplace_back("reason", "P fixes a coset, so the augmentation sequence splits over P");
            record(d, std::move(r));
            return d;
        }
    if (origin.kind != NormOneOrigin::Kind::NormOne) {
        record(d, not_applicable("shape", "Theorem intromain", "negative criteria are stated for J only"));
        return d;
    }

    Certificate c;
    c.witness_subgroup = P;
    c.designated = P.generators();
    c.rank = P.generators().size();
    c.decomposition = decomposition;
    std::string name;
    if (free_shape(decomposition)) {
        c.criterion = P.order() == 4 ? CertificateTag::KleinFreeJP : CertificateTag::HallFreeJP;
        c.proposition = "hall_necessity";
        name = "free_restriction";
    } else if (hyperplane_shape(P, p, decomposition) && decomposition.size() >= (p == 2 ? 3u : 2u)) {
        c.criterion = p == 2 ? CertificateTag::EvenSHyperplanes : CertificateTag::OddPHyperplanes;
        c.proposition = p == 2 ? "evenS" : "oddprimeS";
        name = "hyperplanes";
    } else if (p == 2 && three_lines_shape(P, decomposition)) {
        c.criterion = CertificateTag::KleinThreeLines;
        c.proposition = "evenA2";
        name = "three_lines";
    } else {
        record(d, not_applicable("shape", "Theorem intromain",
                                 "orbit structure " + decomposition_text(decomposition) + " matches no criterion"));
        return d;
    }
    RuleApplication r{name, "Prop " + c.proposition, true, Verdict::NotPInvertible, {}};
    r.witness.emplace_back("witness", generators_text(P));
    r.witness.emplace_back("decomposition", decomposition_text(decomposition));
    r.witness.emplace_back("criterion", tag_name(c.criterion));
    record(d, std::move(r));
    d.certificates.push_back(std::move(c));
    return d;
}

}  // namespace flasque
