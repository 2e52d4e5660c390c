#include <gtest/gtest.h>

#include <numeric>

#include "flasque/arith.hpp"
#include "flasque/errors.hpp"
#include "flasque/invertibility.hpp"

using namespace flasque;

namespace {

FiniteGroup family_group(Family f, int n) {
    return f == Family::Symmetric ? FiniteGroup::symmetric(n) : FiniteGroup::alternating(n);
}

Decision decide(Family f, int n, std::uint64_t p) {
    auto G = family_group(f, n);
    return decide_p_invertibility(G, point_stabilizer(G, n), p);
}

bool fired(const Decision& d, const std::string& name) {
    for (const auto& r : d.trace)
        if (r.name == name && r.fired) return true;
    return false;
}

}  // namespace

TEST(Sylow, Reduction) {
    auto S6 = FiniteGroup::symmetric(6);
    EXPECT_EQ(reduce_to_sylow(norm_one_lattice(S6, point_stabilizer(S6, 6)), 3).sylow.order(), 9u);
    auto S4 = FiniteGroup::symmetric(4);
    EXPECT_EQ(reduce_to_sylow(norm_one_lattice(S4, point_stabilizer(S4, 4)), 2).sylow.order(), 8u);
    auto r = reduce_to_sylow(norm_one_lattice(S4, point_stabilizer(S4, 4)), 5);
    EXPECT_EQ(r.sylow.order(), 1u);
    EXPECT_EQ(decide_restricted_lattice(r.lattice, 5).verdict, Verdict::PInvertible);
}

TEST(Rules, CoprimeIndex) {
    auto S5 = FiniteGroup::symmetric(5);
    auto r = rule_coprime_index(S5, point_stabilizer(S5, 5), 2);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->outcome, Verdict::PInvertible);
    EXPECT_EQ(r->paper_ref, "Prop coprime");
    auto S6 = FiniteGroup::symmetric(6);
    EXPECT_TRUE(rule_coprime_index(S6, point_stabilizer(S6, 6), 5).has_value());
    EXPECT_FALSE(rule_coprime_index(S6, point_stabilizer(S6, 6), 2).has_value());
}

TEST(Rules, CyclicSylow) {
    EXPECT_TRUE(rule_cyclic_sylow(FiniteGroup::symmetric(3), 3).has_value());
    EXPECT_TRUE(rule_cyclic_sylow(FiniteGroup::symmetric(5), 5).has_value());
    EXPECT_FALSE(rule_cyclic_sylow(FiniteGroup::symmetric(4), 2).has_value());
}

TEST(Rules, HallNecessity) {
    auto S5 = FiniteGroup::symmetric(5);
    EXPECT_FALSE(rule_hall_necessity(S5, point_stabilizer(S5, 5), 5).has_value());
    auto S4 = FiniteGroup::symmetric(4);
    EXPECT_FALSE(rule_hall_necessity(S4, point_stabilizer(S4, 4), 2).has_value());
    auto A4 = FiniteGroup::alternating(4);
    std::vector<Certificate> certs;
    auto r = rule_hall_necessity(A4, point_stabilizer(A4, 4), 2, &certs);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->outcome, Verdict::NotPInvertible);
    ASSERT_EQ(certs.size(), 1u);
    EXPECT_EQ(certs[0].criterion, CertificateTag::HallFreeJP);
    EXPECT_EQ(certs[0].free_rank, std::optional<std::size_t>(1));
}

TEST(Splitting, PrimeToIndex) {
    auto S5 = FiniteGroup::symmetric(5);
    auto w = verify_splitting_prime_to_p(S5, point_stabilizer(S5, 5), 2);
    EXPECT_TRUE(w.ok());
    EXPECT_EQ(w.index, 5u);
    EXPECT_EQ(w.sylow_of_h.order(), 8u);
    auto A5 = FiniteGroup::alternating(5);
    EXPECT_TRUE(verify_splitting_prime_to_p(A5, point_stabilizer(A5, 5), 3).ok());
    auto S4 = FiniteGroup::symmetric(4);
    EXPECT_THROW(verify_splitting_prime_to_p(S4, point_stabilizer(S4, 4), 2), ArgumentError);
}

TEST(Certificates, PropositionExamples) {
    auto c = build_certificate(Family::Symmetric, 9, 3);
    EXPECT_EQ(c.criterion, CertificateTag::OddPHyperplanes);
    EXPECT_EQ(c.rank, 3u);
    EXPECT_EQ(c.decomposition.size(), 3u);
    EXPECT_EQ(c.designated[0].to_cycle_string(), "(1 2 3)");
    EXPECT_EQ(c.designated[2].to_cycle_string(), "(7 8 9)");

    c = build_certificate(Family::Symmetric, 8, 2);
    EXPECT_EQ(c.criterion, CertificateTag::EvenSHyperplanes);
    EXPECT_EQ(c.rank, 4u);
    EXPECT_EQ(c.decomposition.size(), 4u);

    c = build_certificate(Family::Alternating, 6, 2);
    EXPECT_EQ(c.criterion, CertificateTag::KleinThreeLines);
    EXPECT_EQ(c.decomposition.size(), 3u);

    c = build_certificate(Family::Alternating, 12, 2);
    EXPECT_EQ(c.criterion, CertificateTag::KleinFreeJP);
    EXPECT_EQ(c.free_rank, std::optional<std::size_t>(3));

    c = build_certificate(Family::Symmetric, 4, 2);
    EXPECT_EQ(c.criterion, CertificateTag::Endo11Thm43);
    EXPECT_EQ(c.proposition, "mainS");

    EXPECT_THROW(build_certificate(Family::Symmetric, 7, 7), UnsupportedCase);
    EXPECT_THROW(build_certificate(Family::Symmetric, 6, 5), UnsupportedCase);
}

TEST(Certificates, WrongStatementIsRejected) {
    auto stated = stated_decomposition(witness_subgroup(Family::Alternating, 10, 2));
    stated.front().multiplicity += 1;
    EXPECT_THROW(build_certificate(Family::Alternating, 10, 2, stated), ConstructionError);
}

TEST(Certificates, SoundnessAcrossGrid) {
    for (Family f : {Family::Symmetric, Family::Alternating})
        for (int n = 4; n <= 12; ++n)
            for (int p : primes_up_to(n)) {
                const auto up = static_cast<std::uint64_t>(p);
                if (!applicable_proposition(f, n, up)) continue;
                auto c = build_certificate(f, n, up);
                auto G = family_group(f, n);
                EXPECT_TRUE(same_decomposition(
                    c.decomposition, orbit_decomposition(permutation_lattice(G, point_stabilizer(G, n)), c.witness_subgroup)));
                EXPECT_TRUE(is_elementary_abelian(c.witness_subgroup, up));
                std::uint64_t order = 1;
                for (std::size_t i = 0; i < c.rank; ++i) order *= up;
                EXPECT_EQ(c.witness_subgroup.order(), order);
                if (c.criterion == CertificateTag::OddPHyperplanes || c.criterion == CertificateTag::EvenSHyperplanes) {
                    EXPECT_GE(c.decomposition.size(), up == 2 ? 3u : 2u);
                    for (const auto& s : c.decomposition) {
                        EXPECT_EQ(s.stabilizer.order() * up, order);
                        EXPECT_EQ(s.multiplicity, 1u);
                    }
                }
            }
}

TEST(Engine, Examples) {
    auto d = decide(Family::Symmetric, 6, 2);
    EXPECT_EQ(d.verdict, Verdict::NotPInvertible);
    ASSERT_FALSE(d.certificates.empty());
    EXPECT_EQ(d.certificates.back().criterion, CertificateTag::EvenSHyperplanes);
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) EXPECT_EQ(decide(Family::Symmetric, 7, p).verdict, Verdict::PInvertible);
    EXPECT_TRUE(fired(decide(Family::Symmetric, 7, 7), "cyclic_sylow"));
    EXPECT_TRUE(fired(decide(Family::Symmetric, 7, 2), "coprime"));
    auto a4 = decide(Family::Alternating, 4, 2);
    EXPECT_TRUE(fired(a4, "hall_necessity"));
    EXPECT_TRUE(fired(a4, "evenA1"));
}

TEST(Engine, UnknownOutsideTheRules) {
    auto S4 = FiniteGroup::symmetric(4);
    auto D4 = sylow_subgroup(S4, 2);
    auto H = subgroup_generated(D4, {D4.generators().front()});
    ASSERT_EQ(H.order(), 2u);
    if (is_normal(D4, H)) GTEST_SKIP();
    auto d = decide_p_invertibility(D4, H, 2);
    EXPECT_EQ(d.verdict, Verdict::Unknown);
    EXPECT_EQ(d.trace.size(), 4u);
}

TEST(Engine, MatchesClosedFormOnGrid) {
    for (Family f : {Family::Symmetric, Family::Alternating})
        for (int n = f == Family::Symmetric ? 2 : 4; n <= 12; ++n)
            for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
                const bool expected = is_prime(static_cast<std::uint64_t>(n)) || std::gcd(p, std::uint64_t(n)) == 1;
                auto d = decide(f, n, p);
                EXPECT_EQ(d.verdict, expected ? Verdict::PInvertible : Verdict::NotPInvertible)
                    << family_letter(f) << n << " p=" << p;
            }
}

TEST(Engine, SylowReductionCoherence) {
    for (Family f : {Family::Symmetric, Family::Alternating})
        for (int n = 4; n <= 8; ++n)
            for (auto p : prime_divisors(factorial(n))) {
                auto G = family_group(f, n);
                auto H = point_stabilizer(G, n);
                auto d = decide_p_invertibility(G, H, p);
                auto r = decide_restricted_lattice(reduce_to_sylow(norm_one_lattice(G, H), p).lattice, p);
                if (r.verdict != Verdict::Unknown) EXPECT_EQ(r.verdict, d.verdict) << family_letter(f) << n << " p=" << p;
            }
}

TEST(Engine, RestrictionNeverContradictsPositive) {
    auto S5 = FiniteGroup::symmetric(5);
    auto J = norm_one_lattice(S5, point_stabilizer(S5, 5));
    for (std::uint64_t p : {2u, 3u, 5u}) {
        ASSERT_EQ(decide_p_invertibility(S5, point_stabilizer(S5, 5), p).verdict, Verdict::PInvertible);
        for (const auto& K : subgroup_class_representatives(S5))
            EXPECT_NE(decide_restricted_lattice(restrict(J, K), p).verdict, Verdict::NotPInvertible);
    }
}
