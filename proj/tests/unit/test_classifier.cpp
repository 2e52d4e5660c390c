#include <gtest/gtest.h>

#include "flasque/classifier.hpp"
#include "flasque/errors.hpp"

using namespace flasque;

TEST(Classifier, FamilyExamples) {
    EXPECT_EQ(classify_norm_one_family(Family::Symmetric, 4, 2).verdict, Rationality::NotPRetractRational);
    EXPECT_EQ(classify_norm_one_family(Family::Symmetric, 7, 7).verdict, Rationality::PRetractRational);
    EXPECT_EQ(classify_norm_one_family(Family::Alternating, 6, 3).verdict, Rationality::NotPRetractRational);
    EXPECT_THROW(classify_norm_one_family(Family::Alternating, 3, 3), ArgumentError);
    EXPECT_THROW(classify_norm_one_family(Family::Symmetric, 1, 2), ArgumentError);
    EXPECT_THROW(classify_norm_one_family(Family::Symmetric, 6, 4), ArgumentError);
}

TEST(Classifier, ClosedForm) {
    EXPECT_TRUE(closed_form_p_retract_rational(7, 7));
    EXPECT_TRUE(closed_form_p_retract_rational(6, 5));
    EXPECT_FALSE(closed_form_p_retract_rational(6, 2));
    EXPECT_FALSE(closed_form_p_retract_rational(9, 3));
    EXPECT_TRUE(closed_form_p_retract_rational(9, 2));
}

TEST(Classifier, BadPrimesAreDivisorsOfN) {
    for (int n = 4; n <= 12; ++n) {
        if (n == 5 || n == 7 || n == 11) continue;
        for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u}) {
            auto v = classify_norm_one_family(Family::Symmetric, n, p);
            EXPECT_EQ(v.verdict == Rationality::NotPRetractRational, n % static_cast<int>(p) == 0) << n << " " << p;
        }
    }
}

TEST(Classifier, GaloisCase) {
    // H normal with G/H = C_6: G = <(1 2 3 4 5 6)>, H = 1.
    auto C6 = FiniteGroup::generated(6, {Permutation::parse("(1 2 3 4 5 6)", 6)});
    auto v = classify_general(C6, FiniteGroup::trivial(6), 2);
    EXPECT_EQ(v.verdict, Rationality::PRetractRational);
    // G/H = (C_2)^2.
    auto V = FiniteGroup::generated(4, {Permutation::parse("(1 2)(3 4)", 4), Permutation::parse("(1 3)(2 4)", 4)});
    EXPECT_EQ(classify_general(V, FiniteGroup::trivial(4), 2).verdict, Rationality::NotPRetractRational);
    auto S6 = FiniteGroup::symmetric(6);
    auto g = classify_general(S6, point_stabilizer(S6, 6), 5);
    EXPECT_EQ(g.verdict, Rationality::PRetractRational);
    EXPECT_EQ(g.traces.front().second.trace.front().name, "coprime");
}

TEST(Classifier, RetractSummary) {
    auto sum = [](Family f, int n) {
        auto G = f == Family::Symmetric ? FiniteGroup::symmetric(n) : FiniteGroup::alternating(n);
        return retract_summary(G, point_stabilizer(G, n)).verdict;
    };
    EXPECT_EQ(sum(Family::Symmetric, 5), Rationality::RetractRational);
    EXPECT_EQ(sum(Family::Symmetric, 6), Rationality::NotRetractRational);
    EXPECT_EQ(sum(Family::Alternating, 7), Rationality::RetractRational);
    for (int n = 2; n <= 12; ++n) {
        const bool prime = n == 2 || n == 3 || n == 5 || n == 7 || n == 11;
        EXPECT_EQ(sum(Family::Symmetric, n) == Rationality::RetractRational, prime) << n;
    }
    auto all = classify_norm_one_family(Family::Symmetric, 6);
    EXPECT_FALSE(all.p.has_value());
    EXPECT_EQ(all.verdict, Rationality::NotRetractRational);
    EXPECT_EQ(all.traces.size(), 3u);
}
