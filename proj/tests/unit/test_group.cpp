#include <gtest/gtest.h>

#include "../oracles/bridge.hpp"
#include "flasque/errors.hpp"
#include "flasque/group.hpp"

using namespace flasque;

TEST(Group, Orders) {
    EXPECT_EQ(FiniteGroup::symmetric(5).order(), 120u);
    EXPECT_EQ(FiniteGroup::alternating(6).order(), 360u);
    EXPECT_EQ(FiniteGroup::symmetric(12).order(), 479001600u);
    EXPECT_FALSE(FiniteGroup::symmetric(12).is_enumerated());
    EXPECT_EQ(point_stabilizer(FiniteGroup::symmetric(6), 6).order(), 120u);
}

// Brute force: every subgroup of S_4 of order 8 is two-generated.
TEST(Group, SylowOfS4MatchesBruteForce) {
    auto S4 = FiniteGroup::symmetric(4);
    auto subgroups = oracle::two_generated_subgroups(4, oracle::element_set(S4));
    std::set<std::set<oracle::Perm>> order8;
    for (const auto& H : subgroups)
        if (H.size() == 8) order8.insert(H);
    EXPECT_EQ(order8.size(), 3u);
    auto P = sylow_subgroup(S4, 2);
    EXPECT_EQ(P.order(), 8u);
    EXPECT_TRUE(order8.count(oracle::element_set(P)));
    EXPECT_FALSE(is_cyclic(P));
    EXPECT_FALSE(is_abelian(P));
}

TEST(Group, SylowOrders) {
    EXPECT_EQ(sylow_subgroup(FiniteGroup::symmetric(6), 3).order(), 9u);
    EXPECT_EQ(sylow_subgroup(FiniteGroup::symmetric(12), 2).order(), 1024u);
    EXPECT_EQ(sylow_subgroup(FiniteGroup::alternating(12), 2).order(), 512u);
    EXPECT_EQ(sylow_subgroup(FiniteGroup::symmetric(9), 3).order(), 81u);
    EXPECT_EQ(sylow_subgroup(FiniteGroup::symmetric(5), 7).order(), 1u);
    EXPECT_TRUE(is_cyclic(sylow_subgroup(FiniteGroup::symmetric(5), 5)));
    EXPECT_THROW(sylow_subgroup(FiniteGroup::symmetric(4), 4), ArgumentError);
}

TEST(Group, SubgroupClassCounts) {
    // Conjugacy classes of subgroups: S_3 4, S_4 11, A_4 5, S_5 19.
    EXPECT_EQ(subgroup_class_representatives(FiniteGroup::symmetric(3)).size(), 4u);
    EXPECT_EQ(subgroup_class_representatives(FiniteGroup::symmetric(4)).size(), 11u);
    EXPECT_EQ(subgroup_class_representatives(FiniteGroup::alternating(4)).size(), 5u);
    EXPECT_EQ(subgroup_class_representatives(FiniteGroup::symmetric(5)).size(), 19u);
    EXPECT_EQ(all_subgroups(FiniteGroup::symmetric(4)).size(), 30u);
}

TEST(Group, HallNormalIndex) {
    auto A4 = FiniteGroup::alternating(4);
    auto A3 = point_stabilizer(A4, 4);
    EXPECT_TRUE(is_hall(A4, A3));
    EXPECT_FALSE(is_normal(A4, A3));
    auto V = subgroup_generated(A4, {Permutation::parse("(1 2)(3 4)", 4), Permutation::parse("(1 3)(2 4)", 4)});
    EXPECT_TRUE(is_normal(A4, V));
    EXPECT_TRUE(is_elementary_abelian(V, 2));
    auto S4 = FiniteGroup::symmetric(4);
    EXPECT_FALSE(is_hall(S4, point_stabilizer(S4, 4)));
    EXPECT_EQ(index_of_subgroup(S4, V), 6u);
}

TEST(Group, CosetSpaceLetterModel) {
    auto S5 = FiniteGroup::symmetric(5);
    CosetSpace cs(S5, point_stabilizer(S5, 5));
    EXPECT_EQ(cs.size(), 5u);
    auto g = Permutation::parse("(1 2 3 4 5)", 5);
    // The coset of letter i goes to the coset of g(i).
    EXPECT_EQ(cs.action(g), g);
    EXPECT_EQ(cs.coset_of(cs.representatives()[cs.base_coset()]), cs.base_coset());
}

TEST(Group, CosetSpaceGenericModel) {
    auto S3 = FiniteGroup::symmetric(3);
    auto C3 = subgroup_generated(S3, {Permutation::parse("(1 2 3)", 3)});
    CosetSpace cs(S3, C3);
    EXPECT_EQ(cs.size(), 2u);
    auto image = coset_action_image(cs);
    EXPECT_EQ(image.order(), 2u);
    for (const auto& g : S3.elements()) EXPECT_EQ(cs.action(g).is_identity(), g.is_even());
}
