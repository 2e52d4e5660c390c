#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "flasque/permutation.hpp"

namespace flasque {

/// Largest n accepted by the symmetric / alternating constructors.
inline constexpr int kMaxDegree = 16;

/// Groups up to this order are enumerated element by element.
inline constexpr std::size_t kDefaultEnumerationLimit = 50'000;

/// Subgroup-class sweeps are only run on groups up to this order.
inline constexpr std::size_t kDefaultSubgroupLimit = 1'000;

/// A subgroup of S_degree given by generators.
///
/// Three shapes are supported. Symmetric and alternating groups on a set of
/// letters (their `support`) are described structurally, so membership and
/// order never need enumeration. Every other group is a `Generic` group that
/// is always fully enumerated. Symmetric and alternating groups are also
/// enumerated when their order does not exceed the enumeration limit.
///
/// Values are immutable and share their element storage, so copies are cheap
/// and a group may be used from several threads at once.
class FiniteGroup {
public:
    enum class Kind { Symmetric, Alternating, Generic };

    FiniteGroup();

    static FiniteGroup symmetric(int n, std::size_t enumeration_limit = kDefaultEnumerationLimit);
    static FiniteGroup alternating(int n, std::size_t enumeration_limit = kDefaultEnumerationLimit);

    /// Sym(support) or Alt(support) acting on letters 1..degree.
    static FiniteGroup on_support(int degree, std::vector<int> support, Kind kind,
                                  std::size_t enumeration_limit = kDefaultEnumerationLimit);

    /// Closure of the given generators. Throws SizeError if the closure is
    /// larger than `enumeration_limit`. A closure that turns out to be the
    /// full symmetric or alternating group on its moved letters is tagged as
    /// such.
    static FiniteGroup generated(int degree, std::vector<Permutation> generators, std::string label = {},
                                 std::size_t enumeration_limit = kDefaultEnumerationLimit);

    static FiniteGroup trivial(int degree);

    int degree() const;
    std::uint64_t order() const;
    Kind kind() const;
    /// Letters moved by the group (sorted). For Sym/Alt this is the defining set.
    const std::vector<int>& support() const;
    const std::vector<Permutation>& generators() const;
    const std::string& label() const;

    bool is_enumerated() const;
    /// All elements in lexicographic order. Throws SizeError when not enumerated.
    const std::vector<Permutation>& elements() const;
    std::optional<std::size_t> index_of(const Permutation& g) const;
    bool contains(const Permutation& g) const;
    Permutation identity() const { return Permutation::identity(degree()); }

    bool is_subgroup_of(const FiniteGroup& parent) const;

    /// Same set of elements (labels and generators may differ).
    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b);

    /// Generator indices w_0, ..., w_k with g = s_{w_0} * s_{w_1} * ... * s_{w_k}.
    /// Enumerated groups only.
    std::vector<std::size_t> word(const Permutation& g) const;

    /// Breadth-first order of element indices from the identity along the
    /// Schreier tree; every non-root index i satisfies
    /// elements()[i] == generators()[tree_generator(i)] * elements()[tree_parent(i)].
    const std::vector<std::size_t>& bfs_order() const;
    std::size_t tree_parent(std::size_t index) const;
    std::size_t tree_generator(std::size_t index) const;

    /// Row-major table t with t[i * order + j] = index_of(e_i * e_j).
    std::vector<std::uint32_t> multiplication_table() const;

    /// Returns a copy carrying a different label.
    FiniteGroup relabeled(std::string label) const;

    struct Data;

private:
    explicit FiniteGroup(std::shared_ptr<const Data> data);
    static FiniteGroup from_closed(int degree, std::vector<Permutation> elements, std::vector<Permutation> gens,
                                   std::string label);
    friend FiniteGroup subgroup_from_elements(const FiniteGroup&, std::vector<Permutation>, std::string);

    std::shared_ptr<const Data> d_;
};

/// Subgroup of `parent` whose elements are exactly `elements` (must be closed).
/// A small generating set is chosen greedily in lexicographic order.
FiniteGroup subgroup_from_elements(const FiniteGroup& parent, std::vector<Permutation> elements,
                                   std::string label = {});

/// Subgroup of `parent` generated by `generators` (which must lie in parent).
FiniteGroup subgroup_generated(const FiniteGroup& parent, std::vector<Permutation> generators,
                               std::string label = {});

FiniteGroup point_stabilizer(const FiniteGroup& G, int letter);

/// A Sylow p-subgroup. Enumerated groups use greedy extension in
/// lexicographic element order; large symmetric and alternating groups use
/// the iterated-wreath-product construction. Throws ArgumentError when p is
/// not prime.
FiniteGroup sylow_subgroup(const FiniteGroup& G, std::uint64_t p);

bool is_cyclic(const FiniteGroup& H);
bool is_abelian(const FiniteGroup& H);
/// Abelian with every non-identity element of order p.
bool is_elementary_abelian(const FiniteGroup& H, std::uint64_t p);
/// gcd(|H|, [G:H]) == 1.
bool is_hall(const FiniteGroup& G, const FiniteGroup& H);
bool is_normal(const FiniteGroup& G, const FiniteGroup& H);
std::uint64_t index_of_subgroup(const FiniteGroup& G, const FiniteGroup& H);

/// The left coset space G/H with a fixed ordering.
///
/// When H is the stabilizer of a letter l in G, the cosets are identified with
/// the G-orbit of l (gH <-> g(l)) and ordered by letter. Otherwise G must be
/// enumerated and cosets are ordered by their lexicographically minimal
/// representative.
class CosetSpace {
public:
    CosetSpace(const FiniteGroup& G, const FiniteGroup& H);

    std::size_t size() const { return representatives_.size(); }
    const FiniteGroup& group() const { return group_; }
    const FiniteGroup& subgroup() const { return subgroup_; }
    const std::vector<Permutation>& representatives() const { return representatives_; }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Position of the coset H itself.
    std::size_t base_coset() const { return base_; }
    /// Letter identified with each coset, when the letter model is in use.
    std::optional<int> stabilized_letter() const { return letter_; }

    /// Permutation of {1..size()} induced by g acting on the left.
    Permutation action(const Permutation& g) const;
    std::size_t coset_of(const Permutation& g) const;

private:
    FiniteGroup group_;
    FiniteGroup subgroup_;
    std::optional<int> letter_;
    std::vector<int> orbit_;            // letter of each coset in the letter model
    std::vector<int> letter_position_;  // letter -> coset index, -1 outside the orbit
    std::vector<std::uint32_t> coset_of_element_;
    std::vector<Permutation> representatives_;
    std::vector<std::string> labels_;
    std::size_t base_ = 0;
};

/// Group of permutations of G/H induced by G; isomorphic to G/H when H is normal.
FiniteGroup coset_action_image(const CosetSpace& cosets);

/// Every subgroup of G (enumerated, |G| <= limit), sorted by decreasing order
/// and then lexicographically by sorted element list.
std::vector<FiniteGroup> all_subgroups(const FiniteGroup& G, std::size_t limit = kDefaultSubgroupLimit);

/// One representative per conjugacy class of subgroups, ordered as in all_subgroups.
std::vector<FiniteGroup> subgroup_class_representatives(const FiniteGroup& G,
                                                        std::size_t limit = kDefaultSubgroupLimit);

/// Canonical key of the conjugacy class of H in G (enumerated G only): the
/// lexicographically smallest sorted element-index list among conjugates.
std::vector<std::uint32_t> conjugacy_class_key(const FiniteGroup& G, const FiniteGroup& H);

}  // namespace flasque
