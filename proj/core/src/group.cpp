#include "flasque/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "flasque/arith.hpp"
#include "flasque/errors.hpp"

namespace flasque {

struct FiniteGroup::Data {
    int degree = 0;
    std::uint64_t order = 1;
    Kind kind = Kind::Generic;
    std::vector<int> support;
    std::vector<Permutation> generators;
    std::string label;

    bool enumerated = false;
    std::vector<Permutation> elements;  // sorted
    std::vector<std::size_t> bfs_order;
    std::vector<std::size_t> parent;
    std::vector<std::size_t> parent_gen;
};

namespace {

using Kind = FiniteGroup::Kind;

std::vector<int> moved_letters(int degree, const std::vector<Permutation>& gens) {
    std::vector<int> out;
    for (int x = 1; x <= degree; ++x)
        for (const auto& g : gens)
            if (!g.fixes(x)) {
                out.push_back(x);
                break;
            }
    return out;
}

std::string support_label(Kind kind, const std::vector<int>& support) {
    bool initial = true;
    for (std::size_t i = 0; i < support.size(); ++i)
        if (support[i] != static_cast<int>(i) + 1) initial = false;
    const char* head = kind == Kind::Symmetric ? "S" : "A";
    if (initial) return std::string(head) + "_" + std::to_string(support.size());
    std::string out = kind == Kind::Symmetric ? "Sym{" : "Alt{";
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(support[i]);
    }
    return out + "}";
}

std::uint64_t descriptor_order(Kind kind, std::size_t k) {
    std::uint64_t f = factorial(static_cast<int>(k));
    if (kind == Kind::Alternating) return k >= 2 ? f / 2 : 1;
    return f;
}

// BFS closure over generators. Fills elements (sorted) and the Schreier tree.
void enumerate_into(FiniteGroup::Data& d, std::size_t limit) {
    std::vector<Permutation> found{Permutation::identity(d.degree)};
    std::vector<std::size_t> parent{0}, parent_gen{0};
    std::unordered_map<Permutation, std::size_t, PermutationHash> seen;
    seen.emplace(found[0], 0);
    for (std::size_t head = 0; head < found.size(); ++head) {
        for (std::size_t s = 0; s < d.generators.size(); ++s) {
            Permutation y = d.generators[s] * found[head];
            if (seen.count(y)) continue;
            if (found.size() >= limit)
                throw SizeError("group closure exceeds enumeration limit " + std::to_string(limit));
            seen.emplace(y, found.size());
            found.push_back(std::move(y));
            parent.push_back(head);
            parent_gen.push_back(s);
        }
    }
    std::vector<std::size_t> perm(found.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return found[a] < found[b]; });
    std::vector<std::size_t> sorted_pos(found.size());
    for (std::size_t i = 0; i < perm.size(); ++i) sorted_pos[perm[i]] = i;

    d.elements.resize(found.size());
    d.parent.assign(found.size(), 0);
    d.parent_gen.assign(found.size(), 0);
    d.bfs_order.resize(found.size());
    for (std::size_t b = 0; b < found.size(); ++b) {
        std::size_t s = sorted_pos[b];
        d.bfs_order[b] = s;
        d.parent[s] = sorted_pos[parent[b]];
        d.parent_gen[s] = parent_gen[b];
    }
    for (std::size_t b = 0; b < found.size(); ++b) d.elements[sorted_pos[b]] = std::move(found[b]);
    d.order = d.elements.size();
    d.enumerated = true;
}

void detect_kind(FiniteGroup::Data& d) {
    d.support = moved_letters(d.degree, d.generators);
    std::size_t k = d.support.size();
    if (k < 2 || k > 20) return;
    if (d.order == factorial(static_cast<int>(k))) {
        d.kind = Kind::Symmetric;
    } else if (k >= 3 && d.order == factorial(static_cast<int>(k)) / 2 &&
               std::all_of(d.generators.begin(), d.generators.end(),
                           [](const Permutation& g) { return g.is_even(); })) {
        d.kind = Kind::Alternating;
    }
}

std::vector<Permutation> descriptor_generators(int degree, const std::vector<int>& s, Kind kind) {
    std::vector<Permutation> gens;
    std::size_t k = s.size();
    if (kind == Kind::Symmetric) {
        if (k >= 2) gens.push_back(Permutation::from_cycles(degree, {{s[0], s[1]}}));
        if (k >= 3) gens.push_back(Permutation::from_cycles(degree, {s}));
    } else {
        if (k >= 3) gens.push_back(Permutation::from_cycles(degree, {{s[0], s[1], s[2]}}));
        if (k >= 4) {
            if (k % 2 == 1)
                gens.push_back(Permutation::from_cycles(degree, {s}));
            else
                gens.push_back(Permutation::from_cycles(degree, {std::vector<int>(s.begin() + 1, s.end())}));
        }
    }
    return gens;
}

// Closure of `gens` as a hash set (used for small p-subgroups).
std::unordered_set<Permutation, PermutationHash> closure_set(int degree, const std::vector<Permutation>& gens) {
    std::unordered_set<Permutation, PermutationHash> set{Permutation::identity(degree)};
    std::vector<Permutation> queue{Permutation::identity(degree)};
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (const auto& s : gens) {
            Permutation y = s * queue[head];
            if (set.insert(y).second) queue.push_back(std::move(y));
        }
    return set;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
    while (n > 1) {
        if (n % p) return false;
        n /= p;
    }
    return n == 1;
}

}  // namespace

FiniteGroup::FiniteGroup() : FiniteGroup(trivial(0)) {}

FiniteGroup::FiniteGroup(std::shared_ptr<const Data> data) : d_(std::move(data)) {}

FiniteGroup FiniteGroup::on_support(int degree, std::vector<int> support, Kind kind, std::size_t limit) {
    if (kind == Kind::Generic) throw ArgumentError("on_support needs Symmetric or Alternating");
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    for (int x : support)
        if (x < 1 || x > degree) throw ArgumentError("support letter outside 1..degree");
    if (support.size() > 20) throw SizeError("support too large");
    auto d = std::make_shared<Data>();
    d->degree = degree;
    d->kind = kind;
    d->order = descriptor_order(kind, support.size());
    d->generators = descriptor_generators(degree, support, kind);
    d->label = support_label(kind, support);
    d->support = std::move(support);
    if (d->order <= limit) {
        auto keep = d->order;
        enumerate_into(*d, limit);
        if (d->order != keep) throw ConstructionError("descriptor generators do not generate the full group");
    }
    return FiniteGroup(std::move(d));
}

FiniteGroup FiniteGroup::symmetric(int n, std::size_t limit) {
    if (n < 1 || n > kMaxDegree)
        throw SizeError("symmetric group degree " + std::to_string(n) + " outside 1.." + std::to_string(kMaxDegree));
    std::vector<int> support(static_cast<std::size_t>(n));
    std::iota(support.begin(), support.end(), 1);
    return on_support(n, std::move(support), Kind::Symmetric, limit);
}

FiniteGroup FiniteGroup::alternating(int n, std::size_t limit) {
    if (n < 1 || n > kMaxDegree)
        throw SizeError("alternating group degree " + std::to_string(n) + " outside 1.." +
                        std::to_string(kMaxDegree));
    std::vector<int> support(static_cast<std::size_t>(n));
    std::iota(support.begin(), support.end(), 1);
    return on_support(n, std::move(support), Kind::Alternating, limit);
}

FiniteGroup FiniteGroup::generated(int degree, std::vector<Permutation> generators, std::string label,
                                   std::size_t limit) {
    auto d = std::make_shared<Data>();
    d->degree = degree;
    for (auto& g : generators) {
        if (g.degree() != degree) throw ArgumentError("generator degree does not match group degree");
        if (!g.is_identity()) d->generators.push_back(std::move(g));
    }
    enumerate_into(*d, limit);
    detect_kind(*d);
    d->label = !label.empty() ? std::move(label)
               : d->kind != Kind::Generic ? support_label(d->kind, d->support)
                                           : std::string{};
    return FiniteGroup(std::move(d));
}

FiniteGroup FiniteGroup::trivial(int degree) {
    auto d = std::make_shared<Data>();
    d->degree = degree;
    d->label = "1";
    enumerate_into(*d, 1);
    return FiniteGroup(std::move(d));
}

FiniteGroup FiniteGroup::from_closed(int degree, std::vector<Permutation> elements, std::vector<Permutation> gens,
                                     std::string label) {
    auto d = std::make_shared<Data>();
    d->degree = degree;
    d->generators = std::move(gens);
    enumerate_into(*d, elements.size() + 1);
    if (d->order != elements.size()) throw ConstructionError("generators do not generate the given element set");
    detect_kind(*d);
    d->label = !label.empty() ? std::move(label)
               : d->kind != Kind::Generic ? support_label(d->kind, d->support)
                                           : std::string{};
    return FiniteGroup(std::move(d));
}

FiniteGroup FiniteGroup::relabeled(std::string label) const {
    auto d = std::make_shared<Data>(*d_);
    d->label = std::move(label);
    return FiniteGroup(std::move(d));
}

int FiniteGroup::degree() const { return d_->degree; }
std::uint64_t FiniteGroup::order() const { return d_->order; }
FiniteGroup::Kind FiniteGroup::kind() const { return d_->kind; }
const std::vector<int>& FiniteGroup::support() const { return d_->support; }
const std::vector<Permutation>& FiniteGroup::generators() const { return d_->generators; }
const std::string& FiniteGroup::label() const { return d_->label; }
bool FiniteGroup::is_enumerated() const { return d_->enumerated; }

const std::vector<Permutation>& FiniteGroup::elements() const {
    if (!d_->enumerated)
        throw SizeError("group " + d_->label + " of order " + std::to_string(d_->order) + " is not enumerated");
    return d_->elements;
}

std::optional<std::size_t> FiniteGroup::index_of(const Permutation& g) const {
    const auto& els = elements();
    auto it = std::lower_bound(els.begin(), els.end(), g);
    if (it == els.end() || *it != g) return std::nullopt;
    return static_cast<std::size_t>(it - els.begin());
}

bool FiniteGroup::contains(const Permutation& g) const {
    if (g.degree() != degree()) return false;
    if (d_->kind != Kind::Generic) {
        std::vector<bool> in(static_cast<std::size_t>(degree()) + 1, false);
        for (int x : d_->support) in[static_cast<std::size_t>(x)] = true;
        for (int x = 1; x <= degree(); ++x)
            if (!in[static_cast<std::size_t>(x)] && !g.fixes(x)) return false;
        if (d_->kind == Kind::Alternating && !g.is_even()) return false;
        return true;
    }
    return index_of(g).has_value();
}

bool FiniteGroup::is_subgroup_of(const FiniteGroup& parent) const {
    if (degree() != parent.degree()) return false;
    return std::all_of(generators().begin(), generators().end(),
                       [&](const Permutation& g) { return parent.contains(g); });
}

bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order() == b.order() && a.is_subgroup_of(b);
}

std::vector<std::size_t> FiniteGroup::word(const Permutation& g) const {
    auto idx = index_of(g);
    if (!idx) throw ArgumentError("element " + g.to_cycle_string() + " is not in group " + label());
    std::vector<std::size_t> out;
    std::size_t i = *idx;
    while (i != d_->bfs_order[0]) {
        out.push_back(d_->parent_gen[i]);
        i = d_->parent[i];
    }
    return out;
}

const std::vector<std::size_t>& FiniteGroup::bfs_order() const {
    elements();
    return d_->bfs_order;
}
std::size_t FiniteGroup::tree_parent(std::size_t index) const { return d_->parent.at(index); }
std::size_t FiniteGroup::tree_generator(std::size_t index) const { return d_->parent_gen.at(index); }

std::vector<std::uint32_t> FiniteGroup::multiplication_table() const {
    const auto& els = elements();
    const std::size_t n = els.size();
    // Left multiplication by each generator, then extend along the Schreier tree.
    std::vector<std::vector<std::uint32_t>> by_gen(generators().size(), std::vector<std::uint32_t>(n));
    for (std::size_t s = 0; s < generators().size(); ++s)
        for (std::size_t j = 0; j < n; ++j)
            by_gen[s][j] = static_cast<std::uint32_t>(*index_of(generators()[s] * els[j]));
    std::vector<std::uint32_t> table(n * n);
    const auto& order = d_->bfs_order;
    for (std::size_t j = 0; j < n; ++j) table[order[0] * n + j] = static_cast<std::uint32_t>(j);
    for (std::size_t b = 1; b < n; ++b) {
        std::size_t i = order[b];
        std::size_t par = d_->parent[i];
        const auto& gen = by_gen[d_->parent_gen[i]];
        for (std::size_t j = 0; j < n; ++j) table[i * n + j] = gen[table[par * n + j]];
    }
    return table;
}

FiniteGroup subgroup_from_elements(const FiniteGroup& parent, std::vector<Permutation> elements, std::string label) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    for (const auto& g : elements)
        if (!parent.contains(g)) throw ArgumentError("element " + g.to_cycle_string() + " not in parent group");
    std::vector<Permutation> gens;
    std::unordered_set<Permutation, PermutationHash> current{parent.identity()};
    for (const auto& g : elements) {
        if (current.count(g)) continue;
        gens.push_back(g);
        current = closure_set(parent.degree(), gens);
        if (current.size() > elements.size()) throw ArgumentError("element set is not closed under products");
    }
    if (current.size() != elements.size()) throw ArgumentError("element set is not a subgroup");
    return FiniteGroup::from_closed(parent.degree(), std::move(elements), std::move(gens), std::move(label));
}

FiniteGroup subgroup_generated(const FiniteGroup& parent, std::vector<Permutation> generators, std::string label) {
    for (const auto& g : generators)
        if (!parent.contains(g)) throw ArgumentError("generator " + g.to_cycle_string() + " not in parent group");
    return FiniteGroup::generated(parent.degree(), std::move(generators), std::move(label));
}

FiniteGroup point_stabilizer(const FiniteGroup& G, int letter) {
    if (letter < 1 || letter > G.degree())
        throw ArgumentError("letter " + std::to_string(letter) + " outside 1.." + std::to_string(G.degree()));
    if (G.kind() != FiniteGroup::Kind::Generic) {
        std::vector<int> support = G.support();
        support.erase(std::remove(support.begin(), support.end(), letter), support.end());
        return FiniteGroup::on_support(G.degree(), std::move(support), G.kind());
    }
    std::vector<Permutation> fixing;
    for (const auto& g : G.elements())
        if (g.fixes(letter)) fixing.push_back(g);
    return subgroup_from_elements(G, std::move(fixing));
}

namespace {

FiniteGroup greedy_sylow(const FiniteGroup& G, std::uint64_t p, std::uint64_t target) {
    std::vector<Permutation> gens;
    auto current = closure_set(G.degree(), gens);
    bool changed = true;
    while (current.size() < target && changed) {
        changed = false;
        for (const auto& x : G.elements()) {
            if (current.count(x) || !is_power_of(x.order(), p)) continue;
            Permutation xinv = x.inverse();
            bool normalizes = std::all_of(gens.begin(), gens.end(), [&](const Permutation& s) {
                return current.count(x * s * xinv) > 0;
            });
            if (!normalizes) continue;
            gens.push_back(x);
            current = closure_set(G.degree(), gens);
            changed = true;
            if (current.size() == target) break;
        }
    }
    if (current.size() != target) throw ConstructionError("greedy Sylow construction stalled");
    return subgroup_from_elements(G, std::vector<Permutation>(current.begin(), current.end()));
}

std::vector<Permutation> wreath_sylow_generators(int degree, const std::vector<int>& letters, std::uint64_t p) {
    std::vector<Permutation> gens;
    std::size_t offset = 0;
    std::size_t remaining = letters.size();
    // Largest blocks first: write |letters| in base p.
    std::vector<std::size_t> powers{1};
    while (powers.back() * p <= remaining) powers.push_back(powers.back() * p);
    for (std::size_t level = powers.size(); level-- > 1;) {
        const std::size_t block = powers[level];
        while (remaining >= block) {
            for (std::size_t t = 0; t < level; ++t) {
                const std::size_t sub = powers[t], span = powers[t + 1];
                std::vector<int> images = Permutation::identity(degree).images();
                for (std::size_t x = 0; x < span; ++x) {
                    int from = letters[offset + x];
                    int to = letters[offset + (x + sub) % span];
                    images[static_cast<std::size_t>(from - 1)] = to;
                }
                gens.emplace_back(std::move(images));
            }
            offset += block;
            remaining -= block;
        }
    }
    return gens;
}

}  // namespace

FiniteGroup sylow_subgroup(const FiniteGroup& G, std::uint64_t p) {
    if (!is_prime(p)) throw ArgumentError(std::to_string(p) + " is not prime");
    const int v = p_valuation(G.order(), p);
    if (v == 0) return FiniteGroup::trivial(G.degree());
    std::uint64_t target = 1;
    for (int i = 0; i < v; ++i) target *= p;

    FiniteGroup result;
    if (G.is_enumerated()) {
        result = greedy_sylow(G, p, target);
    } else if (G.kind() != FiniteGroup::Kind::Generic) {
        auto gens = wreath_sylow_generators(G.degree(), G.support(), p);
        FiniteGroup in_sym = FiniteGroup::generated(G.degree(), std::move(gens));
        if (G.kind() == FiniteGroup::Kind::Alternating && p == 2) {
            std::vector<Permutation> even;
            for (const auto& g : in_sym.elements())
                if (g.is_even()) even.push_back(g);
            result = subgroup_from_elements(G, std::move(even));
        } else {
            result = in_sym;
        }
    } else {
        throw SizeError("Sylow subgroup needs an enumerated group");
    }
    if (result.order() != target) throw ConstructionError("Sylow subgroup has the wrong order");
    std::string base = G.label().empty() ? "G" : G.label();
    return result.relabeled("Syl_" + std::to_string(p) + "(" + base + ")");
}

bool is_cyclic(const FiniteGroup& H) {
    if (!H.is_enumerated()) {
        std::size_t k = H.support().size();
        return H.kind() == FiniteGroup::Kind::Symmetric ? k <= 2 : k <= 3;
    }
    for (const auto& g : H.elements())
        if (g.order() == H.order()) return true;
    return false;
}

bool is_abelian(const FiniteGroup& H) {
    const auto& gens = H.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
    return true;
}

bool is_elementary_abelian(const FiniteGroup& H, std::uint64_t p) {
    if (!is_abelian(H)) return false;
    return std::all_of(H.generators().begin(), H.generators().end(),
                       [&](const Permutation& g) { return g.order() == p || g.order() == 1; });
}

std::uint64_t index_of_subgroup(const FiniteGroup& G, const FiniteGroup& H) {
    if (!H.is_subgroup_of(G)) throw ArgumentError("not a subgroup");
    if (G.order() % H.order()) throw ConstructionError("subgroup order does not divide group order");
    return G.order() / H.order();
}

bool is_hall(const FiniteGroup& G, const FiniteGroup& H) {
    return std::gcd(H.order(), index_of_subgroup(G, H)) == 1;
}

bool is_normal(const FiniteGroup& G, const FiniteGroup& H) {
    if (!H.is_subgroup_of(G)) throw ArgumentError("not a subgroup");
    for (const auto& g : G.generators()) {
        Permutation ginv = g.inverse();
        for (const auto& h : H.generators())
            if (!H.contains(g * h * ginv)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Coset spaces

CosetSpace::CosetSpace(const FiniteGroup& G, const FiniteGroup& H) : group_(G), subgroup_(H) {
    if (!H.is_subgroup_of(G)) throw ArgumentError("coset space: H is not a subgroup of G");

    if (G.kind() != FiniteGroup::Kind::Generic && H.kind() == G.kind()) {
        std::vector<int> missing;
        std::set_difference(G.support().begin(), G.support().end(), H.support().begin(), H.support().end(),
                            std::back_inserter(missing));
        if (missing.size() == 1 &&
            std::includes(G.support().begin(), G.support().end(), H.support().begin(), H.support().end()))
            letter_ = missing[0];
    }

    if (letter_) {
        const int n = G.degree();
        std::vector<Permutation> rep_of(static_cast<std::size_t>(n) + 1);
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        std::vector<int> orbit{*letter_};
        seen[static_cast<std::size_t>(*letter_)] = true;
        rep_of[static_cast<std::size_t>(*letter_)] = G.identity();
        for (std::size_t head = 0; head < orbit.size(); ++head)
            for (const auto& s : G.generators()) {
                int y = s(orbit[head]);
                if (seen[static_cast<std::size_t>(y)]) continue;
                seen[static_cast<std::size_t>(y)] = true;
                rep_of[static_cast<std::size_t>(y)] = s * rep_of[static_cast<std::size_t>(orbit[head])];
                orbit.push_back(y);
            }
        std::sort(orbit.begin(), orbit.end());
        letter_position_.assign(static_cast<std::size_t>(n) + 1, -1);
        for (std::size_t i = 0; i < orbit.size(); ++i) {
            letter_position_[static_cast<std::size_t>(orbit[i])] = static_cast<int>(i);
            orbit_.push_back(orbit[i]);
            representatives_.push_back(rep_of[static_cast<std::size_t>(orbit[i])]);
            labels_.push_back(std::to_string(orbit[i]));
            if (orbit[i] == *letter_) base_ = i;
        }
        return;
    }

    const auto& els = G.elements();
    const auto& sub = H.elements();
    constexpr auto unset = static_cast<std::uint32_t>(-1);
    coset_of_element_.assign(els.size(), unset);
    for (std::size_t i = 0; i < els.size(); ++i) {
        if (coset_of_element_[i] != unset) continue;
        auto c = static_cast<std::uint32_t>(representatives_.size());
        representatives_.push_back(els[i]);
        labels_.push_back(els[i].to_cycle_string());
        for (const auto& h : sub) coset_of_element_[*G.index_of(els[i] * h)] = c;
    }
    base_ = coset_of_element_[*G.index_of(G.identity())];
}

std::size_t CosetSpace::coset_of(const Permutation& g) const {
    if (!group_.contains(g)) throw ArgumentError("element " + g.to_cycle_string() + " not in coset space group");
    if (letter_) return static_cast<std::size_t>(letter_position_[static_cast<std::size_t>(g(*letter_))]);
    return coset_of_element_[*group_.index_of(g)];
}

Permutation CosetSpace::action(const Permutation& g) const {
    std::vector<int> images(size());
    for (std::size_t i = 0; i < size(); ++i) {
        if (letter_) {
            int target = g(orbit_[i]);
            int pos = letter_position_[static_cast<std::size_t>(target)];
            if (pos < 0) throw ArgumentError("element does not preserve the orbit");
            images[i] = pos + 1;
        } else {
            images[i] = static_cast<int>(coset_of(g * representatives_[i])) + 1;
        }
    }
    return Permutation(std::move(images));
}

FiniteGroup coset_action_image(const CosetSpace& cosets) {
    std::vector<Permutation> gens;
    for (const auto& g : cosets.group().generators()) gens.push_back(cosets.action(g));
    return FiniteGroup::generated(static_cast<int>(cosets.size()), std::move(gens));
}

// ---------------------------------------------------------------------------
// Subgroup lattices

namespace {

struct RawSubgroup {
    std::vector<std::uint32_t> key;   // sorted element indices
    std::vector<std::uint32_t> gens;  // element indices
};

std::vector<std::uint32_t> closure_indices(const std::vector<std::uint32_t>& table, std::size_t n,
                                           std::uint32_t identity, const std::vector<std::uint32_t>& gens,
                                           std::vector<char>& mark) {
    std::vector<std::uint32_t> out{identity};
    mark[identity] = 1;
    for (std::size_t head = 0; head < out.size(); ++head)
        for (auto g : gens) {
            auto y = table[static_cast<std::size_t>(out[head]) * n + g];
            if (!mark[y]) {
                mark[y] = 1;
                out.push_back(y);
            }
        }
    for (auto x : out) mark[x] = 0;
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RawSubgroup> raw_subgroups(const FiniteGroup& G, const std::vector<std::uint32_t>& table) {
    const std::size_t n = G.order();
    const auto identity = static_cast<std::uint32_t>(*G.index_of(G.identity()));
    std::vector<char> mark(n, 0);
    std::map<std::vector<std::uint32_t>, std::size_t> index;
    std::vector<RawSubgroup> subs;
    std::vector<std::uint32_t> cyclic_gens;

    for (std::uint32_t i = 0; i < n; ++i) {
        auto key = closure_indices(table, n, identity, {i}, mark);
        if (index.count(key)) continue;
        index.emplace(key, subs.size());
        std::vector<std::uint32_t> gens;
        if (i != identity) gens.push_back(i);
        subs.push_back({std::move(key), std::move(gens)});
        if (i != identity) cyclic_gens.push_back(i);
    }
    for (std::size_t s = 0; s < subs.size(); ++s) {
        for (auto c : cyclic_gens) {
            if (std::binary_search(subs[s].key.begin(), subs[s].key.end(), c)) continue;
            auto gens = subs[s].gens;
            gens.push_back(c);
            auto key = closure_indices(table, n, identity, gens, mark);
            if (index.count(key)) continue;
            index.emplace(key, subs.size());
            subs.push_back({std::move(key), std::move(gens)});
        }
    }
    std::sort(subs.begin(), subs.end(), [](const RawSubgroup& a, const RawSubgroup& b) {
        if (a.key.size() != b.key.size()) return a.key.size() > b.key.size();
        return a.key < b.key;
    });
    return subs;
}

FiniteGroup materialize(const FiniteGroup& G, const RawSubgroup& raw) {
    std::vector<Permutation> elements, gens;
    for (auto i : raw.key) elements.push_back(G.elements()[i]);
    for (auto g : raw.gens) gens.push_back(G.elements()[g]);
    return subgroup_from_elements(G, std::move(elements));
}

void check_sweep_size(const FiniteGroup& G, std::size_t limit) {
    if (!G.is_enumerated() || G.order() > limit)
        throw SizeError("subgroup enumeration is limited to enumerated groups of order <= " + std::to_string(limit));
}

std::vector<std::uint32_t> conjugate_key(const std::vector<std::uint32_t>& key, std::uint32_t s, std::uint32_t sinv,
                                         const std::vector<std::uint32_t>& table, std::size_t n) {
    std::vector<std::uint32_t> out;
    out.reserve(key.size());
    for (auto x : key) out.push_back(table[static_cast<std::size_t>(table[s * n + x]) * n + sinv]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<FiniteGroup> all_subgroups(const FiniteGroup& G, std::size_t limit) {
    check_sweep_size(G, limit);
    auto table = G.multiplication_table();
    std::vector<FiniteGroup> out;
    for (const auto& raw : raw_subgroups(G, table)) out.push_back(materialize(G, raw));
    return out;
}

std::vector<FiniteGroup> subgroup_class_representatives(const FiniteGroup& G, std::size_t limit) {
    check_sweep_size(G, limit);
    const std::size_t n = G.order();
    auto table = G.multiplication_table();
    auto subs = raw_subgroups(G, table);
    std::map<std::vector<std::uint32_t>, std::size_t> index;
    for (std::size_t i = 0; i < subs.size(); ++i) index.emplace(subs[i].key, i);

    std::vector<std::size_t> root(subs.size());
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](std::size_t x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (const auto& s : G.generators()) {
        auto si = static_cast<std::uint32_t>(*G.index_of(s));
        auto sinv = static_cast<std::uint32_t>(*G.index_of(s.inverse()));
        for (std::size_t i = 0; i < subs.size(); ++i) {
            std::size_t j = index.at(conjugate_key(subs[i].key, si, sinv, table, n));
            std::size_t a = find(i), b = find(j);
            if (a != b) root[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<FiniteGroup> out;
    for (std::size_t i = 0; i < subs.size(); ++i)
        if (find(i) == i) out.push_back(materialize(G, subs[i]));
    return out;
}

std::vector<std::uint32_t> conjugacy_class_key(const FiniteGroup& G, const FiniteGroup& H) {
    if (!H.is_subgroup_of(G)) throw ArgumentError("not a subgroup");
    const std::size_t n = G.order();
    auto table = G.multiplication_table();
    std::vector<std::uint32_t> key;
    for (const auto& h : H.elements()) key.push_back(static_cast<std::uint32_t>(*G.index_of(h)));
    std::sort(key.begin(), key.end());
    std::map<std::vector<std::uint32_t>, bool> seen{{key, true}};
    std::deque<std::vector<std::uint32_t>> queue{key};
    std::vector<std::pair<std::uint32_t, std::uint32_t>> gens;
    for (const auto& s : G.generators())
        gens.emplace_back(static_cast<std::uint32_t>(*G.index_of(s)),
                          static_cast<std::uint32_t>(*G.index_of(s.inverse())));
    auto best = key;
    while (!queue.empty()) {
        auto cur = std::move(queue.front());
        queue.pop_front();
        best = std::min(best, cur);
        for (auto [s, sinv] : gens) {
            auto next = conjugate_key(cur, s, sinv, table, n);
            if (seen.emplace(next, true).second) queue.push_back(std::move(next));
        }
    }
    return best;
}

}  // namespace flasque
