#pragma once

#include <nlohmann/json.hpp>

#include "flasque/classifier.hpp"
#include "flasque/cohomology.hpp"
#include "flasque/invertibility.hpp"
#include "flasque/lattice.hpp"
#include "flasque/resolution.hpp"

namespace flasque {

using Json = nlohmann::ordered_json;

/// Array of images.
Json permutation_to_json(const Permutation& g);
/// Accepts a cycle string such as "(1 2 3)(4 5)" or an array of images.
Permutation permutation_from_json(const Json& j, int degree);

/// Integers that fit in a long are numbers, larger ones decimal strings.
Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);

/// Array of rows.
Json matrix_to_json(const IntMatrix& A);
/// `cols` is needed only to rebuild matrices with zero rows.
IntMatrix matrix_from_json(const Json& j, std::size_t cols = 0);

/// {"label", "degree", "order", "generators": [cycle strings]}
Json group_to_json(const FiniteGroup& G);

/// {"group", "degree", "generators", "rank", "actions": [one matrix per generator]}
Json lattice_to_json(const GLattice& M);

/// Loads the explicit form written by lattice_to_json, or a constructed form:
///   {"family": "S", "n": 4, "construct": "norm_one"}
///   {"degree": 3, "generators": [...], "construct": "permutation", "subgroup": [...]}
/// with construct one of permutation, augmentation_kernel, norm_one, trivial,
/// sign. A family group defaults to the stabilizer of n as subgroup. Throws
/// ParseError on malformed input.
GLattice lattice_from_json(const Json& j);

/// Group part of a lattice spec (family/n or degree/generators).
FiniteGroup group_from_json(const Json& j);

Json resolution_to_json(const FlasqueResolution& res);
Json tate_to_json(const TateGroup& t);
Json certificate_to_json(const Certificate& c);
Json decision_to_json(const Decision& d);
Json rationality_to_json(const RationalityVerdict& v);

}  // namespace flasque
