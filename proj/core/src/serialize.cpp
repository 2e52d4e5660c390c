#include "flasque/serialize.hpp"

#include "flasque/errors.hpp"

namespace flasque {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) throw ParseError(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

std::vector<Permutation> permutations_from_json(const Json& j, int degree) {
    if (!j.is_array()) throw ParseError("expected an array of permutations");
    std::vector<Permutation> out;
    for (const auto& x : j) out.push_back(permutation_from_json(x, degree));
    return out;
}

Json generator_strings(const FiniteGroup& G) {
    Json gens = Json::array();
    for (const auto& g : G.generators()) gens.push_back(g.to_cycle_string());
    return gens;
}

Json decomposition_to_json(const std::vector<OrbitSummand>& d) {
    Json out = Json::array();
    for (const auto& s : d)
        out.push_back({{"stabilizer", generator_strings(s.stabilizer)},
                       {"order", s.stabilizer.order()},
                       {"multiplicity", s.multiplicity}});
    return out;
}

}  // namespace

Json permutation_to_json(const Permutation& g) { return g.images(); }

Permutation permutation_from_json(const Json& j, int degree) {
    if (j.is_string()) return Permutation::parse(j.get<std::string>(), degree);
    if (!j.is_array()) throw ParseError("permutation must be a cycle string or an array of images");
    std::vector<int> images;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw ParseError("permutation images must be integers");
        images.push_back(x.get<int>());
    }
    if (static_cast<int>(images.size()) != degree)
        throw ParseError("permutation has " + std::to_string(images.size()) + " images, expected " +
                         std::to_string(degree));
    try {
        return Permutation(std::move(images));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

Json integer_to_json(const Integer& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) {
        Integer x;
        if (x.set_str(j.get<std::string>(), 10) != 0) throw ParseError("malformed integer \"" + j.get<std::string>() + "\"");
        return x;
    }
    throw ParseError("matrix entries must be integers");
}

Json matrix_to_json(const IntMatrix& A) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < A.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < A.cols(); ++k) row.push_back(integer_to_json(A(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const Json& j, std::size_t cols) {
    if (!j.is_array()) throw ParseError("matrix must be an array of rows");
    if (j.empty()) return IntMatrix(0, cols);
    if (!j[0].is_array()) throw ParseError("matrix must be an array of rows");
    IntMatrix A(j.size(), j[0].size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != A.cols()) throw ParseError("matrix rows have different lengths");
        for (std::size_t k = 0; k < A.cols(); ++k) A(i, k) = integer_from_json(j[i][k]);
    }
    return A;
}

Json group_to_json(const FiniteGroup& G) {
    return {{"label", G.label()}, {"degree", G.degree()}, {"order", G.order()}, {"generators", generator_strings(G)}};
}

Json lattice_to_json(const GLattice& M) {
    Json actions = Json::array();
    for (const auto& A : M.generator_matrices()) actions.push_back(matrix_to_json(A));
    return {{"group", M.group().label()},
            {"degree", M.group().degree()},
            {"generators", generator_strings(M.group())},
            {"rank", M.rank()},
            {"label", M.label()},
            {"actions", std::move(actions)}};
}

FiniteGroup group_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("lattice spec must be a JSON object");
    if (j.contains("family")) {
        if (!j.at("family").is_string()) throw ParseError("field \"family\" must be a string");
        const int n = int_field(j, "n");
        if (n < 1 || n > kMaxDegree) throw ParseError("n out of range");
        try {
            return parse_family(j.at("family").get<std::string>()) == Family::Symmetric ? FiniteGroup::symmetric(n)
                                                                                       : FiniteGroup::alternating(n);
        } catch (const ArgumentError& e) {
            throw ParseError(e.what());
        }
    }
    const int degree = int_field(j, "degree");
    if (degree < 1 || degree > kMaxDegree) throw ParseError("degree out of range");
    std::string label = j.contains("group") && j.at("group").is_string() ? j.at("group").get<std::string>() : "";
    return FiniteGroup::generated(degree, permutations_from_json(field(j, "generators"), degree), label);
}

GLattice lattice_from_json(const Json& j) {
    FiniteGroup G = group_from_json(j);
    if (j.contains("actions")) {
        const Json& actions = j.at("actions");
        if (!actions.is_array() || actions.size() != G.generators().size())
            throw ParseError("need one action matrix per generator");
        const std::size_t rank = static_cast<std::size_t>(int_field(j, "rank"));
        std::vector<IntMatrix> mats;
        for (const auto& a : actions) {
            IntMatrix A = matrix_from_json(a, rank);
            if (A.rows() != rank || A.cols() != rank) throw ParseError("action matrix is not rank x rank");
            mats.push_back(std::move(A));
        }
        std::string label = j.contains("label") && j.at("label").is_string() ? j.at("label").get<std::string>() : "";
        try {
            return GLattice::from_generator_matrices(G, std::move(mats), label);
        } catch (const ArgumentError& e) {
            throw ParseError(e.what());
        }
    }
    if (!j.contains("construct") || !j.at("construct").is_string())
        throw ParseError("lattice spec needs \"actions\" or \"construct\"");
    const std::string kind = j.at("construct").get<std::string>();
    if (kind == "trivial") return trivial_lattice(G);
    if (kind == "sign") return sign_lattice(G);

    FiniteGroup H = j.contains("subgroup")
                        ? subgroup_generated(G, permutations_from_json(j.at("subgroup"), G.degree()))
                        : j.contains("family") ? point_stabilizer(G, G.degree())
                                               : throw ParseError("constructed lattice needs \"subgroup\"");
    if (kind == "permutation") return permutation_lattice(G, H);
    if (kind == "augmentation_kernel") return augmentation_sequence(G, H).kernel;
    if (kind == "norm_one") return norm_one_lattice(G, H);
    throw ParseError("unknown construct \"" + kind + "\"");
}

Json resolution_to_json(const FlasqueResolution& res) {
    Json summands = Json::array();
    for (const auto& H : res.summands) summands.push_back({{"generators", generator_strings(H)}, {"order", H.order()}});
    return {{"ranks", {{"M", res.M.rank()}, {"P", res.P.rank()}, {"F", res.F.rank()}}},
            {"M", lattice_to_json(res.M)},
            {"P", lattice_to_json(res.P)},
            {"F", lattice_to_json(res.F)},
            {"inject", matrix_to_json(res.inject)},
            {"project", matrix_to_json(res.project)},
            {"summands", std::move(summands)}};
}

Json tate_to_json(const TateGroup& t) {
    Json inv = Json::array();
    for (const auto& x : t.invariants) inv.push_back(integer_to_json(x));
    return {{"degree", t.degree}, {"invariants", std::move(inv)}, {"trivial", t.is_zero()}};
}

Json certificate_to_json(const Certificate& c) {
    Json designated = Json::array();
    for (const auto& g : c.designated) designated.push_back(g.to_cycle_string());
    Json out = {{"criterion", tag_name(c.criterion)},
                {"proposition", c.proposition},
                {"witness_subgroup", generator_strings(c.witness_subgroup)},
                {"order", c.witness_subgroup.order()},
                {"designated", std::move(designated)},
                {"rank", c.rank},
                {"decomposition", decomposition_to_json(c.decomposition)}};
    if (c.free_rank) out["free_rank"] = *c.free_rank;
    return out;
}

Json decision_to_json(const Decision& d) {
    Json rules = Json::array();
    for (const auto& r : d.trace) {
        Json witness = Json::object();
        for (const auto& [k, v] : r.witness) witness[k] = v;
        rules.push_back({{"name", r.name},
                         {"paper_ref", r.paper_ref},
                         {"fired", r.fired},
                         {"outcome", verdict_name(r.outcome)},
                         {"witness", std::move(witness)}});
    }
    Json certs = Json::array();
    for (const auto& c : d.certificates) certs.push_back(certificate_to_json(c));
    return {{"verdict", verdict_name(d.verdict)}, {"rules", std::move(rules)}, {"certificates", std::move(certs)}};
}

Json rationality_to_json(const RationalityVerdict& v) {
    Json decisions = Json::array();
    for (const auto& [p, d] : v.traces) decisions.push_back({{"p", p}, {"decision", decision_to_json(d)}});
    Json out = {{"subject", v.subject}};
    out["p"] = v.p ? Json(*v.p) : Json("all");
    out["verdict"] = rationality_name(v.verdict);
    out["notes"] = v.notes;
    out["decisions"] = std::move(decisions);
    return out;
}

}  // namespace flasque
