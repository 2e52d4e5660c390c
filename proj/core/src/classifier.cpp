#include "flasque/classifier.hpp"

#include <numeric>

#include "flasque/arith.hpp"
#include "flasque/errors.hpp"

namespace flasque {

std::string rationality_name(Rationality r) {
    switch (r) {
        case Rationality::PRetractRational: return "PRetractRational";
        case Rationality::NotPRetractRational: return "NotPRetractRational";
        case Rationality::RetractRational: return "RetractRational";
        case Rationality::NotRetractRational: return "NotRetractRational";
        case Rationality::Unknown: return "Unknown";
    }
    return "?";
}

bool closed_form_p_retract_rational(int n, std::uint64_t p) {
    const auto un = static_cast<std::uint64_t>(n);
    return is_prime(un) || std::gcd(p, un) == 1;
}

namespace {

Rationality from_verdict(Verdict v) {
    switch (v) {
        case Verdict::PInvertible: return Rationality::PRetractRational;
        case Verdict::NotPInvertible: return Rationality::NotPRetractRational;
        case Verdict::Unknown: return Rationality::Unknown;
    }
    return Rationality::Unknown;
}

std::string family_subject(Family family, int n) {
    const char c = family_letter(family);
    return std::string(1, c) + "_" + std::to_string(n) + " / " + c + "_" + std::to_string(n - 1);
}

std::string pair_subject(const FiniteGroup& G, const FiniteGroup& H) {
    auto name = [](const FiniteGroup& X) {
        return X.label().empty() ? "group of order " + std::to_string(X.order()) : X.label();
    };
    return name(G) + " / " + name(H);
}

RationalityVerdict combine(std::string subject, std::vector<RationalityVerdict> parts) {
    RationalityVerdict out;
    out.subject = std::move(subject);
    out.verdict = Rationality::RetractRational;
    bool unknown = false;
    for (auto& part : parts) {
        if (part.verdict == Rationality::NotPRetractRational) out.verdict = Rationality::NotRetractRational;
        if (part.verdict == Rationality::Unknown) unknown = true;
        for (auto& t : part.traces) out.traces.push_back(std::move(t));
        for (auto& note : part.notes) out.notes.push_back(std::move(note));
    }
    if (unknown && out.verdict != Rationality::NotRetractRational) out.verdict = Rationality::Unknown;
    return out;
}

void check_family(Family family, int n) {
    if (n < 2) throw ArgumentError("n must be at least 2");
    if (n > kMaxDegree) throw SizeError("degree " + std::to_string(n) + " exceeds " + std::to_string(kMaxDegree));
    if (family == Family::Alternating && n <= 3)
        throw ArgumentError("A_" + std::to_string(n) + " / A_" + std::to_string(n - 1) +
                            " is degenerate: the extension is Galois (A_" + std::to_string(n - 1) +
                            " is trivial), use classify_general");
}

}  // namespace

RationalityVerdict classify_norm_one_family(Family family, int n, std::uint64_t p) {
    check_family(family, n);
    if (!is_prime(p)) throw ArgumentError(std::to_string(p) + " is not prime");
    const FiniteGroup G = family == Family::Symmetric ? FiniteGroup::symmetric(n) : FiniteGroup::alternating(n);
    const FiniteGroup H = point_stabilizer(G, n);

    RationalityVerdict out;
    out.subject = family_subject(family, n);
    out.p = p;
    const bool closed = closed_form_p_retract_rational(n, p);
    out.verdict = closed ? Rationality::PRetractRational : Rationality::NotPRetractRational;
    Decision d = decide_p_invertibility(G, H, p);
    if (d.verdict == Verdict::Unknown)
        out.notes.push_back("engine undecided; verdict from the closed form only");
    else if ((d.verdict == Verdict::PInvertible) != closed)
        throw ConstructionError("engine verdict " + verdict_name(d.verdict) + " contradicts the closed form for " +
                                out.subject + " at p = " + std::to_string(p));
    if (family == Family::Symmetric && n == 2) out.notes.push_back("S_2 / S_1 is a quadratic Galois extension");
    out.traces.emplace_back(p, std::move(d));
    return out;
}

RationalityVerdict classify_norm_one_family(Family family, int n) {
    check_family(family, n);
    std::vector<RationalityVerdict> parts;
    for (auto p : prime_divisors(factorial(n)))
        parts.push_back(classify_norm_one_family(family, n, p));
    return combine(family_subject(family, n), std::move(parts));
}

RationalityVerdict classify_general(const FiniteGroup& G, const FiniteGroup& H, std::uint64_t p) {
    if (!is_prime(p)) throw ArgumentError(std::to_string(p) + " is not prime");
    if (!H.is_subgroup_of(G)) throw ArgumentError("H is not a subgroup of G");
    RationalityVerdict out;
    out.subject = pair_subject(G, H);
    out.p = p;
    if (is_normal(G, H)) {
        FiniteGroup Q = coset_action_image(CosetSpace(G, H));
        FiniteGroup S = sylow_subgroup(Q, p);
        const bool cyclic = is_cyclic(S);
        out.verdict = cyclic ? Rationality::PRetractRational : Rationality::NotPRetractRational;
        Decision d;
        d.verdict = cyclic ? Verdict::PInvertible : Verdict::NotPInvertible;
        RuleApplication r{"galois_cyclic_sylow", "Theorem galois_case", true, d.verdict, {}};
        r.witness.emplace_back("quotient_order", std::to_string(Q.order()));
        r.witness.emplace_back("sylow_order", std::to_string(S.order()));
        r.witness.emplace_back("sylow_cyclic", cyclic ? "yes" : "no");
        d.trace.push_back(std::move(r));
        out.traces.emplace_back(p, std::move(d));
        out.notes.push_back("H is normal: Galois case");
        return out;
    }
    Decision d = decide_p_invertibility(G, H, p);
    out.verdict = from_verdict(d.verdict);
    if (auto fam = recognize_family_pair(G, H)) {
        const bool closed = closed_form_p_retract_rational(fam->second, p);
        if (d.verdict != Verdict::Unknown && (d.verdict == Verdict::PInvertible) != closed)
            throw ConstructionError("engine verdict contradicts the closed form for " + out.subject);
    }
    out.traces.emplace_back(p, std::move(d));
    return out;
}

RationalityVerdict retract_summary(const FiniteGroup& G, const FiniteGroup& H) {
    std::vector<RationalityVerdict> parts;
    for (auto p : prime_divisors(G.order())) parts.push_back(classify_general(G, H, p));
    return combine(pair_subject(G, H), std::move(parts));
}

}  // namespace flasque
