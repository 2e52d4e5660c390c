#include <mutex>
#include <sstream>

#include "flasque/arith.hpp"
#include "flasque/classifier.hpp"
#include "flasque/cli.hpp"
#include "flasque/errors.hpp"
#include "flasque/resolution.hpp"
#include "parallel.hpp"

namespace flasque::cli {

namespace {

using Check = std::function<CheckResult()>;

std::string case_name(Family f, int n, std::uint64_t p) {
    return std::string("(") + family_letter(f) + "," + std::to_string(n) + "," + std::to_string(p) + ")";
}

FiniteGroup family_group(Family f, int n) {
    return f == Family::Symmetric ? FiniteGroup::symmetric(n) : FiniteGroup::alternating(n);
}

CheckResult decomposition_check(Family f, int n, std::uint64_t p, const std::string& label,
                                const std::optional<std::string>& fault) {
    CheckResult r{"decomposition " + label + " " + case_name(f, n, p), false, {}};
    std::optional<std::vector<OrbitSummand>> stated;
    if (fault && *fault == label) {
        std::vector<OrbitSummand> s = label == "mainS" ? std::vector<OrbitSummand>{{FiniteGroup::trivial(4), 1}}
                                                       : stated_decomposition(witness_subgroup(f, n, p));
        s.front().multiplicity += 1;
        stated = std::move(s);
    }
    try {
        Certificate c = build_certificate(f, n, p, stated);
        r.passed = c.proposition == label;
        r.detail = tag_name(c.criterion) + ", " + std::to_string(c.decomposition.size()) + " orbit types";
        if (c.free_rank) r.detail += ", free rank " + std::to_string(*c.free_rank);
    } catch (const Error& e) {
        r.detail = e.what();
    }
    return r;
}

CheckResult free_restriction_check(int n) {
    CheckResult r{"free restriction evenA1 n=" + std::to_string(n), false, {}};
    try {
        WitnessSubgroup w = witness_subgroup(Family::Alternating, n, 2);
        FiniteGroup G = FiniteGroup::alternating(n);
        FiniteGroup H = point_stabilizer(G, n);
        auto d = orbit_decomposition(permutation_lattice(G, H), w.group);
        const std::size_t t = static_cast<std::size_t>(n / 4);
        if (d.size() != 1 || d[0].stabilizer.order() != 1 || d[0].multiplicity != t) {
            r.detail = "Z[A_n/A_n-1] is not free of rank n/4 over the Klein witness";
            return r;
        }
        auto fr = free_restriction_decomposition(restrict(norm_one_lattice(G, H), w.group), t);
        r.passed = fr.basis_change.is_unimodular() &&
                   fr.basis_change * fr.inverse == IntMatrix::identity(fr.basis_change.rows()) &&
                   fr.jp.rank() == 3 && fr.free_part.rank() == 4 * (t - 1);
        r.detail = "J = J_P + Z[P]^" + std::to_string(t - 1);
    } catch (const Error& e) {
        r.detail = e.what();
    }
    return r;
}

CheckResult flasque_check(const std::string& name, const GLattice& M) {
    CheckResult r{name, false, {}};
    try {
        FlasqueResolution res = flasque_resolution(M);
        auto reps = subgroup_class_representatives(M.group());
        const bool exact = is_exact(res);
        const bool F_flasque = flasque_report(res.F, reps).holds;
        const bool P_flasque = flasque_report(res.P, reps).holds;
        r.passed = exact && F_flasque && P_flasque;
        std::ostringstream s;
        s << "rank M=" << res.M.rank() << " P=" << res.P.rank() << " F=" << res.F.rank() << ", " << reps.size()
          << " subgroup classes" << (exact ? "" : ", NOT EXACT") << (F_flasque ? "" : ", F NOT FLASQUE")
          << (P_flasque ? "" : ", P HAS NONZERO H^-1");
        r.detail = s.str();
    } catch (const Error& e) {
        r.detail = e.what();
    }
    return r;
}

CheckResult splitting_check(Family f, int n, std::uint64_t p) {
    CheckResult r{"splitting " + case_name(f, n, p), false, {}};
    try {
        FiniteGroup G = family_group(f, n);
        auto w = verify_splitting_prime_to_p(G, point_stabilizer(G, n), p);
        r.passed = w.ok();
        r.detail = "index " + std::to_string(w.index) + ", Sylow of H of order " + std::to_string(w.sylow_of_h.order());
    } catch (const Error& e) {
        r.detail = e.what();
    }
    return r;
}

CheckResult cohomology_spot_checks() {
    CheckResult r{"cohomology spot checks", true, {}};
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) {
            r.passed = false;
            r.detail += (r.detail.empty() ? "" : "; ") + what;
        }
    };
    for (std::uint64_t p : {2u, 3u, 5u}) {
        std::vector<int> cycle;
        for (int i = 1; i <= static_cast<int>(p); ++i) cycle.push_back(i);
        FiniteGroup C = FiniteGroup::generated(static_cast<int>(p), {Permutation::from_cycles(static_cast<int>(p), {cycle})});
        auto h0 = tate_h0(C, trivial_lattice(C));
        expect(h0.invariants == std::vector<Integer>{Integer(static_cast<unsigned long>(p))},
               "H^0(C_" + std::to_string(p) + ", Z) = " + h0.to_string());
    }
    FiniteGroup C2 = FiniteGroup::symmetric(2);
    auto hm = tate_h_minus1(C2, sign_lattice(C2));
    expect(hm.invariants == std::vector<Integer>{Integer(2)}, "H^-1(C_2, sign) = " + hm.to_string());
    FiniteGroup S3 = FiniteGroup::symmetric(3);
    FiniteGroup C3 = subgroup_generated(S3, {Permutation::from_cycles(3, {{1, 2, 3}})});
    auto h = tate_h_minus1(C3, permutation_lattice(S3, point_stabilizer(S3, 3)));
    expect(h.is_zero(), "H^-1(<(1 2 3)>, Z[S_3/S_2]) = " + h.to_string());
    if (r.passed) r.detail = "H^0(C_p, Z) = Z/p for p = 2, 3, 5; H^-1(C_2, sign) = Z/2; H^-1(C_3, Z[S_3/S_2]) = 0";
    return r;
}

CheckResult classification_check(const RunConfig& cfg) {
    CheckResult r{"classification grid", true, {}};
    std::size_t cells = 0, bad = 0;
    try {
        for (const auto& c : compute_table(cfg)) {
            ++cells;
            const bool engine_ok = c.engine == (c.closed_form ? "PInvertible" : "NotPInvertible");
            const bool cert_ok = c.closed_form || !c.certificate.empty();
            if (c.p_retract_rational != c.closed_form || !engine_ok || !cert_ok) {
                ++bad;
                r.detail += std::string(r.detail.empty() ? "" : "; ") + case_name(c.family, c.n, c.p);
            }
        }
    } catch (const Error& e) {
        r.passed = false;
        r.detail = e.what();
        return r;
    }
    r.passed = bad == 0;
    if (r.passed) r.detail = std::to_string(cells) + " cells agree with the closed form";
    return r;
}

CheckResult coherence_check(Family f, int n, std::uint64_t p, bool subgroups) {
    CheckResult r{"coherence " + case_name(f, n, p), true, {}};
    try {
        FiniteGroup G = family_group(f, n);
        FiniteGroup H = point_stabilizer(G, n);
        Decision d = decide_p_invertibility(G, H, p);
        GLattice J = norm_one_lattice(G, H);
        Decision reduced = decide_restricted_lattice(reduce_to_sylow(J, p).lattice, p);
        if (reduced.verdict != Verdict::Unknown && d.verdict != Verdict::Unknown && reduced.verdict != d.verdict) {
            r.passed = false;
            r.detail = "Sylow reduction gives " + verdict_name(reduced.verdict) + ", engine " + verdict_name(d.verdict);
            return r;
        }
        std::size_t checked = 0;
        if (subgroups && d.verdict == Verdict::PInvertible) {
            for (const auto& K : subgroup_class_representatives(G)) {
                ++checked;
                if (decide_restricted_lattice(restrict(J, K), p).verdict == Verdict::NotPInvertible) {
                    r.passed = false;
                    r.detail = "restriction to a subgroup of order " + std::to_string(K.order()) + " is NotPInvertible";
                    return r;
                }
            }
        }
        r.detail = "engine " + verdict_name(d.verdict) + ", Sylow reduction " + verdict_name(reduced.verdict);
        if (checked) r.detail += ", " + std::to_string(checked) + " restrictions";
    } catch (const Error& e) {
        r.passed = false;
        r.detail = e.what();
    }
    return r;
}

}  // namespace

std::vector<CheckResult> verify_paper(const VerifyOptions& options) {
    const RunConfig& cfg = options.config;
    std::vector<Check> checks;

    for (Family f : {Family::Symmetric, Family::Alternating})
        for (int n = 2; n <= cfg.max_n; ++n)
            for (int p : primes_up_to(n)) {
                const auto up = static_cast<std::uint64_t>(p);
                if (auto prop = applicable_proposition(f, n, up))
                    checks.push_back([=] { return decomposition_check(f, n, up, proposition_name(*prop), options.inject_fault); });
            }
    if (cfg.max_n >= 4)
        checks.push_back([=] { return decomposition_check(Family::Symmetric, 4, 2, "mainS", options.inject_fault); });
    for (int n = 4; n <= cfg.max_n; n += 4) checks.push_back([=] { return free_restriction_check(n); });

    for (int n = 3; n <= std::min(5, cfg.max_n); ++n)
        checks.push_back([=] {
            FiniteGroup G = FiniteGroup::symmetric(n);
            return flasque_check("flasque rho(J) S_" + std::to_string(n), norm_one_lattice(G, point_stabilizer(G, n)));
        });
    for (Family f : {Family::Symmetric, Family::Alternating})
        for (int n = 2; n <= cfg.max_n; ++n)
            for (int p : primes_up_to(n)) {
                const auto up = static_cast<std::uint64_t>(p);
                if (!applicable_proposition(f, n, up)) continue;
                checks.push_back([=] {
                    WitnessSubgroup w = witness_subgroup(f, n, up);
                    std::string name = "flasque rho(J) over the " + proposition_name(w.proposition) + " witness " +
                                       case_name(f, n, up);
                    if (w.group.order() > cfg.cutoff)
                        return CheckResult{name, true, "skipped, |P| = " + std::to_string(w.group.order()) +
                                                           " above the cutoff"};
                    FiniteGroup G = family_group(f, n);
                    return flasque_check(name, restrict(norm_one_lattice(G, point_stabilizer(G, n)), w.group));
                });
            }

    for (Family f : {Family::Symmetric, Family::Alternating})
        for (int n = f == Family::Symmetric ? 2 : 4; n <= cfg.max_n; ++n)
            for (auto p : cfg.primes)
                if (is_prime(p) && n % static_cast<int>(p) != 0) checks.push_back([=] { return splitting_check(f, n, p); });

    checks.push_back(cohomology_spot_checks);
    checks.push_back([cfg] { return classification_check(cfg); });
    for (Family f : {Family::Symmetric, Family::Alternating})
        for (int n = f == Family::Symmetric ? 2 : 4; n <= cfg.max_n; ++n)
            for (auto p : prime_divisors(factorial(n)))
                checks.push_back([=] { return coherence_check(f, n, p, n <= 6); });

    std::mutex progress_mutex;
    std::size_t done = 0;
    return parallel_map<CheckResult>(checks.size(), cfg.jobs, [&](std::size_t i) {
        CheckResult r = checks[i]();
        if (options.progress) {
            std::lock_guard lock(progress_mutex);
            options.progress("[" + std::to_string(++done) + "/" + std::to_string(checks.size()) + "] " +
                             (r.passed ? "ok   " : "FAIL ") + r.name);
        }
        return r;
    });
}

}  // namespace flasque::cli
