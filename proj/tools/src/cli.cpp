#include "flasque/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "flasque/arith.hpp"
#include "flasque/classifier.hpp"
#include "flasque/errors.hpp"
#include "flasque/serialize.hpp"

namespace flasque::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

std::optional<std::uint64_t> parse_positive(const std::string& text) {
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(text, &used);
        if (used == text.size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    return std::nullopt;
}

std::vector<std::uint64_t> parse_primes(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        auto v = parse_positive(item);
        if (!v || !is_prime(*v)) throw ArgumentError("'" + item + "' is not a prime");
        out.push_back(*v);
    }
    return out;
}

Json read_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        text = s.str();
    } else {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open " + path);
        std::ostringstream s;
        s << in.rdbuf();
        text = s.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void print_trace(std::ostream& out, const RationalityVerdict& v) {
    out << "**" << v.subject << "**, p = " << (v.p ? std::to_string(*v.p) : "all") << ": "
        << rationality_name(v.verdict) << "\n\n";
    for (const auto& note : v.notes) out << "> " << note << "\n";
    for (const auto& [p, d] : v.traces) {
        out << "\n#### p = " << p << " (" << verdict_name(d.verdict) << ")\n\n";
        for (const auto& r : d.trace) {
            out << "- " << (r.fired ? "[x] " : "[ ] ") << r.name << " (" << r.paper_ref << ")";
            if (r.fired) out << " -> " << verdict_name(r.outcome);
            for (const auto& [k, val] : r.witness) out << "; " << k << ": " << val;
            out << "\n";
        }
    }
}

struct Shared {
    std::string format = "json";
    int max_n = 12;
    std::string primes = "2,3,5,7,11,13";
    unsigned jobs = 1;
    std::string cutoff;
};

RunConfig make_config(const Shared& s) {
    RunConfig cfg;
    cfg.format = parse_format(s.format);
    if (s.max_n < 2 || s.max_n > kMaxDegree)
        throw ArgumentError("--max-n must lie in [2, " + std::to_string(kMaxDegree) + "]");
    cfg.max_n = s.max_n;
    cfg.primes = parse_primes(s.primes);
    cfg.jobs = std::max(1u, s.jobs);
    if (auto env = cutoff_from_env()) cfg.cutoff = *env;
    if (!s.cutoff.empty()) {
        auto v = parse_positive(s.cutoff);
        if (!v) throw ArgumentError("--cutoff must be a positive integer");
        cfg.cutoff = *v;
    }
    return cfg;
}

void add_shared(CLI::App* cmd, Shared& s, bool grid) {
    cmd->add_option("--format", s.format, "json, csv or markdown")->capture_default_str();
    if (!grid) return;
    cmd->add_option("--max-n", s.max_n, "largest n in the grid")->capture_default_str();
    cmd->add_option("--primes", s.primes, "comma separated primes")->capture_default_str();
    cmd->add_option("--jobs", s.jobs, "worker threads")->capture_default_str();
    cmd->add_option("--cutoff", s.cutoff,
                    std::string("largest group order for explicit resolutions (env ") + kCutoffEnv + ")");
}

}  // namespace

std::optional<std::uint64_t> cutoff_from_env() {
    const char* v = std::getenv(kCutoffEnv);
    if (!v) return std::nullopt;
    return parse_positive(v);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Retract rationality of norm one tori: classification, certificates and lattice tools"};
    app.require_subcommand(1);
    Shared shared;

    std::string family, n_text, p_text;
    auto* classify = app.add_subcommand("classify", "verdict and proof trace for (family, n, p | all)");
    classify->add_option("family", family, "S or A")->required();
    classify->add_option("n", n_text, "degree")->required();
    classify->add_option("p", p_text, "prime or 'all'")->required();
    add_shared(classify, shared, false);

    auto* table = app.add_subcommand("table", "classification grid over (family, n, p)");
    add_shared(table, shared, true);

    std::string fault;
    auto* verify = app.add_subcommand("verify-paper", "recompute every certificate and run the consistency suite");
    add_shared(verify, shared, true);
    verify->add_option("--inject-fault", fault, "perturb the stated decomposition of this proposition");

    std::string lattice_path;
    auto* resolve = app.add_subcommand("resolve", "flasque resolution of a lattice spec file ('-' for stdin)");
    resolve->add_option("lattice", lattice_path, "lattice spec JSON")->required();

    std::vector<std::string> subgroup;
    std::string degree = "all";
    auto* cohomology = app.add_subcommand("cohomology", "Tate cohomology of a lattice spec at a subgroup");
    cohomology->add_option("lattice", lattice_path, "lattice spec JSON")->required();
    cohomology->add_option("--subgroup", subgroup, "generator of the subgroup as a cycle string (repeatable)");
    cohomology->add_option("--degree", degree, "-1, 0, 1 or all")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    try {
        if (classify->parsed()) {
            const Format format = parse_format(shared.format);
            auto n = parse_positive(n_text);
            if (!n) throw ArgumentError("n must be a positive integer");
            RationalityVerdict v;
            if (p_text == "all") {
                v = classify_norm_one_family(parse_family(family), static_cast<int>(*n));
            } else {
                auto p = parse_positive(p_text);
                if (!p) throw ArgumentError("p must be a prime or 'all'");
                v = classify_norm_one_family(parse_family(family), static_cast<int>(*n), *p);
            }
            if (format == Format::Json)
                out << rationality_to_json(v).dump(2) << "\n";
            else if (format == Format::Markdown)
                print_trace(out, v);
            else
                out << "subject,p,verdict\n" << v.subject << ',' << (v.p ? std::to_string(*v.p) : "all") << ','
                    << rationality_name(v.verdict) << "\n";
            return kOk;
        }
        if (table->parsed()) {
            RunConfig cfg = make_config(shared);
            out << render_table(compute_table(cfg), cfg.format);
            return kOk;
        }
        if (verify->parsed()) {
            VerifyOptions opts;
            opts.config = make_config(shared);
            if (!fault.empty()) {
                static const std::vector<std::string> labels{"oddprimeS", "evenS", "oddprimeA", "evenA1", "evenA2",
                                                             "mainS"};
                if (std::find(labels.begin(), labels.end(), fault) == labels.end())
                    throw ArgumentError("--inject-fault expects one of oddprimeS, evenS, oddprimeA, evenA1, evenA2, mainS");
                opts.inject_fault = fault;
            }
            opts.progress = [&err](const std::string& line) { err << line << "\n" << std::flush; };
            auto results = verify_paper(opts);
            std::size_t failed = 0;
            for (const auto& r : results) failed += r.passed ? 0 : 1;
            if (opts.config.format == Format::Json) {
                Json arr = Json::array();
                for (const auto& r : results) arr.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
                out << Json{{"passed", failed == 0}, {"failures", failed}, {"checks", std::move(arr)}}.dump(2) << "\n";
            } else {
                for (const auto& r : results) out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
                out << results.size() - failed << "/" << results.size() << " checks passed\n";
            }
            return failed ? kFailure : kOk;
        }
        if (resolve->parsed()) {
            GLattice M = lattice_from_json(read_json(lattice_path));
            FlasqueResolution res = flasque_resolution(M);
            Json j = resolution_to_json(res);
            j["exact"] = is_exact(res);
            out << j.dump(2) << "\n";
            return kOk;
        }
        if (cohomology->parsed()) {
            GLattice M = lattice_from_json(read_json(lattice_path));
            std::vector<Permutation> gens;
            for (const auto& s : subgroup) gens.push_back(Permutation::parse(s, M.group().degree()));
            FiniteGroup H = gens.empty() ? M.group() : subgroup_generated(M.group(), gens);
            std::vector<int> degrees;
            if (degree == "all")
                degrees = {-1, 0, 1};
            else if (degree == "-1" || degree == "0" || degree == "1")
                degrees = {std::stoi(degree)};
            else
                throw ArgumentError("--degree must be -1, 0, 1 or all");
            Json groups = Json::array();
            for (int d : degrees) groups.push_back(tate_to_json(tate_cohomology(d, H, M)));
            Json gens_json = Json::array();
            for (const auto& g : H.generators()) gens_json.push_back(g.to_cycle_string());
            out << Json{{"subgroup", std::move(gens_json)}, {"order", H.order()}, {"cohomology", std::move(groups)}}.dump(2)
                << "\n";
            return kOk;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UnsupportedCase& e) {
        err << "unsupported: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "failure: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}

}  // namespace flasque::cli
