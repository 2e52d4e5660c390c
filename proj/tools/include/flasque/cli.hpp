#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "flasque/witness.hpp"

namespace flasque::cli {

enum class Format { Json, Csv, Markdown };

Format parse_format(const std::string& text);

inline constexpr const char* kCutoffEnv = "FLASQUE_CUTOFF";

struct RunConfig {
    int max_n = 12;
    std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};
    Format format = Format::Json;
    /// Largest group order for which the explicit resolution and flasqueness
    /// checks are run.
    std::uint64_t cutoff = 64;
    unsigned jobs = 1;
};

/// Reads the cutoff override from the environment, if set and valid.
std::optional<std::uint64_t> cutoff_from_env();

struct TableCell {
    Family family = Family::Symmetric;
    int n = 0;
    std::uint64_t p = 0;
    bool p_retract_rational = false;
    bool closed_form = false;
    /// Engine verdict name.
    std::string engine;
    /// Certificate proposition and tag of a negative cell, "proposition/TAG".
    std::string certificate;

    friend bool operator==(const TableCell&, const TableCell&) = default;
};

/// Cells for S with 2 <= n <= max_n and A with 4 <= n <= max_n, ordered by
/// family, n, p. Independent of cfg.jobs.
std::vector<TableCell> compute_table(const RunConfig& cfg);

std::string render_table(const std::vector<TableCell>& cells, Format format);
std::vector<TableCell> parse_table_csv(const std::string& text);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    RunConfig config;
    /// Proposition label whose stated decomposition is perturbed before the
    /// comparison.
    std::optional<std::string> inject_fault;
    std::function<void(const std::string&)> progress;
};

std::vector<CheckResult> verify_paper(const VerifyOptions& options);

/// Runs the command line. Exit codes: 0 success, 1 verification failure,
/// 2 usage or parse error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace flasque::cli
