#include <algorithm>
#include <sstream>

#include "flasque/classifier.hpp"
#include "flasque/cli.hpp"
#include "flasque/errors.hpp"
#include "flasque/serialize.hpp"
#include "parallel.hpp"

namespace flasque::cli {

namespace {

struct CellKey {
    Family family;
    int n;
    std::uint64_t p;
};

// A family proposition or the n = 4 tag, in preference to the Hall route.
const Certificate* family_certificate(const Decision& d) {
    const Certificate* best = nullptr;
    for (const auto& c : d.certificates)
        if (c.criterion != CertificateTag::HallFreeJP) best = &c;
    return best ? best : (d.certificates.empty() ? nullptr : &d.certificates.front());
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(line);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

bool parse_bool(const std::string& s) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw ParseError("expected true or false, got \"" + s + "\"");
}

}  // namespace

Format parse_format(const std::string& text) {
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    if (text == "markdown" || text == "md") return Format::Markdown;
    throw ArgumentError("unknown format '" + text + "' (expected json, csv or markdown)");
}

std::vector<TableCell> compute_table(const RunConfig& cfg) {
    std::vector<std::uint64_t> primes = cfg.primes;
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    std::vector<CellKey> keys;
    for (Family f : {Family::Symmetric, Family::Alternating})
        for (int n = f == Family::Symmetric ? 2 : 4; n <= cfg.max_n; ++n)
            for (auto p : primes) keys.push_back({f, n, p});

    return parallel_map<TableCell>(keys.size(), cfg.jobs, [&](std::size_t i) {
        const CellKey& k = keys[i];
        RationalityVerdict v = classify_norm_one_family(k.family, k.n, k.p);
        const Decision& d = v.traces.front().second;
        TableCell cell;
        cell.family = k.family;
        cell.n = k.n;
        cell.p = k.p;
        cell.p_retract_rational = v.verdict == Rationality::PRetractRational;
        cell.closed_form = closed_form_p_retract_rational(k.n, k.p);
        cell.engine = verdict_name(d.verdict);
        if (const Certificate* c = family_certificate(d)) cell.certificate = c->proposition + "/" + tag_name(c->criterion);
        return cell;
    });
}

std::string render_table(const std::vector<TableCell>& cells, Format format) {
    std::ostringstream out;
    switch (format) {
        case Format::Json: {
            Json arr = Json::array();
            for (const auto& c : cells)
                arr.push_back({{"family", std::string(1, family_letter(c.family))},
                               {"n", c.n},
                               {"p", c.p},
                               {"p_retract_rational", c.p_retract_rational},
                               {"closed_form", c.closed_form},
                               {"engine", c.engine},
                               {"certificate", c.certificate}});
            out << arr.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            out << "family,n,p,p_retract_rational,closed_form,engine,certificate\n";
            for (const auto& c : cells)
                out << family_letter(c.family) << ',' << c.n << ',' << c.p << ','
                    << (c.p_retract_rational ? "true" : "false") << ',' << (c.closed_form ? "true" : "false") << ','
                    << c.engine << ',' << c.certificate << "\n";
            break;
        case Format::Markdown: {
            std::vector<std::uint64_t> primes;
            for (const auto& c : cells) primes.push_back(c.p);
            std::sort(primes.begin(), primes.end());
            primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
            for (Family f : {Family::Symmetric, Family::Alternating}) {
                std::vector<const TableCell*> rows;
                for (const auto& c : cells)
                    if (c.family == f) rows.push_back(&c);
                if (rows.empty()) continue;
                out << "### " << (f == Family::Symmetric ? "S_n / S_{n-1}" : "A_n / A_{n-1}") << "\n\n| n |";
                for (auto p : primes) out << " p=" << p << " |";
                out << "\n|---|";
                for (std::size_t i = 0; i < primes.size(); ++i) out << "---|";
                out << "\n";
                for (std::size_t i = 0; i < rows.size();) {
                    const int n = rows[i]->n;
                    out << "| " << n << " |";
                    for (; i < rows.size() && rows[i]->n == n; ++i) {
                        const TableCell& c = *rows[i];
                        out << ' ' << (c.p_retract_rational ? "yes" : "no");
                        if (!c.p_retract_rational && !c.certificate.empty())
                            out << " (" << c.certificate.substr(0, c.certificate.find('/')) << ")";
                        out << " |";
                    }
                    out << "\n";
                }
                out << "\n";
            }
            break;
        }
    }
    return out.str();
}

std::vector<TableCell> parse_table_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "family,n,p,p_retract_rational,closed_form,engine,certificate")
        throw ParseError("missing table header");
    std::vector<TableCell> cells;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = split(line, ',');
        if (f.size() != 7) throw ParseError("table row needs 7 fields: " + line);
        TableCell c;
        try {
            c.family = parse_family(f[0]);
            c.n = std::stoi(f[1]);
            c.p = std::stoull(f[2]);
        } catch (const std::exception& e) {
            throw ParseError("bad table row \"" + line + "\": " + e.what());
        }
        c.p_retract_rational = parse_bool(f[3]);
        c.closed_form = parse_bool(f[4]);
        c.engine = f[5];
        c.certificate = f[6];
        cells.push_back(std::move(c));
    }
    return cells;
}

}  // namespace flasque::cli
