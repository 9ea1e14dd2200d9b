// bridgekit command-line front end.
//
//   bridgekit parse|wirtinger|passes|consum|decompose|verify|batch ...
//
// Exit codes: 0 success, 1 usage error, 2 input error, 3 internal check
// failure (oracle mismatch).

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bridgekit/bridgekit.hpp"

namespace {

using namespace bridgekit;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitCheck = 3;

struct GlobalFlags {
    std::string format;  // empty: subcommand default
    long long time_limit_ms = 30'000;
    int max_k = 0;
    unsigned jobs = 1;
    std::string cache;
    bool oracle_check = false;
    bool emit_certificate = false;
    bool reduce = false;
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// A code argument is either the code itself or "-" for standard input.
Diagram load_code(const std::string& arg, const GlobalFlags& g) {
    Diagram d = parse_gauss(arg == "-" ? read_source("-") : arg);
    return g.reduce ? remove_kinks(d) : d;
}

bool json_output(const GlobalFlags& g) { return g.format == "jsonl"; }

SearchOptions search_options(const GlobalFlags& g) {
    SearchOptions opts;
    opts.max_k = g.max_k;
    opts.time_limit = std::chrono::milliseconds(g.time_limit_ms);
    opts.parallel = g.jobs > 1;
    opts.threads = g.jobs;
    return opts;
}

int cmd_parse(const std::string& code, const GlobalFlags& g) {
    const Diagram d = load_code(code, g);
    const Diagram canon = canonical_form(d);
    if (json_output(g)) {
        json strands = json::array();
        for (const auto& s : d.strands()) strands.push_back({{"id", s.id}, {"over_entries", s.over_entries}});
        json crossings = json::array();
        for (const auto& c : d.crossings())
            crossings.push_back(
                {{"id", c.id}, {"over", c.over_strand}, {"under", {c.under_pair.first, c.under_pair.second}}});
        std::cout << json{{"code", serialize_for_file(d)},
                          {"n", d.crossing_count()},
                          {"canonical", serialize_for_file(canon)},
                          {"strands", strands},
                          {"crossings", crossings}}
                         .dump()
                  << '\n';
        return kExitOk;
    }
    std::cout << "code       " << serialize_for_file(d) << '\n'
              << "crossings  " << d.crossing_count() << '\n'
              << "strands    " << d.strand_count() << '\n'
              << "canonical  " << serialize_for_file(canon) << '\n';
    for (const auto& s : d.strands()) {
        std::cout << "strand " << std::setw(3) << s.id << "  ";
        for (auto i : s.over_entries) std::cout << ' ' << serialize(d.entry(i));
        std::cout << '\n';
    }
    for (const auto& c : d.crossings()) {
        std::cout << "crossing " << std::setw(3) << c.id << "  over=" << c.over_strand << " under=("
                  << c.under_pair.first << ',' << c.under_pair.second << ")\n";
    }
    return kExitOk;
}

int cmd_wirtinger(const std::string& code, const std::string& certificate_out, const GlobalFlags& g) {
    const Diagram d = load_code(code, g);
    const SearchOutcome out = wirtinger_number(d, search_options(g));
    std::optional<int> oracle;
    if (g.oracle_check && out.exact() && d.crossing_count() <= kDefaultOracleBound) oracle = wirtinger_oracle(d);
    const double ms = static_cast<double>(out.elapsed.count()) / 1000.0;
    const char* status = out.exact() ? "exact" : "lower_bound";

    if (g.emit_certificate && out.certificate && !certificate_out.empty()) {
        std::ofstream file(certificate_out);
        if (!file) throw InputError("cannot write " + certificate_out);
        file << json(*out.certificate).dump() << '\n';
    }
    if (json_output(g)) {
        json j{{"omega", out.k}, {"status", status}, {"elapsed_ms", ms}, {"nodes", out.nodes_explored}};
        if (g.emit_certificate && out.certificate) j["certificate"] = *out.certificate;
        if (oracle) j["oracle"] = *oracle;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "omega " << (out.exact() ? "" : ">=") << out.k << " (" << status << ")  elapsed_ms="
                  << format_ms(ms) << " nodes=" << out.nodes_explored;
        if (oracle) std::cout << " oracle=" << *oracle;
        std::cout << '\n';
        if (g.emit_certificate && out.certificate && certificate_out.empty())
            std::cout << json(*out.certificate).dump() << '\n';
    }
    if (oracle && *oracle != out.k) {
        std::cerr << "error: oracle mismatch (search " << out.k << ", oracle " << *oracle << ")\n";
        return kExitCheck;
    }
    return kExitOk;
}

int cmd_passes(const std::string& code, const GlobalFlags& g) {
    const Diagram d = load_code(code, g);
    if (d.empty()) {
        if (json_output(g)) {
            std::cout << json{{"runs", json::array()}, {"overpass_number", 1}, {"shared", json::array()}}.dump()
                      << '\n';
        } else {
            std::cout << "0-crossing diagram: overpass_number 1\n";
        }
        return kExitOk;
    }
    const auto dec = pass_decomposition(d);
    const auto shared = consecutive_shared_crossings(d);
    const auto report = minimality_incompatibility_report(d);
    if (json_output(g)) {
        json runs = json::array();
        for (const auto& r : dec.runs)
            runs.push_back({{"kind", r.kind == Passage::Over ? "over" : "under"}, {"crossings", r.crossings}});
        json pairs = json::array();
        for (const auto& s : shared) pairs.push_back({{"run_pair", s.run_pair}, {"crossing", s.crossing}});
        std::cout << json{{"runs", runs},
                          {"overpass_number", overpass_number(d)},
                          {"shared", pairs},
                          {"overpass_minimal_necessary_condition", report.overpass_minimal_necessary_condition},
                          {"crossing_minimal_necessary_condition", report.crossing_minimal_necessary_condition}}
                         .dump()
                  << '\n';
        return kExitOk;
    }
    std::cout << std::left << std::setw(6) << "run" << std::setw(7) << "kind" << "crossings\n";
    for (std::size_t i = 0; i < dec.runs.size(); ++i) {
        std::cout << std::setw(6) << i << std::setw(7) << (dec.runs[i].kind == Passage::Over ? "over" : "under");
        for (auto c : dec.runs[i].crossings) std::cout << c << ' ';
        std::cout << '\n';
    }
    std::cout << "overpass_number                       " << overpass_number(d) << '\n'
              << "shared crossings                      ";
    if (shared.empty()) std::cout << "none";
    for (const auto& s : shared) std::cout << '(' << s.run_pair << ',' << s.crossing << ") ";
    std::cout << '\n'
              << "overpass_minimal_necessary_condition  " << std::boolalpha
              << report.overpass_minimal_necessary_condition << '\n'
              << "crossing_minimal_necessary_condition  " << report.crossing_minimal_necessary_condition << '\n';
    return kExitOk;
}

int cmd_consum(const std::string& a, const std::string& b, std::size_t e1, std::size_t e2, const GlobalFlags& g) {
    const Diagram sum = connected_sum(load_code(a, g), EdgeRef{e1}, load_code(b, g), EdgeRef{e2});
    if (json_output(g)) {
        std::cout << json{{"code", serialize_for_file(sum)}, {"n", sum.crossing_count()}}.dump() << '\n';
    } else {
        std::cout << serialize_for_file(sum) << '\n';
    }
    return kExitOk;
}

int cmd_decompose(const std::string& code, const GlobalFlags& g) {
    const auto summands = decompose(load_code(code, g));
    if (json_output(g)) {
        json codes = json::array();
        for (const auto& s : summands) codes.push_back(serialize_for_file(s));
        std::cout << json{{"summands", codes}}.dump() << '\n';
    } else {
        for (const auto& s : summands) std::cout << serialize_for_file(s) << '\n';
    }
    return kExitOk;
}

int cmd_verify(const std::string& code, const std::string& certificate_path, const GlobalFlags& g) {
    const Diagram d = load_code(code, g);
    Certificate cert;
    try {
        cert = json::parse(read_source(certificate_path)).get<Certificate>();
    } catch (const json::exception& e) {
        throw InputError(std::string("unreadable certificate: ") + e.what());
    }
    const VerifyResult result = verify_certificate(d, cert);
    if (json_output(g)) {
        json j{{"valid", result.ok}, {"k", cert.k}};
        if (!result.ok) j["diagnostic"] = result.diagnostic;
        std::cout << j.dump() << '\n';
    } else if (result.ok) {
        std::cout << "valid: " << cert.k << "-colorable\n";
    } else {
        std::cout << "invalid: " << result.diagnostic << '\n';
    }
    return result.ok ? kExitOk : kExitInput;
}

int cmd_batch(const std::string& path, const GlobalFlags& g) {
    RunConfig cfg;
    cfg.max_k = g.max_k;
    cfg.time_limit = std::chrono::milliseconds(g.time_limit_ms);
    cfg.jobs = g.jobs;
    cfg.oracle_check = g.oracle_check;
    cfg.emit_certificate = g.emit_certificate;
    cfg.reduce = g.reduce;
    if (!g.cache.empty()) cfg.cache_path = g.cache;
    cfg.output_format = g.format == "jsonl" ? OutputFormat::Jsonl
                        : g.format == "text" ? OutputFormat::Text
                                             : OutputFormat::Csv;

    std::istringstream in(read_source(path));
    const auto entries = read_census(in);
    if (cfg.output_format == OutputFormat::Csv) std::cout << kCsvHeader << '\n';
    std::vector<std::string> warnings;
    const auto summary = run_batch(
        entries, cfg,
        [&](const BatchRecord& r) {
            switch (cfg.output_format) {
                case OutputFormat::Csv: std::cout << to_csv_row(r) << '\n'; break;
                case OutputFormat::Jsonl: std::cout << to_jsonl(r) << '\n'; break;
                case OutputFormat::Text:
                    std::cout << std::left << std::setw(12) << r.name << " n=" << std::setw(3) << r.n << " omega="
                              << (r.omega_status == OmegaStatus::LowerBound ? ">=" : "")
                              << (r.omega_status == OmegaStatus::Skipped ? std::string("-") : std::to_string(r.omega))
                              << " overpass=" << r.overpass << " summands=" << r.summand_count << ' '
                              << to_string(r.omega_status) << '\n';
                    break;
            }
            if (!r.diagnostic.empty()) std::cerr << r.name << ": " << r.diagnostic << '\n';
        },
        &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    std::cout << summary_footer(summary, cfg.output_format) << '\n';
    return summary.oracle_mismatches > 0 ? kExitCheck : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bridgekit: Wirtinger numbers, pass structure and connected sums of knot diagrams"};
    app.require_subcommand(1);
    GlobalFlags g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "jsonl", "text"}));
    app.add_option("--time-limit-ms", g.time_limit_ms, "Per-diagram search budget in ms")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-k", g.max_k, "Largest seed count tried (0: no limit)")->check(CLI::NonNegativeNumber);
    app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--cache", g.cache, "Result cache file (batch)");
    app.add_flag("--oracle-check", g.oracle_check, "Cross-check against exhaustive search on small diagrams");
    app.add_flag("--emit-certificate", g.emit_certificate, "Emit coloring certificates");
    app.add_flag("--reduce", g.reduce, "Remove nugatory kinks before computing");

    std::string code, code2, path;
    std::size_t edge1 = 0, edge2 = 0;
    std::string certificate_out;

    auto* parse = app.add_subcommand("parse", "Validate a Gauss code and print its strand and crossing tables");
    parse->add_option("code", code, "Gauss code, or - for stdin")->required();
    auto* wirt = app.add_subcommand("wirtinger", "Compute the Wirtinger number");
    wirt->add_option("code", code, "Gauss code, or - for stdin")->required();
    wirt->add_option("--certificate-out", certificate_out, "Write the certificate JSON to this file");
    auto* passes = app.add_subcommand("passes", "Over/underpass runs and consecutive-pass predicates");
    passes->add_option("code", code, "Gauss code, or - for stdin")->required();
    auto* consum = app.add_subcommand("consum", "Connected sum of two diagrams");
    consum->add_option("code1", code, "First Gauss code")->required();
    consum->add_option("code2", code2, "Second Gauss code")->required();
    consum->add_option("--edge1", edge1, "Splice position in the first code");
    consum->add_option("--edge2", edge2, "Splice position in the second code");
    auto* decomp = app.add_subcommand("decompose", "Split a diagram into prime summand diagrams");
    decomp->add_option("code", code, "Gauss code, or - for stdin")->required();
    auto* verify = app.add_subcommand("verify", "Check a coloring certificate against a diagram");
    verify->add_option("code", code, "Gauss code")->required();
    verify->add_option("certificate", path, "Certificate JSON file, or - for stdin")->required();
    auto* batch = app.add_subcommand("batch", "Tabulate invariants for a census file");
    batch->add_option("census", path, "Census file (name<TAB>code per line), or - for stdin")->required();
    for (auto* sub : {parse, wirt, passes, consum, decomp, verify, batch}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*parse) return cmd_parse(code, g);
        if (*wirt) return cmd_wirtinger(code, certificate_out, g);
        if (*passes) return cmd_passes(code, g);
        if (*consum) return cmd_consum(code, code2, edge1, edge2, g);
        if (*decomp) return cmd_decompose(code, g);
        if (*verify) return cmd_verify(code, path, g);
        if (*batch) return cmd_batch(path, g);
    } catch (const bridgekit::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitUsage;
}
