#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "bridgekit/certificate_json.hpp"
#include "bridgekit/diagram.hpp"
#include "bridgekit/passes.hpp"
#include "bridgekit/sum_decomp.hpp"
#include "bridgekit/wirtinger.hpp"

namespace bridgekit {

inline constexpr std::string_view kEngineVersion = "bridgekit-0.1.0";

enum class OutputFormat { Csv, Jsonl, Text };

struct RunConfig {
    int max_k = 0;
    std::chrono::milliseconds time_limit{30'000};
    unsigned jobs = 1;
    bool oracle_check = false;
    int oracle_bound = kDefaultOracleBound;
    OutputFormat output_format = OutputFormat::Csv;
    std::optional<std::filesystem::path> cache_path;
    bool emit_certificate = false;
    bool reduce = false;
};

enum class OmegaStatus { Exact, LowerBound, Skipped };

constexpr std::string_view to_string(OmegaStatus s) {
    switch (s) {
        case OmegaStatus::Exact: return "exact";
        case OmegaStatus::LowerBound: return "lower_bound";
        case OmegaStatus::Skipped: return "skipped";
    }
    return "skipped";
}

inline std::optional<OmegaStatus> parse_omega_status(std::string_view s) {
    if (s == "exact") return OmegaStatus::Exact;
    if (s == "lower_bound") return OmegaStatus::LowerBound;
    if (s == "skipped") return OmegaStatus::Skipped;
    return std::nullopt;
}

struct BatchRecord {
    std::string name;
    std::string canonical_code;
    int n = 0;
    /// Exact value, or the certified lower bound when status is LowerBound.
    int omega = 0;
    OmegaStatus omega_status = OmegaStatus::Skipped;
    std::optional<Certificate> certificate;
    int overpass = 0;
    bool composite = false;
    int summand_count = 0;
    double elapsed_ms = 0.0;
    std::string engine_version{kEngineVersion};
    /// Parse error or oracle disagreement; empty otherwise.
    std::string diagnostic;
    bool oracle_mismatch = false;

    bool operator==(const BatchRecord&) const = default;
};

inline void to_json(nlohmann::json& j, const BatchRecord& r) {
    j = nlohmann::json{{"name", r.name},
                       {"code", r.canonical_code},
                       {"n", r.n},
                       {"omega", r.omega_status == OmegaStatus::Skipped ? nlohmann::json(nullptr) : nlohmann::json(r.omega)},
                       {"omega_status", to_string(r.omega_status)},
                       {"overpass", r.overpass},
                       {"composite", r.composite},
                       {"summands", r.summand_count},
                       {"elapsed_ms", r.elapsed_ms},
                       {"engine_version", r.engine_version}};
    if (r.certificate) j["certificate"] = *r.certificate;
    if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
    if (r.oracle_mismatch) j["oracle_mismatch"] = true;
}

inline void from_json(const nlohmann::json& j, BatchRecord& r) {
    j.at("name").get_to(r.name);
    j.at("code").get_to(r.canonical_code);
    j.at("n").get_to(r.n);
    r.omega = j.at("omega").is_null() ? 0 : j.at("omega").get<int>();
    const auto status = parse_omega_status(j.at("omega_status").get<std::string>());
    if (!status) throw std::invalid_argument("bad omega_status");
    r.omega_status = *status;
    j.at("overpass").get_to(r.overpass);
    j.at("composite").get_to(r.composite);
    j.at("summands").get_to(r.summand_count);
    j.at("elapsed_ms").get_to(r.elapsed_ms);
    r.engine_version = j.value("engine_version", std::string(kEngineVersion));
    r.certificate = j.contains("certificate") ? std::optional(j.at("certificate").get<Certificate>()) : std::nullopt;
    r.diagnostic = j.value("diagnostic", std::string{});
    r.oracle_mismatch = j.value("oracle_mismatch", false);
}

// ---------------------------------------------------------------------------
// Census files
// ---------------------------------------------------------------------------

struct CensusEntry {
    std::size_t line_number = 0;
    std::string name;
    std::string code;
};

/// One diagram per line as "[name<TAB>]code". Blank lines and lines starting
/// with '#' are ignored. Codes are not parsed here.
inline std::vector<CensusEntry> read_census(std::istream& in) {
    std::vector<CensusEntry> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        CensusEntry e;
        e.line_number = number;
        if (const auto tab = line.find('\t'); tab != std::string::npos) {
            e.name = line.substr(0, tab);
            e.code = line.substr(tab + 1);
        } else {
            e.name = "line" + std::to_string(number);
            e.code = line;
        }
        out.push_back(std::move(e));
    }
    return out;
}

/// FNV-1a of the canonical code, as 16 hex digits.
inline std::string canonical_code_hash(std::string_view canonical_code) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : canonical_code) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// ---------------------------------------------------------------------------
// Result cache
// ---------------------------------------------------------------------------

/// Append-only store of records keyed by canonical-code hash, one JSON object
/// per line. Later lines win. Unreadable lines are skipped with a warning.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path path) : path_(std::move(path)) {
        std::ifstream in(path_);
        std::string line;
        std::size_t number = 0;
        while (std::getline(in, line)) {
            ++number;
            if (line.empty()) continue;
            try {
                const auto j = nlohmann::json::parse(line);
                entries_[j.at("key").get<std::string>()] = j.at("record").get<BatchRecord>();
            } catch (const std::exception& e) {
                warnings_.push_back(path_.string() + ":" + std::to_string(number) + ": skipped corrupt cache line (" +
                                    e.what() + ")");
            }
        }
    }

    std::optional<BatchRecord> lookup(const std::string& key) const {
        std::lock_guard lock(mu_);
        if (auto it = entries_.find(key); it != entries_.end()) return it->second;
        return std::nullopt;
    }

    void store(const std::string& key, const BatchRecord& record) {
        const std::string line = nlohmann::json{{"key", key}, {"record", record}}.dump() + "\n";
        std::lock_guard lock(mu_);
        std::ofstream out(path_, std::ios::app | std::ios::binary);
        if (!out) throw std::runtime_error("cannot append to cache " + path_.string());
        out.write(line.data(), static_cast<std::streamsize>(line.size()));
        out.flush();
        entries_[key] = record;
    }

    const std::vector<std::string>& warnings() const noexcept { return warnings_; }
    std::size_t size() const {
        std::lock_guard lock(mu_);
        return entries_.size();
    }

private:
    std::filesystem::path path_;
    mutable std::mutex mu_;
    std::map<std::string, BatchRecord> entries_;
    std::vector<std::string> warnings_;
};

// ---------------------------------------------------------------------------
// Per-diagram computation
// ---------------------------------------------------------------------------

/// Canonical form of the entry's diagram (after kink removal when requested).
inline Diagram prepare_diagram(const CensusEntry& entry, const RunConfig& cfg) {
    Diagram d = parse_gauss(entry.code, entry.name);
    if (cfg.reduce) d = remove_kinks(d);
    return canonical_form(d);
}

/// Computes all invariants for an already prepared (canonical) diagram.
inline BatchRecord compute_record(const Diagram& d, const RunConfig& cfg) {
    const auto started = std::chrono::steady_clock::now();
    BatchRecord r;
    r.name = d.name();
    r.canonical_code = serialize_for_file(d);
    r.n = d.crossing_count();

    SearchOptions opts;
    opts.max_k = cfg.max_k;
    opts.time_limit = cfg.time_limit;
    const SearchOutcome outcome = wirtinger_number(d, opts);
    r.omega = outcome.k;
    r.omega_status = outcome.exact() ? OmegaStatus::Exact : OmegaStatus::LowerBound;
    if (cfg.emit_certificate && outcome.exact()) r.certificate = outcome.certificate;

    if (cfg.oracle_check && outcome.exact() && d.crossing_count() <= cfg.oracle_bound) {
        const int oracle = wirtinger_oracle(d, cfg.oracle_bound);
        if (oracle != outcome.k) {
            r.oracle_mismatch = true;
            r.diagnostic = "oracle mismatch: search=" + std::to_string(outcome.k) + " oracle=" + std::to_string(oracle);
            r.omega = oracle;
            r.certificate.reset();
        }
    }

    r.overpass = overpass_number(d);
    const auto summands = decompose(d);
    r.summand_count = static_cast<int>(summands.size());
    r.composite = summands.size() > 1;
    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - started);
    r.elapsed_ms = static_cast<double>(us.count()) / 1000.0;
    return r;
}

inline BatchRecord skipped_record(const CensusEntry& entry, std::string diagnostic) {
    BatchRecord r;
    r.name = entry.name;
    r.canonical_code = entry.code;
    r.omega_status = OmegaStatus::Skipped;
    r.diagnostic = "line " + std::to_string(entry.line_number) + ": " + std::move(diagnostic);
    return r;
}

struct BatchSummary {
    std::size_t total = 0;
    std::size_t exact = 0;
    std::size_t lower_bound = 0;
    std::size_t skipped = 0;
    std::size_t cache_hits = 0;
    std::size_t oracle_mismatches = 0;
    double compute_ms = 0.0;
    double wall_ms = 0.0;
};

using RecordSink = std::function<void(const BatchRecord&)>;

/// Evaluates every entry on `cfg.jobs` workers and hands records to `sink` in
/// input order. Cache hits are keyed by canonical code and skip the search.
inline BatchSummary run_batch(const std::vector<CensusEntry>& entries, const RunConfig& cfg, const RecordSink& sink,
                              std::vector<std::string>* warnings = nullptr) {
    const auto started = std::chrono::steady_clock::now();
    std::optional<ResultCache> cache;
    if (cfg.cache_path) {
        cache.emplace(*cfg.cache_path);
        if (warnings) warnings->insert(warnings->end(), cache->warnings().begin(), cache->warnings().end());
    }

    std::vector<std::optional<BatchRecord>> done(entries.size());
    std::vector<char> hit(entries.size(), 0);
    std::vector<std::exception_ptr> failed(entries.size());
    std::mutex mu;
    std::condition_variable ready;
    std::atomic<std::size_t> next{0};

    auto evaluate = [&](std::size_t i) {
        const CensusEntry& entry = entries[i];
        Diagram d;
        try {
            d = prepare_diagram(entry, cfg);
        } catch (const Error& e) {
            return std::pair(skipped_record(entry, e.what()), false);
        }
        const std::string key = canonical_code_hash(serialize_for_file(d));
        if (cache) {
            if (auto cached = cache->lookup(key); cached && (!cfg.emit_certificate || cached->certificate ||
                                                             cached->omega_status != OmegaStatus::Exact)) {
                cached->name = entry.name;
                return std::pair(std::move(*cached), true);
            }
        }
        BatchRecord r = compute_record(d, cfg);
        r.name = entry.name;
        if (cache && !r.oracle_mismatch) cache->store(key, r);
        return std::pair(std::move(r), false);
    };

    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < entries.size(); i = next.fetch_add(1)) {
            std::pair<BatchRecord, bool> result;
            std::exception_ptr error;
            try {
                result = evaluate(i);
            } catch (...) {
                error = std::current_exception();
            }
            {
                std::lock_guard lock(mu);
                done[i] = std::move(result.first);
                hit[i] = result.second;
                failed[i] = error;
            }
            ready.notify_one();
        }
    };

    const unsigned width = std::max(1u, cfg.jobs);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < width; ++t) pool.emplace_back(worker);

    BatchSummary summary;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        BatchRecord record;
        {
            std::unique_lock lock(mu);
            ready.wait(lock, [&] { return done[i].has_value(); });
            record = std::move(*done[i]);
            done[i].reset();
        }
        if (failed[i]) {
            next.store(entries.size());
            for (auto& t : pool) t.join();
            std::rethrow_exception(failed[i]);
        }
        ++summary.total;
        switch (record.omega_status) {
            case OmegaStatus::Exact: ++summary.exact; break;
            case OmegaStatus::LowerBound: ++summary.lower_bound; break;
            case OmegaStatus::Skipped: ++summary.skipped; break;
        }
        if (hit[i]) ++summary.cache_hits;
        if (record.oracle_mismatch) ++summary.oracle_mismatches;
        summary.compute_ms += record.elapsed_ms;
        sink(record);
    }
    for (auto& t : pool) t.join();
    summary.wall_ms =
        static_cast<double>(
            std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - started).count()) /
        1000.0;
    return summary;
}

// ---------------------------------------------------------------------------
// Output encodings
// ---------------------------------------------------------------------------

inline constexpr std::string_view kCsvHeader = "name,code,n,omega,omega_status,overpass,composite,summands,elapsed_ms";

inline std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

inline std::string format_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

inline std::string to_csv_row(const BatchRecord& r) {
    std::ostringstream os;
    os << csv_field(r.name) << ',' << csv_field(r.canonical_code) << ',' << r.n << ',';
    if (r.omega_status != OmegaStatus::Skipped) os << r.omega;
    os << ',' << to_string(r.omega_status) << ',' << r.overpass << ',' << (r.composite ? "true" : "false") << ','
       << r.summand_count << ',' << format_ms(r.elapsed_ms);
    return os.str();
}

inline std::string to_jsonl(const BatchRecord& r) { return nlohmann::json(r).dump(); }

inline nlohmann::json summary_json(const BatchSummary& s) {
    return {{"total", s.total},           {"exact", s.exact},
            {"lower_bound", s.lower_bound}, {"skipped", s.skipped},
            {"cache_hits", s.cache_hits}, {"oracle_mismatches", s.oracle_mismatches},
            {"compute_ms", s.compute_ms}, {"wall_ms", s.wall_ms}};
}

/// Footer line: a '#' comment for CSV and text, a {"summary":...} object for JSONL.
inline std::string summary_footer(const BatchSummary& s, OutputFormat format) {
    if (format == OutputFormat::Jsonl) return nlohmann::json{{"summary", summary_json(s)}}.dump();
    std::ostringstream os;
    os << "# total=" << s.total << " exact=" << s.exact << " lower_bound=" << s.lower_bound
       << " skipped=" << s.skipped << " cache_hits=" << s.cache_hits << " oracle_mismatches=" << s.oracle_mismatches
       << " compute_ms=" << format_ms(s.compute_ms) << " wall_ms=" << format_ms(s.wall_ms);
    return os.str();
}

}  // namespace bridgekit
