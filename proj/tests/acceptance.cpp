// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bridgekit/bridgekit.hpp"
#include "test_support.hpp"

using namespace bridgekit;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3fs", s);
    return buf;
}

// Every exact result computed below is checked against its certificate.
std::size_t certificates_checked = 0;
std::vector<std::string> certificate_failures;

SearchOutcome checked_search(const Diagram& d, const SearchOptions& opts = {}) {
    SearchOutcome out = wirtinger_number(d, opts);
    if (out.exact()) {
        ++certificates_checked;
        if (!out.certificate || !verify_certificate(d, *out.certificate))
            certificate_failures.push_back(d.name().empty() ? serialize(d) : d.name());
    }
    return out;
}

std::optional<Diagram> thistlethwaite_unknot() {
    std::ifstream in(std::string(BRIDGEKIT_DATA_DIR) + "/thistlethwaite_unknot.census");
    if (!in) return std::nullopt;
    const auto entries = read_census(in);
    if (entries.empty()) return std::nullopt;
    return parse_gauss(entries.front().code, entries.front().name);
}

Verdict golden_values() {
    struct Golden {
        std::string label;
        std::optional<Diagram> d;
        int expected;
    };
    std::vector<Golden> cases{{"3_1", parse_gauss(bridgekit::testing::kTrefoil, "3_1"), 2},
                              {"8_17", bridgekit::testing::table_diagram("8_17"), 3},
                              {"thistlethwaite", thistlethwaite_unknot(), 3}};
    Verdict v{true, ""};
    for (const auto& c : cases) {
        if (!c.d) {
            v.pass = false;
            v.detail += c.label + ": diagram data unavailable; ";
            continue;
        }
        const auto t = Clock::now();
        SearchOptions opts;
        opts.time_limit = std::chrono::seconds(10);
        const auto out = checked_search(*c.d, opts);
        const double s = seconds_since(t);
        const bool ok = out.exact() && out.k == c.expected && s < 10.0;
        v.pass &= ok;
        v.detail += c.label + "=" + std::to_string(out.k) + (out.exact() ? "" : "(bound)") + " in " + fmt(s) + "; ";
    }
    return v;
}

Verdict gap_family() {
    const auto d = thistlethwaite_unknot();
    if (!d) return {false, "diagram data unavailable: no Gauss code for the 15-crossing unknot is bundled"};
    const Diagram dd = connected_sum(*d, *d);
    SearchOptions opts;
    opts.time_limit = std::chrono::minutes(10);
    const auto t = Clock::now();
    const auto out = checked_search(dd, opts);
    const double s = seconds_since(t);
    return {out.k >= 5, "n=" + std::to_string(dd.crossing_count()) + " omega" + (out.exact() ? "=" : ">=") +
                            std::to_string(out.k) + " in " + fmt(s)};
}

Verdict oracle_equivalence() {
    const auto t = Clock::now();
    std::size_t checked = 0, mismatches = 0;
    std::string first;
    auto check = [&](const Diagram& d) {
        ++checked;
        const int fast = checked_search(d).k;
        const int slow = wirtinger_oracle(d);
        if (fast != slow) {
            if (!mismatches++) first = serialize(d) + " search=" + std::to_string(fast) + " oracle=" + std::to_string(slow);
        }
    };
    for (const auto& d : bridgekit::testing::table_diagrams(8)) check(d);
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 500; ++i) check(bridgekit::testing::random_code(rng, 1 + static_cast<int>(rng() % 7)));
    const double s = seconds_since(t);
    return {mismatches == 0 && s < 300.0, std::to_string(checked) + " diagrams, " + std::to_string(mismatches) +
                                              " mismatches, " + fmt(s) + (first.empty() ? "" : "; first " + first)};
}

Verdict table_consistency() {
    std::size_t checked = 0, exceptions = 0;
    std::string names;
    for (const auto& k : kKnotTable) {
        const auto d = parse_gauss(k.code, std::string(k.name));
        const auto out = checked_search(d);
        ++checked;
        if (!out.exact() || out.k != k.bridge_index) {
            ++exceptions;
            names += std::string(k.name) + " ";
        }
    }
    return {exceptions == 0, std::to_string(checked) + " knots, " + std::to_string(exceptions) + " exceptions " + names};
}

Verdict superadditivity() {
    const auto table = bridgekit::testing::table_diagrams(10);
    std::mt19937_64 rng(4242);
    std::size_t conclusive = 0, violations = 0;
    std::string first;
    for (int i = 0; i < 500; ++i) {
        const auto& a = table[rng() % table.size()];
        const auto& b = table[rng() % table.size()];
        const auto r = superadditivity_check(a, b);
        if (!r.conclusive) continue;
        ++conclusive;
        if (!r.holds && !violations++) first = a.name() + "#" + b.name();
    }
    return {violations == 0, "500 pairs, " + std::to_string(conclusive) + " conclusive, " + std::to_string(violations) +
                                 " violations" + (first.empty() ? "" : "; first " + first)};
}

Verdict confluence() {
    std::mt19937_64 rng(777);
    std::size_t runs = 0, differing = 0;
    for (int i = 0; i < 100; ++i) {
        const Diagram d = bridgekit::testing::random_code(rng, 3 + static_cast<int>(rng() % 18));
        std::vector<StrandId> seeds;
        for (StrandId s = 1; s <= d.strand_count(); ++s)
            if (rng() % 4 == 0) seeds.push_back(s);
        if (seeds.empty()) seeds.push_back(1);
        const auto reference = propagate(d, seeds).colored;
        for (int order = 0; order < 20; ++order) {
            const auto p = propagate_with(d, seeds, [&](std::span<const MoveRecord> moves) {
                return static_cast<std::size_t>(rng() % moves.size());
            });
            ++runs;
            if (!(p.colored == reference)) ++differing;
        }
    }
    return {runs == 2000 && differing == 0, std::to_string(runs) + " runs, " + std::to_string(differing) + " differing"};
}

Verdict lemma_corpus() {
    std::size_t table_shared = 0, both_flags = 0, codes = 0;
    for (const auto& d : bridgekit::testing::table_diagrams(10)) {
        if (d.empty()) continue;
        ++codes;
        if (!consecutive_shared_crossings(d).empty()) ++table_shared;
        const auto r = minimality_incompatibility_report(d);
        both_flags += r.overpass_minimal_necessary_condition && r.crossing_minimal_necessary_condition;
    }
    std::mt19937_64 rng(31337);
    for (int i = 0; i < 2000; ++i) {
        const Diagram d = bridgekit::testing::random_code(rng, 1 + static_cast<int>(rng() % 20));
        ++codes;
        const auto r = minimality_incompatibility_report(d);
        both_flags += r.overpass_minimal_necessary_condition && r.crossing_minimal_necessary_condition;
    }
    return {table_shared == 0 && both_flags == 0, std::to_string(table_shared) + " table diagrams with shared crossings, " +
                                                      std::to_string(both_flags) + " of " + std::to_string(codes) +
                                                      " codes with both flags"};
}

Verdict round_trips() {
    std::size_t parse_failures = 0, parsed = 0;
    for (const auto& k : kKnotTable) {
        const auto d = parse_gauss(k.code);
        ++parsed;
        if (!(parse_gauss(serialize(d)) == d) || !(parse_gauss(serialize_for_file(d)) == d)) ++parse_failures;
    }
    std::mt19937_64 rng(8080);
    std::size_t decompose_failures = 0;
    auto by_code = [](const Diagram& x, const Diagram& y) { return serialize(x) < serialize(y); };
    for (int i = 0; i < 200; ++i) {
        const Diagram a = bridgekit::testing::random_prime_code(rng, 2 + static_cast<int>(rng() % 9));
        const Diagram b = bridgekit::testing::random_prime_code(rng, 2 + static_cast<int>(rng() % 9));
        const auto parts = decompose(connected_sum(a, {rng() % a.size()}, b, {rng() % b.size()}));
        std::vector<Diagram> got, want{canonical_form(a), canonical_form(b)};
        for (const auto& p : parts) got.push_back(canonical_form(p));
        std::sort(got.begin(), got.end(), by_code);
        std::sort(want.begin(), want.end(), by_code);
        if (got != want) ++decompose_failures;
    }
    std::string detail = std::to_string(parsed) + " codes, " + std::to_string(parse_failures) +
                         " parse failures; 200 sums, " + std::to_string(decompose_failures) +
                         " decompose failures; " + std::to_string(certificates_checked) + " certificates, " +
                         std::to_string(certificate_failures.size()) + " rejected";
    return {parse_failures == 0 && decompose_failures == 0 && certificate_failures.empty() && certificates_checked > 0,
            detail};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"golden values", golden_values},
        {"gap family", gap_family},
        {"oracle equivalence", oracle_equivalence},
        {"table consistency", table_consistency},
        {"superadditivity fuzz", superadditivity},
        {"confluence", confluence},
        {"shared crossings", lemma_corpus},
        {"round trips", round_trips},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failed += !v.pass;
        std::cout << (v.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << ": " << v.detail
                  << std::endl;
    }
    return failed;
}
