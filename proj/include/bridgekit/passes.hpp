#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <vector>

#include "bridgekit/diagram.hpp"
#include "bridgekit/error.hpp"

namespace bridgekit {

/// Maximal run of consecutive entries with the same passage.
struct PassRun {
    Passage kind = Passage::Over;
    std::size_t first_entry = 0;
    std::vector<CrossingId> crossings;

    bool operator==(const PassRun&) const = default;
};

/// Cyclic list of maximal runs. Run 0 is an Over run; kinds alternate.
struct PassDecomposition {
    std::vector<PassRun> runs;
    int overpass_count = 0;
};

inline PassDecomposition pass_decomposition(const Diagram& d) {
    if (d.empty()) throw Error(ErrorCode::EmptyDiagram, "pass decomposition of the 0-crossing diagram");
    const auto& entries = d.entries();
    const std::size_t m = entries.size();
    // Both kinds occur, so some Over entry follows an Under entry.
    std::size_t start = 0;
    while (!(entries[start].passage == Passage::Over && entries[(start + m - 1) % m].passage == Passage::Under))
        ++start;

    PassDecomposition out;
    for (std::size_t t = 0; t < m; ++t) {
        const std::size_t i = (start + t) % m;
        if (out.runs.empty() || out.runs.back().kind != entries[i].passage) {
            out.runs.push_back(PassRun{entries[i].passage, i, {}});
            if (entries[i].passage == Passage::Over) ++out.overpass_count;
        }
        out.runs.back().crossings.push_back(entries[i].crossing_id);
    }
    return out;
}

/// Fewest overpasses over all alternating over/under pass sequences: the
/// number of maximal Over runs, since a pass cannot cross a run boundary and
/// every maximal run needs a pass of its own kind. 1 for the 0-crossing diagram.
inline int overpass_number(const Diagram& d) {
    if (d.empty()) return 1;
    return pass_decomposition(d).overpass_count;
}

struct SharedCrossing {
    /// Pair index i denotes runs i and i+1 (cyclically).
    std::size_t run_pair = 0;
    CrossingId crossing = 1;

    bool operator==(const SharedCrossing&) const = default;
};

/// Crossings visited by both runs of a cyclically consecutive pair. With only
/// two runs the two boundaries join the same pair, which is reported once.
inline std::vector<SharedCrossing> consecutive_shared_crossings(const Diagram& d) {
    const auto dec = pass_decomposition(d);
    const std::size_t r = dec.runs.size();
    const std::size_t pairs = r > 2 ? r : 1;
    std::vector<SharedCrossing> out;
    for (std::size_t i = 0; i < pairs; ++i) {
        auto a = dec.runs[i].crossings;
        auto b = dec.runs[(i + 1) % r].crossings;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        std::vector<CrossingId> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        for (CrossingId c : common) out.push_back({i, c});
    }
    return out;
}

struct MinimalityReport {
    /// Every consecutive pass pair shares a crossing (required of diagrams
    /// with minimal overpass number).
    bool overpass_minimal_necessary_condition = false;
    /// No consecutive pass pair shares a crossing (required of crossing-minimal
    /// diagrams).
    bool crossing_minimal_necessary_condition = false;

    bool operator==(const MinimalityReport&) const = default;
};

inline MinimalityReport minimality_incompatibility_report(const Diagram& d) {
    const auto dec = pass_decomposition(d);
    const std::size_t r = dec.runs.size();
    const std::size_t pairs = r > 2 ? r : 1;
    const auto shared = consecutive_shared_crossings(d);
    std::vector<char> hit(pairs, 0);
    for (const auto& s : shared) hit[s.run_pair] = 1;
    MinimalityReport report;
    report.overpass_minimal_necessary_condition = std::all_of(hit.begin(), hit.end(), [](char h) { return h; });
    report.crossing_minimal_necessary_condition = shared.empty();
    return report;
}

}  // namespace bridgekit
