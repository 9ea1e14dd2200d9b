#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "bridgekit/diagram.hpp"
#include "bridgekit/error.hpp"

namespace bridgekit {

// ---------------------------------------------------------------------------
// StrandSet: dynamic bitset over strand ids 1..N
// ---------------------------------------------------------------------------

class StrandSet {
public:
    StrandSet() = default;
    explicit StrandSet(int strand_count)
        : size_(strand_count), words_(static_cast<std::size_t>((strand_count + 63) / 64), 0) {}

    int capacity() const noexcept { return size_; }

    bool contains(StrandId s) const {
        const auto bit = static_cast<std::size_t>(s - 1);
        return (words_[bit / 64] >> (bit % 64)) & 1u;
    }
    void insert(StrandId s) {
        const auto bit = static_cast<std::size_t>(s - 1);
        words_[bit / 64] |= std::uint64_t{1} << (bit % 64);
    }

    int count() const {
        int total = 0;
        for (auto w : words_) total += std::popcount(w);
        return total;
    }
    bool full() const { return count() == size_; }

    std::vector<StrandId> members() const {
        std::vector<StrandId> out;
        for (StrandId s = 1; s <= size_; ++s)
            if (contains(s)) out.push_back(s);
        return out;
    }

    bool is_subset_of(const StrandSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    std::size_t hash() const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (auto w : words_) {
            h ^= w;
            h *= 0x100000001b3ull;
            h ^= h >> 29;
        }
        return static_cast<std::size_t>(h);
    }

    bool operator==(const StrandSet&) const = default;

private:
    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct StrandSetHash {
    std::size_t operator()(const StrandSet& s) const noexcept { return s.hash(); }
};

// ---------------------------------------------------------------------------
// Partial colorings and moves
// ---------------------------------------------------------------------------

/// A subset of strands together with a color in 1..k for each of them.
class PartialColoring {
public:
    PartialColoring() = default;
    PartialColoring(int strand_count, int k)
        : k_(k), colors_(static_cast<std::size_t>(strand_count) + 1, 0) {}

    int k() const noexcept { return k_; }
    int strand_count() const noexcept { return static_cast<int>(colors_.size()) - 1; }

    bool is_colored(StrandId s) const { return colors_.at(static_cast<std::size_t>(s)) != 0; }
    std::optional<int> color_of(StrandId s) const {
        const int c = colors_.at(static_cast<std::size_t>(s));
        return c == 0 ? std::nullopt : std::optional<int>(c);
    }

    /// Colors an uncolored strand; color must lie in 1..k.
    void set(StrandId s, int color) {
        if (color < 1 || color > k_) {
            throw Error(ErrorCode::MoveNotApplicable,
                        "color " + std::to_string(color) + " outside 1.." + std::to_string(k_));
        }
        colors_.at(static_cast<std::size_t>(s)) = color;
    }

    StrandSet colored() const {
        StrandSet out(strand_count());
        for (StrandId s = 1; s <= strand_count(); ++s)
            if (is_colored(s)) out.insert(s);
        return out;
    }
    int colored_count() const {
        return static_cast<int>(std::count_if(colors_.begin() + 1, colors_.end(), [](int c) { return c != 0; }));
    }
    bool complete() const { return colored_count() == strand_count(); }

    bool operator==(const PartialColoring&) const = default;

private:
    int k_ = 0;
    std::vector<int> colors_;  // index 0 unused; 0 means uncolored
};

struct MoveRecord {
    CrossingId crossing = 1;
    StrandId source = 1;  // already-colored under-strand
    StrandId target = 1;  // newly colored under-strand
    StrandId over = 1;
    int color = 1;

    bool operator==(const MoveRecord&) const = default;
    auto key() const { return std::tuple(target, crossing, source); }
};

/// Seeds (colored 1..k in listed order) plus the moves that finish the job.
struct Certificate {
    int k = 0;
    std::vector<StrandId> seeds;
    std::vector<MoveRecord> trace;

    bool operator==(const Certificate&) const = default;
};

namespace detail {

inline void check_strand(const Diagram& d, StrandId s) {
    if (s < 1 || s > d.strand_count()) {
        throw Error(ErrorCode::UnknownStrand,
                    "strand " + std::to_string(s) + " not in 1.." + std::to_string(d.strand_count()));
    }
}

}  // namespace detail

/// One coloring move at `crossing_id` onto `target`. Conditions are checked in
/// the order 1 (target uncolored), 4 (over-strand colored), 3 (target adjacent
/// to a colored partner at this crossing); 2 and 5 hold by construction.
inline PartialColoring apply_move(const Diagram& d, const PartialColoring& c, CrossingId crossing_id,
                                  StrandId target) {
    detail::check_strand(d, target);
    if (crossing_id < 1 || crossing_id > d.crossing_count()) {
        throw MoveNotApplicable(3, "no crossing " + std::to_string(crossing_id));
    }
    if (c.is_colored(target)) {
        throw MoveNotApplicable(1, "strand " + std::to_string(target) + " is already colored");
    }
    const Crossing& x = d.crossing(crossing_id);
    if (!c.is_colored(x.over_strand)) {
        throw MoveNotApplicable(4, "over-strand " + std::to_string(x.over_strand) + " at crossing " +
                                       std::to_string(crossing_id) + " is uncolored");
    }
    if (!x.has_under(target)) {
        throw MoveNotApplicable(3, "strand " + std::to_string(target) + " is not an under-strand of crossing " +
                                       std::to_string(crossing_id));
    }
    const StrandId source = x.partner_of(target);
    if (!c.is_colored(source)) {
        throw MoveNotApplicable(3, "partner strand " + std::to_string(source) + " at crossing " +
                                       std::to_string(crossing_id) + " is uncolored");
    }
    PartialColoring next = c;
    next.set(target, *c.color_of(source));
    return next;
}

struct Propagation {
    StrandSet colored;
    PartialColoring coloring;
    std::vector<MoveRecord> trace;
};

/// Chooses which applicable move to take next; receives the current
/// applicable moves (never empty) and returns an index into them.
using MovePicker = std::function<std::size_t(std::span<const MoveRecord>)>;

namespace detail {

inline PartialColoring seed_coloring(const Diagram& d, std::vector<StrandId> seeds) {
    if (seeds.empty()) throw Error(ErrorCode::UnknownStrand, "empty seed set");
    for (StrandId s : seeds) check_strand(d, s);
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    PartialColoring c(d.strand_count(), static_cast<int>(seeds.size()));
    for (std::size_t i = 0; i < seeds.size(); ++i) c.set(seeds[i], static_cast<int>(i) + 1);
    return c;
}

inline void collect_moves(const PartialColoring& c, const Crossing& x, std::vector<MoveRecord>& out) {
    if (!c.is_colored(x.over_strand)) return;
    auto [a, b] = x.under_pair;
    if (c.is_colored(a) && !c.is_colored(b)) out.push_back({x.id, a, b, x.over_strand, *c.color_of(a)});
    if (c.is_colored(b) && !c.is_colored(a)) out.push_back({x.id, b, a, x.over_strand, *c.color_of(b)});
}

}  // namespace detail

/// Applies coloring moves until none is applicable, taking the move chosen
/// by `pick` at each step. The final colored set does not depend on `pick`.
inline Propagation propagate_with(const Diagram& d, const std::vector<StrandId>& seeds, const MovePicker& pick) {
    Propagation out;
    out.coloring = detail::seed_coloring(d, seeds);
    if (!d.empty()) {
        std::vector<MoveRecord> applicable;
        while (true) {
            applicable.clear();
            for (const auto& x : d.crossings()) detail::collect_moves(out.coloring, x, applicable);
            if (applicable.empty()) break;
            const MoveRecord& move = applicable.at(pick(applicable));
            out.coloring = apply_move(d, out.coloring, move.crossing, move.target);
            out.trace.push_back(move);
        }
    }
    out.colored = out.coloring.colored();
    return out;
}

/// Maximal propagation from `seeds` (colored 1..|seeds| in ascending strand
/// order). Each step takes the applicable move with the least
/// (target, crossing, source).
inline Propagation propagate(const Diagram& d, const std::vector<StrandId>& seeds) {
    Propagation out;
    out.coloring = detail::seed_coloring(d, seeds);
    if (!d.empty()) {
        // Incidence: crossings touching each strand.
        std::vector<std::vector<CrossingId>> touching(static_cast<std::size_t>(d.strand_count()) + 1);
        for (const auto& x : d.crossings()) {
            touching[static_cast<std::size_t>(x.over_strand)].push_back(x.id);
            touching[static_cast<std::size_t>(x.under_pair.first)].push_back(x.id);
            touching[static_cast<std::size_t>(x.under_pair.second)].push_back(x.id);
        }
        std::set<std::tuple<StrandId, CrossingId, StrandId>> pending;
        std::vector<MoveRecord> scratch;
        auto enqueue_around = [&](StrandId s) {
            for (CrossingId c : touching[static_cast<std::size_t>(s)]) {
                scratch.clear();
                detail::collect_moves(out.coloring, d.crossing(c), scratch);
                for (const auto& m : scratch) pending.insert(m.key());
            }
        };
        for (StrandId s = 1; s <= d.strand_count(); ++s)
            if (out.coloring.is_colored(s)) enqueue_around(s);
        while (!pending.empty()) {
            auto [target, crossing, source] = *pending.begin();
            pending.erase(pending.begin());
            if (out.coloring.is_colored(target)) continue;
            const int color = *out.coloring.color_of(source);
            out.coloring = apply_move(d, out.coloring, crossing, target);
            out.trace.push_back({crossing, source, target, d.crossing(crossing).over_strand, color});
            enqueue_around(target);
        }
    }
    out.colored = out.coloring.colored();
    return out;
}

inline bool is_colorable_from(const Diagram& d, const std::vector<StrandId>& seeds) {
    return propagate(d, seeds).colored.full();
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

struct VerifyResult {
    bool ok = false;
    /// Index into the trace of the first failing move, if the failure is a move.
    std::optional<std::size_t> failing_step;
    std::string diagnostic;

    explicit operator bool() const noexcept { return ok; }
};

inline VerifyResult verify_certificate(const Diagram& d, const Certificate& cert) {
    auto fail = [](std::string why, std::optional<std::size_t> step = std::nullopt) {
        return VerifyResult{false, step, std::move(why)};
    };
    if (cert.k < 1 || static_cast<std::size_t>(cert.k) != cert.seeds.size()) {
        return fail("k=" + std::to_string(cert.k) + " does not match " + std::to_string(cert.seeds.size()) +
                    " seeds");
    }
    PartialColoring c(d.strand_count(), cert.k);
    for (std::size_t i = 0; i < cert.seeds.size(); ++i) {
        const StrandId s = cert.seeds[i];
        if (s < 1 || s > d.strand_count()) return fail("seed " + std::to_string(s) + " is not a strand");
        if (c.is_colored(s)) return fail("seed " + std::to_string(s) + " listed twice");
        c.set(s, static_cast<int>(i) + 1);
    }
    for (std::size_t step = 0; step < cert.trace.size(); ++step) {
        const MoveRecord& m = cert.trace[step];
        const std::string where = "move " + std::to_string(step) + ": ";
        if (m.crossing < 1 || m.crossing > d.crossing_count()) {
            return fail(where + "condition 3: no crossing " + std::to_string(m.crossing), step);
        }
        if (m.target < 1 || m.target > d.strand_count()) {
            return fail(where + "condition 1: target " + std::to_string(m.target) + " is not a strand", step);
        }
        const Crossing& x = d.crossing(m.crossing);
        if (m.over != x.over_strand) {
            return fail(where + "condition 4: recorded over-strand " + std::to_string(m.over) +
                            " but crossing " + std::to_string(m.crossing) + " is over-crossed by " +
                            std::to_string(x.over_strand),
                        step);
        }
        if (!x.has_under(m.target) || x.partner_of(m.target) != m.source) {
            return fail(where + "condition 3: strands " + std::to_string(m.source) + "," +
                            std::to_string(m.target) + " are not the under-strands of crossing " +
                            std::to_string(m.crossing),
                        step);
        }
        try {
            c = apply_move(d, c, m.crossing, m.target);
        } catch (const MoveNotApplicable& e) {
            return fail(where + e.what(), step);
        }
        if (c.color_of(m.target) != m.color) {
            return fail(where + "condition 5: recorded color " + std::to_string(m.color) + " but source carries " +
                            std::to_string(*c.color_of(m.target)),
                        step);
        }
    }
    if (!c.complete()) {
        return fail(std::to_string(d.strand_count() - c.colored_count()) + " strands left uncolored");
    }
    return VerifyResult{true, std::nullopt, {}};
}

}  // namespace bridgekit
