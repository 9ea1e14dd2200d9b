#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <unordered_map>
#include <vector>

#include "bridgekit/coloring.hpp"
#include "bridgekit/diagram.hpp"
#include "bridgekit/error.hpp"

namespace bridgekit {

struct SearchOptions {
    /// Largest k tried; 0 means up to the strand count.
    int max_k = 0;
    /// Wall-clock budget; zero means unlimited.
    std::chrono::milliseconds time_limit{0};
    /// Explore top-level seed branches on worker threads.
    bool parallel = false;
    /// Worker count for parallel search; 0 picks hardware_concurrency.
    unsigned threads = 0;
};

enum class SearchStatus { Exact, LowerBoundOnly };

struct SearchOutcome {
    SearchStatus status = SearchStatus::Exact;
    /// Exact: the Wirtinger number. LowerBoundOnly: the least k not yet ruled out.
    int k = 1;
    std::optional<Certificate> certificate;
    std::chrono::microseconds elapsed{0};
    std::uint64_t nodes_explored = 0;

    bool exact() const noexcept { return status == SearchStatus::Exact; }
};

/// Bitset closure under coloring moves. Colors are irrelevant to which
/// strands become colored, so the search works on bare strand sets.
class ClosureEngine {
public:
    explicit ClosureEngine(const Diagram& d) : strand_count_(d.strand_count()) {
        touching_.resize(static_cast<std::size_t>(strand_count_) + 1);
        if (d.empty()) return;
        for (const auto& x : d.crossings()) {
            const auto idx = crossings_.size();
            crossings_.push_back({x.over_strand, x.under_pair.first, x.under_pair.second});
            touching_[static_cast<std::size_t>(x.over_strand)].push_back(idx);
            touching_[static_cast<std::size_t>(x.under_pair.first)].push_back(idx);
            if (x.under_pair.second != x.under_pair.first)
                touching_[static_cast<std::size_t>(x.under_pair.second)].push_back(idx);
        }
    }

    int strand_count() const noexcept { return strand_count_; }

    /// Adds `s` to the (already closed) set and closes again.
    void add_and_close(StrandSet& set, StrandId s) const {
        if (set.contains(s)) return;
        set.insert(s);
        stack_.clear();
        stack_.push_back(s);
        while (!stack_.empty()) {
            const StrandId x = stack_.back();
            stack_.pop_back();
            for (std::size_t idx : touching_[static_cast<std::size_t>(x)]) {
                const auto& c = crossings_[idx];
                if (!set.contains(c.over)) continue;
                const bool a = set.contains(c.a), b = set.contains(c.b);
                if (a && !b) {
                    set.insert(c.b);
                    stack_.push_back(c.b);
                } else if (b && !a) {
                    set.insert(c.a);
                    stack_.push_back(c.a);
                }
            }
        }
    }

    StrandSet closure_of(const std::vector<StrandId>& seeds) const {
        StrandSet set(strand_count_);
        for (StrandId s : seeds) add_and_close(set, s);
        return set;
    }

private:
    struct Triple {
        StrandId over, a, b;
    };
    int strand_count_;
    std::vector<Triple> crossings_;
    std::vector<std::vector<std::size_t>> touching_;
    mutable std::vector<StrandId> stack_;
};

namespace detail {

using Clock = std::chrono::steady_clock;

/// Depth-first search for a seed set of size at most k whose closure is
/// everything. Closed sets already expanded with no more seeds are skipped.
class SeedSearch {
public:
    SeedSearch(const ClosureEngine& engine, int k, std::optional<Clock::time_point> deadline,
               const std::atomic<bool>* cancel)
        : engine_(engine), k_(k), deadline_(deadline), cancel_(cancel) {}

    /// Explores all seed sequences starting with `first`.
    bool run_branch(StrandId first) {
        StrandSet set(engine_.strand_count());
        engine_.add_and_close(set, first);
        seeds_.assign(1, first);
        return dfs(set);
    }

    const std::vector<StrandId>& seeds() const noexcept { return seeds_; }
    std::uint64_t nodes() const noexcept { return nodes_; }
    bool timed_out() const noexcept { return timed_out_; }

private:
    bool dfs(const StrandSet& set) {
        ++nodes_;
        if (set.full()) return true;
        const int used = static_cast<int>(seeds_.size());
        if (used >= k_) return false;
        if (interrupted()) return false;
        auto [it, inserted] = visited_.try_emplace(set, used);
        if (!inserted) {
            if (it->second <= used) return false;
            it->second = used;
        }
        for (StrandId s = 1; s <= engine_.strand_count(); ++s) {
            if (set.contains(s)) continue;
            StrandSet next = set;
            engine_.add_and_close(next, s);
            seeds_.push_back(s);
            if (dfs(next)) return true;
            seeds_.pop_back();
            if (timed_out_) return false;
        }
        return false;
    }

    bool interrupted() {
        if (cancel_ && cancel_->load(std::memory_order_relaxed)) return timed_out_ = true;
        if (deadline_ && (nodes_ & 0xff) == 0 && Clock::now() >= *deadline_) return timed_out_ = true;
        return false;
    }

    const ClosureEngine& engine_;
    int k_;
    std::optional<Clock::time_point> deadline_;
    const std::atomic<bool>* cancel_;
    std::unordered_map<StrandSet, int, StrandSetHash> visited_;
    std::vector<StrandId> seeds_;
    std::uint64_t nodes_ = 0;
    bool timed_out_ = false;
};

struct LevelResult {
    std::optional<std::vector<StrandId>> seeds;
    std::uint64_t nodes = 0;
    bool timed_out = false;
};

inline LevelResult search_level_serial(const ClosureEngine& engine, int k,
                                       std::optional<Clock::time_point> deadline) {
    LevelResult out;
    SeedSearch search(engine, k, deadline, nullptr);
    for (StrandId first = 1; first <= engine.strand_count(); ++first) {
        if (search.run_branch(first)) {
            out.seeds = search.seeds();
            break;
        }
        if (search.timed_out()) {
            out.timed_out = true;
            break;
        }
    }
    out.nodes = search.nodes();
    return out;
}

/// Each top-level branch gets its own memo table, so the winning branch (the
/// least successful first seed) and its seed sequence match the serial run.
inline LevelResult search_level_parallel(const ClosureEngine& engine, int k,
                                         std::optional<Clock::time_point> deadline, unsigned threads) {
    const int branches = engine.strand_count();
    std::atomic<int> next{1};
    std::atomic<int> best{std::numeric_limits<int>::max()};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<int> first_timeout{std::numeric_limits<int>::max()};
    std::mutex mu;
    std::vector<std::optional<std::vector<StrandId>>> found(static_cast<std::size_t>(branches) + 1);

    auto worker = [&] {
        while (true) {
            const int first = next.fetch_add(1);
            if (first > branches || first > best.load()) return;
            ClosureEngine local = engine;  // the engine keeps a scratch stack
            SeedSearch search(local, k, deadline, nullptr);
            const bool ok = search.run_branch(first);
            nodes += search.nodes();
            if (ok) {
                std::lock_guard lock(mu);
                found[static_cast<std::size_t>(first)] = search.seeds();
                int cur = best.load();
                while (first < cur && !best.compare_exchange_weak(cur, first)) {
                }
            } else if (search.timed_out()) {
                int cur = first_timeout.load();
                while (first < cur && !first_timeout.compare_exchange_weak(cur, first)) {
                }
                return;
            }
        }
    };
    const unsigned width = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(branches)));
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < width; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    LevelResult out;
    out.nodes = nodes.load();
    const int winner = best.load();
    const int timeout = first_timeout.load();
    // A lower branch that timed out might still have succeeded.
    if (timeout < winner) {
        out.timed_out = true;
    } else if (winner != std::numeric_limits<int>::max()) {
        out.seeds = found[static_cast<std::size_t>(winner)];
    }
    return out;
}

inline Certificate make_certificate(const Diagram& d, std::vector<StrandId> seeds) {
    std::sort(seeds.begin(), seeds.end());
    Certificate cert;
    cert.k = static_cast<int>(seeds.size());
    cert.seeds = seeds;
    cert.trace = propagate(d, seeds).trace;
    return cert;
}

}  // namespace detail

/// Least k such that some k seed strands color the whole diagram, searched
/// for k = 1, 2, ... The 0-crossing diagram has Wirtinger number 1.
inline SearchOutcome wirtinger_number(const Diagram& d, const SearchOptions& opts = {}) {
    const auto started = detail::Clock::now();
    std::optional<detail::Clock::time_point> deadline;
    if (opts.time_limit.count() > 0) deadline = started + opts.time_limit;
    auto finish = [&](SearchOutcome out) {
        out.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(detail::Clock::now() - started);
        return out;
    };

    SearchOutcome out;
    const int strands = d.strand_count();
    const int limit = opts.max_k > 0 ? std::min(opts.max_k, strands) : strands;
    if (d.crossing_count() <= 1) {
        out.k = 1;
        out.certificate = detail::make_certificate(d, {1});
        out.nodes_explored = 1;
        return finish(out);
    }

    const ClosureEngine engine(d);
    const unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    for (int k = 1; k <= limit; ++k) {
        const auto level = opts.parallel ? detail::search_level_parallel(engine, k, deadline, threads)
                                         : detail::search_level_serial(engine, k, deadline);
        out.nodes_explored += level.nodes;
        if (level.seeds) {
            out.status = SearchStatus::Exact;
            out.k = k;
            out.certificate = detail::make_certificate(d, *level.seeds);
            return finish(out);
        }
        if (level.timed_out) {
            out.status = SearchStatus::LowerBoundOnly;
            out.k = k;
            return finish(out);
        }
    }
    out.status = SearchStatus::LowerBoundOnly;
    out.k = limit + 1;
    return finish(out);
}

inline constexpr int kDefaultOracleBound = 10;

/// Exhaustive check of every seed subset in order of size, with a plain
/// fixed-point closure. Used to cross-check wirtinger_number.
inline int wirtinger_oracle(const Diagram& d, int max_crossings = kDefaultOracleBound) {
    if (d.crossing_count() > max_crossings) {
        throw Error(ErrorCode::OracleBoundExceeded, std::to_string(d.crossing_count()) +
                                                        " crossings exceeds oracle bound " +
                                                        std::to_string(max_crossings));
    }
    const int n = d.strand_count();
    if (d.empty()) return 1;
    const auto& crossings = d.crossings();
    std::vector<char> colored(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) {
        std::vector<char> mask(static_cast<std::size_t>(n), 0);
        std::fill(mask.begin(), mask.begin() + k, 1);
        do {
            std::fill(colored.begin(), colored.end(), 0);
            for (int s = 0; s < n; ++s) colored[static_cast<std::size_t>(s) + 1] = mask[static_cast<std::size_t>(s)];
            bool changed = true;
            while (changed) {
                changed = false;
                for (const auto& x : crossings) {
                    if (!colored[static_cast<std::size_t>(x.over_strand)]) continue;
                    auto& a = colored[static_cast<std::size_t>(x.under_pair.first)];
                    auto& b = colored[static_cast<std::size_t>(x.under_pair.second)];
                    if (a != b) {
                        a = b = 1;
                        changed = true;
                    }
                }
            }
            if (std::all_of(colored.begin() + 1, colored.end(), [](char c) { return c != 0; })) return k;
        } while (std::prev_permutation(mask.begin(), mask.end()));
    }
    return n;
}

}  // namespace bridgekit
