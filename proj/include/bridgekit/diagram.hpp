#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bridgekit/error.hpp"

namespace bridgekit {

using CrossingId = int;
using StrandId = int;

enum class Passage : unsigned char { Over, Under };
enum class Sign : unsigned char { Unspecified, Plus, Minus };

/// One visit to a crossing while traversing the knot.
struct GaussEntry {
    CrossingId crossing_id = 1;
    Passage passage = Passage::Over;
    Sign sign = Sign::Unspecified;

    bool operator==(const GaussEntry&) const = default;
};

/// Arc of the diagram between two consecutive under-passages. `begin` is the
/// entry index following the opening Under entry; the span covers `length`
/// entries (all of them Over entries).
struct Strand {
    StrandId id = 1;
    std::size_t begin = 0;
    std::size_t length = 0;
    std::vector<std::size_t> over_entries;

    bool operator==(const Strand&) const = default;
};

struct Crossing {
    CrossingId id = 1;
    StrandId over_strand = 1;
    /// (strand ending at the Under entry, strand starting after it)
    std::pair<StrandId, StrandId> under_pair{1, 1};

    bool operator==(const Crossing&) const = default;

    bool has_under(StrandId s) const { return under_pair.first == s || under_pair.second == s; }

    /// The other under-strand; for the n = 1 self-adjacent case returns s itself.
    StrandId partner_of(StrandId s) const {
        return under_pair.first == s ? under_pair.second : under_pair.first;
    }
};

/// A validated Gauss code together with its strand and crossing tables.
/// Immutable once built; construct through parse_gauss or from_entries.
class Diagram {
public:
    /// The 0-crossing diagram.
    Diagram() { build_tables(); }

    /// Validates the double-occurrence structure and densely renumbers sparse
    /// crossing ids by first occurrence.
    static Diagram from_entries(std::vector<GaussEntry> entries, std::string name = {}) {
        Diagram d;
        d.name_ = std::move(name);
        d.entries_ = std::move(entries);
        d.validate_and_renumber();
        d.build_tables();
        return d;
    }

    const std::vector<GaussEntry>& entries() const noexcept { return entries_; }
    const GaussEntry& entry(std::size_t i) const { return entries_.at(i); }
    std::size_t size() const noexcept { return entries_.size(); }
    int crossing_count() const noexcept { return static_cast<int>(entries_.size() / 2); }
    bool empty() const noexcept { return entries_.empty(); }
    const std::string& name() const noexcept { return name_; }

    Diagram with_name(std::string name) const {
        Diagram d = *this;
        d.name_ = std::move(name);
        return d;
    }

    int strand_count() const noexcept { return static_cast<int>(strands_.size()); }
    const std::vector<Strand>& strands() const noexcept { return strands_; }
    const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
    const Strand& strand(StrandId s) const { return strands_.at(static_cast<std::size_t>(s - 1)); }
    const Crossing& crossing(CrossingId c) const { return crossings_.at(static_cast<std::size_t>(c - 1)); }

    /// Strand holding entry i; for an Under entry, the strand that ends there.
    StrandId strand_at(std::size_t i) const { return entry_strand_.at(i); }

    bool has_signs() const {
        return std::any_of(entries_.begin(), entries_.end(),
                           [](const GaussEntry& e) { return e.sign != Sign::Unspecified; });
    }

    /// Codes are compared by entry sequence; names are labels only.
    bool operator==(const Diagram& other) const { return entries_ == other.entries_; }

private:
    void validate_and_renumber();
    void build_tables();

    std::vector<GaussEntry> entries_;
    std::string name_;
    std::vector<Strand> strands_;
    std::vector<Crossing> crossings_;
    std::vector<StrandId> entry_strand_;
};

inline void Diagram::validate_and_renumber() {
    struct Seen {
        int over = 0;
        int under = 0;
        std::size_t first = 0;
    };
    std::unordered_map<int, Seen> seen;
    std::vector<int> order;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& e = entries_[i];
        if (e.crossing_id < 1) {
            throw Error(ErrorCode::MalformedToken,
                        "crossing id " + std::to_string(e.crossing_id) + " is not positive");
        }
        auto [it, inserted] = seen.try_emplace(e.crossing_id);
        if (inserted) {
            it->second.first = i;
            order.push_back(e.crossing_id);
        }
        int& count = e.passage == Passage::Over ? it->second.over : it->second.under;
        if (++count > 1) {
            throw Error(ErrorCode::DuplicatePassage,
                        "crossing " + std::to_string(e.crossing_id) + " has two " +
                            (e.passage == Passage::Over ? "Over" : "Under") + " passages");
        }
    }
    for (int id : order) {
        const auto& s = seen[id];
        if (s.over + s.under != 2) {
            throw Error(ErrorCode::UnpairedCrossing,
                        "crossing " + std::to_string(id) + " appears only once");
        }
    }
    const int n = static_cast<int>(order.size());
    const bool dense = std::all_of(order.begin(), order.end(), [n](int id) { return id <= n; });
    if (dense) return;
    std::unordered_map<int, int> relabel;
    for (int i = 0; i < n; ++i) relabel[order[static_cast<std::size_t>(i)]] = i + 1;
    for (auto& e : entries_) e.crossing_id = relabel[e.crossing_id];
}

inline void Diagram::build_tables() {
    strands_.clear();
    crossings_.clear();
    entry_strand_.assign(entries_.size(), 1);
    const std::size_t m = entries_.size();
    if (m == 0) {
        strands_.push_back(Strand{1, 0, 0, {}});
        return;
    }
    const int n = static_cast<int>(m / 2);

    // Strand 1 is the one running through the end of the code, i.e. the strand
    // that begins right after the final Under entry.
    std::size_t last_under = m - 1;
    while (entries_[last_under].passage != Passage::Under) --last_under;
    const std::size_t start = (last_under + 1) % m;

    StrandId current = 1;
    strands_.push_back(Strand{1, start, 0, {}});
    for (std::size_t t = 0; t < m; ++t) {
        const std::size_t i = (start + t) % m;
        entry_strand_[i] = current;
        if (entries_[i].passage == Passage::Over) {
            strands_.back().length++;
            strands_.back().over_entries.push_back(i);
        } else if (current < n) {
            ++current;
            strands_.push_back(Strand{current, (i + 1) % m, 0, {}});
        }
    }

    crossings_.resize(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < m; ++i) {
        const auto& e = entries_[i];
        auto& c = crossings_[static_cast<std::size_t>(e.crossing_id - 1)];
        c.id = e.crossing_id;
        if (e.passage == Passage::Over) {
            c.over_strand = entry_strand_[i];
        } else {
            const StrandId before = entry_strand_[i];
            c.under_pair = {before, before % n + 1};
        }
    }
}

// ---------------------------------------------------------------------------
// Parsing and serialization
// ---------------------------------------------------------------------------

/// Written in census files for the 0-crossing diagram; accepted by parse_gauss.
inline constexpr std::string_view kEmptyCodeMarker = "[]";

/// Parses a Gauss code such as "O1+U2+O3+U1+O2+U3+" or "o1, u1". Separators
/// (commas, whitespace) are optional; signs are optional. The empty string and
/// kEmptyCodeMarker both denote the 0-crossing diagram.
inline Diagram parse_gauss(std::string_view text, std::string name = {}) {
    auto is_sep = [](char ch) { return ch == ',' || std::isspace(static_cast<unsigned char>(ch)); };
    std::size_t lo = 0, hi = text.size();
    while (lo < hi && is_sep(text[lo])) ++lo;
    while (hi > lo && is_sep(text[hi - 1])) --hi;
    if (text.substr(lo, hi - lo) == kEmptyCodeMarker) return Diagram{}.with_name(std::move(name));

    std::vector<GaussEntry> entries;
    std::size_t i = lo;
    while (i < hi) {
        if (is_sep(text[i])) {
            ++i;
            continue;
        }
        const std::size_t token_start = i;
        auto malformed = [&](const std::string& why) {
            std::size_t end = token_start;
            while (end < hi && !is_sep(text[end])) ++end;
            return Error(ErrorCode::MalformedToken,
                         "'" + std::string(text.substr(token_start, std::min<std::size_t>(end - token_start, 24))) +
                             "' at offset " + std::to_string(token_start) + ": " + why);
        };
        GaussEntry e;
        const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
        if (letter == 'O') {
            e.passage = Passage::Over;
        } else if (letter == 'U') {
            e.passage = Passage::Under;
        } else {
            throw malformed("expected O or U");
        }
        ++i;
        long long value = 0;
        const std::size_t digits_start = i;
        while (i < hi && std::isdigit(static_cast<unsigned char>(text[i]))) {
            value = value * 10 + (text[i] - '0');
            if (value > std::numeric_limits<int>::max()) throw malformed("crossing id too large");
            ++i;
        }
        if (i == digits_start) throw malformed("missing crossing id");
        if (value == 0) throw malformed("crossing id must be positive");
        e.crossing_id = static_cast<int>(value);
        if (i < hi && (text[i] == '+' || text[i] == '-')) {
            e.sign = text[i] == '+' ? Sign::Plus : Sign::Minus;
            ++i;
        }
        if (i < hi && !is_sep(text[i]) && text[i] != 'O' && text[i] != 'o' && text[i] != 'U' &&
            text[i] != 'u') {
            throw malformed("unexpected character");
        }
        entries.push_back(e);
    }
    return Diagram::from_entries(std::move(entries), std::move(name));
}

inline std::string serialize(const GaussEntry& e) {
    std::string out(1, e.passage == Passage::Over ? 'O' : 'U');
    out += std::to_string(e.crossing_id);
    if (e.sign == Sign::Plus) out += '+';
    if (e.sign == Sign::Minus) out += '-';
    return out;
}

/// Compact form without separators. The 0-crossing diagram serializes to "".
inline std::string serialize(const Diagram& d) {
    std::string out;
    for (const auto& e : d.entries()) out += serialize(e);
    return out;
}

/// serialize(), but with kEmptyCodeMarker for the 0-crossing diagram so the
/// result survives line-oriented file formats.
inline std::string serialize_for_file(const Diagram& d) {
    return d.empty() ? std::string(kEmptyCodeMarker) : serialize(d);
}

// ---------------------------------------------------------------------------
// Tables and normal form
// ---------------------------------------------------------------------------

inline const std::vector<Strand>& strand_table(const Diagram& d) { return d.strands(); }

inline const std::vector<Crossing>& crossing_table(const Diagram& d) {
    if (d.empty()) throw Error(ErrorCode::EmptyDiagram, "crossing table of the 0-crossing diagram");
    return d.crossings();
}

namespace detail {

/// Reads the code starting at `start` in direction `step` (+1 or -1), relabels
/// crossings by first occurrence and drops signs.
inline std::vector<GaussEntry> relabeled_reading(const std::vector<GaussEntry>& entries,
                                                 std::size_t start, int step) {
    const std::size_t m = entries.size();
    std::vector<int> relabel(m / 2 + 1, 0);
    int next = 0;
    std::vector<GaussEntry> out;
    out.reserve(m);
    for (std::size_t t = 0; t < m; ++t) {
        const std::size_t i = step > 0 ? (start + t) % m : (start + m - t) % m;
        const auto& e = entries[i];
        int& label = relabel[static_cast<std::size_t>(e.crossing_id)];
        if (label == 0) label = ++next;
        out.push_back(GaussEntry{label, e.passage, Sign::Unspecified});
    }
    return out;
}

inline bool entry_less(const std::vector<GaussEntry>& a, const std::vector<GaussEntry>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const GaussEntry& x, const GaussEntry& y) {
                                            return std::pair(x.crossing_id, x.passage) <
                                                   std::pair(y.crossing_id, y.passage);
                                        });
}

}  // namespace detail

/// Least code, ordering entries by (crossing id, Over < Under), over all
/// rotations and both reading directions, with first-occurrence relabeling
/// and signs erased.
inline Diagram canonical_form(const Diagram& d) {
    if (d.empty()) return d;
    const auto& entries = d.entries();
    std::vector<GaussEntry> best = detail::relabeled_reading(entries, 0, +1);
    for (std::size_t start = 0; start < entries.size(); ++start) {
        for (int step : {+1, -1}) {
            auto candidate = detail::relabeled_reading(entries, start, step);
            if (detail::entry_less(candidate, best)) best = std::move(candidate);
        }
    }
    return Diagram::from_entries(std::move(best), d.name());
}

}  // namespace bridgekit
