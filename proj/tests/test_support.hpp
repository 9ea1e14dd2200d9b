#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bridgekit/bridgekit.hpp"

namespace bridgekit::testing {

inline constexpr std::string_view kTrefoil = "O1+U2+O3+U1+O2+U3+";

inline const TabulatedKnot& table_entry(std::string_view name) {
    for (const auto& k : kKnotTable)
        if (k.name == name) return k;
    throw std::out_of_range("no table entry " + std::string(name));
}

inline Diagram table_diagram(std::string_view name) {
    const auto& k = table_entry(name);
    return parse_gauss(k.code, std::string(k.name));
}

/// Uniformly shuffled double-occurrence code with one Over and one Under
/// visit per crossing. No realizability is implied.
inline Diagram random_code(std::mt19937_64& rng, int n) {
    std::vector<GaussEntry> entries;
    for (int c = 1; c <= n; ++c) {
        entries.push_back({c, Passage::Over, Sign::Unspecified});
        entries.push_back({c, Passage::Under, Sign::Unspecified});
    }
    std::shuffle(entries.begin(), entries.end(), rng);
    return Diagram::from_entries(std::move(entries));
}

/// Random code without a split witness.
inline Diagram random_prime_code(std::mt19937_64& rng, int n) {
    while (true) {
        Diagram d = random_code(rng, n);
        if (!is_composite(d)) return d;
    }
}

/// Random rotation, optional reversal, random relabeling and random signs.
inline Diagram random_symmetry(const Diagram& d, std::mt19937_64& rng) {
    if (d.empty()) return d;
    const std::size_t m = d.size();
    std::vector<GaussEntry> entries(d.entries());
    std::rotate(entries.begin(), entries.begin() + static_cast<std::ptrdiff_t>(rng() % m), entries.end());
    if (rng() % 2) std::reverse(entries.begin(), entries.end());
    std::vector<int> perm(static_cast<std::size_t>(d.crossing_count()));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto& e : entries) {
        e.crossing_id = perm[static_cast<std::size_t>(e.crossing_id - 1)];
        e.sign = static_cast<Sign>(rng() % 3);
    }
    return Diagram::from_entries(std::move(entries));
}

/// Mirror image: every crossing switched.
inline Diagram mirror(const Diagram& d) {
    std::vector<GaussEntry> entries(d.entries());
    for (auto& e : entries) e.passage = e.passage == Passage::Over ? Passage::Under : Passage::Over;
    return Diagram::from_entries(std::move(entries));
}

/// Table diagrams with at most `max_crossings` crossings.
inline std::vector<Diagram> table_diagrams(int max_crossings) {
    std::vector<Diagram> out;
    for (const auto& k : kKnotTable)
        if (k.crossing_number <= max_crossings) out.push_back(parse_gauss(k.code, std::string(k.name)));
    return out;
}

}  // namespace bridgekit::testing
