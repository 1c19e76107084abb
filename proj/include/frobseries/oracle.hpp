#pragma once

#include <cstdint>
#include <vector>

namespace frobseries {

/// Two-rowed array of non-negative integers with equal row lengths.
/// weight = (number of columns) + (sum of all entries).
struct FrobeniusSymbol {
    std::vector<int> top;
    std::vector<int> bottom;

    std::size_t columns() const noexcept { return top.size(); }
    long weight() const;
};

// Rows weakly decreasing, equal length, no entry repeated more than k
// times within a row.
bool is_phi_symbol(const FrobeniusSymbol &symbol, int k);

struct ColoredEntry {
    int value;
    int color; // 1..k

    friend auto operator<=>(const ColoredEntry &, const ColoredEntry &) = default;
};

struct ColoredFrobeniusSymbol {
    std::vector<ColoredEntry> top;
    std::vector<ColoredEntry> bottom;

    std::size_t columns() const noexcept { return top.size(); }
    long weight() const;
};

// Colors in [1, k] and each row strictly decreasing in the canonical
// (value desc, color desc) order, so entries are distinct.
bool is_cphi_symbol(const ColoredFrobeniusSymbol &symbol, int k);

/// Upper bounds on exhaustive enumeration. Counts grow exponentially, so the
/// defaults are deliberately small.
struct OracleGuards {
    int max_phi_weight = 20;
    int max_cphi_weight = 8;
    int max_cphi_colors = 3;

    static OracleGuards unlimited();
    // unlimited() when FROBSERIES_GUARD_OVERRIDE is set to a non-empty value
    // other than "0", defaults otherwise.
    static OracleGuards from_environment();
};

// Number of phi_k symbols of weight n, by enumerating every admissible row.
// Throws guard_error when n exceeds the guard.
std::uint64_t count_phi(int k, int n, const OracleGuards &guards = {});

// Number of k-colored symbols of weight n.
std::uint64_t count_cphi(int k, int n, const OracleGuards &guards = {});

} // namespace frobseries
