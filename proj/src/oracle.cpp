#include <frobseries/oracle.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

#include <frobseries/errors.hpp>

namespace frobseries {

namespace {

template <class Entry, class Sum>
long symbol_weight(const std::vector<Entry> &top, const std::vector<Entry> &bottom, Sum value_of)
{
    long w = static_cast<long>(top.size());
    for (const auto &e : top) {
        w += value_of(e);
    }
    for (const auto &e : bottom) {
        w += value_of(e);
    }
    return w;
}

bool is_phi_row(const std::vector<int> &row, int k)
{
    int run = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] < 0 || (i > 0 && row[i] > row[i - 1])) {
            return false;
        }
        run = (i > 0 && row[i] == row[i - 1]) ? run + 1 : 1;
        if (run > k) {
            return false;
        }
    }
    return true;
}

bool is_cphi_row(const std::vector<ColoredEntry> &row, int k)
{
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i].value < 0 || row[i].color < 1 || row[i].color > k) {
            return false;
        }
        if (i > 0 && !(row[i] < row[i - 1])) {
            return false;
        }
    }
    return true;
}

// Visits every weakly decreasing row of `length` entries in [0, max_entry]
// with each value repeated at most k times and total at most max_sum.
void for_each_phi_row(int length, int max_entry, int k, int max_sum, const std::function<void(const std::vector<int> &)> &visit)
{
    std::vector<int> row;
    row.reserve(static_cast<std::size_t>(length));
    std::function<void(int, int, int)> extend = [&](int bound, int run, int remaining) {
        if (static_cast<int>(row.size()) == length) {
            visit(row);
            return;
        }
        for (int v = std::min(bound, remaining); v >= 0; --v) {
            const int next_run = (!row.empty() && row.back() == v) ? run + 1 : 1;
            if (next_run > k) {
                continue;
            }
            row.push_back(v);
            extend(v, next_run, remaining - v);
            row.pop_back();
        }
    };
    extend(max_entry, 0, max_sum);
}

// Visits every strictly decreasing (canonical order) row of `length`
// colored entries with values in [0, max_entry] and value total at most
// max_sum.
void for_each_cphi_row(int length, int max_entry, int k, int max_sum,
                       const std::function<void(const std::vector<ColoredEntry> &)> &visit)
{
    std::vector<ColoredEntry> row;
    row.reserve(static_cast<std::size_t>(length));
    std::function<void(ColoredEntry, int)> extend = [&](ColoredEntry bound, int remaining) {
        if (static_cast<int>(row.size()) == length) {
            visit(row);
            return;
        }
        for (int v = std::min(bound.value, remaining); v >= 0; --v) {
            const int top_color = (v == bound.value) ? bound.color : k;
            for (int c = top_color; c >= 1; --c) {
                const ColoredEntry e{v, c};
                if (!row.empty() && !(e < row.back())) {
                    continue;
                }
                row.push_back(e);
                extend(e, remaining - v);
                row.pop_back();
            }
        }
    };
    extend(ColoredEntry{max_entry, k}, max_sum);
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b)
{
    if (a > std::numeric_limits<std::uint64_t>::max() - b) {
        throw guard_error("oracle count overflowed 64 bits");
    }
    return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) {
        throw guard_error("oracle count overflowed 64 bits");
    }
    return a * b;
}

// Pairs top and bottom rows: sum over t of rows(t) * rows(budget - t).
std::uint64_t pair_rows(const std::vector<std::uint64_t> &rows_by_sum, int budget)
{
    std::uint64_t total = 0;
    for (int t = 0; t <= budget; ++t) {
        total = checked_add(total, checked_mul(rows_by_sum[static_cast<std::size_t>(t)],
                                               rows_by_sum[static_cast<std::size_t>(budget - t)]));
    }
    return total;
}

void check_args(int k, int n)
{
    if (k < 1) {
        throw std::invalid_argument("oracle: k must be >= 1, got " + std::to_string(k));
    }
    if (n < 0) {
        throw std::invalid_argument("oracle: weight must be >= 0, got " + std::to_string(n));
    }
}

} // namespace

long FrobeniusSymbol::weight() const
{
    return symbol_weight(top, bottom, [](int v) { return static_cast<long>(v); });
}

long ColoredFrobeniusSymbol::weight() const
{
    return symbol_weight(top, bottom, [](const ColoredEntry &e) { return static_cast<long>(e.value); });
}

bool is_phi_symbol(const FrobeniusSymbol &symbol, int k)
{
    return symbol.top.size() == symbol.bottom.size() && is_phi_row(symbol.top, k) && is_phi_row(symbol.bottom, k);
}

bool is_cphi_symbol(const ColoredFrobeniusSymbol &symbol, int k)
{
    return symbol.top.size() == symbol.bottom.size() && is_cphi_row(symbol.top, k) && is_cphi_row(symbol.bottom, k);
}

OracleGuards OracleGuards::unlimited()
{
    constexpr int big = std::numeric_limits<int>::max();
    return OracleGuards{big, big, big};
}

OracleGuards OracleGuards::from_environment()
{
    const char *flag = std::getenv("FROBSERIES_GUARD_OVERRIDE");
    if (flag != nullptr && *flag != '\0' && std::string_view{flag} != "0") {
        return unlimited();
    }
    return OracleGuards{};
}

std::uint64_t count_phi(int k, int n, const OracleGuards &guards)
{
    check_args(k, n);
    if (n > guards.max_phi_weight) {
        throw guard_error("count_phi: weight " + std::to_string(n) + " exceeds the enumeration guard "
                          + std::to_string(guards.max_phi_weight));
    }
    std::uint64_t total = 0;
    for (int s = 0; s <= n; ++s) {
        const int budget = n - s;
        std::vector<std::uint64_t> rows_by_sum(static_cast<std::size_t>(budget) + 1, 0);
        for_each_phi_row(s, budget, k, budget, [&](const std::vector<int> &row) {
            ++rows_by_sum[static_cast<std::size_t>(std::accumulate(row.begin(), row.end(), 0))];
        });
        total = checked_add(total, pair_rows(rows_by_sum, budget));
    }
    return total;
}

std::uint64_t count_cphi(int k, int n, const OracleGuards &guards)
{
    check_args(k, n);
    if (n > guards.max_cphi_weight || k > guards.max_cphi_colors) {
        throw guard_error("count_cphi: (k=" + std::to_string(k) + ", n=" + std::to_string(n)
                          + ") exceeds the enumeration guard (k <= " + std::to_string(guards.max_cphi_colors)
                          + ", n <= " + std::to_string(guards.max_cphi_weight) + ")");
    }
    std::uint64_t total = 0;
    for (int s = 0; s <= n; ++s) {
        const int budget = n - s;
        std::vector<std::uint64_t> rows_by_sum(static_cast<std::size_t>(budget) + 1, 0);
        for_each_cphi_row(s, budget, k, budget, [&](const std::vector<ColoredEntry> &row) {
            int sum = 0;
            for (const auto &e : row) {
                sum += e.value;
            }
            ++rows_by_sum[static_cast<std::size_t>(sum)];
        });
        total = checked_add(total, pair_rows(rows_by_sum, budget));
    }
    return total;
}

} // namespace frobseries
