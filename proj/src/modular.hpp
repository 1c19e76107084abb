#pragma once

#include <cstdint>
#include <optional>

#include <gmpxx.h>

namespace frobseries::detail {

__extension__ typedef unsigned __int128 uint128;

// All residues are < 2^32, so plain 64-bit products never overflow.

inline std::uint64_t reduce(const mpz_class &x, std::uint64_t m)
{
    return mpz_fdiv_ui(x.get_mpz_t(), m);
}

inline std::uint64_t reduce(long x, std::uint64_t m)
{
    const auto r = x % static_cast<long long>(m);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(m) : r);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    const auto s = a + b;
    return s >= m ? s - m : s;
}

inline std::uint64_t neg_mod(std::uint64_t a, std::uint64_t m) { return a == 0 ? 0 : m - a; }

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return (a * b) % m; }

inline std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t m)
{
    std::int64_t r0 = static_cast<std::int64_t>(m), r1 = static_cast<std::int64_t>(a % m);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        const auto q = r0 / r1;
        std::int64_t tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (r0 != 1) {
        return std::nullopt;
    }
    if (t0 < 0) {
        t0 += static_cast<std::int64_t>(m);
    }
    return static_cast<std::uint64_t>(t0);
}

} // namespace frobseries::detail
