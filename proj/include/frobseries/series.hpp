#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include <frobseries/ring.hpp>

namespace frobseries {

/// A power series in q known exactly up to q^N, over a fixed coefficient ring.
///
/// Values are immutable once built. Every binary operation requires both
/// operands to share the ring and the truncation order N; nothing is ever
/// silently truncated or extended.
class TruncatedSeries {
public:
    using Integers = std::vector<mpz_class>;
    using Residues = std::vector<std::uint64_t>;

    static TruncatedSeries zero(const CoefficientRing &ring, std::size_t truncation);
    static TruncatedSeries one(const CoefficientRing &ring, std::size_t truncation);

    // Takes ownership of c_0..c_N; the truncation is coeffs.size() - 1.
    static TruncatedSeries from_integers(Integers coeffs);
    // Every residue must already lie in [0, m).
    static TruncatedSeries from_residues(const CoefficientRing &ring, Residues coeffs);

    const CoefficientRing &ring() const noexcept { return ring_; }
    std::size_t truncation() const noexcept;

    // The stored coefficient of q^n: the exact value over Z, the
    // representative in [0, m) over Z/mZ. Throws std::out_of_range past N.
    mpz_class coefficient(std::size_t n) const;
    bool is_zero_at(std::size_t n) const;

    std::span<const mpz_class> integer_coefficients() const;
    std::span<const std::uint64_t> residues() const;

    bool is_zero() const;
    std::size_t nonzero_count() const;

    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
    TruncatedSeries(CoefficientRing ring, std::variant<Integers, Residues> coeffs)
        : ring_(ring), coeffs_(std::move(coeffs))
    {
    }

    CoefficientRing ring_;
    std::variant<Integers, Residues> coeffs_;
};

std::ostream &operator<<(std::ostream &os, const TruncatedSeries &s);

// Builds c_0 + c_1 q + ... from at most N+1 values; missing entries are
// zero and modular inputs are reduced into [0, m).
TruncatedSeries make_series(const CoefficientRing &ring, std::size_t truncation,
                            std::span<const mpz_class> values);
TruncatedSeries make_series(const CoefficientRing &ring, std::size_t truncation,
                            std::initializer_list<long> values);

TruncatedSeries add(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries subtract(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries negate(const TruncatedSeries &a);

// Schoolbook truncated Cauchy product.
TruncatedSeries mul(const TruncatedSeries &a, const TruncatedSeries &b);

// Multiplicative inverse; the constant term must be a unit of the ring.
TruncatedSeries invert(const TruncatedSeries &a);

/// (q^a; q^b)_inf = prod_{j >= 0} (1 - q^{a + j b}) truncated at q^N.
TruncatedSeries pochhammer(const CoefficientRing &ring, std::size_t truncation, std::size_t start,
                           std::size_t step);

/// Sum over all integers k of (-1)^k q^{(3k^2 - k)/2}, built term by term.
TruncatedSeries pentagonal_series(const CoefficientRing &ring, std::size_t truncation);

/// Sum over k >= 0 of (-1)^k (2k + 1) q^{k(k+1)/2}, built term by term.
TruncatedSeries triangular_cube_series(const CoefficientRing &ring, std::size_t truncation);

// Coefficientwise reduction of an integer series into Z/mZ.
TruncatedSeries reduce_mod(const TruncatedSeries &a, std::uint64_t m);

inline mpz_class coefficient(const TruncatedSeries &a, std::size_t n) { return a.coefficient(n); }

} // namespace frobseries
