#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <frobseries/ring.hpp>
#include <frobseries/series.hpp>

namespace frobseries {

/// A Laurent polynomial in z whose coefficients are truncated q-series.
///
/// Rows z^{z_min} .. z^{z_max} are stored (z_min <= 0 <= z_max); every row
/// shares one ring and one truncation, and rows outside the window are zero.
class LaurentPolynomial {
public:
    LaurentPolynomial(int z_min, std::vector<TruncatedSeries> rows);

    int z_min() const noexcept { return z_min_; }
    int z_max() const noexcept { return z_min_ + static_cast<int>(rows_.size()) - 1; }
    const CoefficientRing &ring() const noexcept { return rows_.front().ring(); }
    std::size_t truncation() const noexcept { return rows_.front().truncation(); }

    // The q-series multiplying z^j; the zero series outside the window.
    TruncatedSeries row(int j) const;
    TruncatedSeries constant_term() const { return row(0); }

    friend bool operator==(const LaurentPolynomial &, const LaurentPolynomial &) = default;

private:
    int z_min_;
    std::vector<TruncatedSeries> rows_;
};

/// sum_{n <= N} phi_k(n) q^n from the double-sum formula
///
///   Phi_k(q) = sum_{r >= (k+1)|j|} (-1)^{r+kj} q^{C(r+1,2) - C(k+1,2) j^2}
///              / ((q;q)^2 (q^{k+1};q^{k+1})),
///
/// assembling the sparse numerator first and dividing in the requested ring.
TruncatedSeries phi_series_double_sum(int k, std::size_t truncation, const CoefficientRing &ring);

/// Phi_k(q) mod 2 as the eta quotient (q;q) / (q^{k+1};q^{k+1}) over Z/2Z.
TruncatedSeries phi_parity_series(int k, std::size_t truncation);

/// prod_{n >= 0} (1 + z q^{n+1})^e (1 + z^{-1} q^n)^e, truncated at q^N.
///
/// Intermediate z-exponents are clipped to [-window, window], window
/// defaulting to N + e: a positive unit of z costs at least one power of q
/// and only the n = 0 factor supplies free negative units, so anything
/// outside that band cannot reach z^0 within the q budget.
LaurentPolynomial cg_product(int exponent, std::size_t truncation, const CoefficientRing &ring,
                             std::optional<int> window = std::nullopt);

/// sum_{n <= N} cphi_k(n) q^n: the z^0 row of cg_product with exponent k.
TruncatedSeries cphi_series(int k, std::size_t truncation, const CoefficientRing &ring);

/// cg_product with exponent 2k reduced mod 2; every row is a series in q^2.
LaurentPolynomial cphi_parity_witness(int k, std::size_t truncation);

/// 1 / (q;q), whose coefficients are the partition numbers p(n).
TruncatedSeries partition_series(std::size_t truncation, const CoefficientRing &ring);

} // namespace frobseries
