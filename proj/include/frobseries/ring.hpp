#pragma once

#include <cstdint>
#include <string>

namespace frobseries {

/// Coefficient ring of a truncated series: the exact integers, or Z/mZ.
///
/// Moduli are limited to [2, 2^32] so that a product of two reduced
/// residues fits in 64 bits and a full Cauchy sum fits in 128 bits.
class CoefficientRing {
public:
    static constexpr std::uint64_t max_modulus = std::uint64_t{1} << 32;

    static CoefficientRing integers() noexcept { return CoefficientRing{0}; }
    static CoefficientRing modular(std::uint64_t m);

    bool is_modular() const noexcept { return modulus_ != 0; }
    bool is_integer() const noexcept { return modulus_ == 0; }

    // 0 for the integers.
    std::uint64_t modulus() const noexcept { return modulus_; }

    std::string to_string() const;

    friend bool operator==(const CoefficientRing &, const CoefficientRing &) = default;

private:
    explicit CoefficientRing(std::uint64_t m) noexcept : modulus_(m) {}

    std::uint64_t modulus_;
};

} // namespace frobseries
