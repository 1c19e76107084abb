#include <frobseries/ring.hpp>

#include <stdexcept>

namespace frobseries {

CoefficientRing CoefficientRing::modular(std::uint64_t m)
{
    if (m < 2) {
        throw std::invalid_argument("modulus must be at least 2, got " + std::to_string(m));
    }
    if (m > max_modulus) {
        throw std::invalid_argument("modulus " + std::to_string(m) + " exceeds the supported maximum 2^32");
    }
    return CoefficientRing{m};
}

std::string CoefficientRing::to_string() const
{
    return is_modular() ? "Z/" + std::to_string(modulus_) + "Z" : "Z";
}

} // namespace frobseries
