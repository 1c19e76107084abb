#include <frobseries/series.hpp>

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

#include <frobseries/errors.hpp>

#include "modular.hpp"

namespace frobseries {

namespace {

void require_compatible(const TruncatedSeries &a, const TruncatedSeries &b, const char *op)
{
    if (a.ring() != b.ring()) {
        throw ring_mismatch(std::string{op} + ": ring mismatch (" + a.ring().to_string() + " vs "
                            + b.ring().to_string() + ")");
    }
    if (a.truncation() != b.truncation()) {
        throw truncation_mismatch(std::string{op} + ": truncation mismatch (" + std::to_string(a.truncation())
                                  + " vs " + std::to_string(b.truncation()) + ")");
    }
}

std::vector<std::size_t> nonzero_indices(std::span<const mpz_class> c)
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (sgn(c[i]) != 0) {
            idx.push_back(i);
        }
    }
    return idx;
}

std::vector<std::size_t> nonzero_indices(std::span<const std::uint64_t> c)
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] != 0) {
            idx.push_back(i);
        }
    }
    return idx;
}

// Writes the value +-v at q^e into a series under construction.
void put_signed(const CoefficientRing &ring, TruncatedSeries::Integers &ints, TruncatedSeries::Residues &res,
                std::size_t e, long v)
{
    if (ring.is_integer()) {
        ints[e] = v;
    } else {
        res[e] = detail::reduce(v, ring.modulus());
    }
}

TruncatedSeries finish(const CoefficientRing &ring, TruncatedSeries::Integers ints, TruncatedSeries::Residues res)
{
    return ring.is_integer() ? TruncatedSeries::from_integers(std::move(ints))
                             : TruncatedSeries::from_residues(ring, std::move(res));
}

} // namespace

TruncatedSeries TruncatedSeries::zero(const CoefficientRing &ring, std::size_t truncation)
{
    if (ring.is_integer()) {
        return TruncatedSeries{ring, Integers(truncation + 1)};
    }
    return TruncatedSeries{ring, Residues(truncation + 1, 0)};
}

TruncatedSeries TruncatedSeries::one(const CoefficientRing &ring, std::size_t truncation)
{
    if (ring.is_integer()) {
        Integers c(truncation + 1);
        c[0] = 1;
        return TruncatedSeries{ring, std::move(c)};
    }
    Residues c(truncation + 1, 0);
    c[0] = 1;
    return TruncatedSeries{ring, std::move(c)};
}

TruncatedSeries TruncatedSeries::from_integers(Integers coeffs)
{
    if (coeffs.empty()) {
        throw std::invalid_argument("a truncated series needs at least one coefficient");
    }
    return TruncatedSeries{CoefficientRing::integers(), std::move(coeffs)};
}

TruncatedSeries TruncatedSeries::from_residues(const CoefficientRing &ring, Residues coeffs)
{
    if (!ring.is_modular()) {
        throw std::invalid_argument("from_residues requires a modular ring");
    }
    if (coeffs.empty()) {
        throw std::invalid_argument("a truncated series needs at least one coefficient");
    }
    if (std::any_of(coeffs.begin(), coeffs.end(), [m = ring.modulus()](auto c) { return c >= m; })) {
        throw std::invalid_argument("residue outside [0, " + std::to_string(ring.modulus()) + ")");
    }
    return TruncatedSeries{ring, std::move(coeffs)};
}

std::size_t TruncatedSeries::truncation() const noexcept
{
    return std::visit([](const auto &c) { return c.size() - 1; }, coeffs_);
}

mpz_class TruncatedSeries::coefficient(std::size_t n) const
{
    if (n > truncation()) {
        throw std::out_of_range("coefficient index " + std::to_string(n) + " exceeds truncation "
                                + std::to_string(truncation()));
    }
    if (const auto *ints = std::get_if<Integers>(&coeffs_)) {
        return (*ints)[n];
    }
    return mpz_class{static_cast<unsigned long>(std::get<Residues>(coeffs_)[n])};
}

bool TruncatedSeries::is_zero_at(std::size_t n) const
{
    if (n > truncation()) {
        throw std::out_of_range("coefficient index " + std::to_string(n) + " exceeds truncation "
                                + std::to_string(truncation()));
    }
    if (const auto *ints = std::get_if<Integers>(&coeffs_)) {
        return sgn((*ints)[n]) == 0;
    }
    return std::get<Residues>(coeffs_)[n] == 0;
}

std::span<const mpz_class> TruncatedSeries::integer_coefficients() const
{
    if (const auto *ints = std::get_if<Integers>(&coeffs_)) {
        return *ints;
    }
    throw ring_mismatch("integer_coefficients() on a series over " + ring_.to_string());
}

std::span<const std::uint64_t> TruncatedSeries::residues() const
{
    if (const auto *res = std::get_if<Residues>(&coeffs_)) {
        return *res;
    }
    throw ring_mismatch("residues() on a series over Z");
}

bool TruncatedSeries::is_zero() const { return nonzero_count() == 0; }

std::size_t TruncatedSeries::nonzero_count() const
{
    return std::visit([](const auto &c) { return nonzero_indices(std::span{c}).size(); }, coeffs_);
}

std::ostream &operator<<(std::ostream &os, const TruncatedSeries &s)
{
    bool first = true;
    for (std::size_t n = 0; n <= s.truncation(); ++n) {
        if (s.is_zero_at(n)) {
            continue;
        }
        mpz_class c = s.coefficient(n);
        if (first) {
            if (c < 0) {
                os << "-";
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        c = abs(c);
        if (n == 0 || c != 1) {
            os << c;
        }
        if (n > 0) {
            os << "q";
            if (n > 1) {
                os << "^" << n;
            }
        }
        first = false;
    }
    if (first) {
        os << "0";
    }
    return os << " + O(q^" << s.truncation() + 1 << ") over " << s.ring().to_string();
}

TruncatedSeries make_series(const CoefficientRing &ring, std::size_t truncation, std::span<const mpz_class> values)
{
    if (values.size() > truncation + 1) {
        throw std::invalid_argument("make_series: " + std::to_string(values.size())
                                    + " coefficients do not fit truncation " + std::to_string(truncation));
    }
    if (ring.is_integer()) {
        TruncatedSeries::Integers c(truncation + 1);
        std::copy(values.begin(), values.end(), c.begin());
        return TruncatedSeries::from_integers(std::move(c));
    }
    TruncatedSeries::Residues c(truncation + 1, 0);
    for (std::size_t i = 0; i < values.size(); ++i) {
        c[i] = detail::reduce(values[i], ring.modulus());
    }
    return TruncatedSeries::from_residues(ring, std::move(c));
}

TruncatedSeries make_series(const CoefficientRing &ring, std::size_t truncation, std::initializer_list<long> values)
{
    std::vector<mpz_class> v(values.begin(), values.end());
    return make_series(ring, truncation, std::span<const mpz_class>{v});
}

TruncatedSeries add(const TruncatedSeries &a, const TruncatedSeries &b)
{
    require_compatible(a, b, "add");
    if (a.ring().is_integer()) {
        const auto x = a.integer_coefficients();
        const auto y = b.integer_coefficients();
        TruncatedSeries::Integers c(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            c[i] = x[i] + y[i];
        }
        return TruncatedSeries::from_integers(std::move(c));
    }
    const auto m = a.ring().modulus();
    const auto x = a.residues();
    const auto y = b.residues();
    TruncatedSeries::Residues c(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        c[i] = detail::add_mod(x[i], y[i], m);
    }
    return TruncatedSeries::from_residues(a.ring(), std::move(c));
}

TruncatedSeries negate(const TruncatedSeries &a)
{
    if (a.ring().is_integer()) {
        const auto x = a.integer_coefficients();
        TruncatedSeries::Integers c(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            c[i] = -x[i];
        }
        return TruncatedSeries::from_integers(std::move(c));
    }
    const auto m = a.ring().modulus();
    const auto x = a.residues();
    TruncatedSeries::Residues c(x.size());
    std::transform(x.begin(), x.end(), c.begin(), [m](auto v) { return detail::neg_mod(v, m); });
    return TruncatedSeries::from_residues(a.ring(), std::move(c));
}

TruncatedSeries subtract(const TruncatedSeries &a, const TruncatedSeries &b) { return add(a, negate(b)); }

TruncatedSeries mul(const TruncatedSeries &a, const TruncatedSeries &b)
{
    require_compatible(a, b, "mul");
    const auto n_max = a.truncation();
    if (a.ring().is_integer()) {
        const auto x = a.integer_coefficients();
        const auto y = b.integer_coefficients();
        TruncatedSeries::Integers c(n_max + 1);
        // Iterate the sparser operand in the outer loop.
        const auto xs = nonzero_indices(x);
        const auto ys = nonzero_indices(y);
        const bool swap = ys.size() < xs.size();
        const auto &outer_idx = swap ? ys : xs;
        const auto outer = swap ? y : x;
        const auto inner = swap ? x : y;
        for (const auto i : outer_idx) {
            for (std::size_t j = 0; i + j <= n_max; ++j) {
                if (sgn(inner[j]) != 0) {
                    mpz_addmul(c[i + j].get_mpz_t(), outer[i].get_mpz_t(), inner[j].get_mpz_t());
                }
            }
        }
        return TruncatedSeries::from_integers(std::move(c));
    }
    const auto m = a.ring().modulus();
    const auto x = a.residues();
    const auto y = b.residues();
    // Each product is < 2^64, so a full column sum fits in 128 bits.
    std::vector<detail::uint128> acc(n_max + 1, 0);
    for (const auto i : nonzero_indices(x)) {
        const auto xi = x[i];
        for (std::size_t j = 0; i + j <= n_max; ++j) {
            acc[i + j] += static_cast<detail::uint128>(xi * y[j]);
        }
    }
    TruncatedSeries::Residues c(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        c[n] = static_cast<std::uint64_t>(acc[n] % m);
    }
    return TruncatedSeries::from_residues(a.ring(), std::move(c));
}

TruncatedSeries invert(const TruncatedSeries &a)
{
    const auto n_max = a.truncation();
    if (a.ring().is_integer()) {
        const auto x = a.integer_coefficients();
        if (x[0] != 1 && x[0] != -1) {
            throw std::invalid_argument("invert: constant term " + x[0].get_str() + " is not a unit of Z");
        }
        // a_0^{-1} = a_0 for a_0 = +-1.
        const bool negative_unit = x[0] < 0;
        const auto support = nonzero_indices(x);
        TruncatedSeries::Integers b(n_max + 1);
        b[0] = x[0];
        mpz_class sum;
        for (std::size_t n = 1; n <= n_max; ++n) {
            sum = 0;
            for (const auto i : support) {
                if (i == 0) {
                    continue;
                }
                if (i > n) {
                    break;
                }
                mpz_addmul(sum.get_mpz_t(), x[i].get_mpz_t(), b[n - i].get_mpz_t());
            }
            b[n] = negative_unit ? mpz_class{sum} : mpz_class{-sum};
        }
        return TruncatedSeries::from_integers(std::move(b));
    }
    const auto m = a.ring().modulus();
    const auto x = a.residues();
    const auto inv0 = detail::inverse_mod(x[0], m);
    if (!inv0) {
        throw std::invalid_argument("invert: constant term " + std::to_string(x[0]) + " is not a unit of "
                                    + a.ring().to_string());
    }
    const auto support = nonzero_indices(x);
    TruncatedSeries::Residues b(n_max + 1, 0);
    b[0] = *inv0;
    const auto minus_inv0 = detail::neg_mod(*inv0, m);
    for (std::size_t n = 1; n <= n_max; ++n) {
        detail::uint128 sum = 0;
        for (const auto i : support) {
            if (i == 0) {
                continue;
            }
            if (i > n) {
                break;
            }
            sum += static_cast<detail::uint128>(x[i] * b[n - i]);
        }
        b[n] = detail::mul_mod(static_cast<std::uint64_t>(sum % m), minus_inv0, m);
    }
    return TruncatedSeries::from_residues(a.ring(), std::move(b));
}

TruncatedSeries pochhammer(const CoefficientRing &ring, std::size_t truncation, std::size_t start, std::size_t step)
{
    if (start == 0 || step == 0) {
        throw std::invalid_argument("pochhammer: start and step must both be >= 1");
    }
    // Multiply in place by (1 - q^e), walking n downward so c[n - e] is
    // still the old value.
    if (ring.is_integer()) {
        TruncatedSeries::Integers c(truncation + 1);
        c[0] = 1;
        for (std::size_t e = start; e <= truncation; e += step) {
            for (std::size_t n = truncation; n >= e; --n) {
                if (sgn(c[n - e]) != 0) {
                    c[n] -= c[n - e];
                }
            }
        }
        return TruncatedSeries::from_integers(std::move(c));
    }
    const auto m = ring.modulus();
    TruncatedSeries::Residues c(truncation + 1, 0);
    c[0] = 1;
    for (std::size_t e = start; e <= truncation; e += step) {
        for (std::size_t n = truncation; n >= e; --n) {
            c[n] = detail::add_mod(c[n], detail::neg_mod(c[n - e], m), m);
        }
    }
    return TruncatedSeries::from_residues(ring, std::move(c));
}

TruncatedSeries pentagonal_series(const CoefficientRing &ring, std::size_t truncation)
{
    TruncatedSeries::Integers ints(ring.is_integer() ? truncation + 1 : 0);
    TruncatedSeries::Residues res(ring.is_modular() ? truncation + 1 : 0, 0);
    put_signed(ring, ints, res, 0, 1);
    // k and -k share the sign (-1)^k; exponents k(3k-1)/2 and k(3k+1)/2.
    for (std::size_t k = 1;; ++k) {
        const std::size_t lo = k * (3 * k - 1) / 2;
        if (lo > truncation) {
            break;
        }
        const long sign = (k % 2 == 0) ? 1 : -1;
        put_signed(ring, ints, res, lo, sign);
        const std::size_t hi = k * (3 * k + 1) / 2;
        if (hi <= truncation) {
            put_signed(ring, ints, res, hi, sign);
        }
    }
    return finish(ring, std::move(ints), std::move(res));
}

TruncatedSeries triangular_cube_series(const CoefficientRing &ring, std::size_t truncation)
{
    TruncatedSeries::Integers ints(ring.is_integer() ? truncation + 1 : 0);
    TruncatedSeries::Residues res(ring.is_modular() ? truncation + 1 : 0, 0);
    for (std::size_t k = 0; k * (k + 1) / 2 <= truncation; ++k) {
        const long value = static_cast<long>(2 * k + 1) * ((k % 2 == 0) ? 1 : -1);
        put_signed(ring, ints, res, k * (k + 1) / 2, value);
    }
    return finish(ring, std::move(ints), std::move(res));
}

TruncatedSeries reduce_mod(const TruncatedSeries &a, std::uint64_t m)
{
    const auto ring = CoefficientRing::modular(m);
    if (!a.ring().is_integer()) {
        throw ring_mismatch("reduce_mod expects a series over Z, got " + a.ring().to_string());
    }
    const auto x = a.integer_coefficients();
    TruncatedSeries::Residues c(x.size());
    std::transform(x.begin(), x.end(), c.begin(), [m](const mpz_class &v) { return detail::reduce(v, m); });
    return TruncatedSeries::from_residues(ring, std::move(c));
}

} // namespace frobseries
