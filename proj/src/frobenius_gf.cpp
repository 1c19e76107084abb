#include <frobseries/frobenius_gf.hpp>

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "modular.hpp"

namespace frobseries {

namespace {

void require_positive(int k, const char *what)
{
    if (k < 1) {
        throw std::invalid_argument(std::string{what} + " must be >= 1, got " + std::to_string(k));
    }
}

struct IntegerArith {
    using value = mpz_class;

    static bool is_zero(const mpz_class &v) { return sgn(v) == 0; }
    static void add_product(mpz_class &dst, const mpz_class &c, const mpz_class &src)
    {
        mpz_addmul(dst.get_mpz_t(), c.get_mpz_t(), src.get_mpz_t());
    }
    mpz_class from_binomial(const mpz_class &c) const { return c; }
    static void clear(mpz_class &v) { v = 0; }
};

struct ModArith {
    using value = std::uint64_t;

    std::uint64_t m;

    static bool is_zero(std::uint64_t v) { return v == 0; }
    void add_product(std::uint64_t &dst, std::uint64_t c, std::uint64_t src) const
    {
        dst = detail::add_mod(dst, detail::mul_mod(c, src, m), m);
    }
    std::uint64_t from_binomial(const mpz_class &c) const { return detail::reduce(c, m); }
    static void clear(std::uint64_t &v) { v = 0; }
};

// Dense (z, q) coefficient table for the CG product over one ring.
template <class Arith>
class ProductGrid {
public:
    using value = typename Arith::value;

    ProductGrid(Arith arith, int window, std::size_t truncation)
        : arith_(arith), window_(window), width_(truncation + 1),
          cells_(static_cast<std::size_t>(2 * window + 1) * width_), scratch_(cells_.size())
    {
        cells_[index(0, 0)] = 1;
    }

    // Multiplies by (1 + z^{z_step} q^{q_step})^e, z_step = +-1.
    void multiply_binomial_power(int z_step, std::size_t q_step, int e)
    {
        std::vector<value> binom(static_cast<std::size_t>(e) + 1);
        for (int i = 0; i <= e; ++i) {
            mpz_class c;
            mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(i));
            binom[static_cast<std::size_t>(i)] = arith_.from_binomial(c);
        }
        for (auto &v : scratch_) {
            Arith::clear(v);
        }
        const std::size_t n_max = width_ - 1;
        for (int z = -window_; z <= window_; ++z) {
            for (std::size_t n = 0; n <= n_max; ++n) {
                const value &src = cells_[index(z, n)];
                if (Arith::is_zero(src)) {
                    continue;
                }
                for (int i = 0; i <= e; ++i) {
                    const std::size_t nn = n + q_step * static_cast<std::size_t>(i);
                    const int zz = z + z_step * i;
                    if (nn > n_max || zz > window_ || zz < -window_) {
                        break;
                    }
                    arith_.add_product(scratch_[index(zz, nn)], binom[static_cast<std::size_t>(i)], src);
                }
            }
        }
        cells_.swap(scratch_);
    }

    std::vector<value> row(int z) const
    {
        const auto begin = cells_.begin() + static_cast<std::ptrdiff_t>(index(z, 0));
        return std::vector<value>(begin, begin + static_cast<std::ptrdiff_t>(width_));
    }

private:
    std::size_t index(int z, std::size_t n) const { return static_cast<std::size_t>(z + window_) * width_ + n; }

    Arith arith_;
    int window_;
    std::size_t width_;
    std::vector<value> cells_;
    std::vector<value> scratch_;
};

template <class Arith>
std::vector<std::vector<typename Arith::value>> expand_cg(Arith arith, int e, std::size_t truncation, int window)
{
    ProductGrid<Arith> grid(arith, window, truncation);
    for (std::size_t n = 0; n <= truncation; ++n) {
        if (n + 1 <= truncation) {
            grid.multiply_binomial_power(+1, n + 1, e);
        }
        grid.multiply_binomial_power(-1, n, e);
    }
    std::vector<std::vector<typename Arith::value>> rows;
    rows.reserve(static_cast<std::size_t>(2 * window + 1));
    for (int z = -window; z <= window; ++z) {
        rows.push_back(grid.row(z));
    }
    return rows;
}

} // namespace

LaurentPolynomial::LaurentPolynomial(int z_min, std::vector<TruncatedSeries> rows)
    : z_min_(z_min), rows_(std::move(rows))
{
    if (rows_.empty()) {
        throw std::invalid_argument("LaurentPolynomial needs at least one row");
    }
    if (z_min_ > 0 || z_max() < 0) {
        throw std::invalid_argument("LaurentPolynomial window must contain z^0");
    }
    for (const auto &r : rows_) {
        if (r.ring() != rows_.front().ring() || r.truncation() != rows_.front().truncation()) {
            throw std::invalid_argument("LaurentPolynomial rows must share ring and truncation");
        }
    }
}

TruncatedSeries LaurentPolynomial::row(int j) const
{
    if (j < z_min_ || j > z_max()) {
        return TruncatedSeries::zero(ring(), truncation());
    }
    return rows_[static_cast<std::size_t>(j - z_min_)];
}

TruncatedSeries phi_series_double_sum(int k, std::size_t truncation, const CoefficientRing &ring)
{
    require_positive(k, "phi_series_double_sum: k");
    using i64 = std::int64_t;
    const i64 n_max = static_cast<i64>(truncation);
    const i64 kp1 = k + 1;
    const i64 binom_k1 = kp1 * k / 2;

    std::vector<i64> numerator(truncation + 1, 0);
    i64 j_max = 0;
    while (kp1 * (j_max + 1) * (j_max + 2) / 2 <= n_max) {
        ++j_max;
    }
    for (i64 j = -j_max; j <= j_max; ++j) {
        const i64 aj = std::llabs(j);
        const i64 floor_exp = kp1 * aj * (aj + 1) / 2;
        for (i64 r = kp1 * aj;; ++r) {
            const i64 exponent = r * (r + 1) / 2 - binom_k1 * j * j;
            if (exponent > n_max) {
                break;
            }
            if (exponent < floor_exp) {
                throw std::logic_error("double sum exponent fell below its floor");
            }
            numerator[static_cast<std::size_t>(exponent)] += ((r + k * aj) % 2 == 0) ? 1 : -1;
        }
    }

    std::vector<mpz_class> values(numerator.begin(), numerator.end());
    const auto num = make_series(ring, truncation, std::span<const mpz_class>{values});
    const auto euler = pochhammer(ring, truncation, 1, 1);
    const auto denominator = mul(mul(euler, euler), pochhammer(ring, truncation, k + 1, k + 1));
    return mul(num, invert(denominator));
}

TruncatedSeries phi_parity_series(int k, std::size_t truncation)
{
    require_positive(k, "phi_parity_series: k");
    const auto z2 = CoefficientRing::modular(2);
    return mul(pentagonal_series(z2, truncation), invert(pochhammer(z2, truncation, k + 1, k + 1)));
}

LaurentPolynomial cg_product(int exponent, std::size_t truncation, const CoefficientRing &ring,
                             std::optional<int> window)
{
    require_positive(exponent, "cg_product: exponent");
    const int w = window.value_or(static_cast<int>(truncation) + exponent);
    if (w < 0) {
        throw std::invalid_argument("cg_product: window must be non-negative");
    }
    std::vector<TruncatedSeries> rows;
    if (ring.is_integer()) {
        for (auto &r : expand_cg(IntegerArith{}, exponent, truncation, w)) {
            rows.push_back(TruncatedSeries::from_integers(std::move(r)));
        }
    } else {
        for (auto &r : expand_cg(ModArith{ring.modulus()}, exponent, truncation, w)) {
            rows.push_back(TruncatedSeries::from_residues(ring, std::move(r)));
        }
    }
    return LaurentPolynomial{-w, std::move(rows)};
}

TruncatedSeries cphi_series(int k, std::size_t truncation, const CoefficientRing &ring)
{
    require_positive(k, "cphi_series: k");
    return cg_product(k, truncation, ring).constant_term();
}

LaurentPolynomial cphi_parity_witness(int k, std::size_t truncation)
{
    require_positive(k, "cphi_parity_witness: k");
    return cg_product(2 * k, truncation, CoefficientRing::modular(2));
}

TruncatedSeries partition_series(std::size_t truncation, const CoefficientRing &ring)
{
    return invert(pochhammer(ring, truncation, 1, 1));
}

} // namespace frobseries
