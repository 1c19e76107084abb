#include <doctest.h>

#include <frobseries/frobenius_gf.hpp>

#include "test_support.hpp"

using namespace frobseries;
using frobseries::test::as_longs;

namespace {
const auto ZZ = CoefficientRing::integers();
const auto Z2 = CoefficientRing::modular(2);
} // namespace

TEST_CASE("phi double sum: small values")
{
    // Oracle enumeration values, frozen.
    CHECK(as_longs(phi_series_double_sum(1, 10, ZZ)) == std::vector<long>{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42});
    CHECK(as_longs(phi_series_double_sum(2, 3, ZZ)) == std::vector<long>{1, 1, 3, 5});
    CHECK(as_longs(phi_series_double_sum(2, 7, ZZ)) == std::vector<long>{1, 1, 3, 5, 9, 14, 24, 35});
    CHECK(phi_series_double_sum(4, 7, ZZ).coefficient(3) == 6);
    CHECK(as_longs(phi_series_double_sum(4, 7, ZZ)) == std::vector<long>{1, 1, 3, 6, 12, 20, 35, 56});
    CHECK(phi_series_double_sum(3, 0, ZZ) == TruncatedSeries::one(ZZ, 0));
    CHECK_THROWS_AS(phi_series_double_sum(0, 5, ZZ), std::invalid_argument);
}

TEST_CASE("phi double sum: ring consistency")
{
    for (int k = 1; k <= 5; ++k) {
        const auto exact = phi_series_double_sum(k, 60, ZZ);
        CHECK(reduce_mod(exact, 7) == phi_series_double_sum(k, 60, CoefficientRing::modular(7)));
        for (const auto &c : exact.integer_coefficients()) {
            CHECK(c >= 0);
        }
    }
}

TEST_CASE("phi parity series")
{
    CHECK(as_longs(phi_parity_series(2, 3)) == std::vector<long>{1, 1, 1, 1});
    CHECK(as_longs(phi_parity_series(4, 3)) == std::vector<long>{1, 1, 1, 0});
    for (int k = 1; k <= 6; ++k) {
        CHECK(phi_parity_series(k, 0) == TruncatedSeries::one(Z2, 0));
    }
    CHECK_THROWS_AS(phi_parity_series(0, 3), std::invalid_argument);
}

TEST_CASE("mod-2 agreement of the two phi routes")
{
    for (int k = 1; k <= 8; ++k) {
        CHECK(reduce_mod(phi_series_double_sum(k, 200, ZZ), 2) == phi_parity_series(k, 200));
    }
}

TEST_CASE("partition series")
{
    CHECK(as_longs(partition_series(5, ZZ)) == std::vector<long>{1, 1, 2, 3, 5, 7});
    const auto p = test::partition_numbers(100);
    const auto series = partition_series(100, ZZ);
    const auto phi1 = phi_series_double_sum(1, 100, ZZ);
    for (std::size_t n = 0; n <= 100; ++n) {
        CHECK(series.coefficient(n) == p[n]);
        CHECK(phi1.coefficient(n) == p[n]);
    }
    CHECK(p[100] == 190569292);
}

TEST_CASE("cg product: window and low-order terms")
{
    const auto n0 = cg_product(2, 0, ZZ);
    CHECK(n0.z_min() == -2);
    CHECK(n0.z_max() == 2);
    CHECK(n0.row(0).coefficient(0) == 1);
    CHECK(n0.row(-1).coefficient(0) == 2);
    CHECK(n0.row(-2).coefficient(0) == 1);
    CHECK(n0.row(1).is_zero());
    CHECK(n0.row(7).is_zero());

    const auto n3 = cg_product(2, 3, ZZ);
    CHECK(n3.row(0).coefficient(1) == 4);
    CHECK(as_longs(n3.constant_term()) == std::vector<long>{1, 4, 9, 20});
    CHECK_THROWS_AS(cg_product(0, 3, ZZ), std::invalid_argument);
}

TEST_CASE("cg product: widening the z window changes nothing")
{
    for (int e : {1, 2, 3, 5}) {
        for (std::size_t n : {0, 4, 11, 20}) {
            const auto base = cg_product(e, n, ZZ);
            const auto wide = cg_product(e, n, ZZ, static_cast<int>(n) + e + 5);
            CHECK(base.constant_term() == wide.constant_term());
            for (int j = wide.z_min(); j <= wide.z_max(); ++j) {
                CHECK(base.row(j) == wide.row(j));
            }
        }
    }
}

TEST_CASE("cphi series")
{
    CHECK(as_longs(cphi_series(2, 3, ZZ)) == std::vector<long>{1, 4, 9, 20});
    CHECK(cphi_series(5, 1, ZZ).coefficient(1) == 25);
    CHECK(cphi_series(1, 0, ZZ) == TruncatedSeries::one(ZZ, 0));
    // cphi_1 = p(n).
    CHECK(as_longs(cphi_series(1, 10, ZZ)) == std::vector<long>{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42});
    CHECK(as_longs(cphi_series(3, 4, ZZ)) == std::vector<long>{1, 9, 27, 82, 207});
    CHECK(reduce_mod(cphi_series(3, 25, ZZ), 9) == cphi_series(3, 25, CoefficientRing::modular(9)));
    const auto cphi4 = cphi_series(4, 25, ZZ);
    for (const auto &c : cphi4.integer_coefficients()) {
        CHECK(c > 0);
    }
}

TEST_CASE("cphi parity witness has only even powers of q")
{
    const auto w1 = cphi_parity_witness(1, 4);
    CHECK(w1.row(0).coefficient(0) == 1);
    CHECK(w1.row(0).is_zero_at(1));
    CHECK(w1.row(0).is_zero_at(3));

    for (int k = 1; k <= 3; ++k) {
        const auto w = cphi_parity_witness(k, 5);
        CHECK(w.row(0).coefficient(0) == 1);
        for (int j = w.z_min(); j <= w.z_max(); ++j) {
            for (std::size_t n : {1, 3, 5}) {
                CHECK(w.row(j).is_zero_at(n));
            }
        }
    }
}

TEST_CASE("cphi parity witness matches the squared-variable product")
{
    // prod (1 + z^2 q^{2n+2})^k (1 + z^{-2} q^{2n})^k over Z/2Z, built
    // independently by substituting q -> q^2, z -> z^2 into cg_product(k).
    for (int k = 1; k <= 3; ++k) {
        const std::size_t n = 16;
        const auto witness = cphi_parity_witness(k, n);
        const auto half = cg_product(k, n / 2, Z2);
        for (int j = -static_cast<int>(n); j <= static_cast<int>(n); ++j) {
            for (std::size_t e = 0; e <= n; ++e) {
                mpz_class expected = 0;
                if (j % 2 == 0 && e % 2 == 0) {
                    expected = half.row(j / 2).coefficient(e / 2);
                }
                CHECK(witness.row(j).coefficient(e) == expected);
            }
        }
    }
}

TEST_CASE("laurent polynomial invariants")
{
    std::vector<TruncatedSeries> rows{TruncatedSeries::one(ZZ, 2), TruncatedSeries::one(ZZ, 2)};
    CHECK_NOTHROW(LaurentPolynomial(-1, rows));
    CHECK_THROWS_AS(LaurentPolynomial(1, rows), std::invalid_argument);
    CHECK_THROWS_AS(LaurentPolynomial(-3, rows), std::invalid_argument);
    std::vector<TruncatedSeries> mixed{TruncatedSeries::one(ZZ, 2), TruncatedSeries::one(ZZ, 3)};
    CHECK_THROWS_AS(LaurentPolynomial(0, mixed), std::invalid_argument);
    CHECK_THROWS_AS(LaurentPolynomial(0, {}), std::invalid_argument);
}
