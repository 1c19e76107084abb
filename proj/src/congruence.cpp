#include <frobseries/congruence.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>

#include <frobseries/errors.hpp>
#include <frobseries/frobenius_gf.hpp>

#include "modular.hpp"

namespace frobseries {

namespace {

void require_prime(std::int64_t p, std::int64_t min, const char *where)
{
    if (p < min || !is_prime(p)) {
        throw std::invalid_argument(std::string{where} + ": expected a prime >= " + std::to_string(min) + ", got "
                                    + std::to_string(p));
    }
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp != 0) {
        if ((exp & 1U) != 0) {
            result = detail::mul_mod(result, base, m);
        }
        base = detail::mul_mod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

} // namespace

std::string_view to_string(Family f) { return f == Family::Phi ? "phi" : "cphi"; }

Family family_from_string(std::string_view s)
{
    if (s == "phi") {
        return Family::Phi;
    }
    if (s == "cphi") {
        return Family::CPhi;
    }
    throw std::invalid_argument("unknown family '" + std::string{s} + "' (expected phi or cphi)");
}

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::Verified:
        return "verified";
    case Status::Refuted:
        return "refuted";
    case Status::Skipped:
        return "skipped";
    }
    return "skipped";
}

Status status_from_string(std::string_view s)
{
    if (s == "verified") {
        return Status::Verified;
    }
    if (s == "refuted") {
        return Status::Refuted;
    }
    if (s == "skipped") {
        return Status::Skipped;
    }
    throw std::invalid_argument("unknown status '" + std::string{s} + "'");
}

std::string_view to_string(ResidueClass c)
{
    switch (c) {
    case ResidueClass::Residue:
        return "residue";
    case ResidueClass::NonResidue:
        return "nonresidue";
    case ResidueClass::Zero:
        return "zero";
    }
    return "zero";
}

void CongruenceClaim::validate() const
{
    if (k < 1) {
        throw std::invalid_argument("claim: subscript k must be >= 1");
    }
    if (a < 1 || b < 0 || b >= a) {
        throw std::invalid_argument("claim: progression must satisfy a >= 1 and 0 <= b < a");
    }
    if (m < 2) {
        throw std::invalid_argument("claim: modulus must be >= 2");
    }
}

bool is_prime(std::int64_t p)
{
    if (p > max_prime) {
        throw guard_error("primality is only decided up to " + std::to_string(max_prime));
    }
    if (p < 2) {
        return false;
    }
    for (std::int64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

ResidueClass residue_class(std::int64_t x, std::int64_t p)
{
    if (p == 2) {
        throw std::invalid_argument("residue_class: modulus must be an odd prime, got 2");
    }
    require_prime(p, 3, "residue_class");
    const auto m = static_cast<std::uint64_t>(p);
    const auto r = detail::reduce(static_cast<long>(x % p), m);
    if (r == 0) {
        return ResidueClass::Zero;
    }
    return pow_mod(r, (m - 1) / 2, m) == 1 ? ResidueClass::Residue : ResidueClass::NonResidue;
}

std::vector<int> eligible_residues(int p)
{
    require_prime(p, 5, "eligible_residues");
    std::vector<int> out;
    for (int r = 1; r < p; ++r) {
        if (residue_class(24 * static_cast<std::int64_t>(r) + 1, p) == ResidueClass::NonResidue) {
            out.push_back(r);
        }
    }
    return out;
}

bool pentagonal_class_reachable(int p, int r)
{
    require_prime(p, 5, "pentagonal_class_reachable");
    if (r <= 0 || r >= p) {
        throw std::invalid_argument("pentagonal_class_reachable: need 0 < r < p");
    }
    // (3k^2 - k)/2 mod p has period p in k because p is odd.
    for (std::int64_t k = 0; k < p; ++k) {
        if (((3 * k * k - k) / 2) % p == r) {
            return true;
        }
    }
    return false;
}

SeriesProvider default_provider()
{
    return [](const CongruenceClaim &claim, std::size_t truncation) -> ProvidedSeries {
        if (claim.family == Family::Phi) {
            if (claim.m == 2) {
                return {phi_parity_series(claim.k, truncation), std::string{routes::parity}};
            }
            return {phi_series_double_sum(claim.k, truncation, CoefficientRing::modular(claim.m)),
                    std::string{routes::double_sum}};
        }
        return {cphi_series(claim.k, truncation, CoefficientRing::modular(claim.m)),
                std::string{routes::constant_term}};
    };
}

SeriesProvider double_sum_provider()
{
    return [](const CongruenceClaim &claim, std::size_t truncation) -> ProvidedSeries {
        if (claim.family == Family::Phi) {
            return {phi_series_double_sum(claim.k, truncation, CoefficientRing::modular(claim.m)),
                    std::string{routes::double_sum}};
        }
        return default_provider()(claim, truncation);
    };
}

VerificationReport verify_claim(const CongruenceClaim &claim, std::int64_t n_max, const SeriesProvider &provider)
{
    claim.validate();
    if (n_max < 0) {
        throw std::invalid_argument("verify_claim: n_max must be >= 0");
    }
    const auto needed = static_cast<std::size_t>(claim.a * n_max + claim.b);
    auto provided = provider(claim, needed);
    if (provided.series.truncation() < needed) {
        throw truncation_shortfall("provider returned truncation " + std::to_string(provided.series.truncation())
                                   + " but the window needs " + std::to_string(needed));
    }
    if (provided.series.ring().is_integer()) {
        provided.series = reduce_mod(provided.series, claim.m);
    } else if (provided.series.ring().modulus() != claim.m) {
        throw ring_mismatch("provider returned a series over " + provided.series.ring().to_string()
                            + " for a claim mod " + std::to_string(claim.m));
    }

    VerificationReport report{claim, n_max, Status::Verified, {}, std::move(provided.route)};
    const auto residues = provided.series.residues();
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const auto value = residues[static_cast<std::size_t>(claim.a * n + claim.b)];
        if (value != 0) {
            report.counterexamples.push_back({n, value});
        }
    }
    if (!report.counterexamples.empty()) {
        report.status = Status::Refuted;
    }
    return report;
}

std::vector<VerificationReport> verify_all(const std::vector<CongruenceClaim> &claims,
                                           const std::vector<std::int64_t> &n_max, const SuiteOptions &options)
{
    if (claims.size() != n_max.size()) {
        throw std::invalid_argument("verify_all: one window per claim required");
    }
    std::vector<VerificationReport> reports(claims.size());
    std::vector<std::exception_ptr> errors(claims.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < claims.size(); i = next++) {
            try {
                reports[i] = verify_claim(claims[i], n_max[i], options.provider);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    unsigned jobs = options.jobs != 0 ? options.jobs : std::max(1U, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(claims.size(), 1)));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t) {
            pool.emplace_back(worker);
        }
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    std::stable_sort(reports.begin(), reports.end(),
                     [](const auto &x, const auto &y) { return x.claim < y.claim; });
    return reports;
}

std::vector<CongruenceClaim> main_theorem_claims(const std::vector<int> &primes, const std::vector<int> &ells)
{
    std::vector<CongruenceClaim> claims;
    for (const int p : primes) {
        const auto residues = eligible_residues(p);
        for (const int ell : ells) {
            if (ell < 1) {
                throw std::invalid_argument("main theorem: ell must be >= 1");
            }
            for (const int r : residues) {
                claims.push_back({Family::Phi, p * ell - 1, p, r, 2});
            }
        }
    }
    return claims;
}

std::vector<VerificationReport> main_theorem_suite(const std::vector<int> &primes, const std::vector<int> &ells,
                                                   std::int64_t n_max, const SuiteOptions &options)
{
    const auto claims = main_theorem_claims(primes, ells);
    return verify_all(claims, std::vector<std::int64_t>(claims.size(), n_max), options);
}

std::vector<VerificationReport> cphi_even_suite(const std::vector<int> &ks, std::int64_t n_max,
                                                const SuiteOptions &options)
{
    std::vector<CongruenceClaim> claims;
    for (const int k : ks) {
        if (k < 1) {
            throw std::invalid_argument("cphi even suite: k must be >= 1");
        }
        claims.push_back({Family::CPhi, 2 * k, 2, 1, 2});
    }
    return verify_all(claims, std::vector<std::int64_t>(claims.size(), n_max), options);
}

std::vector<VerificationReport> andrews_p_squared_suite(int p, std::int64_t n_max, const SuiteOptions &options)
{
    require_prime(p, 2, "p-squared suite");
    std::vector<CongruenceClaim> claims;
    for (int r = 1; r < p; ++r) {
        claims.push_back({Family::CPhi, p, p, r, static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(p)});
    }
    return verify_all(claims, std::vector<std::int64_t>(claims.size(), n_max), options);
}

std::vector<VerificationReport> garvan_sellers_lift_check(int k, int p, int r, int lift_count, std::int64_t n_max,
                                                          const SuiteOptions &options)
{
    require_prime(p, 2, "lift check");
    if (r <= 0 || r >= p) {
        throw std::invalid_argument("lift check: need 0 < r < p");
    }
    if (lift_count < 0) {
        throw std::invalid_argument("lift check: lift count must be >= 0");
    }
    const auto m = static_cast<std::uint64_t>(p);
    std::vector<VerificationReport> out;
    out.push_back(verify_claim({Family::CPhi, k, p, r, m}, n_max, options.provider));

    std::vector<CongruenceClaim> lifts;
    for (int lift = 1; lift <= lift_count; ++lift) {
        lifts.push_back({Family::CPhi, p * lift + k, p, r, m});
    }
    if (out.front().status == Status::Verified) {
        for (auto &rep : verify_all(lifts, std::vector<std::int64_t>(lifts.size(), n_max), options)) {
            out.push_back(std::move(rep));
        }
    } else {
        for (const auto &claim : lifts) {
            out.push_back({claim, n_max, Status::Skipped, {}, "hypothesis-refuted"});
        }
    }
    return out;
}

bool all_verified(const std::vector<VerificationReport> &reports)
{
    return std::all_of(reports.begin(), reports.end(),
                       [](const auto &r) { return r.status != Status::Refuted; });
}

bool any_refuted(const std::vector<VerificationReport> &reports) { return !all_verified(reports); }

} // namespace frobseries
