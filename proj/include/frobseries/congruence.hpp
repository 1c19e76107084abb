#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <frobseries/ring.hpp>
#include <frobseries/series.hpp>

namespace frobseries {

enum class Family { Phi, CPhi };

std::string_view to_string(Family f);
Family family_from_string(std::string_view s);

/// "f_k(a n + b) = 0 (mod m) for every n >= 0".
struct CongruenceClaim {
    Family family = Family::Phi;
    int k = 1;
    std::int64_t a = 1;
    std::int64_t b = 0;
    std::uint64_t m = 2;

    // Throws std::invalid_argument unless k >= 1, a >= 1, 0 <= b < a, m >= 2.
    void validate() const;

    friend auto operator<=>(const CongruenceClaim &, const CongruenceClaim &) = default;
};

enum class Status { Verified, Refuted, Skipped };

std::string_view to_string(Status s);
Status status_from_string(std::string_view s);

struct Counterexample {
    std::int64_t n;
    std::uint64_t value; // f_k(a n + b) mod m

    friend bool operator==(const Counterexample &, const Counterexample &) = default;
};

/// Outcome of checking one claim on the window 0 <= n <= n_max. Verified
/// only when the whole window was computed and no counterexample exists.
struct VerificationReport {
    CongruenceClaim claim;
    std::int64_t n_max = 0;
    Status status = Status::Skipped;
    std::vector<Counterexample> counterexamples;
    std::string route;

    friend bool operator==(const VerificationReport &, const VerificationReport &) = default;
};

enum class ResidueClass { Residue, NonResidue, Zero };

std::string_view to_string(ResidueClass c);

// Largest p accepted by the trial-division primality test.
inline constexpr std::int64_t max_prime = 10'000;

// Trial division; throws guard_error above max_prime.
bool is_prime(std::int64_t p);

/// Quadratic character of x modulo the odd prime p via Euler's criterion.
ResidueClass residue_class(std::int64_t x, std::int64_t p);

/// { r : 0 < r < p, 24 r + 1 is a quadratic nonresidue mod p } for primes p >= 5.
std::vector<int> eligible_residues(int p);

/// Whether some integer k has (3k^2 - k)/2 = r (mod p); scans k over 0..p-1.
bool pentagonal_class_reachable(int p, int r);

/// Coefficients produced for a claim, plus the name of the construction used.
struct ProvidedSeries {
    TruncatedSeries series;
    std::string route;
};

/// Produces the claim's family series f_k to at least the requested truncation,
/// over Z/mZ (or over Z, in which case it is reduced).
using SeriesProvider = std::function<ProvidedSeries(const CongruenceClaim &claim, std::size_t truncation)>;

namespace routes {
inline constexpr std::string_view parity = "eta-quotient-mod-2";
inline constexpr std::string_view double_sum = "double-sum";
inline constexpr std::string_view constant_term = "constant-term";
} // namespace routes

// Phi mod 2 through the eta quotient, other Phi claims through the double
// sum, CPhi through constant-term extraction.
SeriesProvider default_provider();
// Phi through the double sum for every modulus; CPhi as default_provider.
SeriesProvider double_sum_provider();

VerificationReport verify_claim(const CongruenceClaim &claim, std::int64_t n_max, const SeriesProvider &provider);

struct SuiteOptions {
    // 0 picks the number of hardware threads.
    unsigned jobs = 0;
    SeriesProvider provider = default_provider();
};

// Verifies every claim (claim i on window [0, n_max[i]]) concurrently and
// returns the reports sorted by claim.
std::vector<VerificationReport> verify_all(const std::vector<CongruenceClaim> &claims,
                                           const std::vector<std::int64_t> &n_max, const SuiteOptions &options = {});

// (Phi, k = p l - 1, p n + r, mod 2) for every p, l and eligible r.
std::vector<CongruenceClaim> main_theorem_claims(const std::vector<int> &primes, const std::vector<int> &ells);

std::vector<VerificationReport> main_theorem_suite(const std::vector<int> &primes, const std::vector<int> &ells,
                                                   std::int64_t n_max, const SuiteOptions &options = {});

// (CPhi, 2k, 2n + 1, mod 2) for each k.
std::vector<VerificationReport> cphi_even_suite(const std::vector<int> &ks, std::int64_t n_max,
                                                const SuiteOptions &options = {});

// (CPhi, p, p n + r, mod p^2) for each 0 < r < p.
std::vector<VerificationReport> andrews_p_squared_suite(int p, std::int64_t n_max, const SuiteOptions &options = {});

/// Checks the hypothesis (CPhi, k, p n + r, mod p) first; if it verifies,
/// checks (CPhi, p N + k, p n + r, mod p) for N = 1..lift_count, otherwise
/// reports every lift as Skipped. The hypothesis report comes first.
std::vector<VerificationReport> garvan_sellers_lift_check(int k, int p, int r, int lift_count, std::int64_t n_max,
                                                          const SuiteOptions &options = {});

// Every non-Skipped report is Verified.
bool all_verified(const std::vector<VerificationReport> &reports);
bool any_refuted(const std::vector<VerificationReport> &reports);

} // namespace frobseries
