#include <frobseries/cli.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include <frobseries/errors.hpp>
#include <frobseries/frobenius_gf.hpp>
#include <frobseries/oracle.hpp>
#include <frobseries/report_json.hpp>

namespace frobseries::cli {

namespace {

using nlohmann::json;

struct ExpandArgs {
    std::string family;
    int k = 0;
    long truncation = -1;
    std::optional<std::uint64_t> modulus;
};

struct VerifyArgs {
    std::string suite;
    std::vector<int> primes;
    std::vector<int> ells;
    std::vector<int> ks;
    std::optional<int> k;
    std::optional<int> p;
    std::optional<int> r;
    int lifts = 1;
    std::int64_t n_max = -1;
    unsigned jobs = 0;
    std::string route = "auto";
    bool no_timestamp = false;
};

struct OracleArgs {
    std::string family;
    int k = 0;
    int weight = -1;
};

struct CommonArgs {
    std::string format = "text";
    std::string out_path;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

bool guards_lifted(const Environment &env)
{
    if (env.guard_override) {
        return *env.guard_override;
    }
    return OracleGuards::from_environment().max_phi_weight == OracleGuards::unlimited().max_phi_weight;
}

void emit(const std::string &payload, const CommonArgs &common, Environment &env)
{
    if (common.out_path.empty()) {
        env.out << payload;
        return;
    }
    std::ofstream file(common.out_path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open output file " + common.out_path);
    }
    file << payload;
    if (!file) {
        throw std::runtime_error("failed writing " + common.out_path);
    }
}

int cmd_expand(const ExpandArgs &args, const CommonArgs &common, Environment &env)
{
    const Family family = family_from_string(args.family);
    if (args.k < 1) {
        throw UsageError("--k must be >= 1");
    }
    if (args.truncation < 0) {
        throw UsageError("--n must be >= 0");
    }
    const auto n = static_cast<std::size_t>(args.truncation);
    const ExpandGuards guards;
    if (!guards_lifted(env)) {
        if (family == Family::Phi && n > guards.max_phi_truncation) {
            throw guard_error("phi expansion beyond N = " + std::to_string(guards.max_phi_truncation)
                              + " needs FROBSERIES_GUARD_OVERRIDE");
        }
        if (family == Family::CPhi && (n > guards.max_cphi_truncation || args.k > guards.max_cphi_k)) {
            throw guard_error("cphi expansion beyond N = " + std::to_string(guards.max_cphi_truncation) + ", k = "
                              + std::to_string(guards.max_cphi_k) + " needs FROBSERIES_GUARD_OVERRIDE");
        }
    }

    const CoefficientRing ring = args.modulus ? CoefficientRing::modular(*args.modulus) : CoefficientRing::integers();
    TruncatedSeries series = TruncatedSeries::zero(ring, n);
    std::string route;
    if (family == Family::Phi && args.modulus == 2) {
        series = phi_parity_series(args.k, n);
        route = routes::parity;
    } else if (family == Family::Phi) {
        series = phi_series_double_sum(args.k, n, ring);
        route = routes::double_sum;
    } else {
        series = cphi_series(args.k, n, ring);
        route = routes::constant_term;
    }

    std::ostringstream os;
    if (common.format == "csv") {
        os << "n,coefficient\n";
        for (std::size_t i = 0; i <= n; ++i) {
            os << i << ',' << series.coefficient(i).get_str() << '\n';
        }
    } else if (common.format == "json") {
        json coeffs = json::array();
        for (std::size_t i = 0; i <= n; ++i) {
            coeffs.push_back(series.coefficient(i).get_str());
        }
        json doc{{"family", to_string(family)}, {"k", args.k},         {"truncation", n},
                 {"ring", ring.to_string()},    {"route", route},       {"coefficients", std::move(coeffs)}};
        os << doc.dump(2) << '\n';
    } else {
        os << "# family=" << to_string(family) << " k=" << args.k << " N=" << n << " ring=" << ring.to_string()
           << " route=" << route << '\n';
        for (std::size_t i = 0; i <= n; ++i) {
            os << i << ' ' << series.coefficient(i).get_str() << '\n';
        }
    }
    emit(os.str(), common, env);
    return exit_ok;
}

int cmd_verify(const VerifyArgs &args, const CommonArgs &common, Environment &env)
{
    if (args.n_max < 0) {
        throw UsageError("--nmax must be >= 0");
    }
    SuiteOptions options;
    options.jobs = args.jobs;
    if (env.provider) {
        options.provider = *env.provider;
    } else if (args.route == "double-sum") {
        options.provider = double_sum_provider();
    }

    std::vector<VerificationReport> reports;
    if (args.suite == "main") {
        if (args.primes.empty() || args.ells.empty()) {
            throw UsageError("verify main needs --primes and --ells");
        }
        reports = main_theorem_suite(args.primes, args.ells, args.n_max, options);
    } else if (args.suite == "cphi-even") {
        if (args.ks.empty()) {
            throw UsageError("verify cphi-even needs --ks");
        }
        reports = cphi_even_suite(args.ks, args.n_max, options);
    } else if (args.suite == "p-squared") {
        if (!args.p) {
            throw UsageError("verify p-squared needs --p");
        }
        reports = andrews_p_squared_suite(*args.p, args.n_max, options);
    } else {
        if (!args.k || !args.p || !args.r) {
            throw UsageError("verify gs-lift needs --k, --p and --r");
        }
        reports = garvan_sellers_lift_check(*args.k, *args.p, *args.r, args.lifts, args.n_max, options);
    }

    const auto doc = report_document(args.suite, reports, !args.no_timestamp);
    emit(doc.dump(2) + "\n", common, env);

    const auto count = [&](Status s) {
        return std::count_if(reports.begin(), reports.end(), [s](const auto &r) { return r.status == s; });
    };
    env.err << "verify " << args.suite << ": " << count(Status::Verified) << " verified, " << count(Status::Refuted)
            << " refuted, " << count(Status::Skipped) << " skipped\n";
    return any_refuted(reports) ? exit_refuted : exit_ok;
}

int cmd_oracle(const OracleArgs &args, const CommonArgs &common, Environment &env)
{
    const Family family = family_from_string(args.family);
    const OracleGuards guards = guards_lifted(env) ? OracleGuards::unlimited() : OracleGuards{};
    const auto count = family == Family::Phi ? count_phi(args.k, args.weight, guards)
                                             : count_cphi(args.k, args.weight, guards);
    const auto n = static_cast<std::size_t>(args.weight);
    const auto ring = CoefficientRing::integers();
    const mpz_class series_value = family == Family::Phi ? phi_series_double_sum(args.k, n, ring).coefficient(n)
                                                         : cphi_series(args.k, n, ring).coefficient(n);
    const bool agrees = series_value == mpz_class{static_cast<unsigned long>(count)};

    std::ostringstream os;
    if (common.format == "json") {
        json doc{{"family", to_string(family)}, {"k", args.k},
                 {"weight", args.weight},       {"count", count},
                 {"series_coefficient", series_value.get_str()}, {"agrees", agrees}};
        os << doc.dump(2) << '\n';
    } else {
        os << count << ' ' << (agrees ? "agrees" : "disagrees") << " (series coefficient " << series_value.get_str()
           << ")\n";
    }
    emit(os.str(), common, env);
    return agrees ? exit_ok : exit_refuted;
}

int cmd_residues(int p, const CommonArgs &common, Environment &env)
{
    const auto eligible = eligible_residues(p);
    std::ostringstream os;
    if (common.format == "json") {
        json rows = json::array();
        for (int r = 1; r < p; ++r) {
            rows.push_back({{"r", r},
                            {"value", (24 * r + 1) % p},
                            {"class", to_string(residue_class(24 * r + 1, p))},
                            {"eligible", std::find(eligible.begin(), eligible.end(), r) != eligible.end()}});
        }
        os << json{{"p", p}, {"residues", std::move(rows)}, {"eligible", eligible}}.dump(2) << '\n';
    } else {
        os << "r 24r+1_mod_p class eligible\n";
        for (int r = 1; r < p; ++r) {
            const bool ok = std::find(eligible.begin(), eligible.end(), r) != eligible.end();
            os << r << ' ' << (24 * r + 1) % p << ' ' << to_string(residue_class(24 * r + 1, p)) << ' '
               << (ok ? "yes" : "no") << '\n';
        }
    }
    emit(os.str(), common, env);
    return exit_ok;
}

void add_common(CLI::App *cmd, CommonArgs &common, std::vector<std::string> formats)
{
    cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember(std::move(formats)));
    cmd->add_option("--out", common.out_path, "Write the payload to this file instead of stdout");
}

} // namespace

int run(const std::vector<std::string> &args, Environment &env)
{
    CLI::App app{"Truncated q-series toolkit for generalized Frobenius partitions", "frobseries"};
    app.require_subcommand(1);

    ExpandArgs expand;
    VerifyArgs verify;
    OracleArgs oracle;
    int residues_p = 0;
    CommonArgs common;

    auto *expand_cmd = app.add_subcommand("expand", "Print the coefficients of Phi_k or CPhi_k up to q^N");
    expand_cmd->add_option("--family", expand.family, "phi or cphi")->required()->check(CLI::IsMember({"phi", "cphi"}));
    expand_cmd->add_option("--k", expand.k, "Family subscript")->required();
    expand_cmd->add_option("--n", expand.truncation, "Truncation order N")->required();
    expand_cmd->add_option("--mod", expand.modulus, "Reduce coefficients modulo m");
    add_common(expand_cmd, common, {"text", "csv", "json"});

    auto *verify_cmd = app.add_subcommand("verify", "Check a congruence family over a finite window");
    verify_cmd->add_option("suite", verify.suite, "main, cphi-even, p-squared or gs-lift")
        ->required()
        ->check(CLI::IsMember({"main", "cphi-even", "p-squared", "gs-lift"}));
    verify_cmd->add_option("--primes", verify.primes, "Comma-separated primes")->delimiter(',');
    verify_cmd->add_option("--ells", verify.ells, "Comma-separated multipliers l")->delimiter(',');
    verify_cmd->add_option("--ks", verify.ks, "Comma-separated k values")->delimiter(',');
    verify_cmd->add_option("--k", verify.k, "Subscript for gs-lift");
    verify_cmd->add_option("--p", verify.p, "Prime for p-squared and gs-lift");
    verify_cmd->add_option("--r", verify.r, "Residue for gs-lift");
    verify_cmd->add_option("--lifts", verify.lifts, "Number of lifts for gs-lift");
    verify_cmd->add_option("--nmax", verify.n_max, "Check n = 0..nmax")->required();
    verify_cmd->add_option("--jobs", verify.jobs, "Worker threads (0 = hardware threads)");
    verify_cmd->add_option("--route", verify.route, "Series route for phi claims")
        ->check(CLI::IsMember({"auto", "double-sum"}));
    verify_cmd->add_flag("--no-timestamp", verify.no_timestamp, "Omit generated_at from the report");
    verify_cmd->add_option("--out", common.out_path, "Write the JSON report to this file instead of stdout");

    auto *oracle_cmd = app.add_subcommand("oracle", "Brute-force count of symbols of a given weight");
    oracle_cmd->add_option("--family", oracle.family, "phi or cphi")->required()->check(CLI::IsMember({"phi", "cphi"}));
    oracle_cmd->add_option("--k", oracle.k, "Family subscript")->required();
    oracle_cmd->add_option("--weight", oracle.weight, "Weight n")->required();
    add_common(oracle_cmd, common, {"text", "json"});

    auto *residues_cmd = app.add_subcommand("residues", "List r with 24r+1 a quadratic nonresidue mod p");
    residues_cmd->add_option("--p", residues_p, "Prime p >= 5")->required();
    add_common(residues_cmd, common, {"text", "json"});

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, env.out, env.err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*expand_cmd) {
            return cmd_expand(expand, common, env);
        }
        if (*verify_cmd) {
            return cmd_verify(verify, common, env);
        }
        if (*oracle_cmd) {
            return cmd_oracle(oracle, common, env);
        }
        return cmd_residues(residues_p, common, env);
    } catch (const guard_error &e) {
        env.err << "error: " << e.what() << '\n';
        return exit_guard;
    } catch (const truncation_shortfall &e) {
        env.err << "error: " << e.what() << '\n';
        return exit_guard;
    } catch (const std::invalid_argument &e) {
        env.err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range &e) {
        env.err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception &e) {
        env.err << "error: " << e.what() << '\n';
        return exit_guard;
    }
}

} // namespace frobseries::cli
