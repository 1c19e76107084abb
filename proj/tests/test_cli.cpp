#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include <frobseries/cli.hpp>
#include <frobseries/frobenius_gf.hpp>
#include <frobseries/report_json.hpp>

using namespace frobseries;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(const std::vector<std::string> &args, std::optional<SeriesProvider> provider = std::nullopt,
            std::optional<bool> guard_override = false)
{
    std::ostringstream out, err;
    cli::Environment env{out, err, std::move(provider), guard_override};
    const int code = cli::run(args, env);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("expand")
{
    auto r = run_cli({"expand", "--family", "phi", "--k", "1", "--n", "10", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "n,coefficient\n0,1\n1,1\n2,2\n3,3\n4,5\n5,7\n6,11\n7,15\n8,22\n9,30\n10,42\n");

    r = run_cli({"expand", "--family", "cphi", "--k", "2", "--n", "3", "--format", "json"});
    CHECK(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["coefficients"] == json::array({"1", "4", "9", "20"}));
    CHECK(doc["route"] == "constant-term");
    CHECK(doc["ring"] == "Z");

    r = run_cli({"expand", "--family", "phi", "--k", "2", "--n", "0", "--format", "csv"});
    CHECK(r.out == "n,coefficient\n0,1\n");

    r = run_cli({"expand", "--family", "phi", "--k", "4", "--n", "3", "--mod", "2", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["route"] == "eta-quotient-mod-2");
    CHECK(json::parse(r.out)["coefficients"] == json::array({"1", "1", "1", "0"}));

    r = run_cli({"expand", "--family", "phi", "--k", "1", "--n", "3"});
    CHECK(r.out.rfind("# family=phi", 0) == 0);
    CHECK(r.out.find("\n3 3\n") != std::string::npos);
}

TEST_CASE("expand big integers stay exact")
{
    const auto r = run_cli({"expand", "--family", "phi", "--k", "1", "--n", "500", "--format", "csv"});
    CHECK(r.code == 0);
    // p(500), 22 digits.
    CHECK(r.out.find("\n500,2300165032574323995027\n") != std::string::npos);
}

TEST_CASE("expand usage and guard errors")
{
    CHECK(run_cli({"expand", "--family", "psi", "--k", "1", "--n", "3"}).code == 2);
    CHECK(run_cli({"expand", "--family", "phi", "--k", "0", "--n", "3"}).code == 2);
    CHECK(run_cli({"expand", "--family", "phi", "--k", "1", "--n", "-1"}).code == 2);
    CHECK(run_cli({"expand", "--family", "phi", "--k", "1", "--n", "3", "--mod", "1"}).code == 2);
    CHECK(run_cli({"expand", "--family", "phi", "--k", "1"}).code == 2);
    CHECK(run_cli({"expand", "-k", "1"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"expand", "--family", "cphi", "--k", "2", "--n", "201"}).code == 3);
    CHECK(run_cli({"expand", "--family", "phi", "--k", "2", "--n", "5001"}).code == 3);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("oracle")
{
    auto r = run_cli({"oracle", "--family", "phi", "--k", "2", "--weight", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("5 agrees", 0) == 0);

    r = run_cli({"oracle", "--family", "cphi", "--k", "2", "--weight", "1", "--format", "json"});
    CHECK(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["count"] == 4);
    CHECK(doc["agrees"] == true);

    r = run_cli({"oracle", "--family", "phi", "--k", "1", "--weight", "0"});
    CHECK(r.out.rfind("1 agrees", 0) == 0);

    CHECK(run_cli({"oracle", "--family", "cphi", "--k", "5", "--weight", "1"}).code == 3);
    r = run_cli({"oracle", "--family", "cphi", "--k", "5", "--weight", "1"}, std::nullopt, true);
    CHECK(r.code == 0);
    CHECK(r.out.rfind("25 agrees", 0) == 0);
    CHECK(run_cli({"oracle", "--family", "phi", "--k", "1", "--weight", "-2"}).code == 2);
}

TEST_CASE("residues")
{
    auto r = run_cli({"residues", "--p", "5", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["eligible"] == json::array({3, 4}));

    r = run_cli({"residues", "--p", "7", "--format", "json"});
    CHECK(json::parse(r.out)["eligible"] == json::array({3, 4, 6}));

    r = run_cli({"residues", "--p", "5"});
    CHECK(r.out.find("1 0 zero no\n") != std::string::npos);
    CHECK(r.out.find("3 3 nonresidue yes\n") != std::string::npos);

    CHECK(run_cli({"residues", "--p", "4"}).code == 2);
    CHECK(run_cli({"residues", "--p", "3"}).code == 2);
    CHECK(run_cli({"residues", "--p", "10007"}).code == 3);
}

TEST_CASE("verify emits schema-valid, round-tripping reports")
{
    auto r = run_cli({"verify", "main", "--primes", "5,7", "--ells", "1,2", "--nmax", "20", "--no-timestamp"});
    CHECK(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(report_document_problems(doc).empty());
    CHECK_FALSE(doc.contains("generated_at"));
    const auto reports = reports_from_document(doc);
    CHECK(reports.size() == 10);
    CHECK(reports == main_theorem_suite({5, 7}, {1, 2}, 20));

    // Byte-identical reruns.
    CHECK(run_cli({"verify", "main", "--primes", "5,7", "--ells", "1,2", "--nmax", "20", "--no-timestamp"}).out
          == r.out);

    r = run_cli({"verify", "main", "--primes", "5", "--ells", "1", "--nmax", "3"});
    CHECK(json::parse(r.out).contains("generated_at"));
    CHECK(report_document_problems(json::parse(r.out)).empty());
}

TEST_CASE("verify suites")
{
    CHECK(run_cli({"verify", "cphi-even", "--ks", "1,2", "--nmax", "10"}).code == 0);
    CHECK(run_cli({"verify", "gs-lift", "--k", "2", "--p", "5", "--r", "3", "--lifts", "1", "--nmax", "3"}).code == 0);
    CHECK(run_cli({"verify", "p-squared", "--p", "3", "--nmax", "3"}).code == 0);
    CHECK(run_cli({"verify", "main", "--primes", "5", "--ells", "1", "--nmax", "10", "--route", "double-sum"}).code
          == 0);

    // Hypothesis refuted: lifts skipped, overall exit 1 because the hypothesis itself is refuted.
    auto r = run_cli({"verify", "gs-lift", "--k", "1", "--p", "5", "--r", "1", "--lifts", "2", "--nmax", "3"});
    CHECK(r.code == 1);
    const auto reps = reports_from_document(json::parse(r.out));
    CHECK(reps.at(1).status == Status::Skipped);

    CHECK(run_cli({"verify", "main", "--ells", "1", "--nmax", "3"}).code == 2);
    CHECK(run_cli({"verify", "cphi-even", "--nmax", "3"}).code == 2);
    CHECK(run_cli({"verify", "p-squared", "--nmax", "3"}).code == 2);
    CHECK(run_cli({"verify", "gs-lift", "--k", "2", "--nmax", "3"}).code == 2);
    CHECK(run_cli({"verify", "bogus", "--nmax", "3"}).code == 2);
    CHECK(run_cli({"verify", "main", "--primes", "5", "--ells", "1"}).code == 2);
    CHECK(run_cli({"verify", "main", "--primes", "5", "--ells", "1", "--nmax", "-1"}).code == 2);
    CHECK(run_cli({"verify", "main", "--primes", "4", "--ells", "1", "--nmax", "3"}).code == 2);
}

TEST_CASE("verify with a corrupted provider exits 1")
{
    // Flip one expected-zero coefficient phi_4(5*2 + 3) of the genuine parity series.
    const SeriesProvider corrupt = [](const CongruenceClaim &claim, std::size_t n) -> ProvidedSeries {
        auto genuine = default_provider()(claim, n);
        std::vector<std::uint64_t> res(genuine.series.residues().begin(), genuine.series.residues().end());
        if (claim.b == 3 && res.size() > 13) {
            res[13] ^= 1U;
        }
        return {TruncatedSeries::from_residues(genuine.series.ring(), std::move(res)), "corrupted"};
    };
    const auto r = run_cli({"verify", "main", "--primes", "5", "--ells", "1", "--nmax", "20", "--no-timestamp"},
                           corrupt);
    CHECK(r.code == 1);
    const auto reps = reports_from_document(json::parse(r.out));
    REQUIRE(reps.size() == 2);
    CHECK(reps[0].status == Status::Refuted);
    REQUIRE(reps[0].counterexamples.size() == 1);
    CHECK(reps[0].counterexamples[0].n == 2);
    CHECK(reps[1].status == Status::Verified);

    const SeriesProvider shortfall = [](const CongruenceClaim &, std::size_t n) -> ProvidedSeries {
        return {TruncatedSeries::zero(CoefficientRing::modular(2), n / 2), "short"};
    };
    CHECK(run_cli({"verify", "main", "--primes", "5", "--ells", "1", "--nmax", "20"}, shortfall).code == 3);
}

TEST_CASE("verify --out writes the report file")
{
    const auto path = std::filesystem::temp_directory_path() / "frobseries_cli_test_report.json";
    const auto r = run_cli({"verify", "cphi-even", "--ks", "1", "--nmax", "4", "--no-timestamp", "--out",
                            path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    const auto doc = json::parse(in);
    CHECK(report_document_problems(doc).empty());
    CHECK(reports_from_document(doc) == cphi_even_suite({1}, 4));
    std::filesystem::remove(path);

    CHECK(run_cli({"verify", "cphi-even", "--ks", "1", "--nmax", "4", "--out", "/nonexistent-dir/x.json"}).code == 3);
}

TEST_CASE("report schema checker catches malformed documents")
{
    CHECK_FALSE(report_document_problems(json::array()).empty());
    auto doc = report_document("main", main_theorem_suite({5}, {1}, 2), false);
    CHECK(report_document_problems(doc).empty());
    auto broken = doc;
    broken["reports"][0].erase("route");
    CHECK_FALSE(report_document_problems(broken).empty());
    broken = doc;
    broken["reports"][0]["status"] = "maybe";
    CHECK_FALSE(report_document_problems(broken).empty());
    broken = doc;
    broken["reports"][0]["counterexamples"].push_back({{"n", 1}, {"value", 1}});
    CHECK_FALSE(report_document_problems(broken).empty());
}
