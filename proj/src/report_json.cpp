#include <frobseries/report_json.hpp>

#include <ctime>

namespace frobseries {

void to_json(nlohmann::json &j, const CongruenceClaim &claim)
{
    j = nlohmann::json{{"family", to_string(claim.family)},
                       {"k", claim.k},
                       {"a", claim.a},
                       {"b", claim.b},
                       {"m", claim.m}};
}

void from_json(const nlohmann::json &j, CongruenceClaim &claim)
{
    claim.family = family_from_string(j.at("family").get<std::string>());
    j.at("k").get_to(claim.k);
    j.at("a").get_to(claim.a);
    j.at("b").get_to(claim.b);
    j.at("m").get_to(claim.m);
}

void to_json(nlohmann::json &j, const VerificationReport &report)
{
    auto counterexamples = nlohmann::json::array();
    for (const auto &c : report.counterexamples) {
        counterexamples.push_back({{"n", c.n}, {"value", c.value}});
    }
    j = nlohmann::json{{"claim", report.claim},
                       {"n_max", report.n_max},
                       {"status", to_string(report.status)},
                       {"counterexamples", std::move(counterexamples)},
                       {"route", report.route}};
}

void from_json(const nlohmann::json &j, VerificationReport &report)
{
    j.at("claim").get_to(report.claim);
    j.at("n_max").get_to(report.n_max);
    report.status = status_from_string(j.at("status").get<std::string>());
    report.counterexamples.clear();
    for (const auto &c : j.at("counterexamples")) {
        report.counterexamples.push_back({c.at("n").get<std::int64_t>(), c.at("value").get<std::uint64_t>()});
    }
    j.at("route").get_to(report.route);
}

nlohmann::json report_document(std::string_view suite, const std::vector<VerificationReport> &reports,
                               bool with_timestamp)
{
    nlohmann::json doc;
    doc["suite"] = suite;
    if (with_timestamp) {
        const std::time_t now = std::time(nullptr);
        std::tm utc{};
        gmtime_r(&now, &utc);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
        doc["generated_at"] = buf;
    }
    doc["all_verified"] = all_verified(reports);
    doc["reports"] = reports;
    return doc;
}

std::vector<VerificationReport> reports_from_document(const nlohmann::json &doc)
{
    return doc.at("reports").get<std::vector<VerificationReport>>();
}

std::vector<std::string> report_document_problems(const nlohmann::json &doc)
{
    std::vector<std::string> problems;
    auto need = [&](const nlohmann::json &obj, const char *key, auto pred, const std::string &where) {
        if (!obj.is_object() || !obj.contains(key)) {
            problems.push_back(where + ": missing '" + key + "'");
            return false;
        }
        if (!pred(obj.at(key))) {
            problems.push_back(where + ": '" + key + "' has the wrong type or value");
            return false;
        }
        return true;
    };
    const auto is_int = [](const nlohmann::json &v) { return v.is_number_integer(); };
    const auto is_nonneg = [](const nlohmann::json &v) { return v.is_number_integer() && v.get<std::int64_t>() >= 0; };
    const auto is_str = [](const nlohmann::json &v) { return v.is_string(); };

    if (!doc.is_object()) {
        return {"document is not an object"};
    }
    need(doc, "suite", is_str, "document");
    need(doc, "all_verified", [](const auto &v) { return v.is_boolean(); }, "document");
    if (doc.contains("generated_at") && !doc.at("generated_at").is_string()) {
        problems.push_back("document: 'generated_at' must be a string");
    }
    if (!need(doc, "reports", [](const auto &v) { return v.is_array(); }, "document")) {
        return problems;
    }
    std::size_t i = 0;
    for (const auto &rep : doc.at("reports")) {
        const std::string where = "reports[" + std::to_string(i++) + "]";
        if (need(rep, "claim", [](const auto &v) { return v.is_object(); }, where)) {
            const auto &c = rep.at("claim");
            need(c, "family", [](const auto &v) { return v == "phi" || v == "cphi"; }, where + ".claim");
            for (const char *key : {"k", "a", "b", "m"}) {
                need(c, key, is_int, where + ".claim");
            }
        }
        need(rep, "n_max", is_nonneg, where);
        need(rep, "status",
             [](const auto &v) { return v == "verified" || v == "refuted" || v == "skipped"; }, where);
        need(rep, "route", is_str, where);
        if (need(rep, "counterexamples", [](const auto &v) { return v.is_array(); }, where)) {
            for (const auto &c : rep.at("counterexamples")) {
                need(c, "n", is_nonneg, where + ".counterexamples");
                need(c, "value", is_nonneg, where + ".counterexamples");
            }
            if (rep.contains("status") && rep.at("status") == "verified" && !rep.at("counterexamples").empty()) {
                problems.push_back(where + ": verified report lists counterexamples");
            }
        }
    }
    return problems;
}

} // namespace frobseries
