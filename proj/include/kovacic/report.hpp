#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "kovacic/driver.hpp"

namespace kovacic {

using nlohmann::json;

inline json pole_location_json(const Rational& q) {
    if (q.is_integer() && q.numerator().fits_slong_p()) return q.numerator().get_si();
    return q.to_string();
}

/// One-line result object: {id?, case_used, n, d, omega, p, y1, y2, verified, status}.
inline json report_json(const SolveReport& rep, const std::optional<std::string>& id = std::nullopt) {
    json j = json::object();
    if (id) j["id"] = *id;
    j["case_used"] = rep.case_used;
    j["n"] = rep.n_case3;
    j["d"] = rep.d;
    j["omega"] = rep.omega ? json(rep.omega->to_string()) : json(nullptr);
    j["p"] = rep.p ? json(rep.p->to_string("x")) : json(nullptr);
    j["y1"] = rep.y1 ? json(rep.y1->to_string()) : json(nullptr);
    j["y2"] = rep.y1 ? json(rep.y2.text) : json(nullptr);
    j["verified"] = rep.verified;
    j["status"] = status_name(rep.status);
    if (!rep.failure_reason.empty()) j["reason"] = rep.failure_reason;
    return j;
}

inline json analysis_json(const Analysis& an) {
    json j;
    j["r"] = an.normal.r.to_string();
    json poles = json::array();
    for (const auto& p : an.poles.poles) poles.push_back(json::array({pole_location_json(p.location), p.order}));
    j["poles"] = poles;
    j["oinf"] = an.poles.order_at_infinity ? json(*an.poles.order_at_infinity) : json(nullptr);
    j["cases"] = an.cases.possible;
    return j;
}

inline std::string report_text(const SolveReport& rep) {
    std::string out = "status: " + std::string(status_name(rep.status)) + "\n";
    if (rep.case_used > 0) out += "case: " + std::to_string(rep.case_used) + "\n";
    if (rep.n_case3 > 0) out += "n: " + std::to_string(rep.n_case3) + "\n";
    if (rep.d >= 0) out += "d: " + std::to_string(rep.d) + "\n";
    if (rep.omega) out += "omega: " + rep.omega->to_string() + "\n";
    if (rep.p) out += "p: " + rep.p->to_string("x") + "\n";
    if (rep.y1) {
        out += "y1: " + rep.y1->to_string() + "\n";
        out += "y2: " + rep.y2.text + "\n";
    }
    out += std::string("verified: ") + (rep.verified ? "true" : "false") + "\n";
    if (!rep.failure_reason.empty()) out += "reason: " + rep.failure_reason + "\n";
    return out;
}

struct CorpusRecord {
    std::string id;
    std::string ode;
    std::optional<int> expected_case;
    std::vector<std::string> tags;
};

inline CorpusRecord parse_corpus_line(const std::string& line) {
    json j = json::parse(line);
    CorpusRecord rec;
    rec.id = j.at("id").get<std::string>();
    rec.ode = j.at("ode").get<std::string>();
    if (j.contains("expected_case") && !j["expected_case"].is_null()) rec.expected_case = j["expected_case"].get<int>();
    if (j.contains("tags")) rec.tags = j["tags"].get<std::vector<std::string>>();
    return rec;
}

struct RecordResult {
    std::string id;
    SolveReport report;
    std::optional<std::string> parse_error;
    std::vector<int> possible_cases;
    double millis = 0;
};

struct StatsReport {
    long total = 0;
    long solved = 0;
    long failed = 0;
    long unsupported = 0;
    std::map<int, long> per_case;
    std::map<std::string, long> per_condition_set;

    json to_json() const {
        json j;
        j["total"] = total;
        j["solved"] = solved;
        j["failed"] = failed;
        j["unsupported"] = unsupported;
        json pc = json::object();
        for (int k : {1, 2, 3}) {
            long c = per_case.count(k) ? per_case.at(k) : 0;
            pc[std::to_string(k)] = {{"count", c}, {"percent", solved ? 100.0 * static_cast<double>(c) / static_cast<double>(solved) : 0.0}};
        }
        j["per_case"] = pc;
        j["per_condition_set"] = per_condition_set;
        return j;
    }
};

inline std::string condition_key(const std::vector<int>& cases) {
    if (cases.empty()) return "none";
    std::string k;
    for (int c : cases) k += (k.empty() ? "" : ",") + std::to_string(c);
    return k;
}

inline StatsReport compute_stats(const std::vector<RecordResult>& results) {
    StatsReport s;
    for (const auto& r : results) {
        ++s.total;
        if (r.report.solved() && r.report.verified) {
            ++s.solved;
            ++s.per_case[r.report.case_used];
        } else if (r.report.status == Status::Unsupported) {
            ++s.unsupported;
        } else {
            ++s.failed;
        }
        ++s.per_condition_set[condition_key(r.possible_cases)];
    }
    return s;
}

inline json record_json(const RecordResult& r, bool timing) {
    json j = report_json(r.report, r.id);
    if (r.parse_error) {
        j["status"] = "error";
        j["reason"] = *r.parse_error;
    }
    if (timing) j["time_ms"] = r.millis;
    return j;
}

} // namespace kovacic
