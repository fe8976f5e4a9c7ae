#pragma once

// Report containers and their JSON/CSV forms. Numbers are rounded to 12
// significant digits before serialization; everything volatile (wall-clock
// timestamp, runtime) lives in a run_info block so reports from identical
// configs and seeds compare byte-for-byte without it.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "griesz/bounds.hpp"

namespace griesz {

using Json = nlohmann::ordered_json;

inline double round12(double v) {
    if (!std::isfinite(v)) return v;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.11e", v);
    return std::strtod(buf, nullptr);
}

inline std::string format12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.11e", v);
    return buf;
}

inline std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

struct CheckRow {
    std::string id;
    bool pass = false;
    double value = 0.0;
    double threshold = 0.0;
    std::string note;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckRow> rows;
    double runtime_seconds = 0.0;

    bool ok() const {
        for (const auto& r : rows)
            if (!r.pass) return false;
        return true;
    }
};

struct RatioRow {
    std::string function_id;
    double norm_f = 0.0;
    double norm_if = 0.0;
    double ratio = 0.0;
    bool diverged = false;
};

struct RatioReport {
    Json config_echo;
    std::vector<RatioRow> rows;
    double sup_ratio = 0.0;
    double half_sup_ratio = 0.0;
    double stability_factor = 1.0;
    double truncation_bound = 0.0;
    bool control_case = false;  // constant exponent: sup must stay <= 1 + 1e-6
    bool pass = false;
    double runtime_seconds = 0.0;
};

inline Json to_json(const CheckRow& r) {
    return Json{{"id", r.id},
                {"pass", r.pass},
                {"value", round12(r.value)},
                {"threshold", round12(r.threshold)},
                {"note", r.note}};
}

inline Json to_json(const SuiteReport& s) {
    Json rows = Json::array();
    for (const auto& r : s.rows) rows.push_back(to_json(r));
    int failures = 0;
    for (const auto& r : s.rows) failures += r.pass ? 0 : 1;
    return Json{{"suite", s.suite},
                {"rows", rows},
                {"summary", Json{{"checks", s.rows.size()},
                                 {"failures", failures},
                                 {"pass", s.ok()}}},
                {"run_info", Json{{"timestamp", iso_timestamp()},
                                  {"runtime_seconds", s.runtime_seconds}}}};
}

inline Json to_json(const RatioReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back(Json{{"id", row.function_id},
                            {"norm_f", round12(row.norm_f)},
                            {"norm_riesz_f", round12(row.norm_if)},
                            {"ratio", round12(row.ratio)},
                            {"diverged", row.diverged}});
    return Json{{"schema", "griesz-ratio-report"},
                {"config", r.config_echo},
                {"rows", rows},
                {"summary", Json{{"sup_ratio", round12(r.sup_ratio)},
                                 {"half_sup_ratio", round12(r.half_sup_ratio)},
                                 {"stability_factor", round12(r.stability_factor)},
                                 {"truncation_bound", round12(r.truncation_bound)},
                                 {"control_case", r.control_case},
                                 {"pass", r.pass}}},
                {"run_info", Json{{"timestamp", iso_timestamp()},
                                  {"runtime_seconds", r.runtime_seconds}}}};
}

inline RatioReport ratio_report_from_json(const Json& j) {
    RatioReport r;
    r.config_echo = j.at("config");
    for (const auto& row : j.at("rows"))
        r.rows.push_back(RatioRow{row.at("id").get<std::string>(), row.at("norm_f"),
                                  row.at("norm_riesz_f"), row.at("ratio"),
                                  row.at("diverged")});
    const auto& s = j.at("summary");
    r.sup_ratio = s.at("sup_ratio");
    r.half_sup_ratio = s.at("half_sup_ratio");
    r.stability_factor = s.at("stability_factor");
    r.truncation_bound = s.at("truncation_bound");
    r.control_case = s.at("control_case");
    r.pass = s.at("pass");
    return r;
}

/// Strip the volatile block; what remains is the determinism contract.
inline Json determinism_view(Json j) {
    j.erase("run_info");
    return j;
}

inline std::string to_csv(const RatioReport& r) {
    std::ostringstream out;
    out << "function_id,norm_f,norm_riesz_f,ratio,diverged\n";
    for (const auto& row : r.rows)
        out << row.function_id << ',' << format12(row.norm_f) << ',' << format12(row.norm_if)
            << ',' << format12(row.ratio) << ',' << (row.diverged ? 1 : 0) << '\n';
    out << "# sup_ratio," << format12(r.sup_ratio) << '\n';
    out << "# half_sup_ratio," << format12(r.half_sup_ratio) << '\n';
    out << "# stability_factor," << format12(r.stability_factor) << '\n';
    out << "# truncation_bound," << format12(r.truncation_bound) << '\n';
    out << "# pass," << (r.pass ? 1 : 0) << '\n';
    return out.str();
}

inline std::string to_csv(const SuiteReport& s) {
    std::ostringstream out;
    out << "check,pass,value,threshold,note\n";
    for (const auto& row : s.rows)
        out << row.id << ',' << (row.pass ? 1 : 0) << ',' << format12(row.value) << ','
            << format12(row.threshold) << ',' << row.note << '\n';
    out << "# suite," << s.suite << '\n';
    out << "# pass," << (s.ok() ? 1 : 0) << '\n';
    return out.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output path: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

/// Serialize one report document to the requested format and path.
template <class Report>
void emit_report(const Report& report, const std::string& format, const std::string& path) {
    if (format == "json") {
        write_text_file(path, to_json(report).dump(2) + "\n");
    } else if (format == "csv") {
        write_text_file(path, to_csv(report));
    } else {
        throw std::invalid_argument("emit_report: format must be json or csv");
    }
}

/// Suite rows from a BoundReport, one line per verdict.
inline CheckRow check_row_from(const BoundReport& rep, const std::string& id_prefix) {
    CheckRow row;
    row.id = id_prefix + (rep.region.empty() ? "" : "/" + rep.region);
    row.pass = rep.pass;
    row.value = rep.violations > 0 ? static_cast<double>(rep.violations)
                                   : rep.empirical_constant;
    row.threshold = rep.tolerance;
    std::ostringstream note;
    note << "samples=" << rep.samples << " violations=" << rep.violations
         << " constant=" << format12(rep.empirical_constant)
         << " stability=" << format12(rep.stability_factor);
    row.note = note.str();
    return row;
}

}  // namespace griesz
