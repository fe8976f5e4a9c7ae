#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "griesz/report.hpp"

using namespace griesz;
using Catch::Approx;

namespace {

RatioReport tiny_report() {
    RatioReport r;
    r.config_echo = Json{{"dimension", 1}, {"beta", 2.0}};
    r.rows.push_back(RatioRow{"hermite-0", 1.5, 0.75, 0.5, false});
    r.rows.push_back(RatioRow{"bump-0", 0.35, 0.071234567890123, 0.203527336811, false});
    r.sup_ratio = 0.5;
    r.half_sup_ratio = 0.5;
    r.stability_factor = 1.0;
    r.truncation_bound = 1e-17;
    r.pass = true;
    r.runtime_seconds = 0.123;
    return r;
}

}  // namespace

TEST_CASE("empty report serializes to a valid document") {
    RatioReport r;
    r.config_echo = Json::object();
    const Json j = to_json(r);
    CHECK(j.at("rows").is_array());
    CHECK(j.at("rows").empty());
    CHECK(j.at("summary").at("sup_ratio") == 0.0);
    const std::string csv = to_csv(r);
    CHECK(csv.find("function_id") == 0);
}

TEST_CASE("json round-trip reproduces the report") {
    const RatioReport r = tiny_report();
    const Json j = to_json(r);
    const RatioReport back = ratio_report_from_json(j);
    REQUIRE(back.rows.size() == r.rows.size());
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        CHECK(back.rows[i].function_id == r.rows[i].function_id);
        CHECK(back.rows[i].norm_f == round12(r.rows[i].norm_f));
        CHECK(back.rows[i].ratio == round12(r.rows[i].ratio));
    }
    CHECK(back.sup_ratio == round12(r.sup_ratio));
    CHECK(back.pass == r.pass);
}

TEST_CASE("csv has one record per row plus a comment summary") {
    const RatioReport r = tiny_report();
    const std::string csv = to_csv(r);
    std::size_t lines = 0, comments = 0;
    for (std::size_t pos = 0; pos < csv.size(); ++pos) {
        if (csv[pos] == '\n') ++lines;
        if (csv[pos] == '#' && (pos == 0 || csv[pos - 1] == '\n')) ++comments;
    }
    CHECK(lines == 1 + r.rows.size() + comments);
    CHECK(comments == 5);
}

TEST_CASE("twelve significant digits") {
    CHECK(round12(0.1234567890123456) == Approx(0.123456789012).epsilon(1e-12));
    CHECK(format12(2.0) == "2.00000000000e+00");
    CHECK(round12(round12(0.1234567890123456)) == round12(0.1234567890123456));
}

TEST_CASE("determinism view strips only the volatile block") {
    const RatioReport r = tiny_report();
    const Json a = determinism_view(to_json(r));
    const Json b = determinism_view(to_json(r));
    CHECK(a.dump() == b.dump());
    CHECK(a.find("run_info") == a.end());
    CHECK(a.find("rows") != a.end());
}

TEST_CASE("emit_report writes files and validates format") {
    const RatioReport r = tiny_report();
    const std::string path = "/tmp/griesz_test_report.json";
    emit_report(r, "json", path);
    std::ifstream in(path);
    REQUIRE(in.good());
    Json parsed;
    in >> parsed;
    CHECK(parsed.at("schema") == "griesz-ratio-report");
    std::remove(path.c_str());
    CHECK_THROWS_AS(emit_report(r, "xml", "/tmp/x"), std::invalid_argument);
    CHECK_THROWS_AS(emit_report(r, "json", "/nonexistent_dir_xyz/x.json"),
                    std::runtime_error);
}
