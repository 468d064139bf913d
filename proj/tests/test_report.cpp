#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "squarewell/report.hpp"
#include "squarewell/well_domain.hpp"

using namespace squarewell;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::size_t count_lines(const std::string& text) {
    std::size_t n = 0;
    for (const char c : text)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("a bL = 10 report pairs seven levels of each model") {
    const SpectrumReport report = build_report(well_spec_finite(10.0));
    REQUIRE(report.flexural.size() == 7);
    REQUIRE(report.classical.size() == 7);
    REQUIRE(report.dark_levels.size() == 7);

    // Ground level, frozen from 40-digit arithmetic.
    const DarkLevel& ground = report.dark_levels.front();
    CHECK(ground.index == 1);
    CHECK(ground.z_squared_flexural == doctest::Approx(3.89946826023).epsilon(1e-9));
    CHECK(ground.z_squared_classical == doctest::Approx(2.03790408105).epsilon(1e-9));
    CHECK(ground.z_squared_dark == doctest::Approx(1.86156417918).epsilon(1e-9));

    for (const DarkLevel& level : report.dark_levels) {
        CAPTURE(level.index);
        CHECK(level.z_squared_dark > 0.0);
        CHECK(level.z_squared_dark ==
              level.z_squared_flexural - level.z_squared_classical);
    }
}

TEST_CASE("a bL = 30 report pairs over the shorter spectrum") {
    // Nineteen fourth-order levels against twenty classical ones: the dark
    // decomposition covers the common prefix only.
    const SpectrumReport report = build_report(well_spec_finite(30.0));
    CHECK(report.flexural.size() == 19);
    CHECK(report.classical.size() == 20);
    CHECK(report.dark_levels.size() == 19);
}

TEST_CASE("max_levels truncates both spectra and the pairing") {
    const SpectrumReport report = build_report(well_spec_finite(10.0), 3);
    CHECK(report.flexural.size() == 3);
    CHECK(report.classical.size() == 3);
    CHECK(report.dark_levels.size() == 3);
    CHECK(report.flexural.back().index == 3);
}

TEST_CASE("an infinite-well report requires an explicit level count") {
    CHECK_THROWS_AS(build_report(well_spec_infinite()), std::invalid_argument);
    const SpectrumReport report = build_report(well_spec_infinite(), 7);
    REQUIRE(report.flexural.size() == 7);
    REQUIRE(report.classical.size() == 7);
    for (std::size_t i = 0; i < 7; ++i) {
        CAPTURE(i);
        CHECK(report.flexural[i].z > report.classical[i].z);
        CHECK(report.dark_levels[i].z_squared_dark > 0.0);
    }
}

TEST_CASE("build_report rejects a non-positive level cap") {
    CHECK_THROWS_AS(build_report(well_spec_finite(10.0), 0), std::invalid_argument);
    CHECK_THROWS_AS(build_report(well_spec_infinite(), -2), std::invalid_argument);
}

TEST_CASE("the reference table carries the expected spot values") {
    const std::string table = table_one();
    CHECK(table.find("5.157210") != std::string::npos);    // flex4, bL=30, n=3
    CHECK(table.find("12.149413") != std::string::npos);   // schro2, bL=30, n=8
    CHECK(table.find("11.780972") != std::string::npos);   // flex4, infinite, n=7
    CHECK(table.find("1.974707") != std::string::npos);    // flex4, bL=10, n=1
    CHECK(count_lines(table) == 12);  // banner + blank + header + 9 level rows
}

TEST_CASE("CSV starts with the exact header and lists flexural rows first") {
    const SpectrumReport report = build_report(well_spec_finite(10.0));
    const std::string csv = report_to_csv(report);
    CHECK(csv.rfind("model,parity,index,z,z_squared\n", 0) == 0);
    CHECK(count_lines(csv) == 15);  // header + 7 flexural + 7 classical
    CHECK(csv.find("\r") == std::string::npos);

    const std::size_t first_flex = csv.find("flex4,");
    const std::size_t first_classical = csv.find("schro2,");
    REQUIRE(first_flex != std::string::npos);
    REQUIRE(first_classical != std::string::npos);
    CHECK(first_flex < first_classical);
    CHECK(csv.find("flex4,even,1,") != std::string::npos);
    CHECK(csv.find("schro2,odd,2,") != std::string::npos);
}

TEST_CASE("CSV export is byte-for-byte deterministic") {
    const std::string a = report_to_csv(build_report(well_spec_finite(10.0)));
    const std::string b = report_to_csv(build_report(well_spec_finite(10.0)));
    CHECK(a == b);
}

TEST_CASE("an empty spectrum still yields the CSV header") {
    const SpectrumReport report = build_report(well_spec_finite(1e-6));
    CHECK(report.flexural.empty());
    CHECK(report.classical.empty());
    CHECK(report_to_csv(report) == "model,parity,index,z,z_squared\n");
}

TEST_CASE("JSON round-trips a finite report without losing a bit") {
    const SpectrumReport original = build_report(well_spec_finite(10.0));
    const SpectrumReport parsed = report_from_json(report_to_json(original));

    REQUIRE(parsed.spec.is_finite());
    CHECK(parsed.spec.strength() == original.spec.strength());
    REQUIRE(parsed.flexural.size() == original.flexural.size());
    REQUIRE(parsed.classical.size() == original.classical.size());
    REQUIRE(parsed.dark_levels.size() == original.dark_levels.size());
    for (std::size_t i = 0; i < original.flexural.size(); ++i) {
        CAPTURE(i);
        CHECK(parsed.flexural[i].model == original.flexural[i].model);
        CHECK(parsed.flexural[i].parity == original.flexural[i].parity);
        CHECK(parsed.flexural[i].index == original.flexural[i].index);
        CHECK(parsed.flexural[i].z == original.flexural[i].z);
        CHECK(parsed.flexural[i].z_squared == original.flexural[i].z_squared);
        CHECK(parsed.dark_levels[i].z_squared_dark ==
              original.dark_levels[i].z_squared_dark);
    }
}

TEST_CASE("JSON round-trips an infinite report") {
    const SpectrumReport original = build_report(well_spec_infinite(), 4);
    const SpectrumReport parsed = report_from_json(report_to_json(original));
    CHECK_FALSE(parsed.spec.is_finite());
    CHECK(parsed.flexural.size() == 4);
    CHECK(parsed.classical[3].z == original.classical[3].z);
}

TEST_CASE("malformed JSON is rejected as invalid input") {
    CHECK_THROWS_AS(report_from_json("not json at all"), std::invalid_argument);
    CHECK_THROWS_AS(report_from_json("{\"spec\": 12}"), std::invalid_argument);
    CHECK_THROWS_AS(report_from_json(""), std::invalid_argument);
}

TEST_CASE("export_report writes exactly the CSV renderer's bytes") {
    const SpectrumReport report = build_report(well_spec_finite(10.0));
    const std::string path = "test_report_export.csv";
    export_report(report, ExportFormat::Csv, path);
    CHECK(slurp(path) == report_to_csv(report));
    std::remove(path.c_str());
}

TEST_CASE("export_report writes parseable JSON to disk") {
    const SpectrumReport report = build_report(well_spec_finite(10.0), 2);
    const std::string path = "test_report_export.json";
    export_report(report, ExportFormat::Json, path);
    const SpectrumReport parsed = report_from_json(slurp(path));
    CHECK(parsed.flexural.size() == 2);
    std::remove(path.c_str());
}

TEST_CASE("export_report names the path it could not open") {
    const SpectrumReport report = build_report(well_spec_finite(10.0), 1);
    CHECK_THROWS_WITH_AS(
        export_report(report, ExportFormat::Csv, "no_such_dir/out.csv"),
        doctest::Contains("no_such_dir/out.csv"), std::runtime_error);
}
