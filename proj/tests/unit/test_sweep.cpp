// SPDX-License-Identifier: Apache-2.0
//
// rtwnoma - performance analysis of RIS-assisted two-way NOMA networks
// Copyright (C) 2026 The rtwnoma Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "doctest.h"

#include "rtwnoma/error.hpp"
#include "rtwnoma/sweep.hpp"
#include "rtwnoma/units.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <tuple>

using namespace rtwnoma;
using namespace rtwnoma::sweep;

namespace {

template <class E>
std::string error_of(auto&& fn) {
    try {
        fn();
    } catch (const E& e) {
        return e.what();
    }
    return {};
}

SweepSpec small(std::string_view text) {
    auto spec = apply_config_text(text);
    spec.trials = 2000;
    return spec;
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("rtwnoma_test_" + name);
}

} // namespace

TEST_SUITE("sweep") {

TEST_CASE("empty configuration gives the reference defaults") {
    const auto spec = apply_config_text("");
    CHECK(spec.figure_id == "custom");
    CHECK(spec.cfg.a1 == 0.2);
    CHECK(spec.cfg.a2 == 0.8);
    CHECK(spec.cfg.r1 == 2.0);
    CHECK(spec.cfg.r2 == 5.0);
    CHECK(spec.cfg.sigma_gh_sq == doctest::Approx(units::db_to_linear(-6)));
    CHECK(spec.cfg.sigma_i1_sq == doctest::Approx(units::db_to_linear(-5)));
    CHECK(spec.cfg.sigma_n1_sq == 1.0);
    CHECK(spec.trials == 1'000'000);
    CHECK(apply_config_text("# only a comment\n").figure_id == "custom");
}

TEST_CASE("nested and dotted keys with unit suffixes") {
    const auto spec = apply_config_text(R"(
figure_id: mine
system:
  m_elements: 4
  sigma_gh_sq_db: -10
  r2: 4
system.sigma_n_sq_db: 3
sweep:
  pu_grid_db: "0:10:30"
  metrics: [outage_analytic, throughput_dl]
power_model:
  p_element_dbm: 20
  p_relay_dbw: 0
simulation: {trials: 1e4, seed: 99}
)");
    CHECK(spec.figure_id == "mine");
    CHECK(spec.cfg.m_elements == 4);
    CHECK(spec.cfg.sigma_gh_sq == doctest::Approx(0.1));
    CHECK(spec.cfg.r2 == 4.0);
    CHECK(spec.cfg.sigma_n1_sq == doctest::Approx(units::db_to_linear(3)));
    CHECK(spec.cfg.sigma_n2_sq == doctest::Approx(units::db_to_linear(3)));
    CHECK(spec.pu_grid_db == std::vector<double>{0, 10, 20, 30});
    CHECK(spec.metrics == std::vector<MetricKind>{MetricKind::outage_analytic, MetricKind::throughput_dl});
    CHECK(spec.power_model.p_element == doctest::Approx(0.1));
    CHECK(spec.power_model.p_relay == doctest::Approx(1.0));
    CHECK(spec.trials == 10000);
    CHECK(spec.seed == 99);
}

TEST_CASE("one allocation coefficient implies the other") {
    CHECK(apply_config_text("system: {a2: 0.7}").cfg.a1 == doctest::Approx(0.3));
    CHECK(apply_config_text("system: {a1: 0.1}").cfg.a2 == doctest::Approx(0.9));
}

TEST_CASE("validation errors name the invariant") {
    CHECK(error_of<ValidationError>([] { apply_config_text("system: {a1: 0.6, a2: 0.4}"); }).find("a2 > a1") !=
          std::string::npos);
    CHECK(error_of<ValidationError>([] {
              apply_config_text("system: {m_elements: 7}\nsweep: {metrics: [outage_upper]}");
          }).find("even number of RIS elements M") != std::string::npos);
    CHECK(error_of<ValidationError>([] {
              apply_config_text("sweep: {schemes: [twr_oma], metrics: [ergodic_analytic]}");
          }).find("ergodic_analytic") != std::string::npos);
    CHECK(error_of<ValidationError>([] { apply_config_text("sweep: {pu_grid_db: []}"); }).find("pu_grid_db") !=
          std::string::npos);
    CHECK(error_of<ValidationError>([] { apply_config_text("system: {colour: red}"); }).find("system.colour") !=
          std::string::npos);
    CHECK(error_of<ValidationError>([] { apply_config_text("sweep: {schemes: [noma]}"); }).find("noma") !=
          std::string::npos);
    CHECK(error_of<ValidationError>([] {
              apply_config_text("sweep: {variable: allocation_theta, allocation_grid: [0.6, 0.4]}");
          }).find("allocation_grid[1]") != std::string::npos);
    CHECK(error_of<ValidationError>([] { apply_config_text("simulation: {trials: 0}"); }).find("trials") !=
          std::string::npos);
}

TEST_CASE("parse errors carry a location") {
    try {
        apply_config_text("system:\n  a1: [0.2,\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() >= 2);
    }
    try {
        apply_config_text("system:\n  r1: fast\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 7);
        CHECK(std::string(e.what()).find("system.r1") != std::string::npos);
    }
    CHECK_THROWS_AS(apply_config_text("- 1\n- 2\n"), ParseError);
    CHECK_THROWS_AS(apply_config_text("sweep: {pu_grid_db: \"0:0:10\"}"), ParseError);
}

TEST_CASE("config files and presets") {
    const auto path = temp_path("cfg.yaml");
    {
        std::ofstream out(path);
        out << "preset: fig8\nsweep: {pu_grid_db: [10]}\n";
    }
    const auto spec = load_config(path.string());
    CHECK(spec.figure_id == "fig8");
    CHECK(spec.metrics == std::vector<MetricKind>{MetricKind::throughput_dl});
    CHECK(spec.pu_grid_db == std::vector<double>{10});
    std::filesystem::remove(path);

    CHECK(error_of<IoError>([] { load_config("/nonexistent/dir/cfg.yaml"); }).find("/nonexistent/dir/cfg.yaml") !=
          std::string::npos);
    CHECK_THROWS_AS(preset("fig99"), InvalidArgument);

    const auto names = preset_names();
    for (const char* id : {"fig2", "fig4", "fig5", "fig6", "fig7", "fig7_m5", "fig7_m6", "fig8", "fig9", "fig10",
                           "fig11", "fig12", "fig13"})
        CHECK(std::find(names.begin(), names.end(), id) != names.end());
    CHECK(preset("fig7").cfg.m_elements == 5);
    CHECK(preset("fig7_m6").cfg.m_elements == 6);
    CHECK(preset("fig12").power_model.amplifier_inefficiency == 1.2);
    CHECK(preset("fig13").power_model.amplifier_inefficiency == 2.0);
    CHECK(preset("fig12").power_model.p_user1 == doctest::Approx(0.01));
}

TEST_CASE("every preset runs") {
    for (const auto& id : preset_names()) {
        INFO(id);
        auto spec = preset(id);
        spec.trials = 1000;
        ResultTable table;
        CHECK_NOTHROW(table = run_sweep(spec));
        CHECK_FALSE(table.rows.empty());
        for (const auto& r : table.rows) {
            CHECK(r.figure == id);
            const bool mc = r.trials.has_value();
            CHECK(r.std_error.has_value() == mc);
            CHECK(r.ci95.has_value() == mc);
            CHECK(std::isfinite(r.value));
        }
    }
}

TEST_CASE("fig2 rows cover every case in documented order") {
    auto spec = preset("fig2");
    spec.trials = 1000;
    const auto table = run_sweep(spec);
    // d1 NOMA: 2 SIC modes x 3 analytic + (perfect + 2 residual modes) MC = 9
    // d2 NOMA: 4; OMA: 4 per user; relay: 2 per user.
    CHECK(table.rows.size() == 9 * (9 + 4 + 8 + 4));

    auto rank = [](const Row& r) {
        const int s = r.scheme == "ris_tw_noma" ? 0 : r.scheme == "ris_tw_oma" ? 1 : 2;
        return std::make_tuple(s, r.user, r.pu_db);
    };
    CHECK(std::is_sorted(table.rows.begin(), table.rows.end(),
                         [&](const Row& a, const Row& b) { return rank(a) < rank(b); }));
    for (const auto& r : table.rows) {
        if (r.metric == "outage_mc") {
            CHECK(r.trials == 1000u);
        } else {
            CHECK_FALSE(r.std_error.has_value());
        }
    }
}

TEST_CASE("analytic columns ignore trial count and MC columns converge") {
    auto spec = apply_config_text(R"(
sweep:
  pu_grid_db: [10]
  schemes: [twr_oma]
  users: [d1]
)");
    spec.trials = 1000;
    const auto a = run_sweep(spec);
    spec.trials = 1'000'000;
    const auto b = run_sweep(spec);
    REQUIRE(a.rows.size() == 2);
    REQUIRE(b.rows.size() == 2);
    CHECK(a.rows[0].metric == "outage_analytic");
    CHECK(a.rows[0].value == b.rows[0].value);
    CHECK(std::fabs(b.rows[1].value - b.rows[0].value) < std::fabs(a.rows[1].value - a.rows[0].value) + 1e-3);
    CHECK(std::fabs(b.rows[1].value - b.rows[0].value) <= 3 * *b.rows[1].ci95);
}

TEST_CASE("sweep output is independent of the thread count") {
    auto spec = small(R"(
system: {m_elements: 4}
sweep:
  pu_grid_db: [0, 20]
  metrics: [outage_mc, ergodic_mc, throughput_dt]
)");
    spec.trials = 3 * mcsim::batch_size;
    CHECK(to_csv(run_sweep(spec, {1})) == to_csv(run_sweep(spec, {4})));
}

TEST_CASE("csv and json emission") {
    ResultTable empty;
    const auto header = to_csv(empty);
    CHECK(header ==
          "figure,sweep_variable,sweep_value,pu_db,m_elements,a1,a2,r1,r2,scheme,user,sic,residual,metric,value,"
          "std_error,ci95,trials,clamped,low_confidence\n");
    CHECK(to_json(empty) == "[]\n");
    CHECK(parse_csv(header).rows.empty());

    auto spec = small("sweep: {pu_grid_db: [0, 17.5], metrics: [outage_analytic, outage_mc, throughput_dl]}");
    spec.figure_id = "odd, \"name\"";
    const auto table = run_sweep(spec);
    const auto csv = to_csv(table);
    CHECK(csv.back() == '\n');
    CHECK(csv.find("\"odd, \"\"name\"\"\"") != std::string::npos);
    CHECK(to_csv(parse_csv(csv)) == csv);
    CHECK(parse_csv(csv).rows.size() == table.rows.size());

    const auto json = to_json(table);
    CHECK(json.find("\"std_error\": null") != std::string::npos);
    CHECK(json.find("\"low_confidence\": false") != std::string::npos);
}

TEST_CASE("malformed csv is rejected") {
    const auto header = to_csv({});
    CHECK_THROWS_AS(parse_csv(""), ParseError);
    CHECK_THROWS_AS(parse_csv("a,b\n"), ParseError);
    CHECK_THROWS_AS(parse_csv(header + "x,pu,0\n"), ParseError);
    CHECK_THROWS_AS(parse_csv(header + "f,pu,zero,0,8,0.2,0.8,2,5,s,d1,-,-,m,1,,,,0,0\n"), ParseError);
    CHECK_THROWS_AS(parse_csv(header + "\"open,pu\n"), ParseError);
    try {
        parse_csv(header + "f,pu,0,0,8,0.2,0.8,2,5,s,d1,-,-,m,1,,,,0,0\nf,pu,0,0,8,0.2,0.8,2,5,s,d1,-,-,m,1,,,,2,0\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("emit writes files and reports the path on failure") {
    const auto path = temp_path("out.csv");
    ResultTable t;
    emit(t, Format::csv, path.string());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == to_csv(t));
    std::filesystem::remove(path);

    CHECK(error_of<IoError>([&] { emit(t, Format::json, "/nonexistent/dir/out.json"); })
              .find("/nonexistent/dir/out.json") != std::string::npos);
    CHECK(parse_format("json") == Format::json);
    CHECK_THROWS_AS(parse_format("xml"), InvalidArgument);
}

} // TEST_SUITE
