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

// Exercises the shared library through its C interface only.

#include "doctest.h"

#include "rtwnoma/rtwnoma.h"

#include <cmath>
#include <cstring>
#include <string>

TEST_CASE("system defaults and validation") {
    rtw_system sys;
    rtw_system_defaults(&sys);
    CHECK(sys.m_elements == 8);
    CHECK(sys.a2 == 0.8);
    CHECK(rtw_system_validate(&sys) == RTW_OK);
    CHECK(std::string(rtw_last_error()).empty());

    sys.a1 = 0.6;
    sys.a2 = 0.4;
    CHECK(rtw_system_validate(&sys) == RTW_E_VALIDATION);
    CHECK(std::string(rtw_last_error()).find("a2 > a1") != std::string::npos);
    CHECK(rtw_system_validate(nullptr) == RTW_E_INVALID_ARGUMENT);
}

TEST_CASE("scalar evaluations") {
    rtw_system sys;
    rtw_system_defaults(&sys);
    double p = -1.0;
    int clamped = -1;
    REQUIRE(rtw_outage(&sys, RTW_TWR_OMA, RTW_D1, 100.0, &p, &clamped) == RTW_OK);
    CHECK(p == doctest::Approx(1.0 - std::exp(-31.0 / 80.0)));
    CHECK(clamped == 0);
    REQUIRE(rtw_outage(&sys, RTW_RIS_TW_NOMA, RTW_D2, 100.0, &p, nullptr) == RTW_OK);
    CHECK(p > 0.0);
    CHECK(p < 1.0);

    sys.sic_mode = RTW_SIC_PERFECT;
    double bound = 0.0, asym = 0.0;
    REQUIRE(rtw_outage_upper_bound(&sys, RTW_RIS_TW_NOMA, RTW_D1, 1e4, &bound, nullptr) == RTW_OK);
    REQUIRE(rtw_outage_asymptotic(&sys, RTW_RIS_TW_NOMA, RTW_D1, 1e4, &asym, nullptr) == RTW_OK);
    CHECK(asym >= bound);

    sys.m_elements = 7;
    CHECK(rtw_outage_upper_bound(&sys, RTW_RIS_TW_NOMA, RTW_D1, 1e4, &bound, nullptr) == RTW_E_VALIDATION);
    CHECK(std::string(rtw_last_error()).find("even number") != std::string::npos);

    rtw_system_defaults(&sys);
    double rate = 0.0;
    REQUIRE(rtw_ergodic_rate(&sys, RTW_RIS_TW_OMA, RTW_D1, 100.0, &rate) == RTW_OK);
    CHECK(rate > 0.0);
    CHECK(rtw_ergodic_rate(&sys, RTW_TWR_OMA, RTW_D1, 100.0, &rate) == RTW_E_INVALID_ARGUMENT);
    CHECK(rtw_outage(&sys, static_cast<rtw_scheme>(9), RTW_D1, 1.0, &p, nullptr) == RTW_E_INVALID_ARGUMENT);
    CHECK(rtw_outage(&sys, RTW_RIS_TW_NOMA, RTW_D1, 1.0, nullptr, nullptr) == RTW_E_INVALID_ARGUMENT);
}

TEST_CASE("simulation is deterministic across thread counts") {
    rtw_system sys;
    rtw_system_defaults(&sys);
    rtw_estimate a{}, b{};
    REQUIRE(rtw_simulate(&sys, RTW_RIS_TW_NOMA, RTW_D1, RTW_METRIC_OUTAGE, 100.0, 150000, 42, 0, RTW_RESIDUAL_RANDOM,
                         1, &a) == RTW_OK);
    REQUIRE(rtw_simulate(&sys, RTW_RIS_TW_NOMA, RTW_D1, RTW_METRIC_OUTAGE, 100.0, 150000, 42, 0, RTW_RESIDUAL_RANDOM,
                         4, &b) == RTW_OK);
    CHECK(std::memcmp(&a.value, &b.value, sizeof(double)) == 0);
    CHECK(a.trials == 150000);
    CHECK(a.ci95_half_width == doctest::Approx(1.96 * a.std_error));
    CHECK(rtw_simulate(&sys, RTW_RIS_TW_NOMA, RTW_D1, RTW_METRIC_OUTAGE, 100.0, 0, 42, 0, RTW_RESIDUAL_RANDOM, 1, &a) ==
          RTW_E_INVALID_ARGUMENT);
}

TEST_CASE("sweeps through handles") {
    CHECK(rtw_preset_count() >= 13);
    CHECK(std::string(rtw_preset_name(0)) == "fig2");
    CHECK(rtw_preset_name(1000) == nullptr);

    rtw_sweep* sweep = nullptr;
    REQUIRE(rtw_sweep_from_preset("fig8", &sweep) == RTW_OK);
    const char* id = nullptr;
    REQUIRE(rtw_sweep_figure_id(sweep, &id) == RTW_OK);
    CHECK(std::string(id) == "fig8");
    REQUIRE(rtw_sweep_apply_text(sweep, "sweep: {pu_grid_db: [0, 10]}") == RTW_OK);
    CHECK(rtw_sweep_apply_text(sweep, "system: {a1: 0.9}") == RTW_E_VALIDATION);
    CHECK(rtw_sweep_apply_text(sweep, "system:\n  r1: [1,\n") == RTW_E_PARSE);
    std::size_t line = 0, column = 0;
    rtw_last_error_location(&line, &column);
    CHECK(line >= 2);
    CHECK(rtw_sweep_set_trials(sweep, 0) == RTW_E_VALIDATION);
    REQUIRE(rtw_sweep_set_trials(sweep, 500) == RTW_OK);
    REQUIRE(rtw_sweep_set_seed(sweep, 3) == RTW_OK);
    CHECK(rtw_sweep_apply_file(sweep, "/nonexistent/cfg.yaml") == RTW_E_IO);

    rtw_table* table = nullptr;
    REQUIRE(rtw_sweep_run(sweep, 1, &table) == RTW_OK);
    std::size_t rows = 0;
    REQUIRE(rtw_table_row_count(table, &rows) == RTW_OK);
    // Two P_u points: NOMA (perfect, imperfect), OMA and relay.
    CHECK(rows == 2 * 4);

    char* csv = nullptr;
    REQUIRE(rtw_table_serialize(table, "csv", &csv) == RTW_OK);
    CHECK(std::string(csv).rfind("figure,", 0) == 0);
    rtw_string_free(csv);
    char* json = nullptr;
    REQUIRE(rtw_table_serialize(table, "json", &json) == RTW_OK);
    CHECK(json[0] == '[');
    rtw_string_free(json);
    CHECK(rtw_table_serialize(table, "xml", &json) == RTW_E_INVALID_ARGUMENT);
    CHECK(rtw_table_write(table, "csv", "/nonexistent/dir/out.csv") == RTW_E_IO);
    CHECK(std::string(rtw_last_error()).find("/nonexistent/dir/out.csv") != std::string::npos);

    rtw_table_destroy(table);
    rtw_sweep_destroy(sweep);
    rtw_table_destroy(nullptr);
    rtw_sweep_destroy(nullptr);

    CHECK(rtw_sweep_from_preset("fig99", &sweep) == RTW_E_INVALID_ARGUMENT);
    CHECK(rtw_sweep_run(nullptr, 1, &table) == RTW_E_INVALID_ARGUMENT);
}
