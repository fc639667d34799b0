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

#ifndef RTWNOMA_SWEEP_HPP
#define RTWNOMA_SWEEP_HPP

#include "rtwnoma/mcsim.hpp"
#include "rtwnoma/metrics.hpp"
#include "rtwnoma/model.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rtwnoma::sweep {

enum class MetricKind : std::uint8_t {
    outage_analytic,
    outage_upper,
    outage_asymptotic,
    outage_mc,
    ergodic_analytic,
    ergodic_mc,
    throughput_dl,
    throughput_dt,
    energy_efficiency,
};

// The grid the outer loop runs over. Every variable is crossed with the P_u
// grid; `pu` alone is the plain P_u sweep.
enum class SweepVariable : std::uint8_t { pu, allocation_theta, m_elements, target_rates, sigma_gh };

// Which total rate feeds the energy-efficiency numerator.
enum class EeRate : std::uint8_t { delay_limited, delay_tolerant };

std::string_view to_string(MetricKind metric) noexcept;
std::string_view to_string(SweepVariable variable) noexcept;
std::string_view to_string(EeRate rate) noexcept;

struct SweepSpec {
    std::string figure_id = "custom";
    std::vector<Scheme> schemes{Scheme::ris_tw_noma, Scheme::ris_tw_oma, Scheme::twr_oma};
    std::vector<User> users{User::d1, User::d2};
    std::vector<SicMode> sic_modes{SicMode::imperfect, SicMode::perfect};
    std::vector<mcsim::ResidualMode> residual_modes{mcsim::ResidualMode::random};
    std::vector<MetricKind> metrics{MetricKind::outage_analytic, MetricKind::outage_mc};
    std::vector<double> pu_grid_db{0, 5, 10, 15, 20, 25, 30, 35, 40};
    SweepVariable sweep_variable = SweepVariable::pu;
    std::vector<double> allocation_grid;                 // a_theta: a1 = 1 - a_theta, a2 = a_theta
    std::vector<unsigned> m_grid;                        // RIS element counts
    std::vector<std::pair<double, double>> rate_grid;    // (R1, R2) pairs
    std::vector<double> sigma_gh_grid_db;                // E|g_h|^2 in dB
    EeRate ee_rate = EeRate::delay_limited;
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 1;
    SystemConfig cfg{};
    metrics::PowerModel power_model{};
    // 0: the RIS power term uses M phase shifters, following any M sweep.
    unsigned element_count_override = 0;

    // Throws ValidationError naming the violated invariant.
    void validate() const;
};

// Table II defaults overlaid with a key-value tree (YAML; nested maps and
// flat dotted keys are both accepted). Throws ParseError with line/column
// on malformed input and ValidationError on invalid values.
SweepSpec apply_config_text(std::string_view text, SweepSpec base = {}, std::string_view source = "<config>");

// Reads and applies a configuration file. A `preset` key selects the base.
SweepSpec load_config(const std::string& path, SweepSpec base = {});

std::vector<std::string> preset_names();

// A shipped figure preset. Throws InvalidArgument for an unknown id.
SweepSpec preset(std::string_view id);

struct Row {
    std::string figure;
    std::string sweep_variable;
    double sweep_value = 0.0;
    double pu_db = 0.0;
    unsigned m_elements = 0;
    double a1 = 0.0;
    double a2 = 0.0;
    double r1 = 0.0;
    double r2 = 0.0;
    std::string scheme;
    std::string user;     // d1, d2, or sum for pair metrics
    std::string sic;      // perfect, imperfect, or - where it does not apply
    std::string residual; // random, averaged, or -
    std::string metric;
    double value = 0.0;
    std::optional<double> std_error; // Monte Carlo rows only
    std::optional<double> ci95;
    std::optional<std::uint64_t> trials;
    bool clamped = false;
    bool low_confidence = false;
};

struct ResultTable {
    std::vector<Row> rows;
};

// Evaluates every (sweep point, scheme, user, metric) combination the spec
// defines. Rows are ordered by (sweep point, scheme, user, P_u, SIC,
// residual, metric). Combinations a scheme does not define (no analytic
// ergodic rate for the relay benchmark, bounds only for RIS schemes) are
// skipped. Errors name the offending grid point.
ResultTable run_sweep(const SweepSpec& spec, const mcsim::ExecOptions& exec = {});

enum class Format : std::uint8_t { csv, json };

Format parse_format(std::string_view name);

// Header row plus one LF-terminated record per row; numbers with 10
// significant digits; Monte Carlo-only fields blank on analytic rows.
std::string to_csv(const ResultTable& table);

// Array of objects with the CSV column names; blank fields become null.
std::string to_json(const ResultTable& table);

// Inverse of to_csv(). Throws ParseError on malformed input.
ResultTable parse_csv(std::string_view text);

// Writes the table to path. Throws IoError naming the path.
void emit(const ResultTable& table, Format format, const std::string& path);

} // namespace rtwnoma::sweep

#endif
