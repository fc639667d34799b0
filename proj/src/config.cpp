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

// Configuration ingestion: YAML key-value trees and the figure presets.

#include "rtwnoma/sweep.hpp"

#include "rtwnoma/error.hpp"
#include "rtwnoma/units.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace rtwnoma::sweep {

namespace {

struct Leaf {
    YAML::Node node;
    std::string key;
};

std::string where(const Leaf& leaf) {
    const auto mark = leaf.node.Mark();
    if (mark.line < 0) return "key '" + leaf.key + "'";
    return "key '" + leaf.key + "' (line " + std::to_string(mark.line + 1) + ", column " +
           std::to_string(mark.column + 1) + ")";
}

[[noreturn]] void bad_type(const Leaf& leaf, const std::string& expected) {
    const auto mark = leaf.node.Mark();
    throw ParseError("config: " + where(leaf) + " must be " + expected, mark.line < 0 ? 0 : mark.line + 1,
                     mark.column < 0 ? 0 : mark.column + 1);
}

void flatten(const YAML::Node& node, const std::string& prefix, std::vector<Leaf>& out) {
    if (node.IsMap()) {
        for (const auto& kv : node) {
            const auto key = kv.first.as<std::string>();
            flatten(kv.second, prefix.empty() ? key : prefix + "." + key, out);
        }
        return;
    }
    out.push_back({node, prefix});
}

double as_double(const Leaf& leaf) {
    if (!leaf.node.IsScalar()) bad_type(leaf, "a number");
    try {
        const double v = leaf.node.as<double>();
        if (!std::isfinite(v)) bad_type(leaf, "a finite number");
        return v;
    } catch (const YAML::BadConversion&) {
        bad_type(leaf, "a number");
    }
}

std::uint64_t as_u64(const Leaf& leaf) {
    if (!leaf.node.IsScalar()) bad_type(leaf, "a nonnegative integer");
    try {
        return leaf.node.as<std::uint64_t>();
    } catch (const YAML::BadConversion&) {
        // Accept 1e6-style integers.
        const double v = as_double(leaf);
        if (v < 0 || v != std::floor(v) || v > 1.8e19) bad_type(leaf, "a nonnegative integer");
        return static_cast<std::uint64_t>(v);
    }
}

bool as_bool(const Leaf& leaf) {
    if (!leaf.node.IsScalar()) bad_type(leaf, "a boolean");
    try {
        return leaf.node.as<bool>();
    } catch (const YAML::BadConversion&) {
        bad_type(leaf, "a boolean");
    }
}

std::string as_string(const Leaf& leaf) {
    if (!leaf.node.IsScalar()) bad_type(leaf, "a string");
    return leaf.node.as<std::string>();
}

// A list of numbers, or a "start:step:stop" range string (stop inclusive).
std::vector<double> as_grid(const Leaf& leaf) {
    std::vector<double> out;
    if (leaf.node.IsSequence()) {
        for (std::size_t i = 0; i < leaf.node.size(); ++i)
            out.push_back(as_double({leaf.node[i], leaf.key + "[" + std::to_string(i) + "]"}));
        return out;
    }
    if (!leaf.node.IsScalar()) bad_type(leaf, "a list of numbers or a start:step:stop range");
    const auto text = leaf.node.as<std::string>();
    if (text.find(':') == std::string::npos) return {as_double(leaf)};
    std::stringstream ss(text);
    std::string part;
    std::vector<double> bounds;
    while (std::getline(ss, part, ':')) {
        try {
            std::size_t used = 0;
            bounds.push_back(std::stod(part, &used));
            if (part.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            bad_type(leaf, "a start:step:stop range of numbers");
        }
    }
    if (bounds.size() != 3 || !(bounds[1] > 0.0) || bounds[2] < bounds[0])
        bad_type(leaf, "a start:step:stop range with positive step and stop >= start");
    const auto n = static_cast<long>(std::floor((bounds[2] - bounds[0]) / bounds[1] + 1e-9));
    for (long i = 0; i <= n; ++i) {
        // Round to 12 decimals so 0.55 + 0.05 * k prints as written.
        const double v = bounds[0] + i * bounds[1];
        out.push_back(std::round(v * 1e12) / 1e12);
    }
    return out;
}

std::vector<std::string> as_names(const Leaf& leaf) {
    std::vector<std::string> out;
    if (leaf.node.IsScalar()) return {leaf.node.as<std::string>()};
    if (!leaf.node.IsSequence()) bad_type(leaf, "a list of names");
    for (std::size_t i = 0; i < leaf.node.size(); ++i)
        out.push_back(as_string({leaf.node[i], leaf.key + "[" + std::to_string(i) + "]"}));
    return out;
}

template <class E, std::size_t N>
E lookup(const Leaf& leaf, const std::string& name, const std::array<E, N>& values) {
    for (E v : values)
        if (to_string(v) == name) return v;
    std::string choices;
    for (E v : values) choices += (choices.empty() ? "" : ", ") + std::string(to_string(v));
    throw ValidationError("config: " + where(leaf) + ": unknown value '" + name + "' (expected one of " + choices + ")");
}

template <class E, std::size_t N>
std::vector<E> as_enum_set(const Leaf& leaf, const std::array<E, N>& values) {
    std::vector<E> out;
    for (const auto& name : as_names(leaf)) out.push_back(lookup(leaf, name, values));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

constexpr std::array all_schemes{Scheme::ris_tw_noma, Scheme::ris_tw_oma, Scheme::twr_oma};
constexpr std::array all_users{User::d1, User::d2};
constexpr std::array all_sic{SicMode::perfect, SicMode::imperfect};
constexpr std::array all_residual{mcsim::ResidualMode::random, mcsim::ResidualMode::averaged};
constexpr std::array all_metrics{MetricKind::outage_analytic, MetricKind::outage_upper, MetricKind::outage_asymptotic,
                                 MetricKind::outage_mc,       MetricKind::ergodic_analytic, MetricKind::ergodic_mc,
                                 MetricKind::throughput_dl,   MetricKind::throughput_dt, MetricKind::energy_efficiency};
constexpr std::array all_variables{SweepVariable::pu, SweepVariable::allocation_theta, SweepVariable::m_elements,
                                   SweepVariable::target_rates, SweepVariable::sigma_gh};
constexpr std::array all_ee_rates{EeRate::delay_limited, EeRate::delay_tolerant};

// A power given as a linear value (key), dB (key_db), dBm (key_dbm) or dBW (key_dbw).
struct PowerKey {
    std::string base;
    std::function<double&(SweepSpec&)> target;
    bool watts; // true: absolute power (dBm/dBW allowed); false: ratio (dB allowed)
};

using Handler = std::function<void(SweepSpec&, const Leaf&)>;

struct Applied {
    bool a1 = false;
    bool a2 = false;
};

std::map<std::string, Handler> make_handlers(Applied& applied) {
    std::map<std::string, Handler> h;

    h["figure_id"] = [](SweepSpec& s, const Leaf& l) { s.figure_id = as_string(l); };

    h["system.m_elements"] = [](SweepSpec& s, const Leaf& l) {
        const auto v = as_u64(l);
        if (v < 1 || v > 100000) throw ValidationError("config: " + where(l) + ": m_elements must be a positive integer");
        s.cfg.m_elements = static_cast<unsigned>(v);
    };
    h["system.a1"] = [&applied](SweepSpec& s, const Leaf& l) {
        s.cfg.a1 = as_double(l);
        applied.a1 = true;
    };
    h["system.a2"] = [&applied](SweepSpec& s, const Leaf& l) {
        s.cfg.a2 = as_double(l);
        applied.a2 = true;
    };
    h["system.r1"] = [](SweepSpec& s, const Leaf& l) { s.cfg.r1 = as_double(l); };
    h["system.r2"] = [](SweepSpec& s, const Leaf& l) { s.cfg.r2 = as_double(l); };
    h["system.sic_mode"] = [](SweepSpec& s, const Leaf& l) { s.cfg.sic_mode = lookup(l, as_string(l), all_sic); };
    h["system.epsilon_sic"] = [](SweepSpec& s, const Leaf& l) { s.cfg.epsilon_sic = as_double(l); };
    h["system.oma_threshold_doubling"] = [](SweepSpec& s, const Leaf& l) {
        s.cfg.oma_threshold_doubling = as_bool(l);
    };

    const std::vector<PowerKey> powers{
        {"system.sigma_n1_sq", [](SweepSpec& s) -> double& { return s.cfg.sigma_n1_sq; }, false},
        {"system.sigma_n2_sq", [](SweepSpec& s) -> double& { return s.cfg.sigma_n2_sq; }, false},
        {"system.sigma_i1_sq", [](SweepSpec& s) -> double& { return s.cfg.sigma_i1_sq; }, false},
        {"system.sigma_i2_sq", [](SweepSpec& s) -> double& { return s.cfg.sigma_i2_sq; }, false},
        {"system.sigma_gh_sq", [](SweepSpec& s) -> double& { return s.cfg.sigma_gh_sq; }, false},
        {"power_model.p_element", [](SweepSpec& s) -> double& { return s.power_model.p_element; }, true},
        {"power_model.p_user1", [](SweepSpec& s) -> double& { return s.power_model.p_user1; }, true},
        {"power_model.p_user2", [](SweepSpec& s) -> double& { return s.power_model.p_user2; }, true},
        {"power_model.p_relay", [](SweepSpec& s) -> double& { return s.power_model.p_relay; }, true},
    };
    for (const auto& p : powers) {
        auto target = p.target;
        h[p.base] = [target](SweepSpec& s, const Leaf& l) { target(s) = as_double(l); };
        if (p.watts) {
            h[p.base + "_dbm"] = [target](SweepSpec& s, const Leaf& l) { target(s) = units::dbm_to_watts(as_double(l)); };
            h[p.base + "_dbw"] = [target](SweepSpec& s, const Leaf& l) { target(s) = units::dbw_to_watts(as_double(l)); };
        } else {
            h[p.base + "_db"] = [target](SweepSpec& s, const Leaf& l) { target(s) = units::db_to_linear(as_double(l)); };
        }
    }
    // Both users at once.
    h["system.sigma_n_sq_db"] = [](SweepSpec& s, const Leaf& l) {
        s.cfg.sigma_n1_sq = s.cfg.sigma_n2_sq = units::db_to_linear(as_double(l));
    };
    h["system.sigma_i_sq_db"] = [](SweepSpec& s, const Leaf& l) {
        s.cfg.sigma_i1_sq = s.cfg.sigma_i2_sq = units::db_to_linear(as_double(l));
    };

    h["power_model.amplifier_inefficiency"] = [](SweepSpec& s, const Leaf& l) {
        s.power_model.amplifier_inefficiency = as_double(l);
    };
    h["power_model.element_count"] = [](SweepSpec& s, const Leaf& l) {
        s.element_count_override = static_cast<unsigned>(as_u64(l));
    };

    h["sweep.variable"] = [](SweepSpec& s, const Leaf& l) { s.sweep_variable = lookup(l, as_string(l), all_variables); };
    h["sweep.pu_grid_db"] = [](SweepSpec& s, const Leaf& l) { s.pu_grid_db = as_grid(l); };
    h["sweep.allocation_grid"] = [](SweepSpec& s, const Leaf& l) { s.allocation_grid = as_grid(l); };
    h["sweep.m_grid"] = [](SweepSpec& s, const Leaf& l) {
        s.m_grid.clear();
        for (double v : as_grid(l)) {
            if (v < 1 || v != std::floor(v)) throw ValidationError("config: " + where(l) + ": m_grid entries must be positive integers");
            s.m_grid.push_back(static_cast<unsigned>(v));
        }
    };
    h["sweep.rate_grid"] = [](SweepSpec& s, const Leaf& l) {
        if (!l.node.IsSequence()) bad_type(l, "a list of [r1, r2] pairs");
        s.rate_grid.clear();
        for (std::size_t i = 0; i < l.node.size(); ++i) {
            const Leaf pair{l.node[i], l.key + "[" + std::to_string(i) + "]"};
            if (!pair.node.IsSequence() || pair.node.size() != 2) bad_type(pair, "an [r1, r2] pair");
            s.rate_grid.emplace_back(as_double({pair.node[0], pair.key}), as_double({pair.node[1], pair.key}));
        }
    };
    h["sweep.sigma_gh_grid_db"] = [](SweepSpec& s, const Leaf& l) { s.sigma_gh_grid_db = as_grid(l); };
    h["sweep.schemes"] = [](SweepSpec& s, const Leaf& l) { s.schemes = as_enum_set(l, all_schemes); };
    h["sweep.users"] = [](SweepSpec& s, const Leaf& l) { s.users = as_enum_set(l, all_users); };
    h["sweep.sic_modes"] = [](SweepSpec& s, const Leaf& l) { s.sic_modes = as_enum_set(l, all_sic); };
    h["sweep.residual_modes"] = [](SweepSpec& s, const Leaf& l) { s.residual_modes = as_enum_set(l, all_residual); };
    h["sweep.metrics"] = [](SweepSpec& s, const Leaf& l) { s.metrics = as_enum_set(l, all_metrics); };
    h["sweep.ee_rate"] = [](SweepSpec& s, const Leaf& l) { s.ee_rate = lookup(l, as_string(l), all_ee_rates); };

    h["simulation.trials"] = [](SweepSpec& s, const Leaf& l) { s.trials = as_u64(l); };
    h["simulation.seed"] = [](SweepSpec& s, const Leaf& l) { s.seed = as_u64(l); };
    return h;
}

// Built-in figure presets, written in the same format users write.
const std::vector<std::pair<std::string, std::string>>& preset_table() {
    static const std::vector<std::pair<std::string, std::string>> table{
        {"fig2", R"(
figure_id: fig2
system: {m_elements: 8}
sweep:
  pu_grid_db: "0:5:40"
  schemes: [ris_tw_noma, ris_tw_oma, twr_oma]
  sic_modes: [imperfect, perfect]
  residual_modes: [random, averaged]
  metrics: [outage_analytic, outage_upper, outage_asymptotic, outage_mc]
)"},
        {"fig4", R"(
figure_id: fig4
system: {m_elements: 8}
sweep:
  variable: target_rates
  rate_grid: [[2, 6], [2, 5.5], [2, 5]]
  pu_grid_db: "0:5:40"
  metrics: [outage_analytic, outage_mc]
)"},
        {"fig5", R"(
figure_id: fig5
system: {m_elements: 8, sic_mode: imperfect}
sweep:
  variable: sigma_gh
  sigma_gh_grid_db: [-10, -8, -5]
  pu_grid_db: "0:5:40"
  schemes: [ris_tw_noma]
  users: [d1]
  sic_modes: [imperfect]
  residual_modes: [random, averaged]
  metrics: [outage_analytic, outage_mc]
)"},
        {"fig6", R"(
figure_id: fig6
sweep:
  variable: m_elements
  m_grid: [4, 8, 16]
  pu_grid_db: "0:5:40"
  schemes: [ris_tw_noma]
  metrics: [outage_analytic, outage_upper, outage_mc]
)"},
        {"fig7", R"(
figure_id: fig7
system: {m_elements: 5}
sweep:
  variable: allocation_theta
  allocation_grid: "0.55:0.05:0.95"
  pu_grid_db: "0:5:30"
  schemes: [ris_tw_noma]
  metrics: [outage_analytic, outage_mc]
)"},
        {"fig7_m5", R"(
figure_id: fig7_m5
system: {m_elements: 5}
sweep:
  variable: allocation_theta
  allocation_grid: "0.55:0.05:0.95"
  pu_grid_db: "0:5:30"
  schemes: [ris_tw_noma]
  metrics: [outage_analytic, outage_mc]
)"},
        {"fig7_m6", R"(
figure_id: fig7_m6
system: {m_elements: 6}
sweep:
  variable: allocation_theta
  allocation_grid: "0.55:0.05:0.95"
  pu_grid_db: "0:5:30"
  schemes: [ris_tw_noma]
  metrics: [outage_analytic, outage_mc]
)"},
        {"fig8", R"(
figure_id: fig8
system: {m_elements: 8}
sweep:
  pu_grid_db: "0:5:40"
  metrics: [throughput_dl]
)"},
        {"fig9", R"(
figure_id: fig9
system: {m_elements: 8}
sweep:
  pu_grid_db: "0:5:40"
  schemes: [ris_tw_noma, ris_tw_oma]
  metrics: [ergodic_analytic, ergodic_mc]
)"},
        {"fig10", R"(
figure_id: fig10
sweep:
  variable: m_elements
  m_grid: [4, 8, 16]
  pu_grid_db: "0:5:40"
  schemes: [ris_tw_noma]
  metrics: [ergodic_analytic, ergodic_mc]
)"},
        {"fig11", R"(
figure_id: fig11
system: {m_elements: 8}
sweep:
  pu_grid_db: "0:5:40"
  metrics: [throughput_dt]
)"},
        {"fig12", R"(
figure_id: fig12
system: {m_elements: 8}
sweep:
  pu_grid_db: "0:5:40"
  metrics: [energy_efficiency]
  ee_rate: delay_limited
power_model:
  amplifier_inefficiency: 1.2
  p_element_dbm: 10
  p_user1_dbm: 10
  p_user2_dbm: 10
  p_relay_dbm: 10
)"},
        {"fig13", R"(
figure_id: fig13
system: {m_elements: 8}
sweep:
  pu_grid_db: "0:5:40"
  metrics: [energy_efficiency]
  ee_rate: delay_tolerant
power_model:
  amplifier_inefficiency: 2
  p_element_dbm: 10
  p_user1_dbm: 10
  p_user2_dbm: 10
  p_relay_dbm: 10
)"},
    };
    return table;
}

} // namespace

std::vector<std::string> preset_names() {
    std::vector<std::string> out;
    for (const auto& [name, text] : preset_table()) out.push_back(name);
    return out;
}

SweepSpec preset(std::string_view id) {
    for (const auto& [name, text] : preset_table())
        if (name == id) return apply_config_text(text, SweepSpec{}, "preset " + name);
    throw InvalidArgument("unknown preset '" + std::string(id) + "'");
}

SweepSpec apply_config_text(std::string_view text, SweepSpec base, std::string_view source) {
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::ParserException& e) {
        throw ParseError(std::string(source) + ": " + e.msg + " at line " + std::to_string(e.mark.line + 1) +
                             ", column " + std::to_string(e.mark.column + 1),
                         static_cast<std::size_t>(e.mark.line + 1), static_cast<std::size_t>(e.mark.column + 1));
    }
    if (root.IsNull()) {
        base.validate();
        return base;
    }
    if (!root.IsMap()) throw ParseError(std::string(source) + ": top level must be a mapping of keys", 1, 1);

    std::vector<Leaf> leaves;
    flatten(root, "", leaves);

    SweepSpec spec = std::move(base);
    for (const auto& leaf : leaves)
        if (leaf.key == "preset") spec = preset(as_string(leaf));

    Applied applied;
    const auto handlers = make_handlers(applied);
    for (const auto& leaf : leaves) {
        if (leaf.key == "preset") continue;
        const auto it = handlers.find(leaf.key);
        if (it == handlers.end()) throw ValidationError(std::string(source) + ": unknown configuration " + where(leaf));
        it->second(spec, leaf);
    }
    // A single allocation coefficient implies the other through a1 + a2 = 1.
    if (applied.a1 && !applied.a2) spec.cfg.a2 = 1.0 - spec.cfg.a1;
    if (applied.a2 && !applied.a1) spec.cfg.a1 = 1.0 - spec.cfg.a2;

    try {
        spec.validate();
    } catch (const ValidationError& e) {
        throw ValidationError(std::string(source) + ": " + e.what());
    }
    return spec;
}

SweepSpec load_config(const std::string& path, SweepSpec base) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open configuration file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return apply_config_text(buffer.str(), std::move(base), path);
}

} // namespace rtwnoma::sweep
