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

// Command-line front end. Talks to the library only through the C API.

#include "rtwnoma/rtwnoma.h"

#include "CLI11.hpp"

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

constexpr int exit_config = 1;
constexpr int exit_runtime = 2;

struct SweepDeleter {
    void operator()(rtw_sweep* s) const noexcept { rtw_sweep_destroy(s); }
};
struct TableDeleter {
    void operator()(rtw_table* t) const noexcept { rtw_table_destroy(t); }
};
using SweepPtr = std::unique_ptr<rtw_sweep, SweepDeleter>;
using TablePtr = std::unique_ptr<rtw_table, TableDeleter>;

// Thrown with the exit code the failing step maps to.
struct Failure {
    int code;
};

void check(rtw_status status, int code, const std::string& context) {
    if (status == RTW_OK) return;
    std::cerr << "rtwnoma: " << context << ": " << rtw_last_error() << '\n';
    throw Failure{code};
}

int runtime_code(rtw_status status) {
    return status == RTW_E_VALIDATION || status == RTW_E_PARSE || status == RTW_E_INVALID_ARGUMENT ? exit_config
                                                                                                   : exit_runtime;
}

struct RunOptions {
    std::string preset;
    std::string config;
    std::string out = "-";
    std::string format;
    std::optional<std::uint64_t> trials;
    std::optional<std::uint64_t> seed;
    unsigned threads = 1;
};

std::string infer_format(const RunOptions& o) {
    if (!o.format.empty()) return o.format;
    const std::string ext = ".json";
    if (o.out.size() >= ext.size() && o.out.compare(o.out.size() - ext.size(), ext.size(), ext) == 0) return "json";
    return "csv";
}

void run(const RunOptions& o) {
    rtw_sweep* raw = nullptr;
    rtw_status st = o.preset.empty() ? rtw_sweep_create(&raw) : rtw_sweep_from_preset(o.preset.c_str(), &raw);
    check(st, exit_config, o.preset.empty() ? "creating sweep" : "preset " + o.preset);
    SweepPtr sweep(raw);

    if (!o.config.empty()) {
        st = rtw_sweep_apply_file(sweep.get(), o.config.c_str());
        check(st, exit_config, "config");
    }
    if (o.trials) {
        st = rtw_sweep_set_trials(sweep.get(), *o.trials);
        check(st, exit_config, "--trials");
    }
    if (o.seed) {
        st = rtw_sweep_set_seed(sweep.get(), *o.seed);
        check(st, exit_config, "--seed");
    }

    rtw_table* table_raw = nullptr;
    st = rtw_sweep_run(sweep.get(), o.threads, &table_raw);
    check(st, runtime_code(st), "sweep");
    TablePtr table(table_raw);

    st = rtw_table_write(table.get(), infer_format(o).c_str(), o.out.c_str());
    check(st, runtime_code(st), "output");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Outage, ergodic rate, throughput and energy-efficiency sweeps for RIS-assisted two-way NOMA"};
    app.set_version_flag("--version", std::string(rtw_version()));
    app.require_subcommand(1);

    RunOptions opts;
    auto* run_cmd = app.add_subcommand("run", "Evaluate a sweep and write the result table");
    run_cmd->add_option("--preset", opts.preset, "Start from a shipped figure preset");
    run_cmd->add_option("-c,--config", opts.config, "Configuration file (YAML key-value tree)");
    run_cmd->add_option("-o,--out", opts.out, "Output path, - for standard output")->capture_default_str();
    run_cmd->add_option("-f,--format", opts.format, "csv or json (default: from the output extension)")
        ->check(CLI::IsMember({"csv", "json"}));
    run_cmd->add_option("--trials", opts.trials, "Monte Carlo trials per point")->check(CLI::PositiveNumber);
    run_cmd->add_option("--seed", opts.seed, "Monte Carlo seed");
    run_cmd->add_option("--threads", opts.threads, "Worker threads, 0 for all cores")->capture_default_str();

    auto* list_cmd = app.add_subcommand("list-presets", "Print the shipped figure presets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_config;
    }

    try {
        if (list_cmd->parsed()) {
            for (std::size_t i = 0; i < rtw_preset_count(); ++i) std::cout << rtw_preset_name(i) << '\n';
            return 0;
        }
        if (run_cmd->parsed()) run(opts);
    } catch (const Failure& f) {
        return f.code;
    }
    return 0;
}
