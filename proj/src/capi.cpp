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

#include "rtwnoma/rtwnoma.h"

#include "rtwnoma/analytic.hpp"
#include "rtwnoma/error.hpp"
#include "rtwnoma/mcsim.hpp"
#include "rtwnoma/sweep.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct rtw_sweep {
    rtwnoma::sweep::SweepSpec spec;
};

struct rtw_table {
    rtwnoma::sweep::ResultTable table;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_line = 0;
thread_local std::size_t last_column = 0;

rtw_status fail(rtw_status status, const char* what) {
    last_error = what;
    return status;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
rtw_status guarded(Fn&& fn) noexcept {
    last_line = last_column = 0;
    try {
        fn();
        last_error.clear();
        return RTW_OK;
    } catch (const rtwnoma::ParseError& e) {
        last_line = e.line();
        last_column = e.column();
        return fail(RTW_E_PARSE, e.what());
    } catch (const rtwnoma::ValidationError& e) {
        return fail(RTW_E_VALIDATION, e.what());
    } catch (const rtwnoma::InvalidArgument& e) {
        return fail(RTW_E_INVALID_ARGUMENT, e.what());
    } catch (const rtwnoma::NumericError& e) {
        return fail(RTW_E_NUMERIC, e.what());
    } catch (const rtwnoma::IoError& e) {
        return fail(RTW_E_IO, e.what());
    } catch (const std::bad_alloc&) {
        return fail(RTW_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(RTW_E_INTERNAL, e.what());
    } catch (...) {
        return fail(RTW_E_INTERNAL, "unknown error");
    }
}

void require(const void* p, const char* name) {
    if (p == nullptr) throw rtwnoma::InvalidArgument(std::string(name) + " must not be NULL");
}

rtwnoma::Scheme to_scheme(rtw_scheme s) {
    switch (s) {
    case RTW_RIS_TW_NOMA: return rtwnoma::Scheme::ris_tw_noma;
    case RTW_RIS_TW_OMA: return rtwnoma::Scheme::ris_tw_oma;
    case RTW_TWR_OMA: return rtwnoma::Scheme::twr_oma;
    }
    throw rtwnoma::InvalidArgument("unknown scheme code " + std::to_string(static_cast<int>(s)));
}

rtwnoma::User to_user(rtw_user u) {
    switch (u) {
    case RTW_D1: return rtwnoma::User::d1;
    case RTW_D2: return rtwnoma::User::d2;
    }
    throw rtwnoma::InvalidArgument("unknown user code " + std::to_string(static_cast<int>(u)));
}

rtwnoma::SicMode to_sic(rtw_sic s) {
    switch (s) {
    case RTW_SIC_PERFECT: return rtwnoma::SicMode::perfect;
    case RTW_SIC_IMPERFECT: return rtwnoma::SicMode::imperfect;
    }
    throw rtwnoma::InvalidArgument("unknown SIC mode code " + std::to_string(static_cast<int>(s)));
}

rtwnoma::SystemConfig to_config(const rtw_system* sys) {
    require(sys, "system");
    rtwnoma::SystemConfig c;
    c.m_elements = sys->m_elements;
    c.a1 = sys->a1;
    c.a2 = sys->a2;
    c.r1 = sys->r1;
    c.r2 = sys->r2;
    c.sigma_n1_sq = sys->sigma_n1_sq;
    c.sigma_n2_sq = sys->sigma_n2_sq;
    c.sigma_i1_sq = sys->sigma_i1_sq;
    c.sigma_i2_sq = sys->sigma_i2_sq;
    c.sigma_gh_sq = sys->sigma_gh_sq;
    c.sic_mode = to_sic(sys->sic_mode);
    c.epsilon_sic = sys->epsilon_sic;
    c.oma_threshold_doubling = sys->oma_threshold_doubling != 0;
    return c;
}

using OutageFn = rtwnoma::analytic::ClampedProbability (*)(const rtwnoma::analytic::OutageQuery&);

rtw_status outage_call(OutageFn fn, const rtw_system* sys, rtw_scheme scheme, rtw_user user, double pu, double* out,
                       int* clamped) {
    return guarded([&] {
        require(out, "out");
        const auto r = fn({to_scheme(scheme), to_user(user), pu, to_config(sys)});
        *out = r.value;
        if (clamped) *clamped = r.clamped ? 1 : 0;
    });
}

} // namespace

extern "C" {

const char* rtw_version(void) { return "1.0.0"; }

const char* rtw_last_error(void) { return last_error.c_str(); }

void rtw_last_error_location(size_t* line, size_t* column) {
    if (line) *line = last_line;
    if (column) *column = last_column;
}

void rtw_system_defaults(rtw_system* sys) {
    if (!sys) return;
    const rtwnoma::SystemConfig c;
    sys->m_elements = c.m_elements;
    sys->a1 = c.a1;
    sys->a2 = c.a2;
    sys->r1 = c.r1;
    sys->r2 = c.r2;
    sys->sigma_n1_sq = c.sigma_n1_sq;
    sys->sigma_n2_sq = c.sigma_n2_sq;
    sys->sigma_i1_sq = c.sigma_i1_sq;
    sys->sigma_i2_sq = c.sigma_i2_sq;
    sys->sigma_gh_sq = c.sigma_gh_sq;
    sys->sic_mode = c.sic_mode == rtwnoma::SicMode::perfect ? RTW_SIC_PERFECT : RTW_SIC_IMPERFECT;
    sys->epsilon_sic = c.epsilon_sic;
    sys->oma_threshold_doubling = c.oma_threshold_doubling ? 1 : 0;
}

rtw_status rtw_system_validate(const rtw_system* sys) {
    return guarded([&] { to_config(sys).validate(); });
}

rtw_status rtw_outage(const rtw_system* sys, rtw_scheme scheme, rtw_user user, double pu, double* out, int* clamped) {
    return outage_call(&rtwnoma::analytic::outage, sys, scheme, user, pu, out, clamped);
}

rtw_status rtw_outage_upper_bound(const rtw_system* sys, rtw_scheme scheme, rtw_user user, double pu, double* out,
                                  int* clamped) {
    return outage_call(&rtwnoma::analytic::outage_upper_bound, sys, scheme, user, pu, out, clamped);
}

rtw_status rtw_outage_asymptotic(const rtw_system* sys, rtw_scheme scheme, rtw_user user, double pu, double* out,
                                 int* clamped) {
    return outage_call(&rtwnoma::analytic::outage_asymptotic, sys, scheme, user, pu, out, clamped);
}

rtw_status rtw_ergodic_rate(const rtw_system* sys, rtw_scheme scheme, rtw_user user, double pu, double* out) {
    return guarded([&] {
        require(out, "out");
        const auto cfg = to_config(sys);
        switch (to_scheme(scheme)) {
        case rtwnoma::Scheme::ris_tw_noma:
            *out = rtwnoma::analytic::ergodic_noma(to_user(user), cfg.sic_mode, pu, cfg);
            break;
        case rtwnoma::Scheme::ris_tw_oma:
            *out = rtwnoma::analytic::ergodic_oma(to_user(user), pu, cfg);
            break;
        case rtwnoma::Scheme::twr_oma:
            throw rtwnoma::InvalidArgument("no closed-form ergodic rate for twr_oma; use rtw_simulate");
        }
    });
}

rtw_status rtw_simulate(const rtw_system* sys, rtw_scheme scheme, rtw_user user, rtw_metric metric, double pu,
                        uint64_t trials, uint64_t seed, uint64_t stream_id, rtw_residual residual, unsigned threads,
                        rtw_estimate* out) {
    return guarded([&] {
        require(out, "out");
        rtwnoma::mcsim::SimSpec spec;
        spec.scheme = to_scheme(scheme);
        spec.user = to_user(user);
        if (metric != RTW_METRIC_OUTAGE && metric != RTW_METRIC_ERGODIC_RATE)
            throw rtwnoma::InvalidArgument("unknown metric code " + std::to_string(static_cast<int>(metric)));
        spec.metric = metric == RTW_METRIC_OUTAGE ? rtwnoma::mcsim::Metric::outage : rtwnoma::mcsim::Metric::ergodic_rate;
        if (residual != RTW_RESIDUAL_RANDOM && residual != RTW_RESIDUAL_AVERAGED)
            throw rtwnoma::InvalidArgument("unknown residual mode code " + std::to_string(static_cast<int>(residual)));
        spec.residual_mode =
            residual == RTW_RESIDUAL_RANDOM ? rtwnoma::mcsim::ResidualMode::random : rtwnoma::mcsim::ResidualMode::averaged;
        spec.pu = pu;
        spec.cfg = to_config(sys);
        spec.trials = trials;
        spec.seed = seed;
        const auto e = rtwnoma::mcsim::simulate(spec, stream_id, {threads});
        out->value = e.value;
        out->std_error = e.std_error;
        out->ci95_half_width = e.ci95_half_width;
        out->trials = e.trials;
        out->low_confidence = e.low_confidence ? 1 : 0;
    });
}

size_t rtw_preset_count(void) {
    try {
        return rtwnoma::sweep::preset_names().size();
    } catch (...) {
        return 0;
    }
}

const char* rtw_preset_name(size_t index) {
    static const std::vector<std::string> names = [] {
        try {
            return rtwnoma::sweep::preset_names();
        } catch (...) {
            return std::vector<std::string>{};
        }
    }();
    return index < names.size() ? names[index].c_str() : nullptr;
}

rtw_status rtw_sweep_create(rtw_sweep** out) {
    return guarded([&] {
        require(out, "out");
        *out = new rtw_sweep{};
    });
}

rtw_status rtw_sweep_from_preset(const char* id, rtw_sweep** out) {
    return guarded([&] {
        require(id, "id");
        require(out, "out");
        *out = new rtw_sweep{rtwnoma::sweep::preset(id)};
    });
}

rtw_status rtw_sweep_apply_file(rtw_sweep* sweep, const char* path) {
    return guarded([&] {
        require(sweep, "sweep");
        require(path, "path");
        sweep->spec = rtwnoma::sweep::load_config(path, sweep->spec);
    });
}

rtw_status rtw_sweep_apply_text(rtw_sweep* sweep, const char* text) {
    return guarded([&] {
        require(sweep, "sweep");
        require(text, "text");
        sweep->spec = rtwnoma::sweep::apply_config_text(text, sweep->spec);
    });
}

rtw_status rtw_sweep_set_trials(rtw_sweep* sweep, uint64_t trials) {
    return guarded([&] {
        require(sweep, "sweep");
        if (trials == 0) throw rtwnoma::ValidationError("trials must be positive");
        sweep->spec.trials = trials;
    });
}

rtw_status rtw_sweep_set_seed(rtw_sweep* sweep, uint64_t seed) {
    return guarded([&] {
        require(sweep, "sweep");
        sweep->spec.seed = seed;
    });
}

rtw_status rtw_sweep_figure_id(const rtw_sweep* sweep, const char** out) {
    return guarded([&] {
        require(sweep, "sweep");
        require(out, "out");
        *out = sweep->spec.figure_id.c_str();
    });
}

void rtw_sweep_destroy(rtw_sweep* sweep) { delete sweep; }

rtw_status rtw_sweep_run(const rtw_sweep* sweep, unsigned threads, rtw_table** out) {
    return guarded([&] {
        require(sweep, "sweep");
        require(out, "out");
        *out = new rtw_table{rtwnoma::sweep::run_sweep(sweep->spec, {threads})};
    });
}

rtw_status rtw_table_row_count(const rtw_table* table, size_t* out) {
    return guarded([&] {
        require(table, "table");
        require(out, "out");
        *out = table->table.rows.size();
    });
}

rtw_status rtw_table_write(const rtw_table* table, const char* format, const char* path) {
    return guarded([&] {
        require(table, "table");
        require(format, "format");
        require(path, "path");
        rtwnoma::sweep::emit(table->table, rtwnoma::sweep::parse_format(format), path);
    });
}

rtw_status rtw_table_serialize(const rtw_table* table, const char* format, char** out) {
    return guarded([&] {
        require(table, "table");
        require(format, "format");
        require(out, "out");
        const auto text = rtwnoma::sweep::parse_format(format) == rtwnoma::sweep::Format::csv
                              ? rtwnoma::sweep::to_csv(table->table)
                              : rtwnoma::sweep::to_json(table->table);
        char* buf = static_cast<char*>(std::malloc(text.size() + 1));
        if (!buf) throw std::bad_alloc();
        std::memcpy(buf, text.c_str(), text.size() + 1);
        *out = buf;
    });
}

void rtw_string_free(char* text) { std::free(text); }

void rtw_table_destroy(rtw_table* table) { delete table; }

} // extern "C"
