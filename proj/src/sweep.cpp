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

#include "rtwnoma/sweep.hpp"

#include "rtwnoma/analytic.hpp"
#include "rtwnoma/error.hpp"
#include "rtwnoma/units.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <tuple>

namespace rtwnoma::sweep {

std::string_view to_string(MetricKind metric) noexcept {
    switch (metric) {
    case MetricKind::outage_analytic: return "outage_analytic";
    case MetricKind::outage_upper: return "outage_upper";
    case MetricKind::outage_asymptotic: return "outage_asymptotic";
    case MetricKind::outage_mc: return "outage_mc";
    case MetricKind::ergodic_analytic: return "ergodic_analytic";
    case MetricKind::ergodic_mc: return "ergodic_mc";
    case MetricKind::throughput_dl: return "throughput_dl";
    case MetricKind::throughput_dt: return "throughput_dt";
    case MetricKind::energy_efficiency: return "energy_efficiency";
    }
    return "?";
}

std::string_view to_string(SweepVariable variable) noexcept {
    switch (variable) {
    case SweepVariable::pu: return "pu";
    case SweepVariable::allocation_theta: return "allocation_theta";
    case SweepVariable::m_elements: return "m_elements";
    case SweepVariable::target_rates: return "target_rates";
    case SweepVariable::sigma_gh: return "sigma_gh";
    }
    return "?";
}

std::string_view to_string(EeRate rate) noexcept {
    return rate == EeRate::delay_limited ? "delay_limited" : "delay_tolerant";
}

namespace {

bool is_ris(Scheme s) noexcept { return s != Scheme::twr_oma; }

bool contains(const auto& range, const auto& value) {
    return std::find(range.begin(), range.end(), value) != range.end();
}

struct OuterPoint {
    double value = 0.0; // NaN for the plain P_u sweep
    std::string label;
    SystemConfig cfg;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

// One SystemConfig per outer grid point. Throws ValidationError naming the point.
std::vector<OuterPoint> outer_points(const SweepSpec& spec) {
    std::vector<OuterPoint> out;
    auto push = [&](double value, std::string label, SystemConfig cfg) {
        try {
            cfg.validate();
        } catch (const ValidationError& e) {
            throw ValidationError(label + ": " + e.what());
        }
        out.push_back({value, std::move(label), cfg});
    };
    switch (spec.sweep_variable) {
    case SweepVariable::pu:
        push(std::nan(""), "base configuration", spec.cfg);
        break;
    case SweepVariable::allocation_theta:
        if (spec.allocation_grid.empty()) throw ValidationError("allocation_theta sweep needs a nonempty allocation_grid");
        for (std::size_t i = 0; i < spec.allocation_grid.size(); ++i) {
            SystemConfig c = spec.cfg;
            c.a2 = spec.allocation_grid[i];
            c.a1 = 1.0 - c.a2;
            push(c.a2, "allocation_grid[" + std::to_string(i) + "] = " + fmt(c.a2), c);
        }
        break;
    case SweepVariable::m_elements:
        if (spec.m_grid.empty()) throw ValidationError("m_elements sweep needs a nonempty m_grid");
        for (std::size_t i = 0; i < spec.m_grid.size(); ++i) {
            SystemConfig c = spec.cfg;
            c.m_elements = spec.m_grid[i];
            if (c.m_elements == 0) throw ValidationError("m_grid[" + std::to_string(i) + "]: M must be positive");
            push(c.m_elements, "m_grid[" + std::to_string(i) + "] = " + std::to_string(c.m_elements), c);
        }
        break;
    case SweepVariable::target_rates:
        if (spec.rate_grid.empty()) throw ValidationError("target_rates sweep needs a nonempty rate_grid");
        for (std::size_t i = 0; i < spec.rate_grid.size(); ++i) {
            SystemConfig c = spec.cfg;
            std::tie(c.r1, c.r2) = spec.rate_grid[i];
            push(c.r2, "rate_grid[" + std::to_string(i) + "] = (" + fmt(c.r1) + ", " + fmt(c.r2) + ")", c);
        }
        break;
    case SweepVariable::sigma_gh:
        if (spec.sigma_gh_grid_db.empty()) throw ValidationError("sigma_gh sweep needs a nonempty sigma_gh_grid_db");
        for (std::size_t i = 0; i < spec.sigma_gh_grid_db.size(); ++i) {
            const double db = spec.sigma_gh_grid_db[i];
            if (!std::isfinite(db)) throw ValidationError("sigma_gh_grid_db[" + std::to_string(i) + "] must be finite");
            SystemConfig c = spec.cfg;
            c.sigma_gh_sq = units::db_to_linear(db);
            push(db, "sigma_gh_grid_db[" + std::to_string(i) + "] = " + fmt(db), c);
        }
        break;
    }
    return out;
}

bool needs_even_m(MetricKind m) noexcept {
    return m == MetricKind::outage_upper || m == MetricKind::outage_asymptotic;
}

bool scheme_supports(Scheme s, MetricKind m) noexcept {
    if (needs_even_m(m) || m == MetricKind::ergodic_analytic) return is_ris(s);
    return true;
}

metrics::PowerModel power_for(const SweepSpec& spec, const SystemConfig& cfg) {
    metrics::PowerModel pm = spec.power_model;
    pm.element_count = spec.element_count_override != 0 ? spec.element_count_override : cfg.m_elements;
    return pm;
}

} // namespace

void SweepSpec::validate() const {
    if (schemes.empty()) throw ValidationError("schemes must not be empty");
    if (users.empty()) throw ValidationError("users must not be empty");
    if (sic_modes.empty()) throw ValidationError("sic_modes must not be empty");
    if (residual_modes.empty()) throw ValidationError("residual_modes must not be empty");
    if (metrics.empty()) throw ValidationError("metrics must not be empty");
    if (pu_grid_db.empty()) throw ValidationError("pu_grid_db must not be empty");
    for (std::size_t i = 0; i < pu_grid_db.size(); ++i)
        if (!std::isfinite(pu_grid_db[i]) || std::abs(pu_grid_db[i]) > 300.0)
            throw ValidationError("pu_grid_db[" + std::to_string(i) + "] must be a finite dB value");
    if (trials == 0) throw ValidationError("trials must be positive");
    if (figure_id.empty()) throw ValidationError("figure_id must not be empty");

    const auto points = outer_points(*this);
    for (MetricKind m : metrics) {
        const bool any = std::any_of(schemes.begin(), schemes.end(), [m](Scheme s) { return scheme_supports(s, m); });
        if (!any)
            throw ValidationError("metric " + std::string(to_string(m)) +
                                  " is not defined for any requested scheme (it needs a RIS scheme)");
        if (!needs_even_m(m)) continue;
        for (const auto& p : points)
            if (p.cfg.m_elements % 2 != 0)
                throw ValidationError("metric " + std::string(to_string(m)) +
                                      " assumes an even number of RIS elements M, got M = " +
                                      std::to_string(p.cfg.m_elements) +
                                      (sweep_variable == SweepVariable::pu ? std::string{} : " at " + p.label));
    }
    if (contains(metrics, MetricKind::energy_efficiency))
        for (const auto& p : points) power_for(*this, p.cfg).validate();
}

namespace {

using Finish = std::function<void(Row&, std::span<const mcsim::Estimate>)>;

struct Pending {
    std::array<std::size_t, 7> key{}; // outer, scheme, user, pu, sic, residual, metric
    Row row;
    std::vector<std::size_t> mc; // indices into the Monte Carlo spec list
    Finish finish;
};

std::size_t sic_rank(std::optional<SicMode> s) { return s ? static_cast<std::size_t>(*s) + 1 : 0; }
std::size_t residual_rank(std::optional<mcsim::ResidualMode> r) { return r ? static_cast<std::size_t>(*r) + 1 : 0; }

void fill_mc(Row& row, const mcsim::Estimate& e) {
    row.value = e.value;
    row.std_error = e.std_error;
    row.ci95 = e.ci95_half_width;
    row.trials = e.trials;
    row.low_confidence = e.low_confidence;
}

// Rethrows the active library exception with a context prefix, keeping its type.
[[noreturn]] void rethrow_with(const std::string& context) {
    try {
        throw;
    } catch (const ParseError& e) {
        throw ParseError(context + ": " + e.what(), e.line(), e.column());
    } catch (const ValidationError& e) {
        throw ValidationError(context + ": " + e.what());
    } catch (const InvalidArgument& e) {
        throw InvalidArgument(context + ": " + e.what());
    } catch (const NumericError& e) {
        throw NumericError(context + ": " + e.what());
    } catch (const IoError& e) {
        throw IoError(context + ": " + e.what());
    } catch (const Error& e) {
        throw Error(context + ": " + e.what());
    }
}

class Builder {
public:
    explicit Builder(const SweepSpec& spec) : spec_(spec) {}

    void point(std::size_t outer, const OuterPoint& p, std::size_t pu_index) {
        const double pu_db = spec_.pu_grid_db[pu_index];
        const double pu = units::db_to_linear(pu_db);
        for (Scheme s : spec_.schemes)
            for (MetricKind m : spec_.metrics) {
                if (!scheme_supports(s, m)) continue;
                Ctx ctx{outer, p, pu_index, pu_db, pu, s, m};
                if (m == MetricKind::throughput_dl || m == MetricKind::throughput_dt ||
                    m == MetricKind::energy_efficiency)
                    pair_metric(ctx);
                else
                    for (User u : spec_.users) user_metric(ctx, u);
            }
    }

    std::vector<mcsim::SimSpec>& mc_specs() { return mc_; }
    std::vector<Pending>& pending() { return pending_; }

private:
    struct Ctx {
        std::size_t outer;
        const OuterPoint& p;
        std::size_t pu_index;
        double pu_db;
        double pu;
        Scheme scheme;
        MetricKind metric;
    };

    std::vector<std::optional<SicMode>> sic_variants(Scheme s, std::optional<User> u) const {
        if (s == Scheme::ris_tw_noma && (!u || *u == User::d1)) return {spec_.sic_modes.begin(), spec_.sic_modes.end()};
        return {std::nullopt};
    }

    Pending make(const Ctx& c, std::string user, std::size_t user_rank, std::optional<SicMode> sic,
                 std::optional<mcsim::ResidualMode> residual) const {
        Pending out;
        out.key = {c.outer, static_cast<std::size_t>(c.scheme), user_rank, c.pu_index, sic_rank(sic),
                   residual_rank(residual), static_cast<std::size_t>(c.metric)};
        Row& r = out.row;
        r.figure = spec_.figure_id;
        r.sweep_variable = std::string(to_string(spec_.sweep_variable));
        r.sweep_value = std::isnan(c.p.value) ? c.pu_db : c.p.value;
        r.pu_db = c.pu_db;
        r.m_elements = c.p.cfg.m_elements;
        r.a1 = c.p.cfg.a1;
        r.a2 = c.p.cfg.a2;
        r.r1 = c.p.cfg.r1;
        r.r2 = c.p.cfg.r2;
        r.scheme = std::string(to_string(c.scheme));
        r.user = std::move(user);
        r.sic = sic ? std::string(to_string(*sic)) : "-";
        r.residual = residual ? std::string(mcsim::to_string(*residual)) : "-";
        r.metric = std::string(to_string(c.metric));
        return out;
    }

    static SystemConfig with_sic(SystemConfig cfg, std::optional<SicMode> sic) {
        if (sic) cfg.sic_mode = *sic;
        return cfg;
    }

    std::size_t add_mc(Scheme s, User u, mcsim::Metric metric, double pu, const SystemConfig& cfg,
                       mcsim::ResidualMode mode) {
        mcsim::SimSpec sim;
        sim.scheme = s;
        sim.user = u;
        sim.metric = metric;
        sim.pu = pu;
        sim.cfg = cfg;
        sim.trials = spec_.trials;
        sim.seed = spec_.seed;
        sim.residual_mode = mode;
        mc_.push_back(sim);
        return mc_.size() - 1;
    }

    double ergodic_analytic(Scheme s, User u, double pu, const SystemConfig& cfg) const {
        return s == Scheme::ris_tw_noma ? analytic::ergodic_noma(u, cfg.sic_mode, pu, cfg)
                                        : analytic::ergodic_oma(u, pu, cfg);
    }

    void user_metric(const Ctx& c, User u) {
        const std::size_t urank = static_cast<std::size_t>(u);
        for (auto sic : sic_variants(c.scheme, u)) {
            const SystemConfig cfg = with_sic(c.p.cfg, sic);
            const analytic::OutageQuery q{c.scheme, u, c.pu, cfg};
            switch (c.metric) {
            case MetricKind::outage_analytic:
            case MetricKind::outage_upper:
            case MetricKind::outage_asymptotic: {
                auto row = make(c, std::string(to_string(u)), urank, sic, std::nullopt);
                const auto r = c.metric == MetricKind::outage_analytic ? analytic::outage(q)
                               : c.metric == MetricKind::outage_upper  ? analytic::outage_upper_bound(q)
                                                                       : analytic::outage_asymptotic(q);
                row.row.value = r.value;
                row.row.clamped = r.clamped;
                pending_.push_back(std::move(row));
                break;
            }
            case MetricKind::ergodic_analytic: {
                auto row = make(c, std::string(to_string(u)), urank, sic, std::nullopt);
                row.row.value = ergodic_analytic(c.scheme, u, c.pu, cfg);
                pending_.push_back(std::move(row));
                break;
            }
            case MetricKind::outage_mc:
            case MetricKind::ergodic_mc: {
                const auto metric =
                    c.metric == MetricKind::outage_mc ? mcsim::Metric::outage : mcsim::Metric::ergodic_rate;
                std::vector<std::optional<mcsim::ResidualMode>> modes{std::nullopt};
                if (c.scheme == Scheme::ris_tw_noma && u == User::d1 && cfg.effective_epsilon() * cfg.sigma_gh_sq > 0.0)
                    modes.assign(spec_.residual_modes.begin(), spec_.residual_modes.end());
                for (auto mode : modes) {
                    auto row = make(c, std::string(to_string(u)), urank, sic, mode);
                    row.mc.push_back(add_mc(c.scheme, u, metric, c.pu, cfg, mode.value_or(mcsim::ResidualMode::random)));
                    row.finish = [](Row& r, std::span<const mcsim::Estimate> e) { fill_mc(r, e[0]); };
                    pending_.push_back(std::move(row));
                }
                break;
            }
            default:
                break;
            }
        }
    }

    void pair_metric(const Ctx& c) {
        for (auto sic : sic_variants(c.scheme, std::nullopt)) {
            const SystemConfig cfg = with_sic(c.p.cfg, sic);
            auto row = make(c, "sum", 2, sic, std::nullopt);
            const bool delay_limited =
                c.metric == MetricKind::throughput_dl ||
                (c.metric == MetricKind::energy_efficiency && spec_.ee_rate == EeRate::delay_limited);
            const bool ee = c.metric == MetricKind::energy_efficiency;
            const auto pm = power_for(spec_, cfg);
            const Scheme s = c.scheme;
            const double pu = c.pu;
            auto finalize = [ee, pm, s, pu](double rate) {
                return ee ? metrics::energy_efficiency(rate, pu, pm, s) : rate;
            };

            if (delay_limited) {
                const auto p1 = analytic::outage({s, User::d1, pu, cfg});
                const auto p2 = analytic::outage({s, User::d2, pu, cfg});
                row.row.value = finalize(metrics::throughput_delay_limited(p1.value, p2.value, cfg, s));
                row.row.clamped = p1.clamped || p2.clamped;
            } else if (is_ris(s)) {
                const double rate = metrics::throughput_delay_tolerant(ergodic_analytic(s, User::d1, pu, cfg),
                                                                       ergodic_analytic(s, User::d2, pu, cfg));
                row.row.value = finalize(rate);
            } else {
                // No closed form for the relay benchmark's ergodic rate.
                row.mc.push_back(add_mc(s, User::d1, mcsim::Metric::ergodic_rate, pu, cfg, mcsim::ResidualMode::random));
                row.mc.push_back(add_mc(s, User::d2, mcsim::Metric::ergodic_rate, pu, cfg, mcsim::ResidualMode::random));
                row.finish = [finalize](Row& r, std::span<const mcsim::Estimate> e) {
                    const double rate = metrics::throughput_delay_tolerant(e[0].value, e[1].value);
                    const double value = finalize(rate);
                    const double scale = rate != 0.0 ? value / rate : 1.0;
                    const double se = std::hypot(e[0].std_error, e[1].std_error) * scale;
                    r.value = value;
                    r.std_error = se;
                    r.ci95 = 1.96 * se;
                    r.trials = e[0].trials;
                };
            }
            pending_.push_back(std::move(row));
        }
    }

    const SweepSpec& spec_;
    std::vector<mcsim::SimSpec> mc_;
    std::vector<Pending> pending_;
};

std::string row_context(const SweepSpec& spec, const Row& r) {
    std::string ctx = "figure " + spec.figure_id;
    if (spec.sweep_variable != SweepVariable::pu) ctx += ", " + r.sweep_variable + " = " + fmt(r.sweep_value);
    return ctx + ", pu_db = " + fmt(r.pu_db) + ", scheme " + r.scheme + ", user " + r.user + ", " + r.metric;
}

} // namespace

ResultTable run_sweep(const SweepSpec& spec, const mcsim::ExecOptions& exec) {
    spec.validate();
    const auto points = outer_points(spec);

    Builder builder(spec);
    for (std::size_t o = 0; o < points.size(); ++o)
        for (std::size_t k = 0; k < spec.pu_grid_db.size(); ++k) {
            try {
                builder.point(o, points[o], k);
            } catch (const Error&) {
                std::string ctx = "figure " + spec.figure_id;
                if (spec.sweep_variable != SweepVariable::pu) ctx += ", " + points[o].label;
                rethrow_with(ctx + ", pu_db = " + fmt(spec.pu_grid_db[k]));
            }
        }

    // Stream ids follow the spec list order, which the loops above fix.
    auto& sims = builder.mc_specs();
    std::vector<mcsim::Estimate> estimates(sims.size());
    auto& pending = builder.pending();
    std::vector<const Pending*> owner(sims.size(), nullptr);
    for (const auto& p : pending)
        for (std::size_t i : p.mc) owner[i] = &p;
    for (std::size_t i = 0; i < sims.size(); ++i) {
        try {
            estimates[i] = mcsim::simulate(sims[i], i, exec);
        } catch (const Error&) {
            rethrow_with(row_context(spec, owner[i]->row));
        }
    }

    for (auto& p : pending) {
        if (p.mc.empty()) continue;
        std::vector<mcsim::Estimate> mine;
        for (std::size_t i : p.mc) mine.push_back(estimates[i]);
        p.finish(p.row, mine);
    }

    std::stable_sort(pending.begin(), pending.end(), [](const Pending& a, const Pending& b) { return a.key < b.key; });
    ResultTable table;
    table.rows.reserve(pending.size());
    for (auto& p : pending) table.rows.push_back(std::move(p.row));
    return table;
}

} // namespace rtwnoma::sweep
