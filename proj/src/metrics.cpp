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

#include "rtwnoma/metrics.hpp"

#include "rtwnoma/error.hpp"

#include <algorithm>
#include <cmath>

namespace rtwnoma::metrics {

void PowerModel::validate() const {
    auto pos = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!(std::isfinite(amplifier_inefficiency) && amplifier_inefficiency >= 1.0))
        throw ValidationError("power model: amplifier_inefficiency must be at least 1");
    if (!pos(p_element)) throw ValidationError("power model: p_element must be positive");
    if (element_count < 1) throw ValidationError("power model: element_count must be at least 1");
    if (!pos(p_user1) || !pos(p_user2)) throw ValidationError("power model: terminal powers must be positive");
    if (!pos(p_relay)) throw ValidationError("power model: p_relay must be positive");
}

double PowerModel::static_power(Scheme scheme) const noexcept {
    const double infrastructure = scheme == Scheme::twr_oma ? p_relay : element_count * p_element;
    return infrastructure + p_user1 + p_user2;
}

double slot_fraction(Scheme scheme) noexcept {
    return scheme == Scheme::ris_tw_noma ? 1.0 : 0.5;
}

double throughput_delay_limited(double p_out_d1, double p_out_d2, const SystemConfig& cfg, Scheme scheme) {
    auto probability = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (!probability(p_out_d1) || !probability(p_out_d2))
        throw InvalidArgument("throughput_delay_limited: outage probabilities must lie in [0,1]");
    return slot_fraction(scheme) * ((1.0 - p_out_d1) * cfg.r1 + (1.0 - p_out_d2) * cfg.r2);
}

double throughput_delay_tolerant(double rate_d1, double rate_d2) {
    if (!(rate_d1 >= 0.0) || !(rate_d2 >= 0.0) || !std::isfinite(rate_d1) || !std::isfinite(rate_d2))
        throw InvalidArgument("throughput_delay_tolerant: rates must be finite and nonnegative");
    return rate_d1 + rate_d2;
}

double energy_efficiency(double total_rate, double pu, const PowerModel& pm, Scheme scheme) {
    pm.validate();
    if (!std::isfinite(total_rate) || !std::isfinite(pu) || pu < 0.0)
        throw InvalidArgument("energy_efficiency: inputs must be finite");
    return total_rate / (pm.amplifier_inefficiency * pu + pm.static_power(scheme));
}

namespace {

double least_squares_slope(std::span<const Point> pts, auto&& fx, auto&& fy) {
    const double n = static_cast<double>(pts.size());
    double sx = 0.0, sy = 0.0;
    for (const auto& [x, y] : pts) {
        sx += fx(x);
        sy += fy(y);
    }
    const double mx = sx / n;
    const double my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : pts) {
        const double dx = fx(x) - mx;
        sxx += dx * dx;
        sxy += dx * (fy(y) - my);
    }
    return sxy / sxx;
}

void check_grid(std::span<const Point> pts, const char* op) {
    if (pts.size() < 3) throw InvalidArgument(std::string(op) + ": at least 3 points are required");
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!(pts[i].first > 0.0) || !std::isfinite(pts[i].first))
            throw InvalidArgument(std::string(op) + ": P_u values must be positive and finite");
        if (i > 0 && !(pts[i].first > pts[i - 1].first))
            throw InvalidArgument(std::string(op) + ": P_u values must be strictly increasing");
    }
}

} // namespace

double diversity_order_fit(std::span<const Point> points) {
    check_grid(points, "diversity_order_fit");
    for (const auto& [pu, p] : points)
        if (!(p > 0.0 && p <= 1.0))
            throw InvalidArgument("diversity_order_fit: outage values must lie in (0,1]");
    auto lg = [](double v) { return std::log10(v); };
    return -least_squares_slope(points, lg, lg);
}

double snr_slope_fit(std::span<const Point> points) {
    check_grid(points, "snr_slope_fit");
    for (const auto& pt : points)
        if (!std::isfinite(pt.second)) throw InvalidArgument("snr_slope_fit: rates must be finite");
    return least_squares_slope(points, [](double v) { return std::log2(v); }, [](double v) { return v; });
}

std::vector<Point> top_window(std::span<const Point> points, double span_db) {
    if (points.empty()) return {};
    double top = 0.0;
    for (const auto& pt : points) top = std::max(top, pt.first);
    const double floor = top * std::pow(10.0, -span_db / 10.0) * (1.0 - 1e-12);
    std::vector<Point> out;
    for (const auto& pt : points)
        if (pt.first >= floor) out.push_back(pt);
    return out;
}

} // namespace rtwnoma::metrics
