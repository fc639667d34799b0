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

#ifndef RTWNOMA_METRICS_HPP
#define RTWNOMA_METRICS_HPP

#include "rtwnoma/model.hpp"

#include <span>
#include <utility>
#include <vector>

namespace rtwnoma::metrics {

// Energy consumption parameters. All powers in watts.
struct PowerModel {
    double amplifier_inefficiency = 1.2; // 1 / amplifier efficiency, >= 1
    double p_element = 0.01;             // per phase shifter
    unsigned element_count = 8;          // number of phase shifters; normally M
    double p_user1 = 0.01;
    double p_user2 = 0.01;
    double p_relay = 0.01; // replaces the RIS term for the relay benchmark

    void validate() const;

    // Static (non-radiated) consumption of the given scheme.
    double static_power(Scheme scheme) const noexcept;
};

// Fraction of channel uses a user pair's exchange occupies per delivered
// message: 1 for full-duplex NOMA, 1/2 for the two-slot OMA schemes.
double slot_fraction(Scheme scheme) noexcept;

// (1 - p1) R1 + (1 - p2) R2, scaled by slot_fraction(scheme).
double throughput_delay_limited(double p_out_d1, double p_out_d2, const SystemConfig& cfg,
                                Scheme scheme = Scheme::ris_tw_noma);

double throughput_delay_tolerant(double rate_d1, double rate_d2);

// total_rate / (inefficiency * pu + static power), bits per joule per hertz.
double energy_efficiency(double total_rate, double pu, const PowerModel& pm, Scheme scheme);

using Point = std::pair<double, double>; // (linear P_u, value)

// Negated least-squares slope of log10(outage) against log10(P_u).
double diversity_order_fit(std::span<const Point> points);

// Least-squares slope of rate against log2(P_u).
double snr_slope_fit(std::span<const Point> points);

// The points whose P_u lies within span_db of the largest P_u.
std::vector<Point> top_window(std::span<const Point> points, double span_db = 20.0);

} // namespace rtwnoma::metrics

#endif
