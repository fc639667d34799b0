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

#ifndef RTWNOMA_MCSIM_HPP
#define RTWNOMA_MCSIM_HPP

#include "rtwnoma/channel.hpp"
#include "rtwnoma/model.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace rtwnoma::mcsim {

enum class Metric : std::uint8_t { outage, ergodic_rate };

// How the ipSIC residual enters the D1 SINR: a fresh |g_h|^2 per trial, or
// its mean E|g_h|^2 (the form the CLT outage expression is derived from).
enum class ResidualMode : std::uint8_t { random, averaged };

std::string_view to_string(Metric metric) noexcept;
std::string_view to_string(ResidualMode mode) noexcept;

struct SimSpec {
    Scheme scheme = Scheme::ris_tw_noma;
    User user = User::d1;
    Metric metric = Metric::outage;
    double pu = 1.0;
    SystemConfig cfg{};
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 1;
    ResidualMode residual_mode = ResidualMode::random;
};

struct Estimate {
    double value = 0.0;
    double std_error = 0.0;       // sample standard deviation / sqrt(trials)
    double ci95_half_width = 0.0; // 1.96 * std_error
    std::uint64_t trials = 0;
    // Outage only: fewer than min_outage_events failures were observed, so the
    // normal-approximation interval is unreliable.
    bool low_confidence = false;
};

inline constexpr std::uint64_t batch_size = std::uint64_t{1} << 16;
inline constexpr std::uint64_t min_outage_events = 100;

struct ExecOptions {
    unsigned threads = 1; // 0 = all hardware threads
};

// Mean of fn(draw) over trials i = 0..trials-1 of the given stream, where
// trial i reads the stream at block i * blocks_per_draw(cfg). Batches of
// batch_size trials are reduced along a fixed pairwise tree, so the result
// is bit-identical for every thread count.
Estimate estimate_mean(const SystemConfig& cfg, std::uint64_t trials, channel::RngHandle stream,
                       const std::function<double(const channel::ChannelDraw&)>& fn, const ExecOptions& exec = {});

// Monte Carlo outage probability (fraction of trials with SINR below the
// decoding threshold) or ergodic rate (mean log2(1 + SINR), halved for the
// two-slot OMA schemes).
Estimate simulate(const SimSpec& spec, std::uint64_t stream_id = 0, const ExecOptions& exec = {});

// simulate() for each spec with stream_id equal to its index. Output order
// follows input order. A failing spec aborts the sweep and the error names
// its index.
std::vector<Estimate> sweep_simulate(std::span<const SimSpec> specs, const ExecOptions& exec = {});

} // namespace rtwnoma::mcsim

#endif
