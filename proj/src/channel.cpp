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

#include "rtwnoma/channel.hpp"

#include "rtwnoma/error.hpp"

#include <cmath>

namespace rtwnoma::channel {

namespace {

constexpr std::uint32_t philox_m0 = 0xD2511F53u;
constexpr std::uint32_t philox_m1 = 0xCD9E8D57u;
constexpr std::uint32_t philox_w0 = 0x9E3779B9u;
constexpr std::uint32_t philox_w1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) noexcept {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

inline void philox_round(std::array<std::uint32_t, 4>& ctr, const std::array<std::uint32_t, 2>& key) noexcept {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(philox_m0, ctr[0], hi0, lo0);
    mulhilo(philox_m1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

} // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) noexcept {
    philox_round(counter, key);
    for (int r = 1; r < 10; ++r) {
        key[0] += philox_w0;
        key[1] += philox_w1;
        philox_round(counter, key);
    }
    return counter;
}

std::uint64_t RngHandle::next_u64() noexcept {
    if (buffered_ == 0) {
        const auto out = philox4x32(
            {static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
             static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)},
            {static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32)});
        ++block_;
        // Hand out word 0 first.
        buffer_[1] = out[0] | (static_cast<std::uint64_t>(out[1]) << 32);
        buffer_[0] = out[2] | (static_cast<std::uint64_t>(out[3]) << 32);
        buffered_ = 2;
    }
    return buffer_[--buffered_];
}

double sample_cascade(unsigned m_elements, RngHandle& rng) {
    if (m_elements == 0) throw InvalidArgument("sample_cascade: m_elements must be at least 1");
    double chi = 0.0;
    for (unsigned m = 0; m < m_elements; ++m) {
        // |h| |g| = sqrt(E_h E_g) with E exponential(1).
        const double eh = -std::log(rng.next_uniform());
        const double eg = -std::log(rng.next_uniform());
        chi += std::sqrt(eh * eg);
    }
    return chi;
}

double sample_rayleigh_power(double mean_power, RngHandle& rng) {
    if (!(mean_power > 0.0) || !std::isfinite(mean_power))
        throw InvalidArgument("sample_rayleigh_power: mean power must be positive and finite");
    return -mean_power * std::log(rng.next_uniform());
}

ChannelDraw draw(const SystemConfig& cfg, RngHandle& rng) {
    ChannelDraw out;
    out.chi = sample_cascade(cfg.m_elements, rng);
    out.h_direct_sq = sample_rayleigh_power(1.0, rng);
    if (cfg.sigma_gh_sq > 0.0) {
        out.gh_sq = sample_rayleigh_power(cfg.sigma_gh_sq, rng);
    } else {
        rng.next_u64(); // keep the per-trial layout fixed
        out.gh_sq = 0.0;
    }
    return out;
}

} // namespace rtwnoma::channel
