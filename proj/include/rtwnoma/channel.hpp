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

#ifndef RTWNOMA_CHANNEL_HPP
#define RTWNOMA_CHANNEL_HPP

#include "rtwnoma/model.hpp"

#include <array>
#include <cstdint>

namespace rtwnoma::channel {

// Philox4x32-10 counter-based bijection (Salmon et al., SC'11).
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) noexcept;

// A position in a counter-based random stream. The key is the seed; the
// 128-bit counter is (block, stream_id), so every block of every stream can
// be addressed directly without generating its predecessors. A handle is a
// small value type: copy it to fork, never share one between threads.
class RngHandle {
public:
    RngHandle(std::uint64_t seed, std::uint64_t stream_id) noexcept : seed_(seed), stream_(stream_id) {}

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream_id() const noexcept { return stream_; }
    std::uint64_t block() const noexcept { return block_; }

    // Same seed, different stream.
    RngHandle with_stream(std::uint64_t stream_id) const noexcept { return {seed_, stream_id}; }

    // Position at the start of the given 128-bit block.
    void seek(std::uint64_t block) noexcept {
        block_ = block;
        buffered_ = 0;
    }

    std::uint64_t next_u64() noexcept;

    // Uniform on (0, 1]; never returns 0 so -log(u) stays finite.
    double next_uniform() noexcept {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    std::array<std::uint64_t, 2> buffer_{};
    int buffered_ = 0;
};

// One Monte Carlo realisation of every channel quantity a trial needs.
struct ChannelDraw {
    double chi = 0.0;         // sum_m |h_m||g_m| under coherent phase alignment
    double h_direct_sq = 0.0; // |h|^2 of the relay benchmark link
    double gh_sq = 0.0;       // |g_h|^2 of the residual SIC channel
};

// Cascade amplitude of M elements with coherent phase shifting. Consumes
// exactly M blocks of the stream. Throws InvalidArgument for M = 0.
double sample_cascade(unsigned m_elements, RngHandle& rng);

// Exponential variate with the given mean: the power of a circularly
// symmetric Gaussian amplitude. Consumes one 64-bit word.
double sample_rayleigh_power(double mean_power, RngHandle& rng);

// Blocks of the stream consumed by one call to draw().
inline std::uint64_t blocks_per_draw(const SystemConfig& cfg) noexcept { return cfg.m_elements + 1ULL; }

// Draw every channel quantity for one trial. The layout within the stream is
// fixed (cascade first, then |h|^2, then |g_h|^2) so trial i can be located at
// block i * blocks_per_draw(cfg).
ChannelDraw draw(const SystemConfig& cfg, RngHandle& rng);

} // namespace rtwnoma::channel

#endif
