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

#ifndef RTWNOMA_MODEL_HPP
#define RTWNOMA_MODEL_HPP

#include <cstdint>
#include <string_view>

namespace rtwnoma {

enum class Scheme : std::uint8_t { ris_tw_noma, ris_tw_oma, twr_oma };
enum class User : std::uint8_t { d1, d2 };
enum class SicMode : std::uint8_t { perfect, imperfect };

std::string_view to_string(Scheme scheme) noexcept;
std::string_view to_string(User user) noexcept;
std::string_view to_string(SicMode mode) noexcept;

// Physical parameters of one scenario. Every power is linear (watts, or
// normalised to unit noise); dB values are converted before they get here.
// Defaults are the reference parameter set: a1 = 0.2, a2 = 0.8, R1 = 2 and
// R2 = 5 BPCU, E|g_h|^2 = -6 dB, sigma_I^2 = -5 dB, unit noise.
struct SystemConfig {
    unsigned m_elements = 8;
    double a1 = 0.2;
    double a2 = 0.8;
    double r1 = 2.0;
    double r2 = 5.0;
    double sigma_n1_sq = 1.0;
    double sigma_n2_sq = 1.0;
    double sigma_i1_sq = 0.31622776601683794;
    double sigma_i2_sq = 0.31622776601683794;
    double sigma_gh_sq = 0.25118864315095796;
    SicMode sic_mode = SicMode::imperfect;
    double epsilon_sic = 1.0;
    // Use 2^(2R) - 1 for the two-slot OMA benchmarks instead of 2^R - 1.
    bool oma_threshold_doubling = false;

    // Throws ValidationError naming the first violated invariant.
    void validate() const;

    // epsilon_sic under imperfect SIC, 0 under perfect SIC.
    double effective_epsilon() const noexcept {
        return sic_mode == SicMode::imperfect ? epsilon_sic : 0.0;
    }
};

// SINR threshold 2^rate - 1 for a target rate in bits per channel use.
double threshold(double rate);

// Threshold the given user must clear under the given scheme. D1 decodes x2
// (rate R2) and D2 decodes x1 (rate R1).
double decoding_threshold(const SystemConfig& cfg, Scheme scheme, User user);

// Power allocation coefficient of the signal the user decodes (a2 for D1).
double decoded_allocation(const SystemConfig& cfg, User user) noexcept;

// SINR at D1 decoding x2 in RIS-TW-NOMA. gh_sq is ignored under perfect SIC.
double sinr_noma_d1(double chi_sq, double gh_sq, double pu, const SystemConfig& cfg);

// SINR at D2 decoding x1 in RIS-TW-NOMA.
double sinr_noma_d2(double chi_sq, double pu, const SystemConfig& cfg);

// Half-duplex RIS-TW-OMA slot SINR; no self-interference terms.
double sinr_oma_ris(double chi_sq, double pu, const SystemConfig& cfg, User user);

// Relay benchmark over a direct Rayleigh link of power h_sq.
double sinr_twr_oma(double h_sq, double pu, const SystemConfig& cfg, User user);

} // namespace rtwnoma

#endif
