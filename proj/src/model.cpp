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

#include "rtwnoma/model.hpp"

#include "rtwnoma/error.hpp"

#include <cmath>
#include <string>

namespace rtwnoma {

std::string_view to_string(Scheme scheme) noexcept {
    switch (scheme) {
    case Scheme::ris_tw_noma: return "ris_tw_noma";
    case Scheme::ris_tw_oma: return "ris_tw_oma";
    case Scheme::twr_oma: return "twr_oma";
    }
    return "?";
}

std::string_view to_string(User user) noexcept {
    return user == User::d1 ? "d1" : "d2";
}

std::string_view to_string(SicMode mode) noexcept {
    return mode == SicMode::perfect ? "perfect" : "imperfect";
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw ValidationError(what);
}

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }
bool finite_pos(double v) { return std::isfinite(v) && v > 0.0; }

} // namespace

void SystemConfig::validate() const {
    require(m_elements >= 1, "m_elements must be at least 1");
    require(std::isfinite(a1) && a1 > 0.0 && a1 < 1.0, "a1 must lie in (0,1)");
    require(std::isfinite(a2) && a2 > 0.0 && a2 < 1.0, "a2 must lie in (0,1)");
    require(std::fabs(a1 + a2 - 1.0) <= 1e-12, "power allocation must satisfy a1 + a2 = 1");
    require(a2 > a1, "power allocation must satisfy a2 > a1 (distant user D2 has priority)");
    require(finite_nonneg(r1), "target rate r1 must be finite and nonnegative");
    require(finite_nonneg(r2), "target rate r2 must be finite and nonnegative");
    require(finite_pos(sigma_n1_sq), "noise power sigma_n1_sq must be positive");
    require(finite_pos(sigma_n2_sq), "noise power sigma_n2_sq must be positive");
    require(finite_nonneg(sigma_i1_sq), "self-interference power sigma_i1_sq must be nonnegative");
    require(finite_nonneg(sigma_i2_sq), "self-interference power sigma_i2_sq must be nonnegative");
    require(finite_nonneg(sigma_gh_sq), "residual SIC power sigma_gh_sq must be nonnegative");
    if (sic_mode == SicMode::imperfect)
        require(std::isfinite(epsilon_sic) && epsilon_sic > 0.0 && epsilon_sic <= 1.0,
                "epsilon_sic must lie in (0,1] under imperfect SIC");
}

double threshold(double rate) {
    if (!(rate >= 0.0)) throw InvalidArgument("threshold: rate must be nonnegative");
    return std::exp2(rate) - 1.0;
}

double decoding_threshold(const SystemConfig& cfg, Scheme scheme, User user) {
    const double rate = user == User::d1 ? cfg.r2 : cfg.r1;
    if (scheme != Scheme::ris_tw_noma && cfg.oma_threshold_doubling) return threshold(2.0 * rate);
    return threshold(rate);
}

double decoded_allocation(const SystemConfig& cfg, User user) noexcept {
    return user == User::d1 ? cfg.a2 : cfg.a1;
}

double sinr_noma_d1(double chi_sq, double gh_sq, double pu, const SystemConfig& cfg) {
    const double eps = cfg.effective_epsilon();
    const double residual = eps > 0.0 ? eps * pu * gh_sq : 0.0;
    return pu * cfg.a2 * chi_sq / (residual + cfg.sigma_i1_sq + cfg.sigma_n1_sq);
}

double sinr_noma_d2(double chi_sq, double pu, const SystemConfig& cfg) {
    return pu * cfg.a1 * chi_sq / (cfg.sigma_i2_sq + cfg.sigma_n2_sq);
}

double sinr_oma_ris(double chi_sq, double pu, const SystemConfig& cfg, User user) {
    if (user == User::d1) return pu * cfg.a2 * chi_sq / cfg.sigma_n1_sq;
    return pu * cfg.a1 * chi_sq / cfg.sigma_n2_sq;
}

double sinr_twr_oma(double h_sq, double pu, const SystemConfig& cfg, User user) {
    // Same form as the RIS slot, with the direct relay link in place of the cascade.
    return sinr_oma_ris(h_sq, pu, cfg, user);
}

} // namespace rtwnoma
