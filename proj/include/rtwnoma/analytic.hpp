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

#ifndef RTWNOMA_ANALYTIC_HPP
#define RTWNOMA_ANALYTIC_HPP

#include "rtwnoma/model.hpp"

namespace rtwnoma::analytic {

struct OutageQuery {
    Scheme scheme = Scheme::ris_tw_noma;
    User user = User::d1;
    double pu = 1.0; // linear transmit power (SNR with unit noise)
    SystemConfig cfg{};
};

// Threshold-scaled noise amplitude sqrt(gamma_th * noise / (P_u * a)). The
// CLT outage of every RIS case is Pr[chi < value].
struct AuxArg {
    double value = 0.0;
};

// A probability that was clamped into [0, 1]; `clamped` records whether the
// raw expression left the interval.
struct ClampedProbability {
    double value = 0.0;
    bool clamped = false;
};

// Builds the CLT argument for a RIS query: tau (D1, imperfect SIC), psi
// (D1, perfect SIC), beta (D2), or lambda_i for RIS-TW-OMA.
AuxArg aux_arg(const OutageQuery& query);

// 1/2 + phi(sqrt(M / (2 (1 - pi^2/16))) (arg/M - pi/4)) / sqrt(pi), clamped.
ClampedProbability clt_outage(AuxArg arg, unsigned m_elements);

ClampedProbability outage_noma(const OutageQuery& query);
ClampedProbability outage_oma(const OutageQuery& query);
ClampedProbability outage_twr_oma(const OutageQuery& query);

// Dispatches on query.scheme.
ClampedProbability outage(const OutageQuery& query);

// Laplace-domain bound from K0(x) <= sqrt(pi/(2x)) e^-x:
//   (pi^2/8)^L * P(3L, 2 arg),  L = M/2,
// clamped to 1. Defined for both RIS schemes with even M.
ClampedProbability outage_upper_bound(const OutageQuery& query);

// Leading term (pi^2/8)^L (2 arg)^(3L) / (3L)! of the bound. For D1 under
// imperfect SIC arg is the P_u -> infinity limit of tau, so the result is
// the error floor and does not depend on P_u.
ClampedProbability outage_asymptotic(const OutageQuery& query);

// (1/ln 2) * integral_0^inf (1 - F(y)) / (1 + y) dy where F is the CLT CDF
// of the SINR, F(y) = clt_outage(sqrt(y * scale), M). `scale` is the
// noise-plus-interference over P_u times the allocation coefficient.
double ergodic_clt_integral(double scale, unsigned m_elements);

// Ergodic rate of a RIS-TW-NOMA user in bits per channel use. sic_mode
// overrides cfg.sic_mode and only matters for D1. Throws NumericError when
// the integral does not reach its tolerance.
double ergodic_noma(User user, SicMode sic_mode, double pu, const SystemConfig& cfg);

// RIS-TW-OMA ergodic rate, including the 1/2 two-slot prefactor.
double ergodic_oma(User user, double pu, const SystemConfig& cfg);

// Jensen bound log2(1 + P_u a E[chi^2] / (sigma_I^2 + sigma_n^2)) with
// E[chi^2] = ((pi M)^2 + 16 M - M pi^2) / 16.
double ergodic_jensen_upper(double pu, const SystemConfig& cfg, User user);

} // namespace rtwnoma::analytic

#endif
