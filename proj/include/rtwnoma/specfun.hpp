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

#ifndef RTWNOMA_SPECFUN_HPP
#define RTWNOMA_SPECFUN_HPP

namespace rtwnoma::specfun {

/// Mean and variance of one cascade amplitude |h_m g_m| with unit-power
/// Rayleigh factors: pi/4 and 1 - pi^2/16.
struct CascadeMoments {
    double mean;
    double variance;
};

CascadeMoments cascade_moments() noexcept;

/// phi(x) = integral_0^x exp(-t^2) dt, i.e. (sqrt(pi)/2) erf(x).
/// Throws InvalidArgument for non-finite x.
double phi(double x);

/// Lower incomplete gamma gamma(s, x) for integer shape s >= 1.
double gamma_lower(int s, double x);

/// Regularised form P(s, x) = gamma(s, x) / (s-1)!, in [0, 1].
double gamma_lower_regularized(int s, double x);

/// Modified Bessel function of the second kind, order zero. Requires x > 0.
double bessel_k0(double x);

/// Density of |h_m g_m|: 4 x K0(2x), with the limit 0 at x = 0.
double cascade_pdf(double x);

} // namespace rtwnoma::specfun

#endif
