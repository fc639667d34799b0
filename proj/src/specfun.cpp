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

#include "rtwnoma/specfun.hpp"

#include "rtwnoma/error.hpp"

#include <cmath>
#include <numbers>

namespace rtwnoma::specfun {

namespace {

constexpr double euler_gamma = 0.57721566490153286060651209008240243;

// Ascending series, accurate for 0 < x <= 2:
//   K0(x) = -(ln(x/2) + gamma) I0(x) + sum_{k>=1} (x^2/4)^k / (k!)^2 * H_k
double k0_series(double x) {
    const double q = 0.25 * x * x;
    double term = 1.0;
    double i0 = 1.0;
    double harmonic_sum = 0.0;
    double harmonic = 0.0;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<double>(k) * k);
        harmonic += 1.0 / k;
        i0 += term;
        harmonic_sum += term * harmonic;
        if (term * harmonic < 1e-17 * harmonic_sum) break;
    }
    return -(std::log(0.5 * x) + euler_gamma) * i0 + harmonic_sum;
}

// Steed's continued fraction (Temme's CF2) for x > 2, order zero.
double k0_continued_fraction(double x) {
    constexpr double a1 = 0.25;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double delh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i < 100000; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        const double dels = q * delh;
        s += dels;
        if (std::fabs(dels / s) < 1e-16) break;
    }
    return std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) / s;
}

} // namespace

CascadeMoments cascade_moments() noexcept {
    constexpr double pi = std::numbers::pi;
    return {pi / 4.0, 1.0 - pi * pi / 16.0};
}

double phi(double x) {
    if (!std::isfinite(x)) throw InvalidArgument("phi: argument must be finite");
    return 0.5 * std::sqrt(std::numbers::pi) * std::erf(x);
}

double gamma_lower_regularized(int s, double x) {
    if (s < 1) throw InvalidArgument("gamma_lower: shape must be a positive integer");
    if (!(x >= 0.0)) throw InvalidArgument("gamma_lower: x must be nonnegative");
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;

    if (x < s + 1.0) {
        // x^s e^-x / s! * sum_k x^k / ((s+1)...(s+k)); no cancellation below the mode.
        double term = 1.0;
        double sum = 1.0;
        for (int k = 1; k < 10000; ++k) {
            term *= x / (s + k);
            sum += term;
            if (term < 1e-17 * sum) break;
        }
        return std::exp(s * std::log(x) - x - std::lgamma(s + 1.0)) * sum;
    }

    // Closed form for integer shape: Q(s, x) = e^-x sum_{k<s} x^k / k!.
    double upper = 0.0;
    const double log_x = std::log(x);
    for (int k = 0; k < s; ++k) upper += std::exp(k * log_x - x - std::lgamma(k + 1.0));
    return 1.0 - upper;
}

double gamma_lower(int s, double x) {
    return std::exp(std::lgamma(static_cast<double>(s))) * gamma_lower_regularized(s, x);
}

double bessel_k0(double x) {
    if (!(x > 0.0)) throw InvalidArgument("bessel_k0: x must be positive");
    if (std::isinf(x)) return 0.0;
    return x <= 2.0 ? k0_series(x) : k0_continued_fraction(x);
}

double cascade_pdf(double x) {
    if (!(x >= 0.0)) throw InvalidArgument("cascade_pdf: x must be nonnegative");
    if (x == 0.0 || std::isinf(x)) return 0.0;
    return 4.0 * x * bessel_k0(2.0 * x);
}

} // namespace rtwnoma::specfun
