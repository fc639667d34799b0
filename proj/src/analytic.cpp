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

#include "rtwnoma/analytic.hpp"

#include "rtwnoma/error.hpp"
#include "rtwnoma/quadrature.hpp"
#include "rtwnoma/specfun.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace rtwnoma::analytic {

namespace {

constexpr double pi = std::numbers::pi;

void check_query(const OutageQuery& q) {
    q.cfg.validate();
    if (!(q.pu > 0.0) || !std::isfinite(q.pu)) throw InvalidArgument("outage: pu must be positive and finite");
}

void require_scheme(const OutageQuery& q, Scheme expected, const char* op) {
    if (q.scheme != expected)
        throw InvalidArgument(std::string(op) + ": scheme mismatch, expected " + std::string(to_string(expected)) +
                              " but got " + std::string(to_string(q.scheme)));
}

unsigned half_elements(unsigned m, const char* op) {
    if (m % 2 != 0)
        throw ValidationError(std::string(op) + ": the bound assumes an even number of RIS elements M (L = M/2), got M = " +
                              std::to_string(m));
    return m / 2;
}

// ln((pi^2 / 8)^L) = ln(2^-L pi^(M/2) Gamma(3/2)^M), kept in log space.
double log_bound_constant(unsigned m) {
    return -0.5 * m * std::log(2.0) + 0.5 * m * std::log(pi) + m * std::lgamma(1.5);
}

// Noise-plus-interference over P_u * a for the signal the user decodes.
double ergodic_scale(Scheme scheme, User user, SicMode sic, double pu, const SystemConfig& cfg) {
    const double a = decoded_allocation(cfg, user);
    if (scheme == Scheme::ris_tw_oma) return (user == User::d1 ? cfg.sigma_n1_sq : cfg.sigma_n2_sq) / (pu * a);
    if (user == User::d2) return (cfg.sigma_i2_sq + cfg.sigma_n2_sq) / (pu * a);
    const double eps = sic == SicMode::imperfect ? cfg.epsilon_sic : 0.0;
    return (eps * pu * cfg.sigma_gh_sq + cfg.sigma_i1_sq + cfg.sigma_n1_sq) / (pu * a);
}

} // namespace

AuxArg aux_arg(const OutageQuery& q) {
    const SystemConfig& c = q.cfg;
    const double gamma_th = decoding_threshold(c, q.scheme, q.user);
    const double a = decoded_allocation(c, q.user);
    double noise = 0.0;
    switch (q.scheme) {
    case Scheme::ris_tw_noma:
        noise = q.user == User::d1 ? c.effective_epsilon() * q.pu * c.sigma_gh_sq + c.sigma_i1_sq + c.sigma_n1_sq
                                   : c.sigma_i2_sq + c.sigma_n2_sq;
        break;
    case Scheme::ris_tw_oma:
        noise = q.user == User::d1 ? c.sigma_n1_sq : c.sigma_n2_sq;
        break;
    case Scheme::twr_oma:
        throw InvalidArgument("aux_arg: the relay benchmark has no cascade argument");
    }
    return {std::sqrt(gamma_th * noise / (q.pu * a))};
}

ClampedProbability clt_outage(AuxArg arg, unsigned m_elements) {
    if (m_elements == 0) throw InvalidArgument("clt_outage: m_elements must be at least 1");
    if (std::isnan(arg.value)) throw InvalidArgument("clt_outage: argument is NaN");
    if (std::isinf(arg.value)) return {arg.value > 0 ? 1.0 : 0.0, false};
    const auto mom = specfun::cascade_moments();
    const double m = m_elements;
    const double z = std::sqrt(m / (2.0 * mom.variance)) * (arg.value / m - mom.mean);
    // 1/2 + phi(z)/sqrt(pi) written as erfc(-z)/2 to keep the lower tail accurate.
    const double p = 0.5 * std::erfc(-z);
    if (p < 0.0) return {0.0, true};
    if (p > 1.0) return {1.0, true};
    return {p, false};
}

ClampedProbability outage_noma(const OutageQuery& q) {
    require_scheme(q, Scheme::ris_tw_noma, "outage_noma");
    check_query(q);
    return clt_outage(aux_arg(q), q.cfg.m_elements);
}

ClampedProbability outage_oma(const OutageQuery& q) {
    require_scheme(q, Scheme::ris_tw_oma, "outage_oma");
    check_query(q);
    return clt_outage(aux_arg(q), q.cfg.m_elements);
}

ClampedProbability outage_twr_oma(const OutageQuery& q) {
    require_scheme(q, Scheme::twr_oma, "outage_twr_oma");
    check_query(q);
    const double gamma_th = decoding_threshold(q.cfg, q.scheme, q.user);
    const double noise = q.user == User::d1 ? q.cfg.sigma_n1_sq : q.cfg.sigma_n2_sq;
    const double a = decoded_allocation(q.cfg, q.user);
    // |h|^2 ~ Exp(1): Pr[|h|^2 < gamma_th noise / (P_u a)]
    return {-std::expm1(-gamma_th * noise / (q.pu * a)), false};
}

ClampedProbability outage(const OutageQuery& q) {
    switch (q.scheme) {
    case Scheme::ris_tw_noma: return outage_noma(q);
    case Scheme::ris_tw_oma: return outage_oma(q);
    case Scheme::twr_oma: return outage_twr_oma(q);
    }
    throw InvalidArgument("outage: unknown scheme");
}

ClampedProbability outage_upper_bound(const OutageQuery& q) {
    if (q.scheme == Scheme::twr_oma) throw InvalidArgument("outage_upper_bound: not defined for the relay benchmark");
    check_query(q);
    const unsigned l = half_elements(q.cfg.m_elements, "outage_upper_bound");
    const double arg = aux_arg(q).value;
    const double reg = specfun::gamma_lower_regularized(static_cast<int>(3 * l), 2.0 * arg);
    if (reg == 0.0) return {0.0, false};
    const double log_value = log_bound_constant(q.cfg.m_elements) + std::log(reg);
    if (log_value > 0.0) return {1.0, true};
    return {std::exp(log_value), false};
}

ClampedProbability outage_asymptotic(const OutageQuery& q) {
    if (q.scheme == Scheme::twr_oma) throw InvalidArgument("outage_asymptotic: not defined for the relay benchmark");
    check_query(q);
    const unsigned l = half_elements(q.cfg.m_elements, "outage_asymptotic");
    double arg = aux_arg(q).value;
    const SystemConfig& c = q.cfg;
    const double residual = c.effective_epsilon() * c.sigma_gh_sq;
    if (q.scheme == Scheme::ris_tw_noma && q.user == User::d1 && residual > 0.0)
        arg = std::sqrt(decoding_threshold(c, q.scheme, q.user) * residual / c.a2);
    if (arg == 0.0) return {0.0, false};
    const double s = 3.0 * l;
    const double log_value = log_bound_constant(c.m_elements) + s * std::log(2.0 * arg) - std::lgamma(s + 1.0);
    if (log_value > 0.0) return {1.0, true};
    return {std::exp(log_value), false};
}

double ergodic_clt_integral(double scale, unsigned m_elements) {
    if (!(scale > 0.0) || !std::isfinite(scale)) throw InvalidArgument("ergodic: scale must be positive and finite");
    if (m_elements == 0) throw InvalidArgument("ergodic: m_elements must be at least 1");
    const auto mom = specfun::cascade_moments();
    const double m = m_elements;
    const double c = std::sqrt(m / (2.0 * mom.variance));

    // 1 - F(y) = erfc(w)/2 with w = c (sqrt(y scale)/M - pi/4). Past w = 9 the
    // complement is below 1e-36 and the integrand is taken as zero.
    auto y_at = [&](double w) {
        const double root = m * (mom.mean + w / c);
        return root > 0.0 ? root * root / scale : 0.0;
    };
    const double y_hi = y_at(9.0);
    auto to_t = [](double y) { return y / (1.0 + y); };
    const double t_hi = to_t(y_hi);

    std::vector<double> breaks;
    for (double w : {-3.0, -1.0, 0.0, 1.0, 3.0}) breaks.push_back(to_t(y_at(w)));
    for (double y = 1e-3; y < y_hi; y *= 10.0) breaks.push_back(to_t(y));

    // y = t / (1 - t) maps [0, inf) onto [0, 1); dy / (1 + y) = dt / (1 - t).
    auto integrand = [&](double t) {
        const double y = t / (1.0 - t);
        const double w = c * (std::sqrt(y * scale) / m - mom.mean);
        return 0.5 * std::erfc(w) / (1.0 - t);
    };
    quadrature::Options opt;
    opt.abs_tol = 1e-10;
    opt.rel_tol = 1e-12;
    const auto r = quadrature::integrate(integrand, 0.0, t_hi, breaks, opt);
    return r.value / std::numbers::ln2;
}

double ergodic_noma(User user, SicMode sic_mode, double pu, const SystemConfig& cfg) {
    cfg.validate();
    if (!(pu > 0.0) || !std::isfinite(pu)) throw InvalidArgument("ergodic_noma: pu must be positive and finite");
    return ergodic_clt_integral(ergodic_scale(Scheme::ris_tw_noma, user, sic_mode, pu, cfg), cfg.m_elements);
}

double ergodic_oma(User user, double pu, const SystemConfig& cfg) {
    cfg.validate();
    if (!(pu > 0.0) || !std::isfinite(pu)) throw InvalidArgument("ergodic_oma: pu must be positive and finite");
    return 0.5 * ergodic_clt_integral(ergodic_scale(Scheme::ris_tw_oma, user, SicMode::perfect, pu, cfg),
                                      cfg.m_elements);
}

double ergodic_jensen_upper(double pu, const SystemConfig& cfg, User user) {
    cfg.validate();
    if (!(pu > 0.0) || !std::isfinite(pu)) throw InvalidArgument("ergodic_jensen_upper: pu must be positive and finite");
    const double m = cfg.m_elements;
    const double second_moment = ((pi * m) * (pi * m) + 16.0 * m - m * pi * pi) / 16.0;
    const double a = decoded_allocation(cfg, user);
    const double noise = user == User::d1 ? cfg.sigma_i1_sq + cfg.sigma_n1_sq : cfg.sigma_i2_sq + cfg.sigma_n2_sq;
    return std::log2(1.0 + pu * a * second_moment / noise);
}

} // namespace rtwnoma::analytic
