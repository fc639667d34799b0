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

#include "doctest.h"

#include "rtwnoma/analytic.hpp"
#include "rtwnoma/error.hpp"
#include "rtwnoma/units.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <limits>
#include <numbers>

using namespace rtwnoma;
using analytic::OutageQuery;

namespace {

constexpr double pi = std::numbers::pi;

// Normal approximation of Pr[chi < arg] written out from the cascade moments.
double clt_oracle(double arg, unsigned m) {
    const double var = 1.0 - pi * pi / 16.0;
    const double z = (arg - m * pi / 4.0) / std::sqrt(m * var);
    return 0.5 * boost::math::erfc(-z / std::sqrt(2.0));
}

double bound_oracle(double arg, unsigned m) {
    const int l = static_cast<int>(m / 2);
    return std::min(1.0, std::pow(pi * pi / 8.0, l) * boost::math::gamma_p(3 * l, 2.0 * arg));
}

double asymptotic_oracle(double arg, unsigned m) {
    const int l = static_cast<int>(m / 2);
    return std::min(1.0, std::pow(pi * pi / 8.0, l) * std::pow(2.0 * arg, 3 * l) / std::tgamma(3 * l + 1.0));
}

double ergodic_oracle(double scale, unsigned m) {
    boost::math::quadrature::exp_sinh<double> es;
    auto f = [&](double y) { return (1.0 - clt_oracle(std::sqrt(y * scale), m)) / (1.0 + y); };
    return es.integrate(f, 0.0, std::numeric_limits<double>::infinity()) / std::log(2.0);
}

double db(double v) { return units::db_to_linear(v); }

SystemConfig perfect(unsigned m = 8) {
    SystemConfig c;
    c.m_elements = m;
    c.sic_mode = SicMode::perfect;
    return c;
}

} // namespace

TEST_SUITE("analytic") {

TEST_CASE("auxiliary arguments") {
    const SystemConfig c;
    const double pu = 100.0;
    const double tau = std::sqrt(31.0 / (pu * 0.8) * (pu * c.sigma_gh_sq + c.sigma_i1_sq + 1.0));
    CHECK(analytic::aux_arg({Scheme::ris_tw_noma, User::d1, pu, c}).value == doctest::Approx(tau).epsilon(1e-14));
    const double psi = std::sqrt(31.0 / (pu * 0.8) * (c.sigma_i1_sq + 1.0));
    CHECK(analytic::aux_arg({Scheme::ris_tw_noma, User::d1, pu, perfect()}).value == doctest::Approx(psi).epsilon(1e-14));
    const double beta = std::sqrt(3.0 / (pu * 0.2) * (c.sigma_i2_sq + 1.0));
    CHECK(analytic::aux_arg({Scheme::ris_tw_noma, User::d2, pu, c}).value == doctest::Approx(beta).epsilon(1e-14));
    CHECK(analytic::aux_arg({Scheme::ris_tw_oma, User::d1, pu, c}).value ==
          doctest::Approx(std::sqrt(31.0 / 80.0)).epsilon(1e-14));
    CHECK(analytic::aux_arg({Scheme::ris_tw_oma, User::d2, pu, c}).value ==
          doctest::Approx(std::sqrt(3.0 / 20.0)).epsilon(1e-14));
    CHECK_THROWS_AS(analytic::aux_arg({Scheme::twr_oma, User::d1, pu, c}), InvalidArgument);
}

TEST_CASE("clt outage edge values") {
    CHECK(analytic::clt_outage({8 * pi / 4}, 8).value == 0.5);
    CHECK(analytic::clt_outage({std::numeric_limits<double>::infinity()}, 8).value == 1.0);
    CHECK(analytic::clt_outage({1e6}, 8).value == doctest::Approx(1.0));
    CHECK(analytic::clt_outage({0.0}, 64).value < 1e-20);
    CHECK_FALSE(analytic::clt_outage({3.0}, 8).clamped);
}

TEST_CASE("clt outage matches the normal-approximation oracle") {
    const SystemConfig ip;
    for (unsigned m : {2u, 4u, 8u, 16u, 32u})
        for (double pu_db = -10; pu_db <= 50; pu_db += 2.5) {
            for (Scheme s : {Scheme::ris_tw_noma, Scheme::ris_tw_oma})
                for (User u : {User::d1, User::d2})
                    for (SicMode sic : {SicMode::perfect, SicMode::imperfect}) {
                        SystemConfig c = ip;
                        c.m_elements = m;
                        c.sic_mode = sic;
                        const OutageQuery q{s, u, db(pu_db), c};
                        const double arg = analytic::aux_arg(q).value;
                        INFO("M = " << m << ", pu_db = " << pu_db);
                        CHECK(analytic::outage(q).value ==
                              doctest::Approx(clt_oracle(arg, m)).epsilon(1e-12).scale(1e-300));
                    }
        }
}

TEST_CASE("imperfect SIC with no residual equals perfect SIC") {
    SystemConfig c;
    c.sigma_gh_sq = 0.0;
    for (double pu_db : {0.0, 10.0, 30.0}) {
        const double ip = analytic::outage({Scheme::ris_tw_noma, User::d1, db(pu_db), c}).value;
        const double p = analytic::outage({Scheme::ris_tw_noma, User::d1, db(pu_db), perfect()}).value;
        CHECK(ip == p);
    }
}

TEST_CASE("imperfect SIC outage approaches its error floor") {
    const SystemConfig c;
    const double floor_arg = std::sqrt(31.0 * c.sigma_gh_sq / 0.8);
    const double floor = analytic::clt_outage({floor_arg}, 8).value;
    double prev = 1.0;
    for (double pu_db = 0; pu_db <= 80; pu_db += 10) {
        const double v = analytic::outage({Scheme::ris_tw_noma, User::d1, db(pu_db), c}).value;
        CHECK(v <= prev);
        CHECK(v >= floor);
        prev = v;
    }
    CHECK(prev == doctest::Approx(floor).epsilon(1e-6));
}

TEST_CASE("oma outage symmetry") {
    // With equal rates and noise, d1 at P_u matches d2 at P_u a2 / a1.
    SystemConfig c;
    c.r1 = c.r2 = 3.0;
    const double d1 = analytic::outage({Scheme::ris_tw_oma, User::d1, 50.0, c}).value;
    const double d2 = analytic::outage({Scheme::ris_tw_oma, User::d2, 50.0 * 0.8 / 0.2, c}).value;
    CHECK(d1 == doctest::Approx(d2).epsilon(1e-14));
}

TEST_CASE("relay benchmark outage") {
    const SystemConfig c;
    const double v = analytic::outage({Scheme::twr_oma, User::d1, 100.0, c}).value;
    CHECK(v == doctest::Approx(1.0 - std::exp(-31.0 / 80.0)).epsilon(1e-14));
    CHECK(v == doctest::Approx(0.32128).epsilon(1e-4));
    CHECK(analytic::outage({Scheme::twr_oma, User::d1, 1e300, c}).value < 1e-290);
    SystemConfig zero = c;
    zero.r2 = 0.0;
    CHECK(analytic::outage({Scheme::twr_oma, User::d1, 100.0, zero}).value == 0.0);
}

TEST_CASE("scheme mismatch and bad input") {
    const SystemConfig c;
    CHECK_THROWS_AS(analytic::outage_noma({Scheme::ris_tw_oma, User::d1, 10.0, c}), InvalidArgument);
    CHECK_THROWS_AS(analytic::outage_oma({Scheme::twr_oma, User::d1, 10.0, c}), InvalidArgument);
    CHECK_THROWS_AS(analytic::outage_twr_oma({Scheme::ris_tw_noma, User::d1, 10.0, c}), InvalidArgument);
    CHECK_THROWS_AS(analytic::outage({Scheme::ris_tw_noma, User::d1, 0.0, c}), InvalidArgument);
    SystemConfig bad = c;
    bad.a1 = 0.6;
    bad.a2 = 0.4;
    CHECK_THROWS_AS(analytic::outage({Scheme::ris_tw_noma, User::d1, 10.0, bad}), ValidationError);
}

TEST_CASE("upper bound matches its oracle") {
    for (unsigned m : {2u, 4u, 8u, 16u})
        for (double pu_db = 0; pu_db <= 60; pu_db += 5)
            for (Scheme s : {Scheme::ris_tw_noma, Scheme::ris_tw_oma})
                for (User u : {User::d1, User::d2}) {
                    const OutageQuery q{s, u, db(pu_db), perfect(m)};
                    const double arg = analytic::aux_arg(q).value;
                    INFO("M = " << m << ", pu_db = " << pu_db);
                    CHECK(analytic::outage_upper_bound(q).value ==
                          doctest::Approx(bound_oracle(arg, m)).epsilon(1e-10).scale(1e-300));
                }
}

TEST_CASE("upper bound limits") {
    // arg -> infinity: (pi^2/8)^L > 1, so the clamp engages.
    const auto far = analytic::outage_upper_bound({Scheme::ris_tw_noma, User::d2, 1e-12, perfect(2)});
    CHECK(far.value == 1.0);
    CHECK(far.clamped);
    // arg -> 0: gamma(s, 0) = 0.
    const auto near = analytic::outage_upper_bound({Scheme::ris_tw_noma, User::d2, 1e30, perfect(2)});
    CHECK(near.value < 1e-40);
    CHECK_FALSE(near.clamped);
}

TEST_CASE("odd M is rejected by the bound") {
    SystemConfig c = perfect(7);
    try {
        analytic::outage_upper_bound({Scheme::ris_tw_noma, User::d1, 10.0, c});
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("even number of RIS elements M") != std::string::npos);
    }
    CHECK_THROWS_AS(analytic::outage_asymptotic({Scheme::ris_tw_noma, User::d1, 10.0, c}), ValidationError);
    CHECK_THROWS_AS(analytic::outage_upper_bound({Scheme::twr_oma, User::d1, 10.0, perfect(8)}), InvalidArgument);
}

TEST_CASE("asymptotic outage") {
    for (unsigned m : {2u, 4u, 8u})
        for (double pu_db = 10; pu_db <= 60; pu_db += 10) {
            const OutageQuery q{Scheme::ris_tw_noma, User::d2, db(pu_db), perfect(m)};
            CHECK(analytic::outage_asymptotic(q).value ==
                  doctest::Approx(asymptotic_oracle(analytic::aux_arg(q).value, m)).epsilon(1e-11));
        }
    // Small-argument regime: bound and leading term agree.
    const OutageQuery q{Scheme::ris_tw_noma, User::d2, db(40), perfect(2)};
    CHECK(analytic::outage_asymptotic(q).value ==
          doctest::Approx(analytic::outage_upper_bound(q).value).epsilon(0.01));
    double prev_ratio = 0.0;
    for (double pu_db : {30.0, 50.0, 70.0, 90.0}) {
        const OutageQuery qq{Scheme::ris_tw_noma, User::d1, db(pu_db), perfect(4)};
        const double ratio = analytic::outage_asymptotic(qq).value / analytic::outage_upper_bound(qq).value;
        CHECK(ratio >= 1.0);
        if (prev_ratio > 0) CHECK(ratio <= prev_ratio);
        prev_ratio = ratio;
    }
    CHECK(prev_ratio == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("asymptotic imperfect SIC is the error floor") {
    SystemConfig c;
    c.m_elements = 16;
    const double floor_arg = std::sqrt(31.0 * c.epsilon_sic * c.sigma_gh_sq / c.a2);
    const double a = analytic::outage_asymptotic({Scheme::ris_tw_noma, User::d1, db(20), c}).value;
    const double b = analytic::outage_asymptotic({Scheme::ris_tw_noma, User::d1, db(60), c}).value;
    CHECK(a == b);
    CHECK(a == doctest::Approx(asymptotic_oracle(floor_arg, 16)).epsilon(1e-11));
}

TEST_CASE("ergodic integral matches quadrature of the CLT tail") {
    for (unsigned m : {2u, 8u, 32u})
        for (double scale : {1e-5, 1e-3, 0.05, 1.0, 20.0, 1e3}) {
            INFO("M = " << m << ", scale = " << scale);
            CHECK(analytic::ergodic_clt_integral(scale, m) == doctest::Approx(ergodic_oracle(scale, m)).epsilon(1e-8));
        }
}

TEST_CASE("ergodic rates") {
    const SystemConfig c;
    CHECK(analytic::ergodic_noma(User::d2, SicMode::perfect, 1e-9, c) < 1e-4);
    CHECK(analytic::ergodic_oma(User::d1, 1e-9, c) < 1e-4);

    const double scale_d2 = (c.sigma_i2_sq + 1.0) / (100.0 * 0.2);
    CHECK(analytic::ergodic_noma(User::d2, SicMode::imperfect, 100.0, c) ==
          doctest::Approx(ergodic_oracle(scale_d2, 8)).epsilon(1e-8));
    const double scale_oma = 1.0 / (100.0 * 0.8);
    CHECK(analytic::ergodic_oma(User::d1, 100.0, c) == doctest::Approx(0.5 * ergodic_oracle(scale_oma, 8)).epsilon(1e-8));

    // Rate ceiling under imperfect SIC: monotone saturation.
    double prev = 0.0;
    const double ceiling = analytic::ergodic_clt_integral(c.sigma_gh_sq / 0.8, 8);
    for (double pu_db = 0; pu_db <= 80; pu_db += 5) {
        const double v = analytic::ergodic_noma(User::d1, SicMode::imperfect, db(pu_db), c);
        CHECK(v >= prev);
        CHECK(v <= ceiling + 1e-9);
        prev = v;
    }
    CHECK(prev == doctest::Approx(ceiling).epsilon(1e-4));
}

TEST_CASE("jensen bound") {
    const SystemConfig c;
    const double pu = 1000.0;
    const double second = ((8 * pi) * (8 * pi) + 16.0 * 8 - 8 * pi * pi) / 16.0;
    const double hand = std::log2(1.0 + pu * 0.8 * second / (c.sigma_i1_sq + 1.0));
    CHECK(analytic::ergodic_jensen_upper(pu, c, User::d1) == doctest::Approx(hand).epsilon(1e-14));
    CHECK(analytic::ergodic_jensen_upper(pu, c, User::d1) == doctest::Approx(14.658374).epsilon(1e-6));
    CHECK(analytic::ergodic_jensen_upper(pu, c, User::d1) >=
          analytic::ergodic_noma(User::d1, SicMode::perfect, pu, c));
}

} // TEST_SUITE
