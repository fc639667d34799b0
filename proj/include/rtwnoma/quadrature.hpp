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

#ifndef RTWNOMA_QUADRATURE_HPP
#define RTWNOMA_QUADRATURE_HPP

#include "rtwnoma/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <queue>
#include <span>
#include <string>
#include <vector>

namespace rtwnoma::quadrature {

struct Result {
    double value = 0.0;
    double abs_error = 0.0;
    std::size_t evaluations = 0;
};

struct Options {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    std::size_t max_intervals = 4000;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
inline constexpr std::array<double, 8> kronrod_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

template <class F>
Segment kronrod15(F& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kronrod_weights[7];
    double gauss = fc * gauss_weights[3];
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kronrod_nodes[j];
        const double sum = f(center - dx) + f(center + dx);
        kronrod += kronrod_weights[j] * sum;
        if (j % 2 == 1) gauss += gauss_weights[j / 2] * sum;
    }
    return {a, b, kronrod * half, std::fabs((kronrod - gauss) * half)};
}

} // namespace detail

// Globally adaptive Gauss-Kronrod integration of f over [a, b], with the
// initial partition split at the given interior breakpoints. Throws
// NumericError when the tolerance is not reached within max_intervals.
template <class F>
Result integrate(F&& f, double a, double b, std::span<const double> breakpoints, const Options& opt = {}) {
    std::vector<double> edges{a};
    for (double p : breakpoints)
        if (p > a && p < b) edges.push_back(p);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());

    std::priority_queue<detail::Segment> queue;
    Result out;
    double total = 0.0;
    double error = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        if (edges[i + 1] <= edges[i]) continue;
        auto seg = detail::kronrod15(f, edges[i], edges[i + 1]);
        out.evaluations += 15;
        total += seg.value;
        error += seg.error;
        queue.push(seg);
    }

    while (error > std::max(opt.abs_tol, opt.rel_tol * std::fabs(total))) {
        if (queue.size() >= opt.max_intervals)
            throw NumericError("adaptive quadrature did not converge: error estimate " +
                               std::to_string(error) + " after " + std::to_string(queue.size()) +
                               " intervals");
        const auto worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b))
            throw NumericError("adaptive quadrature exhausted floating-point resolution");
        auto left = detail::kronrod15(f, worst.a, mid);
        auto right = detail::kronrod15(f, mid, worst.b);
        out.evaluations += 30;
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
    }

    // Re-sum from the final partition to drop the drift of incremental updates.
    total = 0.0;
    error = 0.0;
    std::vector<detail::Segment> parts;
    parts.reserve(queue.size());
    while (!queue.empty()) {
        parts.push_back(queue.top());
        queue.pop();
    }
    std::sort(parts.begin(), parts.end(), [](const auto& l, const auto& r) { return l.a < r.a; });
    for (const auto& s : parts) {
        total += s.value;
        error += s.error;
    }
    out.value = total;
    out.abs_error = error;
    if (!std::isfinite(out.value)) throw NumericError("adaptive quadrature produced a non-finite value");
    return out;
}

template <class F>
Result integrate(F&& f, double a, double b, const Options& opt = {}) {
    return integrate(std::forward<F>(f), a, b, std::span<const double>{}, opt);
}

} // namespace rtwnoma::quadrature

#endif
