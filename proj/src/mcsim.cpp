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

#include "rtwnoma/mcsim.hpp"

#include "rtwnoma/error.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace rtwnoma::mcsim {

std::string_view to_string(Metric metric) noexcept {
    return metric == Metric::outage ? "outage" : "ergodic_rate";
}

std::string_view to_string(ResidualMode mode) noexcept {
    return mode == ResidualMode::random ? "random" : "averaged";
}

namespace {

// Welford accumulator; merge() is Chan's parallel update.
struct Moments {
    std::uint64_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) noexcept {
        ++n;
        const double delta = x - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (x - mean);
    }

    static Moments merge(const Moments& a, const Moments& b) noexcept {
        if (a.n == 0) return b;
        if (b.n == 0) return a;
        Moments out;
        out.n = a.n + b.n;
        const double na = static_cast<double>(a.n);
        const double nb = static_cast<double>(b.n);
        const double delta = b.mean - a.mean;
        out.mean = a.mean + delta * nb / static_cast<double>(out.n);
        out.m2 = a.m2 + b.m2 + delta * delta * na * nb / static_cast<double>(out.n);
        return out;
    }
};

Moments reduce_tree(std::span<const Moments> parts) {
    if (parts.empty()) return {};
    if (parts.size() == 1) return parts[0];
    const std::size_t mid = parts.size() / 2;
    return Moments::merge(reduce_tree(parts.first(mid)), reduce_tree(parts.subspan(mid)));
}

unsigned resolve_threads(unsigned requested, std::size_t batches) {
    unsigned n = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
    return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(batches, 1)));
}

// per_trial(rng, trial_index) returns the sample of one trial. It must throw
// NumericError itself if a sample is not finite.
template <class PerTrial>
Moments run_batches(std::uint64_t trials, const channel::RngHandle& stream, const ExecOptions& exec,
                    const PerTrial& per_trial) {
    const std::uint64_t batches = (trials + batch_size - 1) / batch_size;
    std::vector<Moments> parts(batches);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        channel::RngHandle rng = stream;
        for (;;) {
            const std::uint64_t b = next.fetch_add(1);
            if (b >= batches) return;
            try {
                Moments acc;
                const std::uint64_t end = std::min(trials, (b + 1) * batch_size);
                for (std::uint64_t i = b * batch_size; i < end; ++i) acc.add(per_trial(rng, i));
                parts[b] = acc;
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = batches;
                return;
            }
        }
    };

    const unsigned threads = resolve_threads(exec.threads, batches);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return reduce_tree(parts);
}

Estimate to_estimate(const Moments& m, bool is_outage) {
    Estimate e;
    e.trials = m.n;
    e.value = m.mean;
    const double variance = m.n > 1 ? m.m2 / static_cast<double>(m.n - 1) : 0.0;
    e.std_error = std::sqrt(std::max(variance, 0.0) / static_cast<double>(m.n));
    e.ci95_half_width = 1.96 * e.std_error;
    if (is_outage) {
        // Rounded to undo the drift of the running mean.
        const auto events = static_cast<std::uint64_t>(std::llround(m.mean * static_cast<double>(m.n)));
        e.low_confidence = events < min_outage_events;
        e.value = std::clamp(e.value, 0.0, 1.0);
    }
    return e;
}

void check_trials(std::uint64_t trials) {
    if (trials == 0) throw InvalidArgument("simulate: trials must be at least 1");
}

[[noreturn]] void non_finite(std::uint64_t trial) {
    throw NumericError("simulate: non-finite SINR at trial " + std::to_string(trial));
}

} // namespace

Estimate estimate_mean(const SystemConfig& cfg, std::uint64_t trials, channel::RngHandle stream,
                       const std::function<double(const channel::ChannelDraw&)>& fn, const ExecOptions& exec) {
    check_trials(trials);
    cfg.validate();
    const std::uint64_t stride = channel::blocks_per_draw(cfg);
    const auto m = run_batches(trials, stream, exec, [&](channel::RngHandle& rng, std::uint64_t i) {
        rng.seek(i * stride);
        const double x = fn(channel::draw(cfg, rng));
        if (!std::isfinite(x)) non_finite(i);
        return x;
    });
    return to_estimate(m, false);
}

Estimate simulate(const SimSpec& spec, std::uint64_t stream_id, const ExecOptions& exec) {
    check_trials(spec.trials);
    spec.cfg.validate();
    if (!(spec.pu > 0.0) || !std::isfinite(spec.pu)) throw InvalidArgument("simulate: pu must be positive and finite");

    const SystemConfig& cfg = spec.cfg;
    const std::uint64_t stride = channel::blocks_per_draw(cfg);
    const double gamma_th = decoding_threshold(cfg, spec.scheme, spec.user);
    const bool outage = spec.metric == Metric::outage;
    const bool relay = spec.scheme == Scheme::twr_oma;
    const bool random_residual = spec.scheme == Scheme::ris_tw_noma && spec.user == User::d1 &&
                                 cfg.sic_mode == SicMode::imperfect && cfg.sigma_gh_sq > 0.0 &&
                                 spec.residual_mode == ResidualMode::random;
    const double rate_scale = spec.scheme == Scheme::ris_tw_noma ? 1.0 : 0.5;

    auto sinr_of = [&](double chi, double h_sq, double gh_sq) {
        switch (spec.scheme) {
        case Scheme::ris_tw_noma:
            return spec.user == User::d1 ? sinr_noma_d1(chi * chi, gh_sq, spec.pu, cfg)
                                         : sinr_noma_d2(chi * chi, spec.pu, cfg);
        case Scheme::ris_tw_oma: return sinr_oma_ris(chi * chi, spec.pu, cfg, spec.user);
        case Scheme::twr_oma: return sinr_twr_oma(h_sq, spec.pu, cfg, spec.user);
        }
        return 0.0;
    };

    // Only the quantities the case needs are sampled; the per-trial layout of
    // channel::draw() is preserved so every case reads the same realisation.
    auto per_trial = [&](channel::RngHandle& rng, std::uint64_t i) {
        const std::uint64_t start = i * stride;
        double chi = 0.0;
        double h_sq = 0.0;
        double gh_sq = cfg.sigma_gh_sq;
        if (relay) {
            rng.seek(start + cfg.m_elements);
            h_sq = channel::sample_rayleigh_power(1.0, rng);
        } else {
            rng.seek(start);
            chi = channel::sample_cascade(cfg.m_elements, rng);
            if (random_residual) {
                rng.next_u64();
                gh_sq = channel::sample_rayleigh_power(cfg.sigma_gh_sq, rng);
            }
        }
        const double sinr = sinr_of(chi, h_sq, gh_sq);
        if (!std::isfinite(sinr)) non_finite(i);
        if (outage) return sinr < gamma_th ? 1.0 : 0.0;
        return rate_scale * std::log2(1.0 + sinr);
    };

    const channel::RngHandle stream(spec.seed, stream_id);
    return to_estimate(run_batches(spec.trials, stream, exec, per_trial), outage);
}

std::vector<Estimate> sweep_simulate(std::span<const SimSpec> specs, const ExecOptions& exec) {
    std::vector<Estimate> out;
    out.reserve(specs.size());
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const std::string where = "sweep spec #" + std::to_string(i) + ": ";
        try {
            out.push_back(simulate(specs[i], i, exec));
        } catch (const InvalidArgument& e) {
            throw InvalidArgument(where + e.what());
        } catch (const ValidationError& e) {
            throw ValidationError(where + e.what());
        } catch (const NumericError& e) {
            throw NumericError(where + e.what());
        }
    }
    return out;
}

} // namespace rtwnoma::mcsim
