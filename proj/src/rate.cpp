// SPDX-License-Identifier: Apache-2.0
//
// rismp - RIS-aided multi-pair link analysis and phase-shift optimization
// Copyright (C) 2026 The rismp authors
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

#include "rismp/rate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace rismp
{

std::string to_string(RateMethod m)
{
    return m == RateMethod::closed_form ? "closed_form" : "monte_carlo";
}

double effective_channel_power(std::span<const cplx> h_b, const PhaseConfig &theta,
                               std::span<const cplx> h_a)
{
    if (h_b.size() != theta.size() || h_a.size() != theta.size())
        throw std::invalid_argument("effective_channel_power: length mismatch (h_b " +
                                    std::to_string(h_b.size()) + ", theta " + std::to_string(theta.size()) +
                                    ", h_a " + std::to_string(h_a.size()) + ")");
    double re = 0.0, im = 0.0;
    for (std::size_t l = 0; l < theta.size(); ++l)
    {
        const double c = std::cos(theta.angle(l)), s = std::sin(theta.angle(l));
        // (b * a) * e^{j theta}
        const double pr = h_b[l].real() * h_a[l].real() - h_b[l].imag() * h_a[l].imag();
        const double pi = h_b[l].real() * h_a[l].imag() + h_b[l].imag() * h_a[l].real();
        re += pr * c - pi * s;
        im += pr * s + pi * c;
    }
    return re * re + im * im;
}

namespace
{

void check_dims(const SystemParams &params, const PhaseConfig &theta, const char *who)
{
    params.validate();
    if (theta.size() != params.L)
        throw std::invalid_argument(std::string(who) + ": theta has " + std::to_string(theta.size()) +
                                    " entries but L = " + std::to_string(params.L));
}

double sinr_from_powers(const SystemParams &params, std::span<const double> g, std::size_t i)
{
    // g[i * K + j] = |h_b[i]^T Theta h_a[j]|^2
    const std::size_t K = params.K;
    const auto &rx = params.pairs[i];
    double interference = 0.0;
    for (std::size_t j = 0; j < K; ++j)
    {
        if (j == i)
            continue;
        interference += params.pairs[j].power * rx.alpha_b * params.pairs[j].alpha_a * g[i * K + j];
    }
    const double signal = rx.power * rx.alpha_b * rx.alpha_a * g[i * K + i];
    return signal / (interference + rx.noise_var);
}

} // namespace

double instantaneous_sinr(const ChannelRealization &realization, const PhaseConfig &theta,
                          const SystemParams &params, std::size_t i)
{
    check_dims(params, theta, "instantaneous_sinr");
    if (i >= params.K)
        throw std::invalid_argument("instantaneous_sinr: pair index " + std::to_string(i) + " out of range (K = " +
                                    std::to_string(params.K) + ")");
    if (realization.h_a.size() != params.K || realization.h_b.size() != params.K)
        throw std::invalid_argument("instantaneous_sinr: realization does not have K vectors per side");
    const std::size_t K = params.K;
    std::vector<double> g(K * K, 0.0);
    for (std::size_t j = 0; j < K; ++j)
        g[i * K + j] = effective_channel_power(realization.h_b[i], theta, realization.h_a[j]);
    return sinr_from_powers(params, g, i);
}

RateReport monte_carlo_rates(const SystemParams &params, const PhaseConfig &theta, std::size_t trials,
                             const Rng &rng)
{
    check_dims(params, theta, "monte_carlo_rates");
    if (trials == 0)
        throw std::invalid_argument("monte_carlo_rates: trials must be >= 1");

    const std::size_t K = params.K, L = params.L;
    const RealizationSampler sampler(params);
    std::vector<double> cos_t(L), sin_t(L);
    for (std::size_t l = 0; l < L; ++l)
    {
        cos_t[l] = std::cos(theta.angle(l));
        sin_t[l] = std::sin(theta.angle(l));
    }

    // One slot per (trial, pair); filled in any order, reduced in trial order.
    std::vector<double> log_rate(trials * K);

    auto run_range = [&](std::size_t begin, std::size_t end) {
        ChannelRealization h;
        std::vector<double> g(K * K);
        std::vector<double> br(L), bi(L);
        for (std::size_t t = begin; t < end; ++t)
        {
            Rng trial_rng = rng.split(t);
            sampler.sample(trial_rng, h);
            for (std::size_t i = 0; i < K; ++i)
            {
                for (std::size_t l = 0; l < L; ++l)
                {
                    // h_b[i][l] e^{j theta_l}
                    br[l] = h.h_b[i][l].real() * cos_t[l] - h.h_b[i][l].imag() * sin_t[l];
                    bi[l] = h.h_b[i][l].real() * sin_t[l] + h.h_b[i][l].imag() * cos_t[l];
                }
                for (std::size_t j = 0; j < K; ++j)
                {
                    double re = 0.0, im = 0.0;
                    const auto &a = h.h_a[j];
                    for (std::size_t l = 0; l < L; ++l)
                    {
                        re += br[l] * a[l].real() - bi[l] * a[l].imag();
                        im += br[l] * a[l].imag() + bi[l] * a[l].real();
                    }
                    g[i * K + j] = re * re + im * im;
                }
            }
            for (std::size_t i = 0; i < K; ++i)
                log_rate[t * K + i] = std::log2(1.0 + sinr_from_powers(params, g, i));
        }
    };

    const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::min<std::size_t>(hw, (trials + 1023) / 1024);
    if (workers <= 1)
    {
        run_range(0, trials);
    }
    else
    {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (trials + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w)
        {
            const std::size_t b = w * chunk, e = std::min(trials, b + chunk);
            if (b < e)
                pool.emplace_back(run_range, b, e);
        }
    }

    RateReport rep;
    rep.method = RateMethod::monte_carlo;
    rep.trials = trials;
    rep.per_pair.assign(K, 0.0);
    rep.std_error.assign(K, 0.0);
    std::vector<double> sq(K, 0.0);
    double sum_mean = 0.0, sum_sq = 0.0;
    for (std::size_t t = 0; t < trials; ++t)
    {
        double s = 0.0;
        for (std::size_t i = 0; i < K; ++i)
        {
            const double v = log_rate[t * K + i];
            rep.per_pair[i] += v;
            sq[i] += v * v;
            s += v;
        }
        sum_mean += s;
        sum_sq += s * s;
    }
    const double n = static_cast<double>(trials);
    auto std_err = [n](double total, double total_sq) {
        if (n < 2.0)
            return 0.0;
        const double mean = total / n;
        const double var = std::max(0.0, (total_sq - n * mean * mean) / (n - 1.0));
        return std::sqrt(var / n);
    };
    for (std::size_t i = 0; i < K; ++i)
    {
        rep.std_error[i] = std_err(rep.per_pair[i], sq[i]);
        rep.per_pair[i] /= n;
    }
    rep.sum_std_error = std_err(sum_mean, sum_sq);
    rep.sum = 0.0;
    for (double r : rep.per_pair)
        rep.sum += r;
    return rep;
}

double omega(const PhaseConfig &theta, double aoa, double aod)
{
    const double step = std::numbers::pi * (std::sin(aoa) + std::sin(aod));
    double re = 0.0, im = 0.0;
    for (std::size_t l = 0; l < theta.size(); ++l)
    {
        const double phase = theta.angle(l) + static_cast<double>(l) * step;
        re += std::cos(phase);
        im += std::sin(phase);
    }
    return re * re + im * im;
}

double omega_double_sum(const PhaseConfig &theta, double aoa, double aod)
{
    const double step = std::numbers::pi * (std::sin(aoa) + std::sin(aod));
    const std::size_t L = theta.size();
    double acc = 0.0;
    for (std::size_t m = 0; m < L; ++m)
        for (std::size_t n = m + 1; n < L; ++n)
            acc += std::cos(theta.angle(n) - theta.angle(m) + static_cast<double>(n - m) * step);
    return static_cast<double>(L) + 2.0 * acc;
}

double second_moment(double kappa_rx, double kappa_tx, double omega_val, std::size_t L)
{
    if (!(kappa_rx >= 0.0) || !(kappa_tx >= 0.0))
        throw std::invalid_argument("second_moment: Rician factors must be >= 0");
    const double Ld = static_cast<double>(L);
    const double tol = 1e-9 * Ld * Ld;
    if (!(omega_val >= -tol && omega_val <= Ld * Ld + tol))
        throw std::invalid_argument("second_moment: omega " + std::to_string(omega_val) + " outside [0, L^2]");
    return (kappa_rx * kappa_tx * omega_val + Ld * (kappa_rx + kappa_tx) + Ld) /
           ((kappa_rx + 1.0) * (kappa_tx + 1.0));
}

RateReport approx_rates(const SystemParams &params, const PhaseConfig &theta)
{
    check_dims(params, theta, "approx_rates");
    return SumRateModel(params).rates(theta);
}

SumRateModel::SumRateModel(const SystemParams &params) : params_(params)
{
    params_.validate();
    const std::size_t K = params_.K, L = params_.L;
    const double Ld = static_cast<double>(L);
    steer_re_.resize(K * K * L);
    steer_im_.resize(K * K * L);
    slope_.resize(K * K);
    offset_.resize(K * K);
    gain_.resize(K * K);
    for (std::size_t i = 0; i < K; ++i)
    {
        const auto &rx = params_.pairs[i];
        for (std::size_t j = 0; j < K; ++j)
        {
            const auto &tx = params_.pairs[j];
            const double step = std::numbers::pi * (std::sin(rx.aoa) + std::sin(tx.aod));
            for (std::size_t l = 0; l < L; ++l)
            {
                steer_re_[(i * K + j) * L + l] = std::cos(static_cast<double>(l) * step);
                steer_im_[(i * K + j) * L + l] = std::sin(static_cast<double>(l) * step);
            }
            const double kb = rx.kappa_rx, ka = tx.kappa_tx;
            const double den = (kb + 1.0) * (ka + 1.0);
            slope_[i * K + j] = kb * ka / den;
            offset_[i * K + j] = (Ld * (kb + ka) + Ld) / den;
            gain_[i * K + j] = tx.power * rx.alpha_b * tx.alpha_a;
        }
    }
}

void SumRateModel::per_pair(std::span<const double> c, std::span<const double> s, std::span<double> out) const
{
    const std::size_t K = params_.K, L = params_.L;
    for (std::size_t i = 0; i < K; ++i)
    {
        double signal = 0.0, interference = 0.0;
        for (std::size_t j = 0; j < K; ++j)
        {
            const double *sr = &steer_re_[(i * K + j) * L];
            const double *si = &steer_im_[(i * K + j) * L];
            double re = 0.0, im = 0.0;
            for (std::size_t l = 0; l < L; ++l)
            {
                re += c[l] * sr[l] - s[l] * si[l];
                im += c[l] * si[l] + s[l] * sr[l];
            }
            const double m = slope_[i * K + j] * (re * re + im * im) + offset_[i * K + j];
            const double p = gain_[i * K + j] * m;
            if (j == i)
                signal = p;
            else
                interference += p;
        }
        out[i] = std::log2(1.0 + signal / (interference + params_.pairs[i].noise_var));
    }
}

RateReport SumRateModel::rates(const PhaseConfig &theta) const
{
    if (theta.size() != params_.L)
        throw std::invalid_argument("SumRateModel: theta has " + std::to_string(theta.size()) +
                                    " entries but L = " + std::to_string(params_.L));
    std::vector<double> c(params_.L), s(params_.L);
    for (std::size_t l = 0; l < params_.L; ++l)
    {
        c[l] = std::cos(theta.angle(l));
        s[l] = std::sin(theta.angle(l));
    }
    RateReport rep;
    rep.method = RateMethod::closed_form;
    rep.per_pair.resize(params_.K);
    per_pair(c, s, rep.per_pair);
    for (double r : rep.per_pair)
        rep.sum += r;
    return rep;
}

double SumRateModel::sum_rate(const PhaseConfig &theta) const
{
    return rates(theta).sum;
}

double SumRateModel::sum_rate(std::span<const double> cos_theta, std::span<const double> sin_theta) const
{
    std::vector<double> out(params_.K);
    per_pair(cos_theta, sin_theta, out);
    double sum = 0.0;
    for (double r : out)
        sum += r;
    return sum;
}

} // namespace rismp
