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

#include "rismp/channel.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rismp
{

namespace
{

struct ReferenceRow
{
    double aoa;
    double aod;
    double alpha;
};

// AoA, AoD (rad) and the shared alpha_a = alpha_b of the reference deployment
constexpr std::array<ReferenceRow, 6> reference_rows{{
    {5.5629, 1.1450, 0.0023},
    {5.6486, 0.6226, 0.0285},
    {3.9329, 3.0773, 0.0025},
    {0.8663, 1.2142, 0.0012},
    {1.3685, 5.6290, 0.0550},
    {1.1444, 0.6226, 0.0141},
}};

void require(bool ok, const std::string &what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

} // namespace

double wrap_angle(double angle)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double a = std::fmod(angle, two_pi);
    if (a < 0.0)
        a += two_pi;
    return a < two_pi ? a : 0.0;
}

void SystemParams::validate() const
{
    require(K >= 1, "SystemParams: K must be positive");
    require(L >= 1, "SystemParams: L must be positive");
    require(pairs.size() == K, "SystemParams: expected " + std::to_string(K) + " pairs, got " +
                                   std::to_string(pairs.size()));
    for (std::size_t i = 0; i < K; ++i)
    {
        const auto &p = pairs[i];
        const std::string tag = "pair " + std::to_string(i + 1) + ": ";
        require(p.alpha_a > 0.0 && std::isfinite(p.alpha_a), tag + "alpha_a must be > 0");
        require(p.alpha_b > 0.0 && std::isfinite(p.alpha_b), tag + "alpha_b must be > 0");
        require(p.kappa_tx >= 0.0 && std::isfinite(p.kappa_tx), tag + "kappa_tx must be >= 0");
        require(p.kappa_rx >= 0.0 && std::isfinite(p.kappa_rx), tag + "kappa_rx must be >= 0");
        require(p.power >= 0.0 && std::isfinite(p.power), tag + "power must be >= 0");
        require(p.noise_var > 0.0 && std::isfinite(p.noise_var), tag + "noise_var must be > 0");
        require(std::isfinite(p.aoa) && std::isfinite(p.aod), tag + "angles must be finite");
    }
}

void SystemParams::set_snr_db(double snr_db)
{
    const double p = std::pow(10.0, snr_db / 10.0);
    for (auto &pair : pairs)
        pair.power = p;
}

void SystemParams::set_rician(double kappa_tx, double kappa_rx)
{
    for (auto &pair : pairs)
    {
        pair.kappa_tx = kappa_tx;
        pair.kappa_rx = kappa_rx;
    }
}

SystemParams make_system(std::size_t L, std::vector<PairParams> pairs)
{
    SystemParams sp;
    sp.K = pairs.size();
    sp.L = L;
    for (auto &p : pairs)
    {
        p.aoa = wrap_angle(p.aoa);
        p.aod = wrap_angle(p.aod);
    }
    sp.pairs = std::move(pairs);
    sp.validate();
    return sp;
}

SystemParams reference_system(std::size_t K, std::size_t L)
{
    require(K >= 1 && K <= reference_rows.size(), "reference_system: K must be in [1, 6]");
    std::vector<PairParams> pairs;
    for (std::size_t i = 0; i < K; ++i)
    {
        PairParams p;
        p.aoa = reference_rows[i].aoa;
        p.aod = reference_rows[i].aod;
        p.alpha_a = reference_rows[i].alpha;
        p.alpha_b = reference_rows[i].alpha;
        p.kappa_tx = 10.0;
        p.kappa_rx = 10.0;
        p.power = 1.0;
        p.noise_var = 1.0;
        pairs.push_back(p);
    }
    return make_system(L, std::move(pairs));
}

CVec los_steering(double angle, std::size_t L)
{
    require(L >= 1, "los_steering: L must be positive");
    const double step = 2.0 * std::numbers::pi * SystemParams::spacing_ratio * std::sin(angle);
    CVec v(L);
    for (std::size_t l = 0; l < L; ++l)
        v[l] = std::polar(1.0, static_cast<double>(l) * step);
    return v;
}

void sample_rician(std::span<const cplx> los, double kappa, Rng &rng, std::span<cplx> out)
{
    require(kappa >= 0.0, "sample_rician: kappa must be >= 0");
    require(out.size() == los.size(), "sample_rician: output length mismatch");
    const double los_gain = std::sqrt(kappa / (kappa + 1.0));
    const double nlos_gain = std::sqrt(1.0 / (kappa + 1.0));
    const double sd = std::sqrt(0.5);
    for (std::size_t l = 0; l < los.size(); ++l)
    {
        const double re = rng.normal(sd);
        const double im = rng.normal(sd);
        out[l] = los_gain * los[l] + nlos_gain * cplx(re, im);
    }
}

CVec sample_rician(std::span<const cplx> los, double kappa, Rng &rng)
{
    CVec out(los.size());
    sample_rician(los, kappa, rng, out);
    return out;
}

RealizationSampler::RealizationSampler(const SystemParams &params) : params_(params)
{
    params_.validate();
    for (const auto &p : params_.pairs)
    {
        los_a_.push_back(los_steering(p.aod, params_.L));
        los_b_.push_back(los_steering(p.aoa, params_.L));
    }
}

void RealizationSampler::sample(Rng &rng, ChannelRealization &out) const
{
    const std::size_t K = params_.K;
    out.h_a.resize(K);
    out.h_b.resize(K);
    for (std::size_t i = 0; i < K; ++i)
    {
        out.h_a[i].resize(params_.L);
        out.h_b[i].resize(params_.L);
        sample_rician(los_a_[i], params_.pairs[i].kappa_tx, rng, out.h_a[i]);
        sample_rician(los_b_[i], params_.pairs[i].kappa_rx, rng, out.h_b[i]);
    }
}

ChannelRealization RealizationSampler::sample(Rng &rng) const
{
    ChannelRealization r;
    sample(rng, r);
    return r;
}

ChannelRealization sample_realization(const SystemParams &params, Rng &rng)
{
    return RealizationSampler(params).sample(rng);
}

} // namespace rismp
