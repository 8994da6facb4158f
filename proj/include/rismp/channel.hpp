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

#ifndef RISMP_CHANNEL_HPP
#define RISMP_CHANNEL_HPP

#include "rismp/random.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace rismp
{

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

/// Statistical description of one transmitter/receiver pair served through the RIS.
///
/// The transmitter-side channel (Tx -> RIS) has large-scale gain `alpha_a`,
/// Rician factor `kappa_tx` and LoS angle `aod`. The receiver side (RIS -> Rx)
/// uses `alpha_b`, `kappa_rx` and `aoa`. Angles are stored in [0, 2pi).
struct PairParams
{
    double alpha_a = 1.0;
    double alpha_b = 1.0;
    double kappa_tx = 0.0;
    double kappa_rx = 0.0;
    double aoa = 0.0;
    double aod = 0.0;
    double power = 1.0;
    double noise_var = 1.0;
};

/// K pairs sharing an L-element RIS with half-wavelength element spacing.
struct SystemParams
{
    std::size_t K = 0;
    std::size_t L = 0;
    std::vector<PairParams> pairs;

    static constexpr double spacing_ratio = 0.5; // d / lambda

    // Throws std::invalid_argument describing the first violated constraint.
    void validate() const;

    // Sets p_i = 10^(snr_db / 10) for every pair (noise_var is left alone).
    void set_snr_db(double snr_db);
    void set_rician(double kappa_tx, double kappa_rx);
};

/// Builds validated params with angles wrapped into [0, 2pi).
SystemParams make_system(std::size_t L, std::vector<PairParams> pairs);

/// The 6-pair reference deployment (angles in rad, alpha_a = alpha_b), first K rows.
/// Rician factors 10, unit noise, unit power. K must be in [1, 6].
SystemParams reference_system(std::size_t K, std::size_t L);

double wrap_angle(double angle);

/// One fast-fading draw. Large-scale gains are not applied here.
struct ChannelRealization
{
    std::vector<CVec> h_a; // h_a[i]: Tx_i -> RIS
    std::vector<CVec> h_b; // h_b[i]: RIS -> Rx_i
};

/// Half-wavelength ULA response: entry l (0-based) is exp(j * l * pi * sin(angle)).
CVec los_steering(double angle, std::size_t L);

/// sqrt(k/(k+1)) * los + sqrt(1/(k+1)) * w, w ~ CN(0, 1) i.i.d.
CVec sample_rician(std::span<const cplx> los, double kappa, Rng &rng);
void sample_rician(std::span<const cplx> los, double kappa, Rng &rng, std::span<cplx> out);

/// Draws h_a[i] then h_b[i] for i = 1..K, in that order, from `rng`.
ChannelRealization sample_realization(const SystemParams &params, Rng &rng);

/// Reusable sampler: caches steering vectors so repeated draws only pay for noise.
class RealizationSampler
{
public:
    explicit RealizationSampler(const SystemParams &params);
    void sample(Rng &rng, ChannelRealization &out) const;
    ChannelRealization sample(Rng &rng) const;

private:
    const SystemParams &params_;
    std::vector<CVec> los_a_;
    std::vector<CVec> los_b_;
};

} // namespace rismp

#endif
