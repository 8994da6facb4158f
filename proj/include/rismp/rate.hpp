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

#ifndef RISMP_RATE_HPP
#define RISMP_RATE_HPP

#include "rismp/channel.hpp"
#include "rismp/phase.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace rismp
{

enum class RateMethod
{
    closed_form,
    monte_carlo
};

std::string to_string(RateMethod m);

/// Per-pair and sum achievable rates in bit/s/Hz.
struct RateReport
{
    std::vector<double> per_pair;
    double sum = 0.0;
    RateMethod method = RateMethod::closed_form;
    std::size_t trials = 0;
    std::vector<double> std_error; // per pair, Monte-Carlo only
    double sum_std_error = 0.0;    // standard error of the per-trial sum rate, Monte-Carlo only
};

/// |sum_l h_b[l] e^{j theta_l} h_a[l]|^2
double effective_channel_power(std::span<const cplx> h_b, const PhaseConfig &theta,
                               std::span<const cplx> h_a);

/// SINR at receiver i (0-based). Interference from transmitter j travels
/// through h_b[i] and h_a[j] with gains alpha_b[i] * alpha_a[j].
double instantaneous_sinr(const ChannelRealization &realization, const PhaseConfig &theta,
                          const SystemParams &params, std::size_t i);

/// Ergodic rates averaged over `trials` independent realizations. Trial t
/// draws its channel from rng.split(t), so the result depends only on
/// rng.seed() and is a prefix-extension in `trials`.
RateReport monte_carlo_rates(const SystemParams &params, const PhaseConfig &theta, std::size_t trials,
                             const Rng &rng);

/// Phase-alignment kernel |sum_l exp(j(theta_l + l pi (sin aoa + sin aod)))|^2, O(L).
double omega(const PhaseConfig &theta, double aoa, double aod);

/// The same kernel written as L + 2 sum_{m<n} cos(...), O(L^2). Reference
/// form for cross-checking omega(); not used on hot paths.
double omega_double_sum(const PhaseConfig &theta, double aoa, double aod);

/// E|h_b^T Theta h_a|^2 for Rician factors kappa_rx (h_b) and kappa_tx (h_a):
/// (kb ka omega + L (kb + ka) + L) / ((kb + 1)(ka + 1)).
double second_moment(double kappa_rx, double kappa_tx, double omega_val, std::size_t L);

/// Closed-form rate approximation (expectations moved inside the SINR).
RateReport approx_rates(const SystemParams &params, const PhaseConfig &theta);

/// approx_rates with everything that does not depend on theta precomputed.
/// Used as the optimizer objective.
class SumRateModel
{
public:
    explicit SumRateModel(const SystemParams &params);

    const SystemParams &params() const { return params_; }
    std::size_t elements() const { return params_.L; }

    RateReport rates(const PhaseConfig &theta) const;
    double sum_rate(const PhaseConfig &theta) const;

    // Hot path: theta given as unit phasors e^{j theta_l} split into re/im.
    double sum_rate(std::span<const double> cos_theta, std::span<const double> sin_theta) const;

private:
    void per_pair(std::span<const double> c, std::span<const double> s, std::span<double> out) const;

    SystemParams params_;
    // steering of link (i, j) at [(i * K + j) * L + l], split re/im
    std::vector<double> steer_re_;
    std::vector<double> steer_im_;
    // M_ij = slope_ij * omega_ij + offset_ij, gain_ij = p_j alpha_b[i] alpha_a[j]
    std::vector<double> slope_;
    std::vector<double> offset_;
    std::vector<double> gain_;
};

} // namespace rismp

#endif
