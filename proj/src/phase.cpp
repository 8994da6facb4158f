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

#include "rismp/phase.hpp"
#include "rismp/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rismp
{

constexpr double two_pi = 2.0 * std::numbers::pi;

PhaseDomain PhaseDomain::discrete(unsigned bits)
{
    if (bits < 1 || bits > 16)
        throw std::invalid_argument("PhaseDomain: bits must be in [1, 16], got " + std::to_string(bits));
    return PhaseDomain(bits);
}

double PhaseDomain::grid_angle(std::uint32_t level) const
{
    return two_pi * static_cast<double>(level) / static_cast<double>(levels());
}

std::string PhaseDomain::name() const
{
    return is_continuous() ? std::string("continuous") : "discrete(" + std::to_string(bits_) + ")";
}

PhaseConfig PhaseConfig::continuous(std::vector<double> theta)
{
    PhaseConfig pc(PhaseDomain::continuous());
    for (auto &t : theta)
    {
        if (!std::isfinite(t))
            throw std::invalid_argument("PhaseConfig: non-finite phase");
        t = wrap_angle(t);
    }
    pc.theta_ = std::move(theta);
    return pc;
}

PhaseConfig PhaseConfig::discrete(unsigned bits, std::vector<std::uint32_t> levels)
{
    PhaseConfig pc(PhaseDomain::discrete(bits));
    pc.theta_.resize(levels.size());
    for (std::size_t l = 0; l < levels.size(); ++l)
    {
        if (levels[l] >= pc.domain_.levels())
            throw std::invalid_argument("PhaseConfig: level " + std::to_string(levels[l]) +
                                        " outside the " + std::to_string(bits) + "-bit grid");
        pc.theta_[l] = pc.domain_.grid_angle(levels[l]);
    }
    pc.levels_ = std::move(levels);
    return pc;
}

PhaseConfig PhaseConfig::zeros(const PhaseDomain &domain, std::size_t L)
{
    if (domain.is_continuous())
        return continuous(std::vector<double>(L, 0.0));
    return discrete(domain.bits(), std::vector<std::uint32_t>(L, 0));
}

void PhaseConfig::set_angle(std::size_t l, double theta)
{
    if (domain_.is_discrete())
        throw std::logic_error("PhaseConfig::set_angle on a discrete configuration");
    theta_.at(l) = wrap_angle(theta);
}

void PhaseConfig::set_level(std::size_t l, std::uint32_t level)
{
    if (domain_.is_continuous())
        throw std::logic_error("PhaseConfig::set_level on a continuous configuration");
    if (level >= domain_.levels())
        throw std::invalid_argument("PhaseConfig::set_level: level outside grid");
    levels_.at(l) = level;
    theta_[l] = domain_.grid_angle(level);
}

void PhaseConfig::copy_gene(std::size_t l, const PhaseConfig &from)
{
    if (!(from.domain_ == domain_))
        throw std::invalid_argument("PhaseConfig::copy_gene: domain mismatch");
    theta_.at(l) = from.theta_.at(l);
    if (domain_.is_discrete())
        levels_[l] = from.levels_[l];
}

PhaseConfig PhaseConfig::shifted(double c) const
{
    if (domain_.is_discrete())
    {
        const double steps = c / (two_pi / domain_.levels());
        const double rounded = std::round(steps);
        if (std::abs(steps - rounded) > 1e-9)
            throw std::invalid_argument("PhaseConfig::shifted: shift is not a whole grid step");
        const auto n = static_cast<std::int64_t>(rounded);
        const auto m = static_cast<std::int64_t>(domain_.levels());
        return shifted_levels(static_cast<std::uint32_t>(((n % m) + m) % m));
    }
    std::vector<double> t(theta_);
    for (auto &x : t)
        x += c;
    return continuous(std::move(t));
}

PhaseConfig PhaseConfig::shifted_levels(std::uint32_t steps) const
{
    if (domain_.is_continuous())
        throw std::logic_error("PhaseConfig::shifted_levels on a continuous configuration");
    std::vector<std::uint32_t> lv(levels_);
    for (auto &k : lv)
        k = (k + steps) % domain_.levels();
    return discrete(domain_.bits(), std::move(lv));
}

bool PhaseConfig::in_domain() const
{
    for (std::size_t l = 0; l < theta_.size(); ++l)
    {
        if (!(theta_[l] >= 0.0 && theta_[l] < two_pi))
            return false;
        if (domain_.is_discrete() &&
            (levels_[l] >= domain_.levels() || theta_[l] != domain_.grid_angle(levels_[l])))
            return false;
    }
    return true;
}

PhaseConfig quantize(const PhaseConfig &theta, unsigned bits)
{
    const auto domain = PhaseDomain::discrete(bits);
    const double n = static_cast<double>(domain.levels());
    std::vector<std::uint32_t> levels(theta.size());
    for (std::size_t l = 0; l < theta.size(); ++l)
    {
        const double x = wrap_angle(theta.angle(l)) / two_pi * n;
        // nearest level; an exact half-way point goes down
        auto k = static_cast<std::uint64_t>(std::ceil(x - 0.5));
        levels[l] = static_cast<std::uint32_t>(k % domain.levels());
    }
    return PhaseConfig::discrete(bits, std::move(levels));
}

} // namespace rismp
