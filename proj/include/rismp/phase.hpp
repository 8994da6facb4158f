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

#ifndef RISMP_PHASE_HPP
#define RISMP_PHASE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rismp
{

/// Phase domain of the RIS: continuous [0, 2pi) or a uniform 2^B-point grid.
class PhaseDomain
{
public:
    static PhaseDomain continuous() { return PhaseDomain(0); }
    static PhaseDomain discrete(unsigned bits);

    bool is_continuous() const { return bits_ == 0; }
    bool is_discrete() const { return bits_ != 0; }
    unsigned bits() const { return bits_; }
    std::uint32_t levels() const { return std::uint32_t{1} << bits_; } // discrete only
    double grid_angle(std::uint32_t level) const;                       // 2pi k / 2^B

    std::string name() const; // "continuous" or "discrete(B)"

    friend bool operator==(const PhaseDomain &, const PhaseDomain &) = default;

private:
    explicit PhaseDomain(unsigned bits) : bits_(bits) {}
    unsigned bits_;
};

/// RIS phase-shift vector theta with its domain.
///
/// Discrete configurations hold integer levels; their angles are always the
/// exact grid values 2pi k / 2^B recomputed from the level, never accumulated.
class PhaseConfig
{
public:
    static PhaseConfig continuous(std::vector<double> theta);
    static PhaseConfig discrete(unsigned bits, std::vector<std::uint32_t> levels);
    static PhaseConfig zeros(const PhaseDomain &domain, std::size_t L);

    const PhaseDomain &domain() const { return domain_; }
    std::size_t size() const { return theta_.size(); }
    double angle(std::size_t l) const { return theta_[l]; }
    std::span<const double> angles() const { return theta_; }
    std::uint32_t level(std::size_t l) const { return levels_.at(l); } // discrete only
    std::span<const std::uint32_t> levels() const { return levels_; }

    void set_angle(std::size_t l, double theta);        // continuous only; wraps into [0, 2pi)
    void set_level(std::size_t l, std::uint32_t level); // discrete only

    // Gene-level copy used by crossover; domains must match.
    void copy_gene(std::size_t l, const PhaseConfig &from);

    // theta_l + c for all l. Discrete shifts must be whole grid steps (given in levels).
    PhaseConfig shifted(double c) const;
    PhaseConfig shifted_levels(std::uint32_t steps) const;

    bool in_domain() const;

    friend bool operator==(const PhaseConfig &, const PhaseConfig &) = default;

private:
    PhaseConfig(PhaseDomain d) : domain_(d) {}
    PhaseDomain domain_;
    std::vector<double> theta_;
    std::vector<std::uint32_t> levels_;
};

/// Nearest-grid quantization with ties to the lower level and wrap-around at 2pi.
PhaseConfig quantize(const PhaseConfig &theta, unsigned bits);

} // namespace rismp

#endif
