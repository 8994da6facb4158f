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

#ifndef RISMP_CONFIG_HPP
#define RISMP_CONFIG_HPP

#include "rismp/channel.hpp"
#include "rismp/optimizer.hpp"
#include "rismp/phase.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rismp
{

enum class Scheme
{
    ga,
    exhaustive,
    random
};

std::string to_string(Scheme s);
Scheme scheme_from_string(const std::string &s);

/// Configuration error carrying the JSON path of the offending field.
class ConfigError : public std::runtime_error
{
public:
    ConfigError(const std::string &path, const std::string &msg)
        : std::runtime_error(path.empty() ? msg : path + ": " + msg), path_(path) {}
    const std::string &path() const { return path_; }

private:
    std::string path_;
};

struct ExperimentConfig
{
    SystemParams system;  // powers already set from snr_db unless overridden per pair
    double snr_db = 10.0;
    PhaseDomain phase_domain = PhaseDomain::discrete(2);
    GaConfig ga;
    std::size_t trials_mc = 10000;
    bool monte_carlo = true;
    std::uint64_t seed = 1;
    std::vector<double> snr_grid{0.0, 5.0, 10.0, 15.0, 20.0};
    std::vector<unsigned> bits_grid{1, 2, 3, 4}; // 0 = continuous phases
    std::vector<double> rician_grid{1.0, 10.0, 100.0};
    std::vector<std::size_t> elements_grid{8, 16, 32};
    std::vector<Scheme> schemes{Scheme::ga};
    std::size_t random_draws = 100;
    std::uint64_t exhaustive_cap = std::uint64_t{1} << 24;
};

/// Reference setup: K = 6 reference pairs, L = 16, Rician factors 10, unit
/// noise, SNR 10 dB, 2-bit phases, GA with N_t = 100, N_s = N_c = 50, N_e = 1,
/// n_max = 10000, P_m = 0.1, tolerance 1e-6.
ExperimentConfig default_config();

/// JSON config; absent fields keep their defaults. Throws ConfigError.
ExperimentConfig parse_config(const std::string &json_text);
ExperimentConfig load_config(const std::string &path);

} // namespace rismp

#endif
