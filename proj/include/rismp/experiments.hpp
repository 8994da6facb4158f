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

#ifndef RISMP_EXPERIMENTS_HPP
#define RISMP_EXPERIMENTS_HPP

#include "rismp/config.hpp"
#include "rismp/rate.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace rismp
{

enum class SweepKind
{
    snr,
    bits,
    rician,
    elements,
    point // single configuration, no sweep variable
};

std::string to_string(SweepKind k);
SweepKind sweep_kind_from_string(const std::string &s);

/// One (sweep point, scheme, method) result.
///
/// Scheme tags: "ga", "exhaustive", "random" (best of the random draws) and
/// "random_mean" (average over the draws, closed form only). `error` is set
/// and `sum_rate` is NaN when the point could not be computed.
struct ResultRow
{
    std::string sweep_var;
    double value = 0.0;
    std::string scheme;
    std::string method;
    std::vector<double> per_pair;
    double sum_rate = 0.0;
    double std_error = 0.0; // NaN for closed-form rows
    std::uint64_t seed = 0;
    std::size_t generations = 0;
    double wall_time_ms = 0.0;
    std::string error;
};

/// Seed for one sweep point. Depends on the master seed, the sweep kind and
/// the grid value only, so removing other grid points changes nothing.
std::uint64_t point_seed(std::uint64_t master, SweepKind kind, double value);

/// The configuration in effect at one grid point.
ExperimentConfig apply_point(SweepKind kind, double value, const ExperimentConfig &cfg);

/// Rows for one grid point with an explicit point seed: for each scheme in
/// config order, a closed-form row then (if enabled) a Monte-Carlo row.
std::vector<ResultRow> run_point(SweepKind kind, double value, const ExperimentConfig &cfg, std::uint64_t seed);

std::vector<ResultRow> run_sweep(SweepKind kind, const ExperimentConfig &cfg);

enum class OutputFormat
{
    csv,
    jsonl
};

OutputFormat output_format_from_string(const std::string &s);

void write_results(const std::vector<ResultRow> &rows, OutputFormat format, std::ostream &out);
/// Throws std::runtime_error when the file cannot be written.
void emit_results(const std::vector<ResultRow> &rows, OutputFormat format, const std::string &path);
/// Inverse of emit_results (values at their serialized precision).
std::vector<ResultRow> read_results(const std::string &path, OutputFormat format);

/// Formats with 12 significant digits.
std::string format_number(double v);

struct OracleCheck
{
    std::string name;
    double max_deviation = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::string detail;
};

struct ValidationReport
{
    std::vector<OracleCheck> checks;
    bool all_pass() const;
};

/// Injection points for negative controls.
struct OracleHooks
{
    // Replaces the O(L) phase-alignment kernel under test.
    std::function<double(const PhaseConfig &, double, double)> omega;
};

/// (a) phase-alignment kernel: closed double sum vs squared-magnitude form,
///     |diff| / L^2 <= 1e-9 over random draws;
/// (b) second moment vs a Monte-Carlo mean of |h_b^T Theta h_a|^2 over 1e5
///     realizations, for every direct and one cross link, within 2%;
/// (c) approximate sum rate vs Monte-Carlo at cfg.trials_mc trials, within 5%.
ValidationReport validate_oracles(const ExperimentConfig &cfg, const OracleHooks &hooks = {});

void print_report(const ValidationReport &rep, std::ostream &out);

} // namespace rismp

#endif
