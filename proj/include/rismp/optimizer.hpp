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

#ifndef RISMP_OPTIMIZER_HPP
#define RISMP_OPTIMIZER_HPP

#include "rismp/channel.hpp"
#include "rismp/phase.hpp"
#include "rismp/random.hpp"
#include "rismp/rate.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rismp
{

/// Thrown when the objective has zero sum rate (every transmit power is zero).
class DegenerateObjective : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// Thrown when an exhaustive grid is larger than the configured cap.
class InfeasibleSearch : public std::runtime_error
{
public:
    InfeasibleSearch(const std::string &what, double required_log2)
        : std::runtime_error(what), required_log2_(required_log2) {}
    double required_log2() const { return required_log2_; }

private:
    double required_log2_;
};

enum class SelectionMode
{
    rank_linear,          // weight N_t - r + 1 at sorted rank r
    uniform_rank // cumulative vector [1/N_t, ..., 1]: uniform over ranks
};

std::string to_string(SelectionMode m);
SelectionMode selection_mode_from_string(const std::string &s);

struct GaConfig
{
    std::size_t n_total = 100;
    std::size_t n_survivors = 50;
    std::size_t n_children = 50;
    std::size_t n_elites = 1;
    std::size_t max_generations = 10000;
    double mutation_rate = 0.1;
    double fitness_tol = 1e-6;
    SelectionMode selection_mode = SelectionMode::rank_linear;

    // Optional early stop: quit after this many generations without the best
    // fitness improving by at least stall_tol. 0 disables.
    std::size_t stall_generations = 0;
    double stall_tol = 1e-9;

    void validate() const; // std::invalid_argument naming the violated field
};

struct Individual
{
    PhaseConfig genome;
    std::optional<double> fitness;
};

using Population = std::vector<Individual>;

struct OptResult
{
    PhaseConfig best_theta = PhaseConfig::zeros(PhaseDomain::continuous(), 0);
    double best_sum_rate = 0.0;
    std::vector<double> best_fitness_history; // f_min after each generation
    std::size_t generations_used = 0;
    std::size_t evaluations = 0;
    double initial_best_fitness = 0.0; // GA: best of the initial population
    double mean_sum_rate = 0.0;        // random search: mean over draws
    std::vector<double> mean_per_pair; // random search: per-pair mean over draws
};

/// 1 / (closed-form sum rate). Lower is better.
double fitness(const PhaseConfig &theta, const SystemParams &params);
double fitness(const PhaseConfig &theta, const SumRateModel &model);

PhaseConfig random_genome(const PhaseDomain &domain, std::size_t L, Rng &rng);

Population init_population(const GaConfig &ga, const PhaseDomain &domain, std::size_t L, Rng &rng);

/// Fills missing fitness values and stable-sorts ascending. Returns the number
/// of fitness evaluations performed.
std::size_t evaluate_and_sort(Population &pop, const SystemParams &params);
std::size_t evaluate_and_sort(Population &pop, const SumRateModel &model);

/// Rank (0-based) picked by the cumulative rule for a draw c in [0, 1].
std::size_t select_index(std::size_t n, double c, SelectionMode mode);
const Individual &select(const Population &sorted_pop, Rng &rng, SelectionMode mode);

/// Single-point crossover; `point` genes from the first parent (1 <= point < L).
std::pair<Individual, Individual> crossover_at(const Individual &p1, const Individual &p2, std::size_t point);
/// Draws the point uniformly from {1, ..., L-1}. With L = 1 the children are
/// copies of the parents and nothing is drawn.
std::pair<Individual, Individual> crossover(const Individual &p1, const Individual &p2, Rng &rng);

/// Resamples each gene of individuals [n_elites, N) with probability `rate`.
/// Draw order: per individual, per gene, one uniform for the coin then one
/// draw for the new value if it fires.
void mutate(Population &pop, double rate, const PhaseDomain &domain, std::size_t n_elites, Rng &rng);

/// Generational GA maximizing the closed-form sum rate.
///
/// Each generation: select/crossover until N_c children exist (random draws
/// in the order p1, p2, crossover point), keep the first N_s of the sorted
/// previous generation, sort the assembled generation to identify elites,
/// mutate the non-elites, sort again and record f_min. Runs while
/// n <= max_generations and f_min > fitness_tol.
OptResult ga_optimize(const SystemParams &params, const GaConfig &ga, const PhaseDomain &domain, Rng &rng);

/// Evaluates every point of the B-bit grid. Ties keep the lowest index, where
/// element 1 is the least significant digit. Rates within 1e-12 relative of the
/// incumbent count as ties.
OptResult exhaustive_search(const SystemParams &params, unsigned bits, std::uint64_t cap = std::uint64_t{1} << 24);

/// Best and mean of `draws` uniform phase vectors.
OptResult random_search(const SystemParams &params, const PhaseDomain &domain, std::size_t draws, Rng &rng);

} // namespace rismp

#endif
