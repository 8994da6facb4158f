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

#include "rismp/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rismp
{

std::string to_string(SelectionMode m)
{
    return m == SelectionMode::rank_linear ? "rank_linear" : "uniform_rank";
}

SelectionMode selection_mode_from_string(const std::string &s)
{
    if (s == "rank_linear")
        return SelectionMode::rank_linear;
    if (s == "uniform_rank")
        return SelectionMode::uniform_rank;
    throw std::invalid_argument("unknown selection mode '" + s + "'");
}

void GaConfig::validate() const
{
    auto fail = [](const std::string &msg) { throw std::invalid_argument(msg); };
    if (n_total == 0)
        fail("ga.n_total: population size must be positive");
    if (n_survivors + n_children != n_total)
        fail("ga.n_survivors: N_s + N_c must equal N_t (" + std::to_string(n_survivors) + " + " +
             std::to_string(n_children) + " != " + std::to_string(n_total) + ")");
    if (n_elites < 1 || n_elites > n_total)
        fail("ga.n_elites: N_e must be in [1, N_t]");
    if (max_generations < 1)
        fail("ga.max_generations: n_max must be >= 1");
    if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0))
        fail("ga.mutation_rate: P_m must be in [0, 1]");
    if (!(fitness_tol >= 0.0))
        fail("ga.fitness_tol: must be >= 0");
}

namespace
{

// Fitness evaluator with grid phasor tables and an evaluation counter.
class Evaluator
{
public:
    Evaluator(const SumRateModel &model) : model_(model), c_(model.elements()), s_(model.elements()) {}

    double operator()(const PhaseConfig &theta) { return to_fitness(rate(theta)); }

    double rate(const PhaseConfig &theta)
    {
        if (theta.size() != model_.elements())
            throw std::invalid_argument("fitness: theta has " + std::to_string(theta.size()) +
                                        " entries but L = " + std::to_string(model_.elements()));
        const auto &d = theta.domain();
        if (d.is_discrete())
        {
            if (table_bits_ != d.bits())
                build_table(d);
            for (std::size_t l = 0; l < theta.size(); ++l)
            {
                c_[l] = cos_table_[theta.level(l)];
                s_[l] = sin_table_[theta.level(l)];
            }
        }
        else
        {
            for (std::size_t l = 0; l < theta.size(); ++l)
            {
                c_[l] = std::cos(theta.angle(l));
                s_[l] = std::sin(theta.angle(l));
            }
        }
        ++count_;
        return model_.sum_rate(c_, s_);
    }

    static double to_fitness(double sum_rate)
    {
        if (!(sum_rate > 0.0))
            throw DegenerateObjective("fitness: sum rate is zero (no transmit power), objective is degenerate");
        return 1.0 / sum_rate;
    }

    std::size_t count() const { return count_; }

private:
    void build_table(const PhaseDomain &d)
    {
        cos_table_.resize(d.levels());
        sin_table_.resize(d.levels());
        for (std::uint32_t k = 0; k < d.levels(); ++k)
        {
            cos_table_[k] = std::cos(d.grid_angle(k));
            sin_table_[k] = std::sin(d.grid_angle(k));
        }
        table_bits_ = d.bits();
    }

    const SumRateModel &model_;
    std::vector<double> c_, s_;
    std::vector<double> cos_table_, sin_table_;
    unsigned table_bits_ = 0;
    std::size_t count_ = 0;
};

std::size_t sort_population(Population &pop, Evaluator &ev)
{
    const std::size_t before = ev.count();
    for (auto &ind : pop)
        if (!ind.fitness)
            ind.fitness = ev(ind.genome);
    std::stable_sort(pop.begin(), pop.end(),
                     [](const Individual &a, const Individual &b) { return *a.fitness < *b.fitness; });
    return ev.count() - before;
}

void resample_gene(PhaseConfig &g, std::size_t l, const PhaseDomain &domain, Rng &rng)
{
    if (domain.is_discrete())
        g.set_level(l, static_cast<std::uint32_t>(rng.below(domain.levels())));
    else
        g.set_angle(l, rng.uniform_angle());
}

} // namespace

double fitness(const PhaseConfig &theta, const SumRateModel &model)
{
    return Evaluator(model)(theta);
}

double fitness(const PhaseConfig &theta, const SystemParams &params)
{
    return fitness(theta, SumRateModel(params));
}

PhaseConfig random_genome(const PhaseDomain &domain, std::size_t L, Rng &rng)
{
    PhaseConfig g = PhaseConfig::zeros(domain, L);
    for (std::size_t l = 0; l < L; ++l)
        resample_gene(g, l, domain, rng);
    return g;
}

Population init_population(const GaConfig &ga, const PhaseDomain &domain, std::size_t L, Rng &rng)
{
    ga.validate();
    Population pop;
    pop.reserve(ga.n_total);
    for (std::size_t n = 0; n < ga.n_total; ++n)
        pop.push_back({random_genome(domain, L, rng), std::nullopt});
    return pop;
}

std::size_t evaluate_and_sort(Population &pop, const SumRateModel &model)
{
    Evaluator ev(model);
    return sort_population(pop, ev);
}

std::size_t evaluate_and_sort(Population &pop, const SystemParams &params)
{
    return evaluate_and_sort(pop, SumRateModel(params));
}

std::size_t select_index(std::size_t n, double c, SelectionMode mode)
{
    if (n == 0)
        throw std::invalid_argument("select: empty population");
    const double nd = static_cast<double>(n);
    if (mode == SelectionMode::uniform_rank)
    {
        // smallest r with r / N >= c
        for (std::size_t r = 1; r <= n; ++r)
            if (static_cast<double>(r) >= c * nd)
                return r - 1;
        return n - 1;
    }
    // cumulative of weights N, N-1, ..., 1 against c * N(N+1)/2, in exact integers where possible
    const double target = c * nd * (nd + 1.0) / 2.0;
    double cum = 0.0;
    for (std::size_t r = 1; r <= n; ++r)
    {
        cum += static_cast<double>(n - r + 1);
        if (cum >= target)
            return r - 1;
    }
    return n - 1;
}

const Individual &select(const Population &sorted_pop, Rng &rng, SelectionMode mode)
{
    if (sorted_pop.empty())
        throw std::invalid_argument("select: empty population");
    return sorted_pop[select_index(sorted_pop.size(), rng.uniform(), mode)];
}

std::pair<Individual, Individual> crossover_at(const Individual &p1, const Individual &p2, std::size_t point)
{
    const std::size_t L = p1.genome.size();
    if (p2.genome.size() != L || !(p1.genome.domain() == p2.genome.domain()))
        throw std::invalid_argument("crossover: parents differ in length or domain");
    if (point > L)
        throw std::invalid_argument("crossover: point beyond genome length");
    Individual c1{p1.genome, std::nullopt};
    Individual c2{p2.genome, std::nullopt};
    for (std::size_t l = point; l < L; ++l)
    {
        c1.genome.copy_gene(l, p2.genome);
        c2.genome.copy_gene(l, p1.genome);
    }
    return {std::move(c1), std::move(c2)};
}

std::pair<Individual, Individual> crossover(const Individual &p1, const Individual &p2, Rng &rng)
{
    const std::size_t L = p1.genome.size();
    if (L <= 1)
        return crossover_at(p1, p2, L);
    return crossover_at(p1, p2, 1 + static_cast<std::size_t>(rng.below(L - 1)));
}

void mutate(Population &pop, double rate, const PhaseDomain &domain, std::size_t n_elites, Rng &rng)
{
    if (rate <= 0.0)
        return;
    for (std::size_t n = n_elites; n < pop.size(); ++n)
    {
        auto &ind = pop[n];
        for (std::size_t l = 0; l < ind.genome.size(); ++l)
        {
            if (rng.uniform() < rate)
            {
                resample_gene(ind.genome, l, domain, rng);
                ind.fitness.reset();
            }
        }
    }
}

OptResult ga_optimize(const SystemParams &params, const GaConfig &ga, const PhaseDomain &domain, Rng &rng)
{
    ga.validate();
    params.validate();
    const SumRateModel model(params);
    Evaluator ev(model);

    Population pop = init_population(ga, domain, params.L, rng);
    sort_population(pop, ev);

    OptResult res;
    res.initial_best_fitness = *pop.front().fitness;
    double f_min = res.initial_best_fitness;
    double stall_ref = f_min;
    std::size_t stall_count = 0;

    Population next;
    next.reserve(ga.n_total);
    for (std::size_t n = 1; n <= ga.max_generations && f_min > ga.fitness_tol; ++n)
    {
        next.clear();
        next.insert(next.end(), pop.begin(), pop.begin() + static_cast<std::ptrdiff_t>(ga.n_survivors));
        std::size_t children = 0;
        while (children < ga.n_children)
        {
            const Individual &p1 = select(pop, rng, ga.selection_mode);
            const Individual &p2 = select(pop, rng, ga.selection_mode);
            auto [c1, c2] = crossover(p1, p2, rng);
            next.push_back(std::move(c1));
            if (++children < ga.n_children)
            {
                next.push_back(std::move(c2));
                ++children;
            }
        }
        sort_population(next, ev); // elites = first n_elites
        mutate(next, ga.mutation_rate, domain, ga.n_elites, rng);
        sort_population(next, ev);
        std::swap(pop, next);

        f_min = *pop.front().fitness;
        res.best_fitness_history.push_back(f_min);
        res.generations_used = n;

        if (ga.stall_generations > 0)
        {
            if (stall_ref - f_min >= ga.stall_tol)
            {
                stall_ref = f_min;
                stall_count = 0;
            }
            else if (++stall_count >= ga.stall_generations)
            {
                break;
            }
        }
    }

    res.best_theta = pop.front().genome;
    res.best_sum_rate = 1.0 / *pop.front().fitness;
    res.evaluations = ev.count();
    if (res.best_fitness_history.empty())
        res.best_fitness_history.push_back(f_min);
    return res;
}

OptResult exhaustive_search(const SystemParams &params, unsigned bits, std::uint64_t cap)
{
    params.validate();
    const auto domain = PhaseDomain::discrete(bits);
    const std::size_t L = params.L;
    const double log2_size = static_cast<double>(bits) * static_cast<double>(L);
    if (log2_size > 63.0 || (std::uint64_t{1} << (bits * L)) > cap)
        throw InfeasibleSearch("exhaustive_search: grid of 2^" + std::to_string(bits * L) + " candidates (B = " +
                                   std::to_string(bits) + ", L = " + std::to_string(L) +
                                   ") exceeds the cap; requires cap >= 2^" + std::to_string(bits * L),
                               log2_size);
    const std::uint64_t total = std::uint64_t{1} << (bits * L);
    const std::uint32_t radix = domain.levels();

    const SumRateModel model(params);
    std::vector<double> cos_table(radix), sin_table(radix);
    for (std::uint32_t k = 0; k < radix; ++k)
    {
        cos_table[k] = std::cos(domain.grid_angle(k));
        sin_table[k] = std::sin(domain.grid_angle(k));
    }

    std::vector<std::uint32_t> digits(L, 0), best_digits(L, 0);
    std::vector<double> c(L, cos_table[0]), s(L, sin_table[0]);
    double best = -std::numeric_limits<double>::infinity();
    for (std::uint64_t idx = 0; idx < total; ++idx)
    {
        const double rate = model.sum_rate(c, s);
        if (idx == 0 || rate > best + 1e-12 * std::abs(best))
        {
            best = rate;
            best_digits = digits;
        }
        // odometer increment, element 1 least significant
        for (std::size_t l = 0; l < L; ++l)
        {
            digits[l] = digits[l] + 1 == radix ? 0 : digits[l] + 1;
            c[l] = cos_table[digits[l]];
            s[l] = sin_table[digits[l]];
            if (digits[l] != 0)
                break;
        }
    }

    OptResult res;
    res.best_theta = PhaseConfig::discrete(bits, best_digits);
    res.best_sum_rate = best;
    res.best_fitness_history.push_back(Evaluator::to_fitness(best));
    res.generations_used = 0;
    res.evaluations = total;
    res.mean_sum_rate = 0.0;
    return res;
}

OptResult random_search(const SystemParams &params, const PhaseDomain &domain, std::size_t draws, Rng &rng)
{
    if (draws == 0)
        throw std::invalid_argument("random_search: draws must be >= 1");
    params.validate();
    const SumRateModel model(params);
    Evaluator ev(model);

    std::optional<PhaseConfig> best_theta;
    double best = -1.0;
    double total = 0.0;
    std::vector<double> pair_total(params.K, 0.0);
    for (std::size_t d = 0; d < draws; ++d)
    {
        PhaseConfig g = random_genome(domain, params.L, rng);
        const double rate = ev.rate(g);
        const RateReport per = model.rates(g);
        for (std::size_t i = 0; i < params.K; ++i)
            pair_total[i] += per.per_pair[i];
        total += rate;
        if (rate > best)
        {
            best = rate;
            best_theta = std::move(g);
        }
    }
    OptResult res;
    res.best_theta = *best_theta;
    res.best_sum_rate = best;
    res.best_fitness_history.push_back(Evaluator::to_fitness(best));
    res.evaluations = ev.count();
    res.mean_sum_rate = total / static_cast<double>(draws);
    for (double &t : pair_total)
        t /= static_cast<double>(draws);
    res.mean_per_pair = std::move(pair_total);
    return res;
}

} // namespace rismp
