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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include "rismp/channel.hpp"
#include "rismp/optimizer.hpp"
#include "rismp/phase.hpp"
#include "rismp/rate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace rismp;

namespace
{

constexpr double pi = std::numbers::pi;

struct Outcome
{
    bool pass = false;
    std::string detail;
};

// best-fitness histories of every GA run in criteria 4 to 7
std::vector<std::vector<double>> ga_histories;

OptResult run_ga(const SystemParams &sp, const PhaseDomain &domain, std::uint64_t seed)
{
    Rng rng(seed);
    OptResult r = ga_optimize(sp, GaConfig{}, domain, rng);
    ga_histories.push_back(r.best_fitness_history);
    return r;
}

SystemParams reference_at(std::size_t K, std::size_t L, double snr_db)
{
    SystemParams sp = reference_system(K, L);
    sp.set_snr_db(snr_db);
    return sp;
}

std::string fmt(const char *f, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

// direct complex sum, written independently of the library kernel
double omega_naive(std::span<const double> theta, double aoa, double aod)
{
    std::complex<double> acc = 0.0;
    for (std::size_t l = 0; l < theta.size(); ++l)
        acc += std::polar(1.0, theta[l] + static_cast<double>(l) * pi * (std::sin(aoa) + std::sin(aod)));
    return std::norm(acc);
}

Outcome omega_identity()
{
    Rng rng(101);
    const std::size_t sizes[] = {1, 2, 8, 32, 64};
    double worst = 0.0;
    for (int n = 0; n < 1000; ++n)
    {
        const std::size_t L = sizes[n % 5];
        const PhaseConfig th = random_genome(PhaseDomain::continuous(), L, rng);
        const double aoa = rng.uniform_angle(), aod = rng.uniform_angle();
        const double ds = omega_double_sum(th, aoa, aod);
        const double L2 = static_cast<double>(L * L);
        worst = std::max({worst, std::abs(ds - omega(th, aoa, aod)) / L2,
                          std::abs(ds - omega_naive(th.angles(), aoa, aod)) / L2});
    }
    return {worst <= 1e-9, "max |double sum - |sum|^2| / L^2 = " + fmt("%.3g", worst)};
}

Outcome second_moment_oracle()
{
    struct Case
    {
        std::size_t L;
        double eps, beta;
    };
    const Case cases[] = {{4, 10, 10}, {16, 10, 10}, {16, 0, 0}, {8, 1, 100}};
    Rng rng(202);
    double worst = 0.0;
    for (const auto &c : cases)
        for (int k = 0; k < 3; ++k)
        {
            const PhaseConfig th = random_genome(PhaseDomain::continuous(), c.L, rng);
            const double aoa = rng.uniform_angle(), aod = rng.uniform_angle();
            const CVec los_b = los_steering(aoa, c.L), los_a = los_steering(aod, c.L);
            CVec hb(c.L), ha(c.L);
            Rng draw = rng.split(static_cast<std::uint64_t>(k) + 1000 * c.L);
            double acc = 0.0;
            constexpr int realizations = 100000;
            for (int t = 0; t < realizations; ++t)
            {
                sample_rician(los_b, c.beta, draw, hb);
                sample_rician(los_a, c.eps, draw, ha);
                acc += effective_channel_power(hb, th, ha);
            }
            const double mc = acc / realizations;
            const double cf = second_moment(c.beta, c.eps, omega(th, aoa, aod), c.L);
            worst = std::max(worst, std::abs(mc - cf) / cf);
        }
    return {worst <= 0.02, "max relative deviation " + fmt("%.4f", worst) + " over 12 cases"};
}

Outcome closed_form_agreement()
{
    const double snrs[] = {0.0, 10.0, 20.0};
    const std::size_t sizes[] = {16, 32};
    double mc[2][3];
    double worst = 0.0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 3; ++b)
        {
            const SystemParams sp = reference_at(6, sizes[a], snrs[b]);
            Rng rng(300 + 10 * a + b);
            const OptResult r = ga_optimize(sp, GaConfig{}, PhaseDomain::discrete(2), rng);
            const double cf = approx_rates(sp, r.best_theta).sum;
            mc[a][b] = monte_carlo_rates(sp, r.best_theta, 10000, Rng(350 + 10 * a + b)).sum;
            worst = std::max(worst, std::abs(cf - mc[a][b]) / mc[a][b]);
        }
    bool trend = true;
    for (int a = 0; a < 2; ++a)
        for (int b = 1; b < 3; ++b)
            trend = trend && mc[a][b] > mc[a][b - 1];
    for (int b = 0; b < 3; ++b)
        trend = trend && mc[1][b] > mc[0][b];
    std::ostringstream os;
    os << "max |cf - mc| / mc = " << fmt("%.4f", worst) << ", MC L=16: " << fmt("%.3f", mc[0][0]) << " "
       << fmt("%.3f", mc[0][1]) << " " << fmt("%.3f", mc[0][2]) << ", L=32: " << fmt("%.3f", mc[1][0]) << " "
       << fmt("%.3f", mc[1][1]) << " " << fmt("%.3f", mc[1][2]) << (trend ? "" : " (trend violated)");
    return {worst <= 0.05 && trend, os.str()};
}

Outcome ga_near_optimal()
{
    const SystemParams sp = reference_at(2, 8, 20.0);
    const double best = exhaustive_search(sp, 2).best_sum_rate;
    double worst = 1.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
        worst = std::min(worst, run_ga(sp, PhaseDomain::discrete(2), 400 + seed).best_sum_rate / best);
    return {worst >= 0.99, "worst GA / exhaustive over 10 seeds = " + fmt("%.5f", worst)};
}

Outcome ga_beats_random()
{
    const SystemParams sp = reference_at(6, 32, 20.0);
    int above_mean = 0, above_best = 0;
    double min_margin = 1e300;
    for (std::uint64_t seed = 1; seed <= 5; ++seed)
    {
        const double ga = run_ga(sp, PhaseDomain::discrete(2), 500 + seed).best_sum_rate;
        Rng rng(550 + seed);
        const OptResult rnd = random_search(sp, PhaseDomain::discrete(2), 100, rng);
        above_mean += ga >= rnd.mean_sum_rate;
        above_best += ga >= rnd.best_sum_rate;
        min_margin = std::min(min_margin, ga / rnd.best_sum_rate);
    }
    return {above_mean == 5 && above_best >= 4, "GA >= mean on " + std::to_string(above_mean) +
                                                     "/5, >= best-of-100 on " + std::to_string(above_best) +
                                                     "/5, min GA / best = " + fmt("%.3f", min_margin)};
}

Outcome quantization()
{
    const SystemParams sp = reference_at(6, 32, 20.0);
    const double cont = run_ga(sp, PhaseDomain::continuous(), 600).best_sum_rate;
    std::vector<double> by_bits;
    for (unsigned b = 1; b <= 4; ++b)
        by_bits.push_back(run_ga(sp, PhaseDomain::discrete(b), 600 + b).best_sum_rate);
    bool monotone = true;
    for (std::size_t n = 1; n < by_bits.size(); ++n)
        monotone = monotone && by_bits[n] >= 0.99 * by_bits[n - 1];
    std::ostringstream os;
    os << "B=1..4: " << fmt("%.3f", by_bits[0]) << " " << fmt("%.3f", by_bits[1]) << " " << fmt("%.3f", by_bits[2])
       << " " << fmt("%.3f", by_bits[3]) << ", continuous " << fmt("%.3f", cont) << ", B=3 / continuous "
       << fmt("%.4f", by_bits[2] / cont);
    return {by_bits[2] >= 0.95 * cont && monotone, os.str()};
}

Outcome rician_trend()
{
    std::vector<double> rates;
    for (double k : {1.0, 10.0, 100.0})
    {
        SystemParams sp = reference_at(6, 32, 20.0);
        sp.set_rician(k, k);
        rates.push_back(run_ga(sp, PhaseDomain::discrete(2), 700 + static_cast<std::uint64_t>(k)).best_sum_rate);
    }
    const bool ok = rates[1] >= 0.98 * rates[0] && rates[2] >= 0.98 * rates[1];
    return {ok, "kappa 1, 10, 100: " + fmt("%.3f", rates[0]) + " " + fmt("%.3f", rates[1]) + " " +
                    fmt("%.3f", rates[2])};
}

Outcome elitism()
{
    std::size_t steps = 0;
    bool ok = !ga_histories.empty();
    for (const auto &h : ga_histories)
        for (std::size_t n = 1; n < h.size(); ++n, ++steps)
            ok = ok && h[n] <= h[n - 1];
    return {ok, std::to_string(ga_histories.size()) + " runs, " + std::to_string(steps) + " generation steps"};
}

Outcome phase_invariance()
{
    Rng rng(909);
    double worst = 0.0;
    for (int n = 0; n < 100; ++n)
    {
        SystemParams sp = reference_at(6, 8 + 8 * (n % 4), 20.0 * rng.uniform());
        const PhaseConfig th = random_genome(PhaseDomain::continuous(), sp.L, rng);
        const double base = approx_rates(sp, th).sum;
        const double moved = approx_rates(sp, th.shifted(rng.uniform_angle())).sum;
        worst = std::max(worst, std::abs(moved - base) / base);
    }
    return {worst < 1e-12, "max relative change " + fmt("%.3g", worst)};
}

// SINR and sum rate from second moments, coded independently of SumRateModel
double brute_sum_rate(const SystemParams &sp, std::span<const double> theta)
{
    const double L = static_cast<double>(sp.L);
    auto moment = [&](const PairParams &rx, const PairParams &tx) {
        const double kb = rx.kappa_rx, ka = tx.kappa_tx;
        const double om = omega_naive(theta, rx.aoa, tx.aod);
        return (kb * ka * om + L * (kb + ka) + L) / ((kb + 1) * (ka + 1));
    };
    double total = 0.0;
    for (const auto &rx : sp.pairs)
    {
        double signal = 0.0, interference = 0.0;
        for (const auto &tx : sp.pairs)
        {
            const double v = tx.power * rx.alpha_b * tx.alpha_a * moment(rx, tx);
            (&tx == &rx ? signal : interference) += v;
        }
        total += std::log2(1.0 + signal / (interference + rx.noise_var));
    }
    return total;
}

Outcome exhaustive_oracle()
{
    Rng rng(1010);
    int matched = 0;
    double worst = 0.0;
    for (int n = 0; n < 20; ++n)
    {
        const unsigned B = 1 + static_cast<unsigned>(rng.below(3));
        const std::size_t L = 1 + rng.below(12 / B);
        const std::size_t K = 1 + rng.below(4);
        std::vector<PairParams> pairs;
        for (std::size_t i = 0; i < K; ++i)
        {
            PairParams p;
            p.alpha_a = 0.001 + 0.05 * rng.uniform();
            p.alpha_b = 0.001 + 0.05 * rng.uniform();
            p.kappa_tx = 20.0 * rng.uniform();
            p.kappa_rx = 20.0 * rng.uniform();
            p.aoa = rng.uniform_angle();
            p.aod = rng.uniform_angle();
            p.power = std::pow(10.0, 3.0 * rng.uniform());
            p.noise_var = 0.5 + rng.uniform();
            pairs.push_back(p);
        }
        const SystemParams sp = make_system(L, pairs);

        const std::size_t levels = std::size_t{1} << B;
        std::vector<double> theta(L);
        double best = -1.0;
        std::function<void(std::size_t)> loop = [&](std::size_t depth) {
            if (depth == L)
            {
                best = std::max(best, brute_sum_rate(sp, theta));
                return;
            }
            for (std::size_t k = 0; k < levels; ++k)
            {
                theta[depth] = 2.0 * pi * static_cast<double>(k) / static_cast<double>(levels);
                loop(depth + 1);
            }
        };
        loop(0);

        const OptResult ex = exhaustive_search(sp, B);
        const double at_arg = brute_sum_rate(sp, ex.best_theta.angles());
        const double dev = std::max(std::abs(ex.best_sum_rate - best), std::abs(at_arg - best)) / best;
        worst = std::max(worst, dev);
        matched += dev <= 1e-12 && ex.evaluations == std::size_t{1} << (B * L);
    }
    return {matched == 20, std::to_string(matched) + "/20 instances match, max relative gap " + fmt("%.3g", worst)};
}

} // namespace

int main()
{
    struct Criterion
    {
        int id;
        const char *name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {1, "omega identity", omega_identity},
        {2, "second-moment oracle", second_moment_oracle},
        {3, "closed form vs Monte-Carlo, SNR and L trends", closed_form_agreement},
        {4, "GA near-optimality vs exhaustive", ga_near_optimal},
        {5, "GA beats random phases", ga_beats_random},
        {6, "quantization saturation", quantization},
        {7, "Rician trend", rician_trend},
        {8, "elitism monotonicity", elitism},
        {9, "global phase invariance", phase_invariance},
        {10, "exhaustive vs nested-loop brute force", exhaustive_oracle},
    };
    int failed = 0;
    for (const auto &c : criteria)
    {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try
        {
            out = c.run();
        }
        catch (const std::exception &e)
        {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += !out.pass;
        std::printf("criterion %2d %s  %s: %s [%.1f s]\n", c.id, out.pass ? "PASS" : "FAIL", c.name,
                    out.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d of 10 criteria passed\n", 10 - failed);
    return failed == 0 ? 0 : 1;
}
