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

#include "rismp/experiments.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

using namespace rismp;

namespace
{

ExperimentConfig quick_config(std::size_t generations)
{
    ExperimentConfig cfg = default_config();
    cfg.ga.max_generations = generations;
    cfg.monte_carlo = false;
    return cfg;
}

std::vector<ResultRow> rows_for(const std::vector<ResultRow> &rows, const std::string &scheme,
                                const std::string &method)
{
    std::vector<ResultRow> out;
    for (const auto &r : rows)
        if (r.scheme == scheme && r.method == method)
            out.push_back(r);
    return out;
}

std::string slurp(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string temp_path(const std::string &name)
{
    return (std::filesystem::temp_directory_path() / ("rismp_test_" + name)).string();
}

} // namespace

TEST_CASE("snr sweep increases with SNR")
{
    ExperimentConfig cfg = quick_config(1000);
    cfg.snr_grid = {0.0, 10.0, 20.0};
    const auto rows = rows_for(run_sweep(SweepKind::snr, cfg), "ga", "closed_form");
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].sum_rate < rows[1].sum_rate);
    CHECK(rows[1].sum_rate < rows[2].sum_rate);
    for (const auto &r : rows)
    {
        CHECK(r.sweep_var == "snr");
        CHECK(r.per_pair.size() == 6);
        CHECK(r.generations == 1000);
        CHECK(r.error.empty());
    }
}

TEST_CASE("bits sweep is non-decreasing within GA noise")
{
    ExperimentConfig cfg = quick_config(2000);
    cfg.system.set_snr_db(20.0);
    cfg.bits_grid = {1, 2, 3, 4};
    const auto rows = rows_for(run_sweep(SweepKind::bits, cfg), "ga", "closed_form");
    REQUIRE(rows.size() == 4);
    for (std::size_t n = 1; n < rows.size(); ++n)
        CHECK(rows[n].sum_rate >= 0.99 * rows[n - 1].sum_rate);
}

TEST_CASE("rician sweep rows, with Monte-Carlo and random schemes")
{
    ExperimentConfig cfg = quick_config(50);
    cfg.system.L = 8;
    cfg.rician_grid = {1.0, 10.0, 100.0};
    CHECK(rows_for(run_sweep(SweepKind::rician, cfg), "ga", "closed_form").size() == 3);

    cfg.monte_carlo = true;
    cfg.trials_mc = 200;
    cfg.schemes = {Scheme::ga, Scheme::random};
    cfg.random_draws = 10;
    cfg.rician_grid = {10.0};
    const auto rows = run_sweep(SweepKind::rician, cfg);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].scheme == "ga");
    CHECK(rows[0].method == "closed_form");
    CHECK(std::isnan(rows[0].std_error));
    CHECK(rows[1].method == "monte_carlo");
    CHECK(rows[1].std_error > 0.0);
    CHECK(rows[2].scheme == "random");
    CHECK(rows[3].scheme == "random");
    CHECK(rows[4].scheme == "random_mean");
    CHECK(rows[4].sum_rate <= rows[2].sum_rate);
}

TEST_CASE("elements sweep and infeasible exhaustive points")
{
    ExperimentConfig cfg = quick_config(20);
    cfg.system = reference_system(2, 4);
    cfg.system.set_snr_db(20.0);
    cfg.schemes = {Scheme::exhaustive, Scheme::ga};
    cfg.exhaustive_cap = std::uint64_t{1} << 12;
    cfg.elements_grid = {4, 8};
    const auto rows = run_sweep(SweepKind::elements, cfg);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].scheme == "exhaustive");
    CHECK(rows[0].error.empty());
    CHECK(rows[1].scheme == "ga");
    CHECK(rows[1].sum_rate <= rows[0].sum_rate * (1 + 1e-12));
    CHECK(rows[2].scheme == "exhaustive");
    CHECK(std::isnan(rows[2].sum_rate));
    CHECK(rows[2].error.find("2^16") != std::string::npos);
    CHECK(rows[2].per_pair.size() == 2);
    CHECK(rows[3].error.empty()); // sweep continued
    CHECK(rows[3].per_pair.size() == 2);
}

TEST_CASE("sweep points are independent and reproducible")
{
    ExperimentConfig cfg = quick_config(100);
    cfg.snr_grid = {0.0, 10.0, 20.0};
    const auto all = run_sweep(SweepKind::snr, cfg);
    cfg.snr_grid = {10.0};
    const auto single = run_sweep(SweepKind::snr, cfg);
    REQUIRE(single.size() == 1);
    CHECK(single[0].sum_rate == all[1].sum_rate);
    CHECK(single[0].seed == all[1].seed);
    CHECK(single[0].seed == point_seed(cfg.seed, SweepKind::snr, 10.0));

    const auto again = run_point(SweepKind::snr, 20.0, cfg, all[2].seed);
    CHECK(again[0].sum_rate == all[2].sum_rate);
    CHECK(again[0].per_pair == all[2].per_pair);

    CHECK(point_seed(1, SweepKind::snr, 10.0) != point_seed(1, SweepKind::bits, 10.0));
    CHECK(point_seed(1, SweepKind::snr, 10.0) != point_seed(2, SweepKind::snr, 10.0));
}

TEST_CASE("emit_results")
{
    std::vector<ResultRow> rows;
    for (int n = 0; n < 3; ++n)
    {
        ResultRow r;
        r.sweep_var = "snr";
        r.value = 10.0 * n;
        r.scheme = "ga";
        r.method = n == 2 ? "monte_carlo" : "closed_form";
        r.per_pair = {std::numbers::pi * n, 1.0 / 3.0, std::exp(1.0)};
        r.sum_rate = r.per_pair[0] + r.per_pair[1] + r.per_pair[2];
        r.std_error = n == 2 ? 0.0123456789012345 : std::nan("");
        r.seed = 18446744073709551615ULL - n;
        r.generations = 10000;
        r.wall_time_ms = 12.5;
        r.error = n == 1 ? "bad, \"quoted\" point" : "";
        rows.push_back(r);
    }

    const std::string csv = temp_path("rows.csv"), csv2 = temp_path("rows2.csv"), jl = temp_path("rows.jsonl");
    emit_results(rows, OutputFormat::csv, csv);
    emit_results(rows, OutputFormat::csv, csv2);
    emit_results(rows, OutputFormat::jsonl, jl);

    const std::string text = slurp(csv);
    CHECK(std::count(text.begin(), text.end(), '\n') == 4);
    CHECK(text.rfind("sweep_var,value,scheme,method,sum_rate,rate_1,rate_2,rate_3,std_error,seed,generations,"
                     "wall_time_ms,error\n",
                     0) == 0);
    CHECK(text.find("3.14159265359") != std::string::npos); // 12 significant digits
    CHECK(slurp(csv) == slurp(csv2));

    const std::string jtext = slurp(jl);
    CHECK(std::count(jtext.begin(), jtext.end(), '\n') == 3);
    CHECK(jtext.find("\"rate_3\"") != std::string::npos);

    for (auto [path, fmt] : {std::pair{csv, OutputFormat::csv}, std::pair{jl, OutputFormat::jsonl}})
    {
        const auto back = read_results(path, fmt);
        REQUIRE(back.size() == rows.size());
        for (std::size_t n = 0; n < rows.size(); ++n)
        {
            CHECK(back[n].sweep_var == rows[n].sweep_var);
            CHECK(back[n].scheme == rows[n].scheme);
            CHECK(back[n].method == rows[n].method);
            CHECK(back[n].value == doctest::Approx(rows[n].value).epsilon(1e-11));
            CHECK(back[n].sum_rate == doctest::Approx(rows[n].sum_rate).epsilon(1e-11));
            REQUIRE(back[n].per_pair.size() == 3);
            for (std::size_t i = 0; i < 3; ++i)
                CHECK(back[n].per_pair[i] == doctest::Approx(rows[n].per_pair[i]).epsilon(1e-11));
            CHECK(std::isnan(back[n].std_error) == std::isnan(rows[n].std_error));
            if (!std::isnan(rows[n].std_error))
                CHECK(back[n].std_error == doctest::Approx(rows[n].std_error).epsilon(1e-11));
            CHECK(back[n].seed == rows[n].seed);
            CHECK(back[n].generations == rows[n].generations);
            CHECK(back[n].error == rows[n].error);
        }
    }

    CHECK_THROWS_AS(emit_results(rows, OutputFormat::csv, "/nonexistent-dir/x/rows.csv"), std::runtime_error);
    CHECK_THROWS_AS(emit_results({}, OutputFormat::csv, csv), std::invalid_argument);
    std::remove(csv.c_str());
    std::remove(csv2.c_str());
    std::remove(jl.c_str());
}

TEST_CASE("validate_oracles")
{
    SUBCASE("reference config passes")
    {
        const ValidationReport rep = validate_oracles(default_config());
        REQUIRE(rep.checks.size() == 3);
        CHECK(rep.all_pass());
    }

    SUBCASE("Rayleigh config")
    {
        ExperimentConfig cfg = default_config();
        cfg.system.set_rician(0.0, 0.0);
        const ValidationReport rep = validate_oracles(cfg);
        CHECK(rep.checks[1].pass);
        CHECK(second_moment(0.0, 0.0, 37.0, 16) == 16.0);
    }

    SUBCASE("corrupted kernel is caught")
    {
        OracleHooks hooks;
        hooks.omega = [](const PhaseConfig &theta, double aoa, double aod) {
            // off-by-one: skips adjacent-element pairs
            const double step = std::numbers::pi * (std::sin(aoa) + std::sin(aod));
            const std::size_t L = theta.size();
            double acc = 0.0;
            for (std::size_t m = 0; m < L; ++m)
                for (std::size_t n = m + 2; n < L; ++n)
                    acc += std::cos(theta.angle(n) - theta.angle(m) + static_cast<double>(n - m) * step);
            return static_cast<double>(L) + 2.0 * acc;
        };
        ExperimentConfig cfg = default_config();
        cfg.trials_mc = 500;
        const ValidationReport rep = validate_oracles(cfg, hooks);
        CHECK_FALSE(rep.checks[0].pass);
        CHECK_FALSE(rep.all_pass());
    }
}
