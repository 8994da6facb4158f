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

// rismp command line: one-shot rates, phase optimization, parameter sweeps
// and the oracle validation suite.
//
// Exit codes: 0 success, 1 validation failure, 2 config error,
// 3 infeasible exhaustive search.

#include "rismp/config.hpp"
#include "rismp/experiments.hpp"
#include "rismp/optimizer.hpp"
#include "rismp/rate.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace
{

using namespace rismp;

constexpr int exit_validation = 1;
constexpr int exit_config = 2;
constexpr int exit_infeasible = 3;

struct CommonOptions
{
    std::string config;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string format = "csv";
    std::optional<std::size_t> trials;
    std::optional<unsigned> bits;
    std::optional<std::size_t> elements;
    std::vector<double> snr_db;
};

void add_common(CLI::App *cmd, CommonOptions &o)
{
    cmd->add_option("--config", o.config, "JSON configuration file");
    cmd->add_option("--seed", o.seed, "Master seed");
    cmd->add_option("--out", o.out, "Output file (default: stdout)");
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "jsonl"}));
    cmd->add_option("--trials", o.trials, "Monte-Carlo trials (0 disables Monte-Carlo rows)");
    cmd->add_option("--bits", o.bits, "Phase quantization bits (0 = continuous)");
    cmd->add_option("--elements", o.elements, "Number of RIS elements L");
    cmd->add_option("--snr-db", o.snr_db, "SNR values in dB (sweep grid; first value for one-shot commands)")->delimiter(',');
}

ExperimentConfig build_config(const CommonOptions &o)
{
    ExperimentConfig cfg = o.config.empty() ? default_config() : load_config(o.config);
    if (o.seed)
        cfg.seed = *o.seed;
    if (o.trials)
    {
        cfg.monte_carlo = *o.trials > 0;
        if (*o.trials > 0)
            cfg.trials_mc = *o.trials;
    }
    if (o.bits)
    {
        if (*o.bits > 16)
            throw ConfigError("--bits", "must be in [0, 16]");
        cfg.phase_domain = *o.bits == 0 ? PhaseDomain::continuous() : PhaseDomain::discrete(*o.bits);
    }
    if (o.elements)
    {
        if (*o.elements < 1)
            throw ConfigError("--elements", "must be positive");
        cfg.system.L = *o.elements;
    }
    if (!o.snr_db.empty())
    {
        cfg.snr_grid = o.snr_db;
        cfg.snr_db = o.snr_db.front();
        cfg.system.set_snr_db(cfg.snr_db);
    }
    return cfg;
}

void output(const std::vector<ResultRow> &rows, const CommonOptions &o)
{
    const auto fmt = output_format_from_string(o.format);
    if (o.out.empty())
        write_results(rows, fmt, std::cout);
    else
        emit_results(rows, fmt, o.out);
}

PhaseConfig theta_from_options(const ExperimentConfig &cfg, const std::vector<double> &theta,
                               const std::vector<std::uint32_t> &levels)
{
    const std::size_t L = cfg.system.L;
    if (!levels.empty())
    {
        if (cfg.phase_domain.is_continuous())
            throw ConfigError("--levels", "needs a discrete phase domain (--bits B)");
        if (levels.size() != L)
            throw ConfigError("--levels", "expected " + std::to_string(L) + " values");
        return PhaseConfig::discrete(cfg.phase_domain.bits(), levels);
    }
    if (!theta.empty())
    {
        if (theta.size() != L)
            throw ConfigError("--theta", "expected " + std::to_string(L) + " values");
        const PhaseConfig cont = PhaseConfig::continuous(theta);
        return cfg.phase_domain.is_continuous() ? cont : quantize(cont, cfg.phase_domain.bits());
    }
    return PhaseConfig::zeros(cfg.phase_domain, L);
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"RIS-aided multi-pair rate analysis and phase-shift optimization"};
    app.require_subcommand(1);

    CommonOptions rate_opt, opt_opt, sweep_opt, val_opt;
    std::vector<double> theta;
    std::vector<std::uint32_t> levels;
    std::string scheme = "ga";
    std::string kind = "snr";

    auto *rate_cmd = app.add_subcommand("rate", "Closed-form (and optional Monte-Carlo) rates for a given theta");
    add_common(rate_cmd, rate_opt);
    rate_cmd->add_option("--theta", theta, "Phase shifts in radians (quantized when --bits > 0)")->delimiter(',');
    rate_cmd->add_option("--levels", levels, "Discrete phase levels 0..2^B-1")->delimiter(',');

    auto *opt_cmd = app.add_subcommand("optimize", "Optimize the RIS phases");
    add_common(opt_cmd, opt_opt);
    opt_cmd->add_option("--scheme", scheme, "Optimization scheme")->check(CLI::IsMember({"ga", "exhaustive", "random"}));

    auto *sweep_cmd = app.add_subcommand("sweep", "Run a parameter sweep");
    add_common(sweep_cmd, sweep_opt);
    sweep_cmd->add_option("--kind", kind, "Sweep variable")->check(CLI::IsMember({"snr", "bits", "rician", "elements"}));

    auto *val_cmd = app.add_subcommand("validate", "Run the oracle validation suite");
    add_common(val_cmd, val_opt);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        // usage errors share the config-error exit code
        return app.exit(e) == 0 ? 0 : 2;
    }

    try
    {
        if (*rate_cmd)
        {
            const ExperimentConfig cfg = build_config(rate_opt);
            const PhaseConfig th = theta_from_options(cfg, theta, levels);
            const RateReport cf = approx_rates(cfg.system, th);
            std::vector<ResultRow> rows;
            ResultRow r;
            r.sweep_var = "point";
            r.scheme = "given";
            r.method = to_string(RateMethod::closed_form);
            r.per_pair = cf.per_pair;
            r.sum_rate = cf.sum;
            r.std_error = std::numeric_limits<double>::quiet_NaN();
            r.seed = cfg.seed;
            rows.push_back(r);
            if (cfg.monte_carlo)
            {
                const RateReport mc = monte_carlo_rates(cfg.system, th, cfg.trials_mc, Rng(cfg.seed));
                r.method = to_string(RateMethod::monte_carlo);
                r.per_pair = mc.per_pair;
                r.sum_rate = mc.sum;
                r.std_error = mc.sum_std_error;
                rows.push_back(r);
            }
            output(rows, rate_opt);
        }
        else if (*opt_cmd)
        {
            ExperimentConfig cfg = build_config(opt_opt);
            cfg.schemes = {scheme_from_string(scheme)};
            const auto rows = run_point(SweepKind::point, 0.0, cfg, point_seed(cfg.seed, SweepKind::point, 0.0));
            output(rows, opt_opt);
            for (const auto &r : rows)
            {
                if (!r.error.empty())
                {
                    std::cerr << "error: " << r.error << '\n';
                    return scheme == "exhaustive" ? exit_infeasible : exit_config;
                }
            }
        }
        else if (*sweep_cmd)
        {
            const ExperimentConfig cfg = build_config(sweep_opt);
            const auto rows = run_sweep(sweep_kind_from_string(kind), cfg);
            output(rows, sweep_opt);
            for (const auto &r : rows)
                if (!r.error.empty())
                    std::cerr << "warning: " << r.sweep_var << "=" << r.value << " " << r.scheme << ": " << r.error
                              << '\n';
        }
        else if (*val_cmd)
        {
            const ExperimentConfig cfg = build_config(val_opt);
            const ValidationReport rep = validate_oracles(cfg);
            print_report(rep, std::cout);
            return rep.all_pass() ? 0 : exit_validation;
        }
    }
    catch (const ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    }
    catch (const InfeasibleSearch &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_infeasible;
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_config;
    }
    return 0;
}
