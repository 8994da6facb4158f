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

#include <json.hpp>

#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

namespace rismp
{

std::string to_string(SweepKind k)
{
    switch (k)
    {
    case SweepKind::snr:
        return "snr";
    case SweepKind::bits:
        return "bits";
    case SweepKind::rician:
        return "rician";
    case SweepKind::elements:
        return "elements";
    case SweepKind::point:
        return "point";
    }
    return "?";
}

SweepKind sweep_kind_from_string(const std::string &s)
{
    for (auto k : {SweepKind::snr, SweepKind::bits, SweepKind::rician, SweepKind::elements, SweepKind::point})
        if (to_string(k) == s)
            return k;
    throw std::invalid_argument("unknown sweep kind '" + s + "' (expected snr, bits, rician or elements)");
}

OutputFormat output_format_from_string(const std::string &s)
{
    if (s == "csv")
        return OutputFormat::csv;
    if (s == "jsonl" || s == "json-lines")
        return OutputFormat::jsonl;
    throw std::invalid_argument("unknown format '" + s + "' (expected csv or jsonl)");
}

std::uint64_t point_seed(std::uint64_t master, SweepKind kind, double value)
{
    const double v = value + 0.0; // -0 and +0 share a seed
    return derive_seed(derive_seed(master, hash_tag(to_string(kind).c_str())), std::bit_cast<std::uint64_t>(v));
}

ExperimentConfig apply_point(SweepKind kind, double value, const ExperimentConfig &cfg)
{
    ExperimentConfig out = cfg;
    switch (kind)
    {
    case SweepKind::snr:
        out.snr_db = value;
        out.system.set_snr_db(value);
        break;
    case SweepKind::bits:
    {
        const auto b = static_cast<unsigned>(value);
        out.phase_domain = b == 0 ? PhaseDomain::continuous() : PhaseDomain::discrete(b);
        break;
    }
    case SweepKind::rician:
        out.system.set_rician(value, value);
        break;
    case SweepKind::elements:
        out.system.L = static_cast<std::size_t>(value);
        break;
    case SweepKind::point:
        break;
    }
    out.system.validate();
    return out;
}

namespace
{

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

ResultRow base_row(SweepKind kind, double value, const std::string &scheme, std::uint64_t seed)
{
    ResultRow r;
    r.sweep_var = to_string(kind);
    r.value = value;
    r.scheme = scheme;
    r.method = to_string(RateMethod::closed_form);
    r.std_error = std::numeric_limits<double>::quiet_NaN();
    r.seed = seed;
    return r;
}

ResultRow error_row(ResultRow r, std::size_t K, const std::string &msg)
{
    r.sum_rate = std::numeric_limits<double>::quiet_NaN();
    r.per_pair.assign(K, std::numeric_limits<double>::quiet_NaN());
    r.error = msg;
    return r;
}

} // namespace

std::vector<ResultRow> run_point(SweepKind kind, double value, const ExperimentConfig &cfg, std::uint64_t seed)
{
    const ExperimentConfig pc = apply_point(kind, value, cfg);
    const Rng point_rng(seed);
    std::vector<ResultRow> rows;

    for (Scheme scheme : pc.schemes)
    {
        const std::string tag = to_string(scheme);
        ResultRow row = base_row(kind, value, tag, seed);
        const auto start = Clock::now();
        std::optional<OptResult> res;
        try
        {
            Rng rng = point_rng.split(hash_tag(tag.c_str()));
            switch (scheme)
            {
            case Scheme::ga:
                res = ga_optimize(pc.system, pc.ga, pc.phase_domain, rng);
                break;
            case Scheme::exhaustive:
                if (pc.phase_domain.is_continuous())
                    throw InfeasibleSearch("exhaustive_search: needs a discrete phase domain", 0.0);
                res = exhaustive_search(pc.system, pc.phase_domain.bits(), pc.exhaustive_cap);
                break;
            case Scheme::random:
                res = random_search(pc.system, pc.phase_domain, pc.random_draws, rng);
                break;
            }
        }
        catch (const std::exception &e)
        {
            rows.push_back(error_row(row, pc.system.K, e.what()));
            continue;
        }

        const RateReport cf = approx_rates(pc.system, res->best_theta);
        row.per_pair = cf.per_pair;
        row.sum_rate = cf.sum;
        row.generations = res->generations_used;
        row.wall_time_ms = elapsed_ms(start);
        rows.push_back(row);

        if (pc.monte_carlo)
        {
            const auto mc_start = Clock::now();
            const RateReport mc =
                monte_carlo_rates(pc.system, res->best_theta, pc.trials_mc, point_rng.split(hash_tag(("mc:" + tag).c_str())));
            ResultRow m = row;
            m.method = to_string(RateMethod::monte_carlo);
            m.per_pair = mc.per_pair;
            m.sum_rate = mc.sum;
            m.std_error = mc.sum_std_error;
            m.wall_time_ms = elapsed_ms(mc_start);
            rows.push_back(m);
        }

        if (scheme == Scheme::random)
        {
            ResultRow mean = base_row(kind, value, "random_mean", seed);
            mean.per_pair = res->mean_per_pair;
            mean.sum_rate = res->mean_sum_rate;
            mean.wall_time_ms = row.wall_time_ms;
            rows.push_back(mean);
        }
    }
    return rows;
}

std::vector<ResultRow> run_sweep(SweepKind kind, const ExperimentConfig &cfg)
{
    std::vector<double> grid;
    switch (kind)
    {
    case SweepKind::snr:
        grid = cfg.snr_grid;
        break;
    case SweepKind::bits:
        for (unsigned b : cfg.bits_grid)
            grid.push_back(b);
        break;
    case SweepKind::rician:
        grid = cfg.rician_grid;
        break;
    case SweepKind::elements:
        for (std::size_t l : cfg.elements_grid)
            grid.push_back(static_cast<double>(l));
        break;
    case SweepKind::point:
        grid = {0.0};
        break;
    }
    if (grid.empty())
        throw std::invalid_argument("run_sweep: the " + to_string(kind) + " grid is empty");
    std::vector<ResultRow> rows;
    for (double v : grid)
    {
        auto point = run_point(kind, v, cfg, point_seed(cfg.seed, kind, v));
        rows.insert(rows.end(), point.begin(), point.end());
    }
    return rows;
}

std::string format_number(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.12g", v);
    return buf.data();
}

namespace
{

std::size_t max_pairs(const std::vector<ResultRow> &rows)
{
    std::size_t k = 0;
    for (const auto &r : rows)
        k = std::max(k, r.per_pair.size());
    return k;
}

std::string csv_quote(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
    {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> csv_split(const std::string &line)
{
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i)
    {
        const char c = line[i];
        if (quoted)
        {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"')
            {
                cur += '"';
                ++i;
            }
            else if (c == '"')
                quoted = false;
            else
                cur += c;
        }
        else if (c == '"')
            quoted = true;
        else if (c == ',')
        {
            out.push_back(cur);
            cur.clear();
        }
        else
            cur += c;
    }
    out.push_back(cur);
    return out;
}

double parse_number(const std::string &s)
{
    if (s.empty() || s == "nan")
        return std::numeric_limits<double>::quiet_NaN();
    return std::stod(s);
}

// Rounds to the serialized precision so JSON and CSV agree on values.
double rounded(double v)
{
    return std::isfinite(v) ? std::stod(format_number(v)) : v;
}

} // namespace

void write_results(const std::vector<ResultRow> &rows, OutputFormat format, std::ostream &out)
{
    const std::size_t K = max_pairs(rows);
    if (format == OutputFormat::csv)
    {
        out << "sweep_var,value,scheme,method,sum_rate";
        for (std::size_t i = 1; i <= K; ++i)
            out << ",rate_" << i;
        out << ",std_error,seed,generations,wall_time_ms,error\n";
        for (const auto &r : rows)
        {
            out << r.sweep_var << ',' << format_number(r.value) << ',' << r.scheme << ',' << r.method << ','
                << format_number(r.sum_rate);
            for (std::size_t i = 0; i < K; ++i)
                out << ',' << (i < r.per_pair.size() ? format_number(r.per_pair[i]) : std::string());
            out << ',' << (std::isnan(r.std_error) ? std::string() : format_number(r.std_error)) << ',' << r.seed
                << ',' << r.generations << ',' << format_number(r.wall_time_ms) << ',' << csv_quote(r.error) << '\n';
        }
        return;
    }
    for (const auto &r : rows)
    {
        nlohmann::ordered_json j;
        auto num = [](double v) -> nlohmann::ordered_json {
            if (!std::isfinite(v))
                return nullptr;
            return rounded(v);
        };
        j["sweep_var"] = r.sweep_var;
        j["value"] = num(r.value);
        j["scheme"] = r.scheme;
        j["method"] = r.method;
        j["sum_rate"] = num(r.sum_rate);
        for (std::size_t i = 0; i < K; ++i)
            j["rate_" + std::to_string(i + 1)] = i < r.per_pair.size() ? num(r.per_pair[i]) : nullptr;
        j["std_error"] = num(r.std_error);
        j["seed"] = r.seed;
        j["generations"] = r.generations;
        j["wall_time_ms"] = num(r.wall_time_ms);
        j["error"] = r.error;
        out << j.dump() << '\n';
    }
}

void emit_results(const std::vector<ResultRow> &rows, OutputFormat format, const std::string &path)
{
    if (rows.empty())
        throw std::invalid_argument("emit_results: no rows to write");
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("emit_results: cannot open '" + path + "' for writing");
    write_results(rows, format, out);
    out.flush();
    if (!out)
        throw std::runtime_error("emit_results: write to '" + path + "' failed");
}

std::vector<ResultRow> read_results(const std::string &path, OutputFormat format)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("read_results: cannot open '" + path + "'");
    std::vector<ResultRow> rows;
    std::string line;
    if (format == OutputFormat::csv)
    {
        if (!std::getline(in, line))
            return rows;
        const auto header = csv_split(line);
        const std::size_t K = header.size() - 10;
        while (std::getline(in, line))
        {
            const auto f = csv_split(line);
            if (f.size() != header.size())
                throw std::runtime_error("read_results: malformed CSV line");
            ResultRow r;
            r.sweep_var = f[0];
            r.value = parse_number(f[1]);
            r.scheme = f[2];
            r.method = f[3];
            r.sum_rate = parse_number(f[4]);
            for (std::size_t i = 0; i < K; ++i)
                if (!f[5 + i].empty())
                    r.per_pair.push_back(parse_number(f[5 + i]));
            r.std_error = parse_number(f[5 + K]);
            r.seed = std::stoull(f[6 + K]);
            r.generations = std::stoull(f[7 + K]);
            r.wall_time_ms = parse_number(f[8 + K]);
            r.error = f[9 + K];
            rows.push_back(r);
        }
        return rows;
    }
    while (std::getline(in, line))
    {
        if (line.empty())
            continue;
        const auto j = nlohmann::json::parse(line);
        auto num = [](const nlohmann::json &v) {
            return v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>();
        };
        ResultRow r;
        r.sweep_var = j.at("sweep_var").get<std::string>();
        r.value = num(j.at("value"));
        r.scheme = j.at("scheme").get<std::string>();
        r.method = j.at("method").get<std::string>();
        r.sum_rate = num(j.at("sum_rate"));
        for (std::size_t i = 1; j.contains("rate_" + std::to_string(i)); ++i)
        {
            const auto &v = j["rate_" + std::to_string(i)];
            if (!v.is_null())
                r.per_pair.push_back(v.get<double>());
        }
        r.std_error = num(j.at("std_error"));
        r.seed = j.at("seed").get<std::uint64_t>();
        r.generations = j.at("generations").get<std::size_t>();
        r.wall_time_ms = num(j.at("wall_time_ms"));
        r.error = j.at("error").get<std::string>();
        rows.push_back(r);
    }
    return rows;
}

bool ValidationReport::all_pass() const
{
    for (const auto &c : checks)
        if (!c.pass)
            return false;
    return !checks.empty();
}

ValidationReport validate_oracles(const ExperimentConfig &cfg, const OracleHooks &hooks)
{
    std::function<double(const PhaseConfig &, double, double)> fast_omega = hooks.omega;
    if (!fast_omega)
        fast_omega = [](const PhaseConfig &t, double a, double d) { return omega(t, a, d); };
    const Rng root(derive_seed(cfg.seed, hash_tag("validate")));
    const SystemParams &sys = cfg.system;
    sys.validate();
    ValidationReport rep;

    {
        OracleCheck c{"omega_identity", 0.0, 1e-9, false, ""};
        Rng rng = root.split(1);
        constexpr std::array<std::size_t, 5> sizes{1, 2, 8, 32, 64};
        constexpr std::size_t draws = 1000;
        for (std::size_t n = 0; n < draws; ++n)
        {
            const std::size_t L = sizes[n % sizes.size()];
            const PhaseConfig theta = random_genome(PhaseDomain::continuous(), L, rng);
            const double aoa = rng.uniform_angle(), aod = rng.uniform_angle();
            const double dev = std::abs(omega_double_sum(theta, aoa, aod) - fast_omega(theta, aoa, aod)) /
                               static_cast<double>(L * L);
            c.max_deviation = std::max(c.max_deviation, dev);
        }
        c.pass = c.max_deviation <= c.threshold;
        c.detail = std::to_string(draws) + " draws, |double sum - |sum|^2| / L^2";
        rep.checks.push_back(c);
    }

    {
        OracleCheck c{"second_moment_mc", 0.0, 0.02, false, ""};
        Rng rng = root.split(2);
        const PhaseConfig theta = random_genome(cfg.phase_domain, sys.L, rng);
        constexpr std::size_t realizations = 100000;
        std::vector<std::pair<std::size_t, std::size_t>> links;
        for (std::size_t i = 0; i < sys.K; ++i)
        {
            links.emplace_back(i, i);
            if (sys.K > 1)
                links.emplace_back(i, (i + 1) % sys.K);
        }
        for (std::size_t n = 0; n < links.size(); ++n)
        {
            const auto [i, j] = links[n];
            const auto &rx = sys.pairs[i];
            const auto &tx = sys.pairs[j];
            const CVec los_b = los_steering(rx.aoa, sys.L);
            const CVec los_a = los_steering(tx.aod, sys.L);
            Rng link_rng = root.split(100 + n);
            CVec hb(sys.L), ha(sys.L);
            double acc = 0.0;
            for (std::size_t t = 0; t < realizations; ++t)
            {
                sample_rician(los_b, rx.kappa_rx, link_rng, hb);
                sample_rician(los_a, tx.kappa_tx, link_rng, ha);
                acc += effective_channel_power(hb, theta, ha);
            }
            const double mc = acc / static_cast<double>(realizations);
            const double cf = second_moment(rx.kappa_rx, tx.kappa_tx, omega(theta, rx.aoa, tx.aod), sys.L);
            c.max_deviation = std::max(c.max_deviation, std::abs(mc - cf) / cf);
        }
        c.pass = c.max_deviation <= c.threshold;
        c.detail = std::to_string(links.size()) + " links x " + std::to_string(realizations) + " realizations";
        rep.checks.push_back(c);
    }

    {
        OracleCheck c{"approx_vs_monte_carlo", 0.0, 0.05, false, ""};
        Rng rng = root.split(3);
        constexpr std::size_t n_theta = 2;
        for (std::size_t n = 0; n < n_theta; ++n)
        {
            const PhaseConfig theta = random_genome(cfg.phase_domain, sys.L, rng);
            const double cf = approx_rates(sys, theta).sum;
            const double mc = monte_carlo_rates(sys, theta, cfg.trials_mc, root.split(200 + n)).sum;
            c.max_deviation = std::max(c.max_deviation, std::abs(cf - mc) / mc);
        }
        c.pass = c.max_deviation <= c.threshold;
        c.detail = std::to_string(n_theta) + " phase vectors, " + std::to_string(cfg.trials_mc) + " trials";
        rep.checks.push_back(c);
    }
    return rep;
}

void print_report(const ValidationReport &rep, std::ostream &out)
{
    for (const auto &c : rep.checks)
    {
        out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "  max_dev=" << format_number(c.max_deviation)
            << "  threshold=" << format_number(c.threshold) << "  (" << c.detail << ")\n";
    }
    out << (rep.all_pass() ? "all oracle checks passed\n" : "oracle validation FAILED\n");
}

} // namespace rismp
