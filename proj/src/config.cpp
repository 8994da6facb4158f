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

#include "rismp/config.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace rismp
{

using nlohmann::json;

std::string to_string(Scheme s)
{
    switch (s)
    {
    case Scheme::ga:
        return "ga";
    case Scheme::exhaustive:
        return "exhaustive";
    case Scheme::random:
        return "random";
    }
    return "?";
}

Scheme scheme_from_string(const std::string &s)
{
    if (s == "ga")
        return Scheme::ga;
    if (s == "exhaustive")
        return Scheme::exhaustive;
    if (s == "random")
        return Scheme::random;
    throw std::invalid_argument("unknown scheme '" + s + "' (expected ga, exhaustive or random)");
}

ExperimentConfig default_config()
{
    ExperimentConfig cfg;
    cfg.system = reference_system(6, 16);
    cfg.system.set_snr_db(cfg.snr_db);
    return cfg;
}

namespace
{

std::string join(const std::string &base, const std::string &key)
{
    return base.empty() ? key : base + "." + key;
}

void check_keys(const json &obj, const std::string &path, std::initializer_list<const char *> allowed)
{
    if (!obj.is_object())
        throw ConfigError(path, "expected an object");
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!ok.count(it.key()))
            throw ConfigError(join(path, it.key()), "unknown field");
}

template <typename T>
std::optional<T> get(const json &obj, const std::string &base, const char *key)
{
    auto it = obj.find(key);
    if (it == obj.end())
        return std::nullopt;
    try
    {
        if constexpr (std::is_same_v<T, double>)
        {
            if (!it->is_number())
                throw ConfigError(join(base, key), "expected a number");
        }
        else if constexpr (std::is_integral_v<T> && !std::is_same_v<T, bool>)
        {
            if (!it->is_number_integer() && !it->is_number_unsigned())
                throw ConfigError(join(base, key), "expected an integer");
            if constexpr (std::is_unsigned_v<T>)
                if (it->is_number_integer() && it->template get<std::int64_t>() < 0)
                    throw ConfigError(join(base, key), "must be non-negative");
        }
        return it->template get<T>();
    }
    catch (const json::exception &e)
    {
        throw ConfigError(join(base, key), e.what());
    }
}

template <typename T>
std::vector<T> get_list(const json &obj, const std::string &base, const char *key, std::vector<T> fallback)
{
    auto it = obj.find(key);
    if (it == obj.end())
        return fallback;
    const std::string path = join(base, key);
    if (!it->is_array())
        throw ConfigError(path, "expected an array");
    if (it->empty())
        throw ConfigError(path, "grid must not be empty");
    std::vector<T> out;
    for (std::size_t n = 0; n < it->size(); ++n)
    {
        const json &v = (*it)[n];
        const std::string p = path + "[" + std::to_string(n) + "]";
        if constexpr (std::is_same_v<T, double>)
        {
            if (!v.is_number())
                throw ConfigError(p, "expected a number");
        }
        else
        {
            if (!v.is_number_unsigned() && !(v.is_number_integer() && v.template get<std::int64_t>() >= 0))
                throw ConfigError(p, "expected a non-negative integer");
        }
        out.push_back(v.template get<T>());
    }
    return out;
}

void parse_system(const json &j, ExperimentConfig &cfg)
{
    const std::string base = "system";
    check_keys(j, base, {"K", "L", "snr_db", "noise_var", "kappa_tx", "kappa_rx", "pairs"});
    const auto K = get<std::size_t>(j, base, "K");
    const auto L = get<std::size_t>(j, base, "L").value_or(cfg.system.L);
    if (L < 1)
        throw ConfigError("system.L", "must be positive");
    if (auto snr = get<double>(j, base, "snr_db"))
        cfg.snr_db = *snr;
    const double noise = get<double>(j, base, "noise_var").value_or(1.0);
    const double ktx = get<double>(j, base, "kappa_tx").value_or(10.0);
    const double krx = get<double>(j, base, "kappa_rx").value_or(10.0);

    const json *pairs = j.contains("pairs") ? &j["pairs"] : nullptr;
    if (pairs && !pairs->is_array())
        throw ConfigError("system.pairs", "expected an array");
    std::size_t n_pairs = K.value_or(pairs ? pairs->size() : cfg.system.K);
    if (n_pairs < 1)
        throw ConfigError("system.K", "must be positive");
    if (pairs && pairs->size() != n_pairs)
        throw ConfigError("system.pairs", "has " + std::to_string(pairs->size()) + " entries but K = " +
                                              std::to_string(n_pairs));

    const double power = std::pow(10.0, cfg.snr_db / 10.0);
    std::vector<PairParams> out;
    for (std::size_t i = 0; i < n_pairs; ++i)
    {
        PairParams p;
        const bool has_row = i < 6;
        if (has_row)
            p = reference_system(6, 1).pairs[i];
        p.kappa_tx = ktx;
        p.kappa_rx = krx;
        p.noise_var = noise;
        p.power = power;
        const std::string pb = "system.pairs[" + std::to_string(i) + "]";
        if (pairs)
        {
            const json &e = (*pairs)[i];
            check_keys(e, pb, {"aoa", "aod", "alpha_a", "alpha_b", "kappa_tx", "kappa_rx", "power", "noise_var"});
            if (!has_row)
                for (const char *req : {"aoa", "aod", "alpha_a", "alpha_b"})
                    if (!e.contains(req))
                        throw ConfigError(join(pb, req), "required for pairs beyond the 6 reference rows");
            p.aoa = get<double>(e, pb, "aoa").value_or(p.aoa);
            p.aod = get<double>(e, pb, "aod").value_or(p.aod);
            p.alpha_a = get<double>(e, pb, "alpha_a").value_or(p.alpha_a);
            p.alpha_b = get<double>(e, pb, "alpha_b").value_or(p.alpha_b);
            p.kappa_tx = get<double>(e, pb, "kappa_tx").value_or(p.kappa_tx);
            p.kappa_rx = get<double>(e, pb, "kappa_rx").value_or(p.kappa_rx);
            p.power = get<double>(e, pb, "power").value_or(p.power);
            p.noise_var = get<double>(e, pb, "noise_var").value_or(p.noise_var);
        }
        else if (!has_row)
        {
            throw ConfigError("system.K", "K = " + std::to_string(n_pairs) +
                                              " exceeds the 6 reference pairs; give system.pairs explicitly");
        }
        out.push_back(p);
    }
    try
    {
        cfg.system = make_system(L, std::move(out));
    }
    catch (const std::invalid_argument &e)
    {
        throw ConfigError("system", e.what());
    }
}

void parse_ga(const json &j, GaConfig &ga)
{
    const std::string base = "ga";
    check_keys(j, base,
               {"n_total", "n_survivors", "n_children", "n_elites", "max_generations", "mutation_rate",
                "fitness_tol", "selection_mode", "stall_generations", "stall_tol"});
    ga.n_total = get<std::size_t>(j, base, "n_total").value_or(ga.n_total);
    ga.n_survivors = get<std::size_t>(j, base, "n_survivors").value_or(ga.n_survivors);
    ga.n_children = get<std::size_t>(j, base, "n_children").value_or(ga.n_children);
    ga.n_elites = get<std::size_t>(j, base, "n_elites").value_or(ga.n_elites);
    ga.max_generations = get<std::size_t>(j, base, "max_generations").value_or(ga.max_generations);
    ga.mutation_rate = get<double>(j, base, "mutation_rate").value_or(ga.mutation_rate);
    ga.fitness_tol = get<double>(j, base, "fitness_tol").value_or(ga.fitness_tol);
    ga.stall_generations = get<std::size_t>(j, base, "stall_generations").value_or(ga.stall_generations);
    ga.stall_tol = get<double>(j, base, "stall_tol").value_or(ga.stall_tol);
    if (auto m = get<std::string>(j, base, "selection_mode"))
    {
        try
        {
            ga.selection_mode = selection_mode_from_string(*m);
        }
        catch (const std::invalid_argument &e)
        {
            throw ConfigError("ga.selection_mode", e.what());
        }
    }
    try
    {
        ga.validate();
    }
    catch (const std::invalid_argument &e)
    {
        // messages already lead with the field path
        const std::string msg = e.what();
        const auto colon = msg.find(':');
        throw ConfigError(msg.substr(0, colon), msg.substr(colon + 2));
    }
}

PhaseDomain parse_domain(const json &j)
{
    const std::string base = "phase_domain";
    check_keys(j, base, {"type", "bits"});
    const std::string type = get<std::string>(j, base, "type").value_or("discrete");
    if (type == "continuous")
    {
        if (j.contains("bits"))
            throw ConfigError("phase_domain.bits", "not allowed for continuous phases");
        return PhaseDomain::continuous();
    }
    if (type != "discrete")
        throw ConfigError("phase_domain.type", "expected 'continuous' or 'discrete'");
    const unsigned bits = get<unsigned>(j, base, "bits").value_or(2);
    if (bits < 1 || bits > 16)
        throw ConfigError("phase_domain.bits", "must be in [1, 16]");
    return PhaseDomain::discrete(bits);
}

} // namespace

ExperimentConfig parse_config(const std::string &json_text)
{
    json root = json::object();
    if (json_text.find_first_not_of(" \t\r\n") != std::string::npos)
        try
        {
            root = json::parse(json_text, nullptr, true, /*ignore_comments=*/true);
        }
        catch (const json::parse_error &e)
        {
            throw ConfigError("", std::string("parse error: ") + e.what());
        }
    if (root.is_null())
        root = json::object();
    check_keys(root, "",
               {"system", "phase_domain", "ga", "trials_mc", "monte_carlo", "seed", "snr_grid", "bits_grid",
                "rician_grid", "elements_grid", "schemes", "random_draws", "exhaustive_cap"});

    ExperimentConfig cfg = default_config();
    parse_system(root.value("system", json::object()), cfg);
    if (root.contains("phase_domain"))
        cfg.phase_domain = parse_domain(root["phase_domain"]);
    if (root.contains("ga"))
        parse_ga(root["ga"], cfg.ga);

    cfg.trials_mc = get<std::size_t>(root, "", "trials_mc").value_or(cfg.trials_mc);
    if (cfg.trials_mc < 1)
        throw ConfigError("trials_mc", "must be >= 1");
    if (root.contains("monte_carlo"))
    {
        if (!root["monte_carlo"].is_boolean())
            throw ConfigError("monte_carlo", "expected true or false");
        cfg.monte_carlo = root["monte_carlo"].get<bool>();
    }
    cfg.seed = get<std::uint64_t>(root, "", "seed").value_or(cfg.seed);
    cfg.snr_grid = get_list<double>(root, "", "snr_grid", cfg.snr_grid);
    cfg.bits_grid = get_list<unsigned>(root, "", "bits_grid", cfg.bits_grid);
    for (std::size_t n = 0; n < cfg.bits_grid.size(); ++n)
        if (cfg.bits_grid[n] > 16)
            throw ConfigError("bits_grid[" + std::to_string(n) + "]", "must be in [0, 16] (0 = continuous)");
    cfg.rician_grid = get_list<double>(root, "", "rician_grid", cfg.rician_grid);
    for (std::size_t n = 0; n < cfg.rician_grid.size(); ++n)
        if (!(cfg.rician_grid[n] >= 0.0))
            throw ConfigError("rician_grid[" + std::to_string(n) + "]", "must be >= 0");
    cfg.elements_grid = get_list<std::size_t>(root, "", "elements_grid", cfg.elements_grid);
    for (std::size_t n = 0; n < cfg.elements_grid.size(); ++n)
        if (cfg.elements_grid[n] < 1)
            throw ConfigError("elements_grid[" + std::to_string(n) + "]", "must be >= 1");
    if (root.contains("schemes"))
    {
        const json &s = root["schemes"];
        if (!s.is_array() || s.empty())
            throw ConfigError("schemes", "expected a non-empty array");
        cfg.schemes.clear();
        for (std::size_t n = 0; n < s.size(); ++n)
        {
            const std::string p = "schemes[" + std::to_string(n) + "]";
            if (!s[n].is_string())
                throw ConfigError(p, "expected a string");
            try
            {
                cfg.schemes.push_back(scheme_from_string(s[n].get<std::string>()));
            }
            catch (const std::invalid_argument &e)
            {
                throw ConfigError(p, e.what());
            }
        }
    }
    cfg.random_draws = get<std::size_t>(root, "", "random_draws").value_or(cfg.random_draws);
    if (cfg.random_draws < 1)
        throw ConfigError("random_draws", "must be >= 1");
    cfg.exhaustive_cap = get<std::uint64_t>(root, "", "exhaustive_cap").value_or(cfg.exhaustive_cap);
    return cfg;
}

ExperimentConfig load_config(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("", "cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

} // namespace rismp
