/*
 * Copyright 2026 The drinfeld-heights Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

struct Flag {
    const char* name;
    const char* key;
    const char* help;
};

// Options shared by every subcommand; each one becomes a config key.
constexpr Flag kValueFlags[] = {
    {"--p", "p", "characteristic of F_q"},
    {"--e", "e", "degree of F_q over F_p"},
    {"--modulus", "modulus", "defining polynomial of F_q in g (when e > 1)"},
    {"--coeffs", "coeffs", "coefficients a_0, ..., a_d of phi_t (a_0 must be t)"},
    {"--beta", "beta", "point of F_q(t)"},
    {"--alpha", "alpha", "torsion target for siegel-scan (default 0)"},
    {"--S", "S", "finite set of places, e.g. \"t, inf\""},
    {"--places", "places", "places to evaluate"},
    {"--place", "place", "a single place"},
    {"--poly", "poly", "polynomial to factor"},
    {"--deg-max", "deg_max", "largest degree of Q"},
    {"--qdeg-max", "qdeg_max", "largest degree of Q for schinzel-scan"},
    {"--place-deg-max", "place_deg_max", "largest place degree searched"},
    {"--fit-degree", "fit_degree", "largest deg Q used to fit gap-law constants"},
    {"--cap", "cap", "largest torsion order degree tried"},
    {"--n-max", "n_max", "iteration budget for local heights"},
    {"--window", "window", "adic precision window"},
    {"--retries", "retries", "precision retries"},
    {"--seed", "seed", "seed for randomized factoring"},
    {"--workers", "workers", "worker threads (0 = hardware)"},
};

constexpr Flag kBoolFlags[] = {
    {"--strict", "strict", "use the strict integrality variant"},
    {"--exact", "exact", "also run the degree-unbounded primitive place search"},
    {"--no-zero-sums", "zero_sums", "skip fixed-Q sums in average"},
};

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Heights, equidistribution and integrality for Drinfeld modules over F_q(t)"};
    app.require_subcommand(1, 1);

    std::vector<std::string> config_files;
    std::vector<std::string> sets;
    bool json = false;
    bool csv = false;
    app.add_option("--config,--module", config_files, "config file with key = value lines")->check(CLI::ExistingFile);
    app.add_option("--set", sets, "override a config key, as key=value");
    auto* jf = app.add_flag("--json", json, "emit JSON (JSON lines for schinzel-scan)");
    app.add_flag("--csv", csv, "emit CSV tables")->excludes(jf);

    std::vector<std::pair<std::string, std::string>> value_slots(std::size(kValueFlags));
    std::vector<bool> bool_slots(std::size(kBoolFlags));
    for (std::size_t i = 0; i < std::size(kValueFlags); ++i)
        app.add_option(kValueFlags[i].name, value_slots[i].second, kValueFlags[i].help);
    std::vector<CLI::Option*> bool_opts;
    for (std::size_t i = 0; i < std::size(kBoolFlags); ++i)
        bool_opts.push_back(app.add_flag(kBoolFlags[i].name, kBoolFlags[i].help));
    app.fallthrough();

    const std::vector<std::pair<const char*, const char*>> commands{
        {"height", "canonical height with per-place breakdown"},
        {"torsion-order", "decide torsion and find the monic order"},
        {"average", "torsion averages against local targets"},
        {"siegel-scan", "S-integral torsion translates"},
        {"schinzel-scan", "primitive places of phi_Q(beta)"},
        {"reduce", "reduction at finite places"},
        {"factor", "factor a polynomial over F_q"},
    };
    for (const auto& [name, help] : commands) app.add_subcommand(name, help);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : drinfeld::cli::kUsageError;
    }

    drinfeld::cli::RunConfig cfg;
    try {
        for (const std::string& f : config_files) cfg.read_file(f);
        for (std::size_t i = 0; i < std::size(kValueFlags); ++i)
            if (app.get_option(kValueFlags[i].name)->count() > 0) cfg.set(kValueFlags[i].key, value_slots[i].second);
        for (std::size_t i = 0; i < std::size(kBoolFlags); ++i)
            if (bool_opts[i]->count() > 0)
                cfg.set(kBoolFlags[i].key, std::string(kBoolFlags[i].key) == "zero_sums" ? "false" : "true");
        for (const std::string& s : sets) {
            const auto eq = s.find('=');
            if (eq == std::string::npos) throw drinfeld::cli::ConfigError("--set expects key=value, got `" + s + "`");
            cfg.set(s.substr(0, eq), s.substr(eq + 1));
        }
    } catch (const drinfeld::cli::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return drinfeld::cli::kUsageError;
    }

    const auto fmt = json ? drinfeld::cli::Format::Json : csv ? drinfeld::cli::Format::Csv : drinfeld::cli::Format::Human;
    const std::string name = app.get_subcommands().front()->get_name();
    return drinfeld::cli::run_command(name, cfg, fmt, std::cout, std::cerr);
}
