// SPDX-License-Identifier: Apache-2.0
//
// iasim - link-level simulator for IA-based cognitive relay networks
// Copyright (C) 2026 The iasim Authors
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

// Command-line front end: BER sweeps, figure presets and alignment diagnostics.

#include "iasim/errors.hpp"
#include "iasim/harness.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::size_t threads = 1;
    bool quiet = false;
};

void add_run_flags(CLI::App* cmd, Overrides& o)
{
    cmd->add_option("--seed", o.seed, "Override the random seed");
    cmd->add_option("--trials", o.trials, "Override the Monte Carlo trials per point")->check(CLI::PositiveNumber);
    cmd->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_flag("-q,--quiet", o.quiet, "No progress log");
}

void apply(iasim::ScenarioConfig& c, const Overrides& o)
{
    if (o.seed)
        c.seed = *o.seed;
    if (o.trials)
        c.trials = *o.trials;
    c.validate();
}

int write_sweep(const iasim::ScenarioConfig& config, const Overrides& o, const std::string& out_path)
{
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 1;
    }
    iasim::SweepOptions options;
    options.threads = o.threads;
    if (!o.quiet)
        options.progress = [](const iasim::CsiModel& m, const iasim::PointResult& p) {
            std::fprintf(stderr, "[sweep] %-12s snr %5.1f dB  PU %.3e  R %.3e  D %.3e  rejected %zu\n",
                         m.id().c_str(), p.snr_db, p.at(iasim::Node::pu).ber, p.at(iasim::Node::relay).ber,
                         p.at(iasim::Node::destination).ber, p.rejected);
        };
    iasim::write_csv(out, iasim::run_sweep(config, options));
    return out ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"iasim: BER simulator for an interference-aligned cognitive relay network with a "
                 "power-splitting energy-harvesting relay"};
    app.require_subcommand(1);

    Overrides sweep_o;
    std::string config_path, sweep_out;
    auto* sweep = app.add_subcommand("sweep", "Run the SNR sweep described by a config file");
    sweep->add_option("--config", config_path, "Scenario config (JSON)")->required()->check(CLI::ExistingFile);
    sweep->add_option("--out", sweep_out, "Output CSV")->required();
    add_run_flags(sweep, sweep_o);

    Overrides preset_o;
    std::string preset_name, preset_out, dump_path;
    auto* pre = app.add_subcommand("preset", "Reproduce one of the built-in figure configurations");
    pre->add_option("--name", preset_name, "fig2a | fig2b | fig3")->required();
    pre->add_option("--out", preset_out, "Output CSV");
    pre->add_option("--dump-config", dump_path, "Write the preset's config file and exit");
    add_run_flags(pre, preset_o);

    std::size_t draws = 10000;
    std::string align_config;
    std::optional<std::uint64_t> align_seed;
    auto* align = app.add_subcommand("align-check", "Check the zero-forcing conditions over random draws");
    align->add_option("--draws", draws, "Number of channel draws")->check(CLI::PositiveNumber);
    align->add_option("--config", align_config, "Scenario config (JSON); defaults otherwise")->check(CLI::ExistingFile);
    align->add_option("--seed", align_seed, "Override the random seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sweep) {
            iasim::ScenarioConfig c = iasim::load_config(config_path);
            apply(c, sweep_o);
            return write_sweep(c, sweep_o, sweep_out);
        }
        if (*pre) {
            iasim::ScenarioConfig c = iasim::preset(preset_name);
            apply(c, preset_o);
            if (!dump_path.empty()) {
                std::ofstream(dump_path) << iasim::serialize_config(c);
                return 0;
            }
            if (preset_out.empty()) {
                std::cerr << "error: preset needs --out (or --dump-config)\n";
                return 2;
            }
            return write_sweep(c, preset_o, preset_out);
        }
        if (*align) {
            iasim::ScenarioConfig c = align_config.empty() ? iasim::ScenarioConfig{} : iasim::load_config(align_config);
            if (align_seed)
                c.seed = *align_seed;
            const iasim::AlignCheckReport r = iasim::align_check(c, draws);
            std::printf("draws          %zu\n", r.draws);
            std::printf("rejected       %zu (%.4f%%)\n", r.rejected, 100.0 * r.rejection_rate());
            std::printf("max leakage    %.3e\n", r.max_leakage);
            std::printf("rank condition %s\n", r.all_ranks_ok ? "ok" : "VIOLATED");
            return r.all_ranks_ok ? 0 : 1;
        }
    } catch (const iasim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
