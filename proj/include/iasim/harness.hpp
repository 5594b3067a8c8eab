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

#ifndef IASIM_HARNESS_HPP
#define IASIM_HARNESS_HPP

#include "iasim/ber.hpp"
#include "iasim/channel.hpp"
#include "iasim/ia.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace iasim {

/// A full sweep description. Serialized as JSON; see README for the schema.
struct ScenarioConfig {
    Topology topology = Topology::homogeneous(2, 3.0, 2.7);
    double rho = 0.75;
    double eta = 0.8;
    double sigma2 = 1.0;
    double snr_offset_db = kDefaultSnrOffsetDb;
    std::vector<CsiModel> csi{CsiModel::perfect_csi()};
    std::vector<double> snr_db{0, 3, 6, 9, 12, 15, 18, 21, 24, 27, 30};
    std::size_t trials = 200000;
    std::uint64_t seed = 42;
    Slot2Rule slot2_rule = Slot2Rule::svd_seed;
    DestinationMetric destination_metric = DestinationMetric::end_to_end;
    std::size_t streams = 1;

    /// Throws ConfigError naming the offending field.
    void validate() const;
    Scenario scenario(const CsiModel& csi_model) const;

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

ScenarioConfig parse_config(std::string_view text);
std::string serialize_config(const ScenarioConfig& config);
ScenarioConfig load_config(const std::string& path);

inline constexpr std::string_view kPresetNames[] = {"fig2a", "fig2b", "fig3"};

/// Named figure-reproduction configuration; throws ConfigError listing valid names.
ScenarioConfig preset(std::string_view name);

struct SweepOptions {
    std::size_t threads = 1;
    /// Called after each (scenario, SNR) point; may be empty.
    std::function<void(const CsiModel&, const PointResult&)> progress;
};

/// One curve per CSI scenario, points in SNR-grid order.
std::vector<BerCurve> run_sweep(const ScenarioConfig& config, const SweepOptions& options = {});

inline constexpr std::string_view kCsvHeader
    = "scenario_id,kappa,psi,snr_db,node,ber,ci_halfwidth,trials,rejected";

/// Rows ordered by (scenario, snr, node) with the PU, Relay and Destination series.
void write_csv(std::ostream& out, const std::vector<BerCurve>& curves);

struct AlignCheckReport {
    std::size_t draws = 0;
    std::size_t rejected = 0;
    double max_leakage = 0.0;   // over accepted draws, estimated channels
    bool all_ranks_ok = true;

    double rejection_rate() const { return draws == 0 ? 0.0 : static_cast<double>(rejected) / draws; }
};

/// Builds beamformers for `draws` realizations of the config's first CSI scenario at its first
/// SNR point and reports the worst zero-forcing residual. `tamper` may modify each draw first.
AlignCheckReport align_check(const ScenarioConfig& config, std::size_t draws,
                             const std::function<void(ChannelRealization&)>& tamper = {});

} // namespace iasim

#endif
