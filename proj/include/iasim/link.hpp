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

#ifndef IASIM_LINK_HPP
#define IASIM_LINK_HPP

#include "iasim/channel.hpp"
#include "iasim/ia.hpp"

#include <array>

namespace iasim {

/// Transmit powers, common noise power and the power-splitting receiver at the relay.
struct PowerConfig {
    double p_primary = 1.0; // P1 = P2
    double p_source = 1.0;  // PS
    double sigma2 = 1.0;
    double rho = 0.75; // fraction of received power sent to the energy harvester
    double eta = 0.8;  // harvester conversion efficiency

    /// Throws ContractViolation unless 0 < rho < 1, 0 < eta <= 1, powers >= 0 and sigma2 >= 0.
    void validate() const;
};

// Powers entering one SINR, split the way the ratio is written.
struct RelaySinrTerms {
    double desired;       // estimated S->R signal
    double self_leakage;  // S->R estimation error
    double interference;  // I_PN: residual primary interference
    double noise;
    double value() const { return desired / (self_leakage + interference + noise); }
};

struct DestinationSinrTerms {
    double desired;
    double self_leakage;
    double noise;
    double value() const { return desired / (self_leakage + noise); }
};

struct PrimarySinrTerms {
    double desired;
    double intra;  // B: own-link and cross-primary estimation error
    double inter;  // C: secondary-network residual (source in slot 1, relay in slot 2)
    double noise;
    double value() const { return desired / (intra + inter + noise); }
};

struct SinrSample {
    double gamma_r = 0.0;
    double gamma_d = 0.0;
    std::array<double, 2> gamma_p1{}; // indexed by slot - 1
    std::array<double, 2> gamma_p2{};
    double p_relay_harvested = 0.0;
};

/// Instantaneous harvested relay power. Uses the true channels; noise harvesting is neglected.
double harvested_power(const ChannelRealization& ch, const BeamformerSet& beams, const PowerConfig& cfg,
                       const Topology& topo);

RelaySinrTerms relay_sinr_terms(const ChannelRealization& ch, const BeamformerSet& beams, const PowerConfig& cfg,
                                const Topology& topo);
double sinr_relay(const ChannelRealization& ch, const BeamformerSet& beams, const PowerConfig& cfg,
                  const Topology& topo);

/// `p_relay` must be the harvested power of the same realization.
DestinationSinrTerms destination_sinr_terms(const ChannelRealization& ch, const BeamformerSet& beams,
                                            const PowerConfig& cfg, const Topology& topo, double p_relay);
double sinr_destination(const ChannelRealization& ch, const BeamformerSet& beams, const PowerConfig& cfg,
                        const Topology& topo, double p_relay);

/// SINR at primary receiver `pu` (1 or 2) in `slot` (1 or 2). `p_relay` feeds the slot-2
/// secondary interference term and is ignored in slot 1.
PrimarySinrTerms primary_sinr_terms(const ChannelRealization& ch, const BeamformerSet& beams,
                                    const PowerConfig& cfg, const Topology& topo, int pu, int slot,
                                    double p_relay);
double sinr_primary(const ChannelRealization& ch, const BeamformerSet& beams, const PowerConfig& cfg,
                    const Topology& topo, int pu, int slot, double p_relay);

/// Harvested power followed by every SINR of the block.
SinrSample evaluate_link(const ChannelRealization& ch, const BeamformerSet& beams, const PowerConfig& cfg,
                         const Topology& topo);

} // namespace iasim

#endif
