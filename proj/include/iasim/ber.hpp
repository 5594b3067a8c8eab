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

#ifndef IASIM_BER_HPP
#define IASIM_BER_HPP

#include "iasim/channel.hpp"
#include "iasim/ia.hpp"
#include "iasim/link.hpp"
#include "iasim/rng.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace iasim {

/// Power-to-noise offset (dB) between the SNR axis and P/sigma^2. Calibrated so the secondary
/// network's perfect-CSI BER at 20 dB and the saturation behavior land on the published curves.
inline constexpr double kDefaultSnrOffsetDb = 25.3;

/// Gaussian tail probability Q(x).
double q_function(double x);

/// BPSK error probability Q(sqrt(gamma)); throws ContractViolation for negative gamma.
double instantaneous_ber(double gamma);

enum class Node { pu1, pu2, pu, relay, destination };

std::string_view node_name(Node n) noexcept;

enum class DestinationMetric {
    end_to_end, // decode-and-forward: destination errs when exactly one hop errs
    hop,        // relay-destination hop alone
};

/// Either perfect CSI or lambda = psi * theta^(-kappa).
struct CsiModel {
    bool perfect = true;
    double kappa = 0.0;
    double psi = 0.0;

    static CsiModel perfect_csi() { return {}; }
    static CsiModel mismatch(double kappa, double psi) { return {false, kappa, psi}; }

    CsiParams at(double theta) const;
    /// Stable identifier such as "perfect" or "k0.75_p10".
    std::string id() const;

    friend bool operator==(const CsiModel&, const CsiModel&) = default;
};

/// Everything a BER point depends on apart from SNR, trial count and seed.
struct Scenario {
    Topology topology = Topology::homogeneous(2, 3.0, 2.7);
    double rho = 0.75;
    double eta = 0.8;
    double sigma2 = 1.0;
    double snr_offset_db = kDefaultSnrOffsetDb;
    CsiModel csi;
    Slot2Rule slot2_rule = Slot2Rule::svd_seed;
    DestinationMetric destination_metric = DestinationMetric::end_to_end;
    std::size_t streams = 1;

    /// Equal primary and source powers P = theta * sigma2 * 10^(offset/10).
    PowerConfig power_at(double snr_db) const;
    CsiParams csi_at(double snr_db) const;
    void validate() const;
};

inline double db_to_linear(double db)
{
    return std::pow(10.0, db / 10.0);
}

struct BerPoint {
    double snr_db = 0.0;
    Node node = Node::pu;
    double ber = 0.0;
    double ci_halfwidth = 0.0; // 95% normal approximation
    std::size_t trials = 0;
    std::size_t rejected = 0;
};

struct PointResult {
    double snr_db = 0.0;
    std::vector<BerPoint> nodes;     // pu1, pu2, pu, relay, destination
    std::array<double, 2> pu_by_slot{}; // mean over both primary receivers, per slot
    std::size_t trials = 0;
    std::size_t rejected = 0;

    const BerPoint& at(Node n) const;
};

/// Per-node error probabilities of one accepted realization.
struct TrialOutcome {
    std::array<double, 2> pu1{}; // per slot
    std::array<double, 2> pu2{};
    double relay = 0.0;
    double destination = 0.0; // according to the scenario's destination metric
    std::size_t rejected = 0; // draws discarded before this one
};

inline constexpr std::size_t kMaxRedraws = 64;

/// One Monte Carlo trial: draw, build beamformers, evaluate SINRs, map to BER. Redraws rejected
/// realizations from the same stream.
TrialOutcome simulate_trial(const Scenario& scenario, double snr_db, RandomStream& rng);

/// Mean BER per node over `trials` realizations. Results are bit-identical for any `threads`.
/// Throws ScenarioInfeasible when more than half of all draws are rejected.
PointResult run_point(const Scenario& scenario, double snr_db, std::size_t trials, std::uint64_t seed,
                      std::size_t threads = 1);

struct BerCurve {
    Scenario scenario;
    std::uint64_t seed = 0;
    std::vector<PointResult> points;
};

/// Error counts of a bit-level transmission over one fixed realization.
struct BitErrorCounts {
    std::size_t bits = 0;
    std::size_t relay = 0;
    std::size_t destination = 0; // relay-destination hop
    std::array<std::array<std::size_t, 2>, 2> pu{}; // [receiver - 1][slot - 1]
};

/// Sends `n_bits` BPSK symbols per node through the received-signal equations with fresh
/// noise and Gaussian-input interferers, detects after the suppressors and counts sign errors.
/// Test oracle for the semi-analytic Q(sqrt(gamma)) map.
BitErrorCounts bitwise_trial_oracle(const ChannelRealization& ch, const BeamformerSet& beams,
                                    const PowerConfig& cfg, const Topology& topo, std::size_t n_bits,
                                    RandomStream& rng);

} // namespace iasim

#endif
