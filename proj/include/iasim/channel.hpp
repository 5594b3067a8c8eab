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

#ifndef IASIM_CHANNEL_HPP
#define IASIM_CHANNEL_HPP

#include "iasim/matrix.hpp"
#include "iasim/rng.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <string_view>

namespace iasim {

// Receiving nodes: primary receivers R1, R2, the relay and the destination.
enum class RxNode : std::size_t { pu1 = 0, pu2 = 1, relay = 2, destination = 3 };
// Transmitting nodes: primary transmitters T1, T2, the source and the relay.
enum class TxNode : std::size_t { pu1 = 0, pu2 = 1, source = 2, relay = 3 };

inline constexpr std::size_t kNodeCount = 4;

/// Antenna count plus per-link distance and path-loss exponent, indexed [receiver][transmitter].
struct Topology {
    std::size_t antennas = 2;
    std::array<std::array<double, kNodeCount>, kNodeCount> distance{};
    std::array<std::array<double, kNodeCount>, kNodeCount> exponent{};

    static Topology homogeneous(std::size_t antennas, double distance, double exponent);

    /// Throws ContractViolation unless antennas >= 2, distances > 0 and exponents >= 2.
    void validate() const;

    /// d^tau for the link transmitter -> receiver.
    double attenuation(RxNode rx, TxNode tx) const;

    friend bool operator==(const Topology&, const Topology&) = default;
};

/// Imperfect-CSI model: error variance lambda = psi * theta^(-kappa).
struct CsiParams {
    double psi = 0.0;
    double kappa = 0.0;
    double theta = 1.0; // linear SNR
    double lambda = 0.0;

    static CsiParams make(double psi, double kappa, double theta);
    static CsiParams perfect() { return {}; }
};

double error_variance(double psi, double kappa, double theta);

/// sqrt(P / d^tau).
double pathloss_amplitude(double power, double distance, double exponent);

// Every channel matrix of one transmission block. Primary links carry a slot suffix; the
// cross-network and secondary links are shared by both slots.
enum class Link : std::size_t {
    pu11_s1, pu12_s1, pu21_s1, pu22_s1,
    pu11_s2, pu12_s2, pu21_s2, pu22_s2,
    relay_source, relay_pu1, relay_pu2, dest_relay,
    pu1_source, pu2_source, pu1_relay, pu2_relay,
};

inline constexpr std::size_t kLinkCount = 16;

/// Primary link H^[slot]_{rx,tx}; rx, tx in {1, 2}, slot in {1, 2}.
Link primary_link(int rx, int tx, int slot);
RxNode receiver_of(Link link) noexcept;
TxNode transmitter_of(Link link) noexcept;
std::string_view link_name(Link link) noexcept;

/// Estimated, estimation-error and true channel of one link: h_true = h_hat/(1+lambda) + h_tilde.
struct ChannelTriple {
    ComplexMatrix h_hat;
    ComplexMatrix h_tilde;
    ComplexMatrix h_true;
};

struct ChannelRealization {
    std::array<ChannelTriple, kLinkCount> links;
    /// Unit-norm direction used when the relay precoder is seeded randomly.
    ComplexMatrix relay_seed;
    double lambda = 0.0;

    const ChannelTriple& operator[](Link l) const { return links[static_cast<std::size_t>(l)]; }
    ChannelTriple& operator[](Link l) { return links[static_cast<std::size_t>(l)]; }
    const ComplexMatrix& hat(Link l) const { return (*this)[l].h_hat; }
    const ComplexMatrix& tilde(Link l) const { return (*this)[l].h_tilde; }
    const ComplexMatrix& truth(Link l) const { return (*this)[l].h_true; }
};

/// Draws all links: h_hat ~ CN(0, 1+lambda), h_tilde ~ CN(0, lambda/(1+lambda)), composed
/// into h_true. The stream consumption does not depend on lambda.
ChannelRealization draw_realization(RandomStream& rng, const Topology& topo, const CsiParams& csi);

/// Realization from explicit estimates and errors, with h_true composed from them.
ChannelRealization make_realization(const std::function<ComplexMatrix(Link)>& h_hat,
                                    const std::function<ComplexMatrix(Link)>& h_tilde, double lambda);

} // namespace iasim

#endif
