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

#include "iasim/channel.hpp"

#include "iasim/errors.hpp"

#include <cmath>
#include <string>

namespace iasim {

namespace {

struct LinkInfo {
    RxNode rx;
    TxNode tx;
    std::string_view name;
};

constexpr std::array<LinkInfo, kLinkCount> kLinks{{
    {RxNode::pu1, TxNode::pu1, "H11[1]"},
    {RxNode::pu1, TxNode::pu2, "H12[1]"},
    {RxNode::pu2, TxNode::pu1, "H21[1]"},
    {RxNode::pu2, TxNode::pu2, "H22[1]"},
    {RxNode::pu1, TxNode::pu1, "H11[2]"},
    {RxNode::pu1, TxNode::pu2, "H12[2]"},
    {RxNode::pu2, TxNode::pu1, "H21[2]"},
    {RxNode::pu2, TxNode::pu2, "H22[2]"},
    {RxNode::relay, TxNode::source, "HRS"},
    {RxNode::relay, TxNode::pu1, "HR1"},
    {RxNode::relay, TxNode::pu2, "HR2"},
    {RxNode::destination, TxNode::relay, "HDR"},
    {RxNode::pu1, TxNode::source, "H1S"},
    {RxNode::pu2, TxNode::source, "H2S"},
    {RxNode::pu1, TxNode::relay, "H1R"},
    {RxNode::pu2, TxNode::relay, "H2R"},
}};

} // namespace

Topology Topology::homogeneous(std::size_t antennas, double distance, double exponent)
{
    Topology t;
    t.antennas = antennas;
    for (auto& row : t.distance)
        row.fill(distance);
    for (auto& row : t.exponent)
        row.fill(exponent);
    return t;
}

void Topology::validate() const
{
    if (antennas < 2)
        throw ContractViolation("topology: at least 2 antennas per node are required");
    for (std::size_t r = 0; r < kNodeCount; ++r)
        for (std::size_t c = 0; c < kNodeCount; ++c) {
            if (!(distance[r][c] > 0.0) || !std::isfinite(distance[r][c]))
                throw ContractViolation("topology: distances must be positive and finite");
            if (!(exponent[r][c] >= 2.0) || !std::isfinite(exponent[r][c]))
                throw ContractViolation("topology: path-loss exponents must be >= 2");
        }
}

double Topology::attenuation(RxNode rx, TxNode tx) const
{
    const auto r = static_cast<std::size_t>(rx);
    const auto c = static_cast<std::size_t>(tx);
    return std::pow(distance[r][c], exponent[r][c]);
}

double error_variance(double psi, double kappa, double theta)
{
    if (!(psi > 0.0))
        throw ContractViolation("error_variance: psi must be positive");
    if (!(theta > 0.0))
        throw ContractViolation("error_variance: theta must be positive");
    if (!(kappa >= 0.0))
        throw ContractViolation("error_variance: kappa must be non-negative");
    return psi * std::pow(theta, -kappa);
}

CsiParams CsiParams::make(double psi, double kappa, double theta)
{
    return {psi, kappa, theta, error_variance(psi, kappa, theta)};
}

double pathloss_amplitude(double power, double distance, double exponent)
{
    if (!(power >= 0.0))
        throw ContractViolation("pathloss_amplitude: power must be non-negative");
    if (!(distance > 0.0))
        throw ContractViolation("pathloss_amplitude: distance must be positive");
    return std::sqrt(power / std::pow(distance, exponent));
}

Link primary_link(int rx, int tx, int slot)
{
    if (rx < 1 || rx > 2 || tx < 1 || tx > 2 || slot < 1 || slot > 2)
        throw ContractViolation("primary_link: indices must be 1 or 2");
    return static_cast<Link>((slot - 1) * 4 + (rx - 1) * 2 + (tx - 1));
}

RxNode receiver_of(Link link) noexcept
{
    return kLinks[static_cast<std::size_t>(link)].rx;
}

TxNode transmitter_of(Link link) noexcept
{
    return kLinks[static_cast<std::size_t>(link)].tx;
}

std::string_view link_name(Link link) noexcept
{
    return kLinks[static_cast<std::size_t>(link)].name;
}

ChannelRealization draw_realization(RandomStream& rng, const Topology& topo, const CsiParams& csi)
{
    if (!(csi.lambda >= 0.0) || !std::isfinite(csi.lambda))
        throw ContractViolation("draw_realization: lambda must be finite and non-negative");
    const std::size_t n = topo.antennas;
    const double lambda = csi.lambda;
    const double hat_scale = std::sqrt(1.0 + lambda);
    const double tilde_scale = std::sqrt(lambda / (1.0 + lambda));

    auto draw = [&]() {
        ComplexMatrix h_hat = hat_scale * rng.complex_normal_matrix(n, n);
        ComplexMatrix h_tilde = tilde_scale * rng.complex_normal_matrix(n, n);
        ComplexMatrix h_true = cplx{1.0 / (1.0 + lambda)} * h_hat + h_tilde;
        return ChannelTriple{std::move(h_hat), std::move(h_tilde), std::move(h_true)};
    };

    // Construct each triple in link order; the draw order is part of the determinism contract.
    ChannelRealization out{
        {draw(), draw(), draw(), draw(), draw(), draw(), draw(), draw(),
         draw(), draw(), draw(), draw(), draw(), draw(), draw(), draw()},
        ComplexMatrix(n, 1), lambda};
    out.relay_seed = normalized(rng.complex_normal_matrix(n, 1));
    return out;
}

ChannelRealization make_realization(const std::function<ComplexMatrix(Link)>& h_hat,
                                    const std::function<ComplexMatrix(Link)>& h_tilde, double lambda)
{
    auto triple = [&](std::size_t i) {
        const auto link = static_cast<Link>(i);
        ComplexMatrix est = h_hat(link);
        ComplexMatrix err = h_tilde(link);
        ComplexMatrix tru = cplx{1.0 / (1.0 + lambda)} * est + err;
        return ChannelTriple{std::move(est), std::move(err), std::move(tru)};
    };
    const std::size_t n = h_hat(Link::relay_source).rows();
    ComplexMatrix seed(n, 1);
    seed(0, 0) = 1.0;
    return ChannelRealization{
        {triple(0), triple(1), triple(2), triple(3), triple(4), triple(5), triple(6), triple(7),
         triple(8), triple(9), triple(10), triple(11), triple(12), triple(13), triple(14), triple(15)},
        seed, lambda};
}

} // namespace iasim
