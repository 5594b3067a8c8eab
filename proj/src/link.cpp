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

#include "iasim/link.hpp"

#include "iasim/errors.hpp"

#include <cmath>

namespace iasim {

namespace {

// ||U^H H V||^2
double gain(const ComplexMatrix& u, const ComplexMatrix& h, const ComplexMatrix& v)
{
    return fro_norm_sq(conj_transpose(u) * h * v);
}

TxNode primary_tx(int pu)
{
    return pu == 1 ? TxNode::pu1 : TxNode::pu2;
}

RxNode primary_rx(int pu)
{
    return pu == 1 ? RxNode::pu1 : RxNode::pu2;
}

} // namespace

void PowerConfig::validate() const
{
    if (!(rho > 0.0 && rho < 1.0))
        throw ContractViolation("power: rho must lie in (0, 1)");
    if (!(eta > 0.0 && eta <= 1.0))
        throw ContractViolation("power: eta must lie in (0, 1]");
    if (!(p_primary >= 0.0) || !(p_source >= 0.0) || !std::isfinite(p_primary) || !std::isfinite(p_source))
        throw ContractViolation("power: transmit powers must be finite and non-negative");
    if (!(sigma2 >= 0.0) || !std::isfinite(sigma2))
        throw ContractViolation("power: sigma2 must be finite and non-negative");
}

double harvested_power(const ChannelRealization& ch, const BeamformerSet& b, const PowerConfig& cfg,
                       const Topology& topo)
{
    const double from_source = cfg.p_source / topo.attenuation(RxNode::relay, TxNode::source)
                               * fro_norm_sq(ch.truth(Link::relay_source) * b.v_source);
    const double from_pu1 = cfg.p_primary / topo.attenuation(RxNode::relay, TxNode::pu1)
                            * fro_norm_sq(ch.truth(Link::relay_pu1) * b.v1_s1);
    const double from_pu2 = cfg.p_primary / topo.attenuation(RxNode::relay, TxNode::pu2)
                            * fro_norm_sq(ch.truth(Link::relay_pu2) * b.v2_s1);
    return cfg.eta * cfg.rho * (from_source + from_pu1 + from_pu2);
}

RelaySinrTerms relay_sinr_terms(const ChannelRealization& ch, const BeamformerSet& b, const PowerConfig& cfg,
                                const Topology& topo)
{
    const double lambda = ch.lambda;
    const double info = 1.0 - cfg.rho;
    const double src = cfg.p_source * info / topo.attenuation(RxNode::relay, TxNode::source);
    // Each primary interferer keeps its own power and path loss.
    const double pu1 = cfg.p_primary * info / topo.attenuation(RxNode::relay, TxNode::pu1);
    const double pu2 = cfg.p_primary * info / topo.attenuation(RxNode::relay, TxNode::pu2);
    return {
        src / ((1.0 + lambda) * (1.0 + lambda)) * gain(b.u_relay, ch.hat(Link::relay_source), b.v_source),
        src * gain(b.u_relay, ch.tilde(Link::relay_source), b.v_source),
        pu1 * gain(b.u_relay, ch.tilde(Link::relay_pu1), b.v1_s1)
            + pu2 * gain(b.u_relay, ch.tilde(Link::relay_pu2), b.v2_s1),
        cfg.sigma2,
    };
}

double sinr_relay(const ChannelRealization& ch, const BeamformerSet& b, const PowerConfig& cfg,
                  const Topology& topo)
{
    return relay_sinr_terms(ch, b, cfg, topo).value();
}

DestinationSinrTerms destination_sinr_terms(const ChannelRealization& ch, const BeamformerSet& b,
                                            const PowerConfig& cfg, const Topology& topo, double p_relay)
{
    if (!(p_relay >= 0.0))
        throw ContractViolation("destination SINR: relay power must be non-negative");
    const double lambda = ch.lambda;
    const double scale = p_relay / topo.attenuation(RxNode::destination, TxNode::relay);
    return {
        scale / ((1.0 + lambda) * (1.0 + lambda)) * fro_norm_sq(ch.hat(Link::dest_relay) * b.v_relay),
        scale * fro_norm_sq(ch.tilde(Link::dest_relay) * b.v_relay),
        cfg.sigma2,
    };
}

double sinr_destination(const ChannelRealization& ch, const BeamformerSet& b, const PowerConfig& cfg,
                        const Topology& topo, double p_relay)
{
    return destination_sinr_terms(ch, b, cfg, topo, p_relay).value();
}

PrimarySinrTerms primary_sinr_terms(const ChannelRealization& ch, const BeamformerSet& b, const PowerConfig& cfg,
                                    const Topology& topo, int pu, int slot, double p_relay)
{
    if ((pu != 1 && pu != 2) || (slot != 1 && slot != 2))
        throw ContractViolation("primary SINR: receiver and slot must be 1 or 2");
    const int other = 3 - pu;
    const double lambda = ch.lambda;
    const RxNode rx = primary_rx(pu);
    const ComplexMatrix& u = b.primary_suppressor(pu, slot);
    const ComplexMatrix& v_own = b.primary_precoder(pu, slot);
    const ComplexMatrix& v_other = b.primary_precoder(other, slot);
    const Link own = primary_link(pu, pu, slot);
    const Link cross = primary_link(pu, other, slot);

    const double own_scale = cfg.p_primary / topo.attenuation(rx, primary_tx(pu));
    const double cross_scale = cfg.p_primary / topo.attenuation(rx, primary_tx(other));

    double inter = 0.0;
    if (slot == 1) {
        const Link l = pu == 1 ? Link::pu1_source : Link::pu2_source;
        inter = cfg.p_source / topo.attenuation(rx, TxNode::source) * gain(u, ch.tilde(l), b.v_source);
    } else {
        const Link l = pu == 1 ? Link::pu1_relay : Link::pu2_relay;
        inter = p_relay / topo.attenuation(rx, TxNode::relay) * gain(u, ch.tilde(l), b.v_relay);
    }

    return {
        own_scale / ((1.0 + lambda) * (1.0 + lambda)) * gain(u, ch.hat(own), v_own),
        own_scale * gain(u, ch.tilde(own), v_own) + cross_scale * gain(u, ch.tilde(cross), v_other),
        inter,
        cfg.sigma2,
    };
}

double sinr_primary(const ChannelRealization& ch, const BeamformerSet& b, const PowerConfig& cfg,
                    const Topology& topo, int pu, int slot, double p_relay)
{
    return primary_sinr_terms(ch, b, cfg, topo, pu, slot, p_relay).value();
}

SinrSample evaluate_link(const ChannelRealization& ch, const BeamformerSet& b, const PowerConfig& cfg,
                         const Topology& topo)
{
    SinrSample s;
    s.p_relay_harvested = harvested_power(ch, b, cfg, topo);
    s.gamma_r = sinr_relay(ch, b, cfg, topo);
    s.gamma_d = sinr_destination(ch, b, cfg, topo, s.p_relay_harvested);
    for (int slot = 1; slot <= 2; ++slot) {
        s.gamma_p1[slot - 1] = sinr_primary(ch, b, cfg, topo, 1, slot, s.p_relay_harvested);
        s.gamma_p2[slot - 1] = sinr_primary(ch, b, cfg, topo, 2, slot, s.p_relay_harvested);
    }
    return s;
}

} // namespace iasim
