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

#include "iasim/ia.hpp"

#include "iasim/errors.hpp"

#include <algorithm>
#include <string>

namespace iasim {

namespace {

ComplexMatrix inv(const ComplexMatrix& h, Link link)
{
    try {
        return inverse(h);
    } catch (const SingularMatrixError&) {
        throw RealizationRejected("ill-conditioned estimate of " + std::string(link_name(link)));
    }
}

void require_streams(const ChannelRealization& ch, std::size_t streams)
{
    const std::size_t n = ch.hat(Link::relay_source).rows();
    if (streams == 0 || 2 * streams > n)
        throw ContractViolation("ia: need 1 <= streams <= antennas / 2");
}

// Orthonormal f-column suppressor inside null((interference)^H). When the null space is wider
// than f, keep the f directions that collect the most desired signal.
ComplexMatrix suppressor(const ComplexMatrix& interference, const ComplexMatrix& desired, std::size_t streams)
{
    ComplexMatrix basis = [&] {
        try {
            return nullspace(conj_transpose(interference));
        } catch (const EmptyNullspaceError&) {
            throw RealizationRejected("interference occupies the whole receive space");
        }
    }();
    if (basis.cols() < streams)
        throw RealizationRejected("interference subspace too wide for the requested streams");
    if (basis.cols() == streams)
        return basis;
    const SingularValueDecomposition d = svd(conj_transpose(basis) * desired);
    if (d.s[streams - 1] == 0.0)
        return basis.cols_range(0, streams);
    return basis * d.u.cols_range(0, streams);
}

} // namespace

const ComplexMatrix& BeamformerSet::primary_precoder(int pu, int slot) const
{
    if (slot == 1)
        return pu == 1 ? v1_s1 : v2_s1;
    return pu == 1 ? v1_s2 : v2_s2;
}

const ComplexMatrix& BeamformerSet::primary_suppressor(int pu, int slot) const
{
    if (slot == 1)
        return pu == 1 ? u1_s1 : u2_s1;
    return pu == 1 ? u1_s2 : u2_s2;
}

Slot1Precoders slot1_precoders(const ChannelRealization& ch, std::size_t streams)
{
    require_streams(ch, streams);
    const ComplexMatrix& h_r1 = ch.hat(Link::relay_pu1);
    const ComplexMatrix& h_r2 = ch.hat(Link::relay_pu2);
    const ComplexMatrix& h_12 = ch.hat(Link::pu12_s1);
    const ComplexMatrix& h_1s = ch.hat(Link::pu1_source);
    const ComplexMatrix& h_2s = ch.hat(Link::pu2_source);
    const ComplexMatrix& h_21 = ch.hat(Link::pu21_s1);

    const ComplexMatrix inv_r1 = inv(h_r1, Link::relay_pu1);
    const ComplexMatrix inv_r2 = inv(h_r2, Link::relay_pu2);
    const ComplexMatrix inv_12 = inv(h_12, Link::pu12_s1);
    const ComplexMatrix inv_2s = inv(h_2s, Link::pu2_source);

    // Z = H_R1^-1 H_R2 H_12^-1 H_1S H_2S^-1 H_21; its eigenvectors make all three
    // interference pairs collinear at once.
    const ComplexMatrix z = inv_r1 * h_r2 * inv_12 * h_1s * inv_2s * h_21;
    const EigenDecomposition e = [&] {
        try {
            return eig(z);
        } catch (const NumericFailure&) {
            throw RealizationRejected("eigen decomposition of the alignment matrix failed");
        }
    }();

    ComplexMatrix v1 = normalized(e.vectors.cols_range(0, streams));
    ComplexMatrix v2 = normalized(inv_r2 * h_r1 * v1);
    ComplexMatrix vs = normalized(inv_2s * h_21 * v1);
    return {std::move(v1), std::move(v2), std::move(vs)};
}

Slot1Suppressors slot1_suppressors(const ChannelRealization& ch, const Slot1Precoders& v, std::size_t streams)
{
    require_streams(ch, streams);
    return {
        suppressor(ch.hat(Link::pu12_s1) * v.v2, ch.hat(Link::pu11_s1) * v.v1, streams),
        suppressor(ch.hat(Link::pu21_s1) * v.v1, ch.hat(Link::pu22_s1) * v.v2, streams),
        suppressor(ch.hat(Link::relay_pu1) * v.v1, ch.hat(Link::relay_source) * v.v_source, streams),
    };
}

Slot2Beamformers slot2_beamformers(const ChannelRealization& ch, Slot2Rule rule, std::size_t streams)
{
    require_streams(ch, streams);
    ComplexMatrix v_relay = [&] {
        if (rule == Slot2Rule::random_seed) {
            if (streams != 1)
                throw ContractViolation("slot2_beamformers: random seeding supports a single stream");
            return normalized(ch.relay_seed);
        }
        const SingularValueDecomposition d = svd(ch.hat(Link::dest_relay));
        return normalized(d.v.cols_range(0, streams));
    }();

    const ComplexMatrix& h_1r = ch.hat(Link::pu1_relay);
    const ComplexMatrix& h_2r = ch.hat(Link::pu2_relay);
    // Align T2's interference with R's at R1, and T1's with R's at R2.
    ComplexMatrix v2 = normalized(inv(ch.hat(Link::pu12_s2), Link::pu12_s2) * h_1r * v_relay);
    ComplexMatrix v1 = normalized(inv(ch.hat(Link::pu21_s2), Link::pu21_s2) * h_2r * v_relay);
    ComplexMatrix u1 = suppressor(h_1r * v_relay, ch.hat(Link::pu11_s2) * v1, streams);
    ComplexMatrix u2 = suppressor(h_2r * v_relay, ch.hat(Link::pu22_s2) * v2, streams);
    return {std::move(v1), std::move(v2), std::move(v_relay), std::move(u1), std::move(u2)};
}

BeamformerSet assemble_beamformers(const ChannelRealization& ch, Slot2Rule rule, std::size_t streams)
{
    Slot1Precoders p = slot1_precoders(ch, streams);
    Slot1Suppressors s = slot1_suppressors(ch, p, streams);
    Slot2Beamformers t = slot2_beamformers(ch, rule, streams);
    return {std::move(p.v1), std::move(p.v2), std::move(p.v_source),
            std::move(s.u1), std::move(s.u2), std::move(s.u_relay),
            std::move(t.v1), std::move(t.v2), std::move(t.v_relay),
            std::move(t.u1), std::move(t.u2), streams};
}

BeamformerSet build_beamformers(const ChannelRealization& ch, Slot2Rule rule, std::size_t streams)
{
    try {
        BeamformerSet beams = assemble_beamformers(ch, rule, streams);
        const AlignmentReport report = verify_alignment(ch, beams);
        for (const RankTerm& r : report.ranks)
            if (!r.full_rank)
                throw RealizationRejected("rank condition fails: " + std::string(r.condition));
        return beams;
    } catch (const NumericFailure& e) {
        throw RealizationRejected(e.what());
    }
}

double AlignmentReport::max_leakage() const
{
    double m = 0.0;
    for (const LeakageTerm& t : leakage)
        m = std::max(m, t.residual);
    return m;
}

double AlignmentReport::max_leakage(RxNode receiver, int slot) const
{
    double m = 0.0;
    for (const LeakageTerm& t : leakage)
        if (t.receiver == receiver && t.slot == slot)
            m = std::max(m, t.residual);
    return m;
}

bool AlignmentReport::all_full_rank() const
{
    return std::all_of(ranks.begin(), ranks.end(), [](const RankTerm& r) { return r.full_rank; });
}

AlignmentReport verify_alignment(const ChannelRealization& ch, const BeamformerSet& b, ChannelView view)
{
    auto h = [&](Link l) -> const ComplexMatrix& {
        return view == ChannelView::estimated ? ch.hat(l) : ch.truth(l);
    };
    auto residual = [&](const ComplexMatrix& u, Link l, const ComplexMatrix& v) {
        return fro_norm(conj_transpose(u) * h(l) * v);
    };
    auto rank = [&](std::string_view name, RxNode rx, int slot, const ComplexMatrix& u, Link l,
                    const ComplexMatrix& v) {
        const SingularValueDecomposition d = svd(conj_transpose(u) * h(l) * v);
        const double smin = d.s.back();
        return RankTerm{name, rx, slot, smin, d.s.size() == b.streams && smin > kMinDesiredSingular};
    };

    AlignmentReport r;
    r.leakage = {
        {"U1[1]^H H12[1] V2[1]", RxNode::pu1, 1, residual(b.u1_s1, Link::pu12_s1, b.v2_s1)},
        {"U1[1]^H H1S VS", RxNode::pu1, 1, residual(b.u1_s1, Link::pu1_source, b.v_source)},
        {"U2[1]^H H21[1] V1[1]", RxNode::pu2, 1, residual(b.u2_s1, Link::pu21_s1, b.v1_s1)},
        {"U2[1]^H H2S VS", RxNode::pu2, 1, residual(b.u2_s1, Link::pu2_source, b.v_source)},
        {"UR^H HR1 V1[1]", RxNode::relay, 1, residual(b.u_relay, Link::relay_pu1, b.v1_s1)},
        {"UR^H HR2 V2[1]", RxNode::relay, 1, residual(b.u_relay, Link::relay_pu2, b.v2_s1)},
        {"U1[2]^H H12[2] V2[2]", RxNode::pu1, 2, residual(b.u1_s2, Link::pu12_s2, b.v2_s2)},
        {"U1[2]^H H1R VR", RxNode::pu1, 2, residual(b.u1_s2, Link::pu1_relay, b.v_relay)},
        {"U2[2]^H H21[2] V1[2]", RxNode::pu2, 2, residual(b.u2_s2, Link::pu21_s2, b.v1_s2)},
        {"U2[2]^H H2R VR", RxNode::pu2, 2, residual(b.u2_s2, Link::pu2_relay, b.v_relay)},
    };
    r.ranks = {
        rank("rank U1[1]^H H11[1] V1[1]", RxNode::pu1, 1, b.u1_s1, Link::pu11_s1, b.v1_s1),
        rank("rank U2[1]^H H22[1] V2[1]", RxNode::pu2, 1, b.u2_s1, Link::pu22_s1, b.v2_s1),
        rank("rank UR^H HRS VS", RxNode::relay, 1, b.u_relay, Link::relay_source, b.v_source),
        rank("rank U1[2]^H H11[2] V1[2]", RxNode::pu1, 2, b.u1_s2, Link::pu11_s2, b.v1_s2),
        rank("rank U2[2]^H H22[2] V2[2]", RxNode::pu2, 2, b.u2_s2, Link::pu22_s2, b.v2_s2),
    };
    return r;
}

} // namespace iasim
