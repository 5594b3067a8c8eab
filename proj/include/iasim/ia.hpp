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

#ifndef IASIM_IA_HPP
#define IASIM_IA_HPP

#include "iasim/channel.hpp"
#include "iasim/matrix.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace iasim {

/// How the relay precoder, the free variable of the second slot, is chosen.
enum class Slot2Rule {
    svd_seed,    // dominant right-singular direction of the estimated relay-destination channel
    random_seed, // the realization's random unit direction
};

struct Slot1Precoders {
    ComplexMatrix v1, v2, v_source;
};

struct Slot1Suppressors {
    ComplexMatrix u1, u2, u_relay;
};

struct Slot2Beamformers {
    ComplexMatrix v1, v2, v_relay, u1, u2;
};

/// Precoders V (trace(V V^H) = 1) and suppressors U (orthonormal columns) for both slots.
struct BeamformerSet {
    ComplexMatrix v1_s1, v2_s1, v_source;
    ComplexMatrix u1_s1, u2_s1, u_relay;
    ComplexMatrix v1_s2, v2_s2, v_relay;
    ComplexMatrix u1_s2, u2_s2;
    std::size_t streams = 1;

    /// Precoder of primary transmitter `pu` (1 or 2) in `slot` (1 or 2).
    const ComplexMatrix& primary_precoder(int pu, int slot) const;
    /// Suppressor of primary receiver `pu` (1 or 2) in `slot` (1 or 2).
    const ComplexMatrix& primary_suppressor(int pu, int slot) const;
};

/// Eigenvector construction for the first slot, from estimated channels. Throws
/// RealizationRejected when a required inverse is ill-conditioned.
Slot1Precoders slot1_precoders(const ChannelRealization& ch, std::size_t streams = 1);

Slot1Suppressors slot1_suppressors(const ChannelRealization& ch, const Slot1Precoders& v,
                                   std::size_t streams = 1);

Slot2Beamformers slot2_beamformers(const ChannelRealization& ch, Slot2Rule rule = Slot2Rule::svd_seed,
                                   std::size_t streams = 1);

/// Both slots without the rank checks.
BeamformerSet assemble_beamformers(const ChannelRealization& ch, Slot2Rule rule = Slot2Rule::svd_seed,
                                   std::size_t streams = 1);

/// Both slots; additionally rejects draws whose desired effective channels are rank deficient
/// (smallest singular value at or below kMinDesiredSingular).
BeamformerSet build_beamformers(const ChannelRealization& ch, Slot2Rule rule = Slot2Rule::svd_seed,
                                std::size_t streams = 1);

inline constexpr double kMinDesiredSingular = 1e-6;

enum class ChannelView { estimated, truth };

struct LeakageTerm {
    std::string_view condition;
    RxNode receiver;
    int slot;
    double residual; // ||U^H H V||_F
};

struct RankTerm {
    std::string_view condition;
    RxNode receiver;
    int slot;
    double min_singular;
    bool full_rank;
};

struct AlignmentReport {
    std::vector<LeakageTerm> leakage; // the ten zero-forcing conditions
    std::vector<RankTerm> ranks;      // the five desired-link rank conditions

    double max_leakage() const;
    /// Largest residual at one receiver in one slot (the relay only listens in slot 1).
    double max_leakage(RxNode receiver, int slot) const;
    bool all_full_rank() const;
};

/// Evaluates every zero-forcing and rank condition on the chosen channel view.
AlignmentReport verify_alignment(const ChannelRealization& ch, const BeamformerSet& beams,
                                 ChannelView view = ChannelView::estimated);

} // namespace iasim

#endif
