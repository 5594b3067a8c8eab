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

#include "iasim/ber.hpp"

#include "iasim/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

namespace iasim {

namespace {

// Neumaier compensated sum.
class CompensatedSum {
public:
    void add(double x) noexcept
    {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            carry_ += (sum_ - t) + x;
        else
            carry_ += (x - t) + sum_;
        sum_ = t;
    }
    void add(const CompensatedSum& other) noexcept
    {
        add(other.sum_);
        add(other.carry_);
    }
    double value() const noexcept { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

constexpr std::size_t kSeries = 7; // pu1 s1, pu1 s2, pu2 s1, pu2 s2, relay, destination, pu mean
constexpr std::size_t kChunk = 512;

struct Moments {
    std::array<CompensatedSum, kSeries> sum;
    std::array<CompensatedSum, kSeries> sum_sq;
    std::size_t rejected = 0;

    void add(const std::array<double, kSeries>& x)
    {
        for (std::size_t i = 0; i < kSeries; ++i) {
            sum[i].add(x[i]);
            sum_sq[i].add(x[i] * x[i]);
        }
    }
    void add(const Moments& other)
    {
        for (std::size_t i = 0; i < kSeries; ++i) {
            sum[i].add(other.sum[i]);
            sum_sq[i].add(other.sum_sq[i]);
        }
        rejected += other.rejected;
    }
};

std::string format_number(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

} // namespace

double q_function(double x)
{
    return 0.5 * std::erfc(x / std::sqrt(2.0));
}

double instantaneous_ber(double gamma)
{
    if (!(gamma >= 0.0))
        throw ContractViolation("instantaneous_ber: gamma must be non-negative");
    return q_function(std::sqrt(gamma));
}

std::string_view node_name(Node n) noexcept
{
    switch (n) {
    case Node::pu1: return "PU1";
    case Node::pu2: return "PU2";
    case Node::pu: return "PU";
    case Node::relay: return "Relay";
    case Node::destination: return "Destination";
    }
    return "?";
}

CsiParams CsiModel::at(double theta) const
{
    if (perfect) {
        CsiParams p = CsiParams::perfect();
        p.theta = theta;
        return p;
    }
    return CsiParams::make(psi, kappa, theta);
}

std::string CsiModel::id() const
{
    if (perfect)
        return "perfect";
    return "k" + format_number(kappa) + "_p" + format_number(psi);
}

PowerConfig Scenario::power_at(double snr_db) const
{
    const double p = db_to_linear(snr_db) * sigma2 * db_to_linear(snr_offset_db);
    return {p, p, sigma2, rho, eta};
}

CsiParams Scenario::csi_at(double snr_db) const
{
    return csi.at(db_to_linear(snr_db));
}

void Scenario::validate() const
{
    topology.validate();
    PowerConfig{1.0, 1.0, sigma2, rho, eta}.validate();
    if (!(sigma2 > 0.0))
        throw ContractViolation("scenario: sigma2 must be positive");
    if (!std::isfinite(snr_offset_db))
        throw ContractViolation("scenario: snr offset must be finite");
    if (streams == 0 || 2 * streams > topology.antennas)
        throw ContractViolation("scenario: need 1 <= streams <= antennas / 2");
    if (!csi.perfect && (!(csi.psi > 0.0) || !(csi.kappa >= 0.0)))
        throw ContractViolation("scenario: CSI mismatch needs psi > 0 and kappa >= 0");
}

const BerPoint& PointResult::at(Node n) const
{
    for (const BerPoint& p : nodes)
        if (p.node == n)
            return p;
    throw ContractViolation("PointResult: node not present");
}

TrialOutcome simulate_trial(const Scenario& scenario, double snr_db, RandomStream& rng)
{
    const PowerConfig power = scenario.power_at(snr_db);
    const CsiParams csi = scenario.csi_at(snr_db);
    TrialOutcome out;
    for (std::size_t attempt = 0; attempt < kMaxRedraws; ++attempt) {
        const ChannelRealization ch = draw_realization(rng, scenario.topology, csi);
        std::optional<BeamformerSet> beams;
        try {
            beams = build_beamformers(ch, scenario.slot2_rule, scenario.streams);
        } catch (const RealizationRejected&) {
            ++out.rejected;
            continue;
        }
        const SinrSample s = evaluate_link(ch, *beams, power, scenario.topology);
        for (int k = 0; k < 2; ++k) {
            out.pu1[k] = instantaneous_ber(s.gamma_p1[k]);
            out.pu2[k] = instantaneous_ber(s.gamma_p2[k]);
        }
        out.relay = instantaneous_ber(s.gamma_r);
        const double hop = instantaneous_ber(s.gamma_d);
        out.destination = scenario.destination_metric == DestinationMetric::hop
                              ? hop
                              : out.relay * (1.0 - hop) + (1.0 - out.relay) * hop;
        return out;
    }
    throw ScenarioInfeasible("every one of " + std::to_string(kMaxRedraws) + " redraws was rejected");
}

PointResult run_point(const Scenario& scenario, double snr_db, std::size_t trials, std::uint64_t seed,
                      std::size_t threads)
{
    if (trials == 0)
        throw ContractViolation("run_point: trials must be at least 1");
    scenario.validate();

    const std::size_t chunks = (trials + kChunk - 1) / kChunk;
    std::vector<Moments> partial(chunks);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        try {
            for (std::size_t c = next++; c < chunks; c = next++) {
                Moments m;
                const std::size_t end = std::min(trials, (c + 1) * kChunk);
                for (std::size_t t = c * kChunk; t < end; ++t) {
                    RandomStream rng = RandomStream::for_trial(seed, t);
                    const TrialOutcome o = simulate_trial(scenario, snr_db, rng);
                    const double pu = 0.25 * (o.pu1[0] + o.pu1[1] + o.pu2[0] + o.pu2[1]);
                    m.add({o.pu1[0], o.pu1[1], o.pu2[0], o.pu2[1], o.relay, o.destination, pu});
                    m.rejected += o.rejected;
                }
                partial[c] = m;
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
            next = chunks;
        }
    };

    const std::size_t n_workers = std::max<std::size_t>(1, std::min(threads, chunks));
    if (n_workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (std::size_t i = 0; i < n_workers; ++i)
            pool.emplace_back(worker);
        for (std::thread& th : pool)
            th.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    Moments total;
    for (const Moments& m : partial)
        total.add(m);
    if (total.rejected > trials)
        throw ScenarioInfeasible("more than half of the channel draws were rejected (" + std::to_string(total.rejected)
                                 + " of " + std::to_string(total.rejected + trials) + ")");

    const double n = static_cast<double>(trials);
    auto mean = [&](std::size_t i) { return total.sum[i].value() / n; };
    auto halfwidth = [&](std::size_t i) {
        if (trials < 2)
            return 0.0;
        const double mu = mean(i);
        const double var = std::max(0.0, (total.sum_sq[i].value() - n * mu * mu) / (n - 1.0));
        return 1.96 * std::sqrt(var / n);
    };
    // PU1/PU2 curves average the two slots; their spread is bounded by the per-slot one.
    auto pair_mean = [&](std::size_t a, std::size_t b) { return 0.5 * (mean(a) + mean(b)); };
    auto pair_halfwidth = [&](std::size_t a, std::size_t b) { return 0.5 * (halfwidth(a) + halfwidth(b)); };

    PointResult r;
    r.snr_db = snr_db;
    r.trials = trials;
    r.rejected = total.rejected;
    r.pu_by_slot = {0.5 * (mean(0) + mean(2)), 0.5 * (mean(1) + mean(3))};
    auto point = [&](Node node, double ber, double hw) {
        return BerPoint{snr_db, node, std::clamp(ber, 0.0, 0.5), hw, trials, total.rejected};
    };
    r.nodes = {
        point(Node::pu1, pair_mean(0, 1), pair_halfwidth(0, 1)),
        point(Node::pu2, pair_mean(2, 3), pair_halfwidth(2, 3)),
        point(Node::pu, mean(6), halfwidth(6)),
        point(Node::relay, mean(4), halfwidth(4)),
        point(Node::destination, mean(5), halfwidth(5)),
    };
    return r;
}

BitErrorCounts bitwise_trial_oracle(const ChannelRealization& ch, const BeamformerSet& b, const PowerConfig& cfg,
                                    const Topology& topo, std::size_t n_bits, RandomStream& rng)
{
    if (b.streams != 1)
        throw ContractViolation("bitwise_trial_oracle: single-stream beamformers only");
    cfg.validate();
    const double lambda = ch.lambda;
    const std::size_t n = topo.antennas;
    const double shrink = 1.0 / (1.0 + lambda);
    const double p_relay = harvested_power(ch, b, cfg, topo);

    // Gaussian disturbances carry twice their nominal power so that the in-phase decision
    // rail sees exactly the power the SINR denominators count.
    auto gaussian_symbol = [&] { return rng.complex_normal(2.0); };
    auto noise = [&] {
        ComplexMatrix v(n, 1);
        for (cplx& z : v.entries())
            z = rng.complex_normal(2.0 * cfg.sigma2);
        return v;
    };
    auto bpsk = [&] { return (rng.bits() >> 63) ? 1.0 : -1.0; };
    auto decide_wrong = [](cplx coefficient, cplx z, double s) {
        const double metric = (std::conj(coefficient) * z).real();
        return (metric >= 0.0 ? 1.0 : -1.0) != s;
    };

    BitErrorCounts counts;
    counts.bits = n_bits;

    // Relay, information branch of the first slot.
    {
        const ComplexMatrix uh = conj_transpose(b.u_relay);
        const double info = 1.0 - cfg.rho;
        const double a_s = std::sqrt(info * cfg.p_source / topo.attenuation(RxNode::relay, TxNode::source));
        const double a_1 = std::sqrt(info * cfg.p_primary / topo.attenuation(RxNode::relay, TxNode::pu1));
        const double a_2 = std::sqrt(info * cfg.p_primary / topo.attenuation(RxNode::relay, TxNode::pu2));
        const ComplexMatrix desired = cplx{a_s * shrink} * (ch.hat(Link::relay_source) * b.v_source);
        const ComplexMatrix self = cplx{a_s} * (ch.tilde(Link::relay_source) * b.v_source);
        const ComplexMatrix from_1 = cplx{a_1} * (ch.truth(Link::relay_pu1) * b.v1_s1);
        const ComplexMatrix from_2 = cplx{a_2} * (ch.truth(Link::relay_pu2) * b.v2_s1);
        const cplx coefficient = (uh * desired)(0, 0);
        for (std::size_t i = 0; i < n_bits; ++i) {
            const double s = bpsk();
            ComplexMatrix y = cplx{s} * desired;
            y += gaussian_symbol() * self;
            y += gaussian_symbol() * from_1;
            y += gaussian_symbol() * from_2;
            y += noise();
            counts.relay += decide_wrong(coefficient, (uh * y)(0, 0), s);
        }
    }

    // Destination: no suppressor, matched filter on the estimated channel. The estimation
    // error is injected along the filter direction with its full power, the worst case the
    // destination SINR assumes.
    {
        const double a_r = std::sqrt(p_relay / topo.attenuation(RxNode::destination, TxNode::relay));
        const ComplexMatrix desired = cplx{a_r * shrink} * (ch.hat(Link::dest_relay) * b.v_relay);
        const double desired_norm = fro_norm(desired);
        ComplexMatrix direction(n, 1);
        if (desired_norm > 0.0)
            direction = cplx{1.0 / desired_norm} * desired;
        else
            direction(0, 0) = 1.0;
        const ComplexMatrix self = cplx{a_r * fro_norm(ch.tilde(Link::dest_relay) * b.v_relay)} * direction;
        const ComplexMatrix filter = conj_transpose(direction);
        const cplx coefficient = (filter * desired)(0, 0);
        for (std::size_t i = 0; i < n_bits; ++i) {
            const double s = bpsk();
            ComplexMatrix y = cplx{s} * desired;
            y += gaussian_symbol() * self;
            y += noise();
            counts.destination += decide_wrong(coefficient, (filter * y)(0, 0), s);
        }
    }

    // Primary receivers in both slots.
    for (int slot = 1; slot <= 2; ++slot) {
        for (int pu = 1; pu <= 2; ++pu) {
            const int other = 3 - pu;
            const RxNode rx = pu == 1 ? RxNode::pu1 : RxNode::pu2;
            const ComplexMatrix uh = conj_transpose(b.primary_suppressor(pu, slot));
            const Link own = primary_link(pu, pu, slot);
            const Link cross = primary_link(pu, other, slot);
            const double a_own = std::sqrt(cfg.p_primary / topo.attenuation(rx, pu == 1 ? TxNode::pu1 : TxNode::pu2));
            const double a_cross
                = std::sqrt(cfg.p_primary / topo.attenuation(rx, other == 1 ? TxNode::pu1 : TxNode::pu2));
            const ComplexMatrix& v_own = b.primary_precoder(pu, slot);
            const ComplexMatrix& v_other = b.primary_precoder(other, slot);

            const ComplexMatrix desired = cplx{a_own * shrink} * (ch.hat(own) * v_own);
            const ComplexMatrix self = cplx{a_own} * (ch.tilde(own) * v_own);
            const ComplexMatrix from_other = cplx{a_cross} * (ch.truth(cross) * v_other);
            ComplexMatrix from_secondary(n, 1);
            if (slot == 1) {
                const Link l = pu == 1 ? Link::pu1_source : Link::pu2_source;
                const double a = std::sqrt(cfg.p_source / topo.attenuation(rx, TxNode::source));
                from_secondary = cplx{a} * (ch.truth(l) * b.v_source);
            } else {
                const Link l = pu == 1 ? Link::pu1_relay : Link::pu2_relay;
                const double a = std::sqrt(p_relay / topo.attenuation(rx, TxNode::relay));
                from_secondary = cplx{a} * (ch.truth(l) * b.v_relay);
            }
            const cplx coefficient = (uh * desired)(0, 0);
            std::size_t errors = 0;
            for (std::size_t i = 0; i < n_bits; ++i) {
                const double s = bpsk();
                ComplexMatrix y = cplx{s} * desired;
                y += gaussian_symbol() * self;
                y += gaussian_symbol() * from_other;
                y += gaussian_symbol() * from_secondary;
                y += noise();
                errors += decide_wrong(coefficient, (uh * y)(0, 0), s);
            }
            counts.pu[pu - 1][slot - 1] = errors;
        }
    }
    return counts;
}

} // namespace iasim
