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

#include "iasim/harness.hpp"

#include "iasim/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

namespace iasim {

namespace {

using nlohmann::json;
using Matrix4 = std::array<std::array<double, kNodeCount>, kNodeCount>;

std::string_view rule_name(Slot2Rule r)
{
    return r == Slot2Rule::svd_seed ? "svd_seed" : "random_seed";
}

std::string_view metric_name(DestinationMetric m)
{
    return m == DestinationMetric::end_to_end ? "end_to_end" : "hop";
}

// Typed field access with the field path carried into every error.
class Reader {
public:
    Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {}

    void allow(std::initializer_list<std::string_view> keys) const
    {
        if (!j_.is_object())
            throw ConfigError(path_, "expected an object");
        for (const auto& [key, value] : j_.items())
            if (std::find(keys.begin(), keys.end(), key) == keys.end())
                throw ConfigError(child(key), "unknown field");
    }

    bool has(const std::string& key) const { return j_.contains(key); }
    const json& at(const std::string& key) const { return j_.at(key); }
    std::string child(std::string_view key) const { return path_.empty() ? std::string(key) : path_ + "." + std::string(key); }

    double number(const std::string& key, double fallback) const
    {
        if (!has(key))
            return fallback;
        return as_number(j_.at(key), child(key));
    }

    std::uint64_t unsigned_int(const std::string& key, std::uint64_t fallback) const
    {
        if (!has(key))
            return fallback;
        const json& v = j_.at(key);
        if (!v.is_number_unsigned())
            throw ConfigError(child(key), "expected a non-negative integer");
        return v.get<std::uint64_t>();
    }

    std::string text(const std::string& key, const std::string& fallback) const
    {
        if (!has(key))
            return fallback;
        const json& v = j_.at(key);
        if (!v.is_string())
            throw ConfigError(child(key), "expected a string");
        return v.get<std::string>();
    }

    static double as_number(const json& v, const std::string& path)
    {
        if (!v.is_number())
            throw ConfigError(path, "expected a number");
        return v.get<double>();
    }

private:
    const json& j_;
    std::string path_;
};

Matrix4 read_link_table(const json& v, const std::string& path)
{
    Matrix4 m{};
    if (v.is_number()) {
        for (auto& row : m)
            row.fill(v.get<double>());
        return m;
    }
    if (!v.is_array() || v.size() != kNodeCount)
        throw ConfigError(path, "expected a number or a 4x4 array [receiver 1,2,R,D][transmitter 1,2,S,R]");
    for (std::size_t r = 0; r < kNodeCount; ++r) {
        const json& row = v[r];
        const std::string row_path = path + "[" + std::to_string(r) + "]";
        if (!row.is_array() || row.size() != kNodeCount)
            throw ConfigError(row_path, "expected an array of 4 numbers");
        for (std::size_t c = 0; c < kNodeCount; ++c)
            m[r][c] = Reader::as_number(row[c], row_path + "[" + std::to_string(c) + "]");
    }
    return m;
}

json write_link_table(const Matrix4& m)
{
    const double first = m[0][0];
    const bool uniform = std::all_of(m.begin(), m.end(), [&](const auto& row) {
        return std::all_of(row.begin(), row.end(), [&](double x) { return x == first; });
    });
    if (uniform)
        return first;
    json rows = json::array();
    for (const auto& row : m)
        rows.push_back(json(row));
    return rows;
}

CsiModel read_csi(const json& v, const std::string& path)
{
    if (v.is_string()) {
        if (v.get<std::string>() != "perfect")
            throw ConfigError(path, "expected \"perfect\" or {\"kappa\": ..., \"psi\": ...}");
        return CsiModel::perfect_csi();
    }
    Reader r(v, path);
    r.allow({"kappa", "psi"});
    if (!r.has("kappa") || !r.has("psi"))
        throw ConfigError(path, "CSI mismatch entries need both kappa and psi");
    return CsiModel::mismatch(r.number("kappa", 0.0), r.number("psi", 0.0));
}

std::string format(const char* spec, double x)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, spec, x);
    return buf;
}

std::vector<double> grid(double first, double last, double step)
{
    std::vector<double> out;
    const auto n = static_cast<std::size_t>(std::llround((last - first) / step));
    for (std::size_t i = 0; i <= n; ++i)
        out.push_back(first + step * static_cast<double>(i));
    return out;
}

} // namespace

void ScenarioConfig::validate() const
{
    if (topology.antennas < 2)
        throw ConfigError("topology.antennas", "must be at least 2");
    for (std::size_t r = 0; r < kNodeCount; ++r)
        for (std::size_t c = 0; c < kNodeCount; ++c) {
            if (!(topology.distance[r][c] > 0.0) || !std::isfinite(topology.distance[r][c]))
                throw ConfigError("topology.distance", "every distance must be positive");
            if (!(topology.exponent[r][c] >= 2.0) || !std::isfinite(topology.exponent[r][c]))
                throw ConfigError("topology.pathloss_exponent", "every exponent must be at least 2");
        }
    if (streams == 0 || 2 * streams > topology.antennas)
        throw ConfigError("streams", "need 1 <= streams <= antennas / 2");
    if (slot2_rule == Slot2Rule::random_seed && streams != 1)
        throw ConfigError("slot2_rule", "random_seed supports a single stream");
    if (!(rho > 0.0 && rho < 1.0))
        throw ConfigError("power.rho", "must lie in (0, 1)");
    if (!(eta > 0.0 && eta <= 1.0))
        throw ConfigError("power.eta", "must lie in (0, 1]");
    if (!(sigma2 > 0.0) || !std::isfinite(sigma2))
        throw ConfigError("power.sigma2", "must be positive");
    if (!std::isfinite(snr_offset_db))
        throw ConfigError("power.snr_offset_db", "must be finite");
    if (csi.empty())
        throw ConfigError("csi", "at least one CSI scenario is required");
    for (std::size_t i = 0; i < csi.size(); ++i) {
        const CsiModel& m = csi[i];
        if (!m.perfect && (!(m.psi > 0.0) || !(m.kappa >= 0.0) || !std::isfinite(m.psi) || !std::isfinite(m.kappa)))
            throw ConfigError("csi[" + std::to_string(i) + "]", "needs psi > 0 and kappa >= 0");
    }
    if (snr_db.empty())
        throw ConfigError("snr_db", "the SNR grid is empty");
    for (std::size_t i = 0; i < snr_db.size(); ++i) {
        if (!std::isfinite(snr_db[i]))
            throw ConfigError("snr_db[" + std::to_string(i) + "]", "must be finite");
        if (i > 0 && !(snr_db[i] > snr_db[i - 1]))
            throw ConfigError("snr_db[" + std::to_string(i) + "]", "the SNR grid must be strictly increasing");
    }
    if (trials == 0)
        throw ConfigError("trials", "must be at least 1");
}

Scenario ScenarioConfig::scenario(const CsiModel& csi_model) const
{
    Scenario s;
    s.topology = topology;
    s.rho = rho;
    s.eta = eta;
    s.sigma2 = sigma2;
    s.snr_offset_db = snr_offset_db;
    s.csi = csi_model;
    s.slot2_rule = slot2_rule;
    s.destination_metric = destination_metric;
    s.streams = streams;
    return s;
}

ScenarioConfig parse_config(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("", std::string("malformed config: ") + e.what());
    }

    ScenarioConfig c;
    Reader root(j, "");
    root.allow({"topology", "power", "csi", "snr_db", "trials", "seed", "slot2_rule", "destination_metric", "streams"});

    if (root.has("topology")) {
        Reader t(root.at("topology"), "topology");
        t.allow({"antennas", "distance", "pathloss_exponent"});
        c.topology.antennas = t.unsigned_int("antennas", c.topology.antennas);
        if (t.has("distance"))
            c.topology.distance = read_link_table(t.at("distance"), "topology.distance");
        if (t.has("pathloss_exponent"))
            c.topology.exponent = read_link_table(t.at("pathloss_exponent"), "topology.pathloss_exponent");
    }
    if (root.has("power")) {
        Reader p(root.at("power"), "power");
        p.allow({"rho", "eta", "sigma2", "snr_offset_db"});
        c.rho = p.number("rho", c.rho);
        c.eta = p.number("eta", c.eta);
        c.sigma2 = p.number("sigma2", c.sigma2);
        c.snr_offset_db = p.number("snr_offset_db", c.snr_offset_db);
    }
    if (root.has("csi")) {
        const json& list = root.at("csi");
        if (!list.is_array())
            throw ConfigError("csi", "expected an array");
        c.csi.clear();
        for (std::size_t i = 0; i < list.size(); ++i)
            c.csi.push_back(read_csi(list[i], "csi[" + std::to_string(i) + "]"));
    }
    if (root.has("snr_db")) {
        const json& list = root.at("snr_db");
        if (!list.is_array())
            throw ConfigError("snr_db", "expected an array");
        c.snr_db.clear();
        for (std::size_t i = 0; i < list.size(); ++i)
            c.snr_db.push_back(Reader::as_number(list[i], "snr_db[" + std::to_string(i) + "]"));
    }
    c.trials = root.unsigned_int("trials", c.trials);
    c.seed = root.unsigned_int("seed", c.seed);
    c.streams = root.unsigned_int("streams", c.streams);

    const std::string rule = root.text("slot2_rule", std::string(rule_name(c.slot2_rule)));
    if (rule == "svd_seed")
        c.slot2_rule = Slot2Rule::svd_seed;
    else if (rule == "random_seed")
        c.slot2_rule = Slot2Rule::random_seed;
    else
        throw ConfigError("slot2_rule", "expected svd_seed or random_seed");

    const std::string metric = root.text("destination_metric", std::string(metric_name(c.destination_metric)));
    if (metric == "end_to_end")
        c.destination_metric = DestinationMetric::end_to_end;
    else if (metric == "hop")
        c.destination_metric = DestinationMetric::hop;
    else
        throw ConfigError("destination_metric", "expected end_to_end or hop");

    c.validate();
    return c;
}

std::string serialize_config(const ScenarioConfig& c)
{
    json csi = json::array();
    for (const CsiModel& m : c.csi) {
        if (m.perfect)
            csi.push_back("perfect");
        else
            csi.push_back({{"kappa", m.kappa}, {"psi", m.psi}});
    }
    const json j = {
        {"topology",
         {{"antennas", c.topology.antennas},
          {"distance", write_link_table(c.topology.distance)},
          {"pathloss_exponent", write_link_table(c.topology.exponent)}}},
        {"power", {{"rho", c.rho}, {"eta", c.eta}, {"sigma2", c.sigma2}, {"snr_offset_db", c.snr_offset_db}}},
        {"csi", csi},
        {"snr_db", c.snr_db},
        {"trials", c.trials},
        {"seed", c.seed},
        {"slot2_rule", rule_name(c.slot2_rule)},
        {"destination_metric", metric_name(c.destination_metric)},
        {"streams", c.streams},
    };
    return j.dump(2) + "\n";
}

ScenarioConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("", "cannot open config file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

ScenarioConfig preset(std::string_view name)
{
    ScenarioConfig c;
    c.snr_db = grid(0.0, 30.0, 3.0);
    if (name == "fig2a") {
        c.csi = {CsiModel::perfect_csi(), CsiModel::mismatch(0.0, 0.001), CsiModel::mismatch(0.0, 0.05)};
        return c;
    }
    if (name == "fig2b") {
        c.csi = {CsiModel::mismatch(0.75, 10.0), CsiModel::mismatch(1.0, 10.0), CsiModel::mismatch(1.5, 15.0)};
        return c;
    }
    if (name == "fig3") {
        c.snr_db = {20.0};
        c.csi.clear();
        std::set<std::pair<double, double>> seen;
        auto add = [&](double kappa, double psi) {
            if (seen.insert({kappa, psi}).second)
                c.csi.push_back(CsiModel::mismatch(kappa, psi));
        };
        for (double psi : {1.0, 10.0, 20.0})
            for (double kappa : grid(0.0, 3.0, 0.25))
                add(kappa, psi);
        for (double kappa : {0.5, 1.0, 1.5, 2.0})
            for (double psi : {0.5, 1.0, 2.5, 5.0, 7.5, 10.0, 12.5, 15.0, 17.5, 20.0})
                add(kappa, psi);
        return c;
    }
    std::string valid;
    for (std::string_view n : kPresetNames)
        valid += (valid.empty() ? "" : ", ") + std::string(n);
    throw ConfigError("preset", "unknown preset '" + std::string(name) + "' (valid: " + valid + ")");
}

std::vector<BerCurve> run_sweep(const ScenarioConfig& config, const SweepOptions& options)
{
    config.validate();
    std::vector<BerCurve> curves;
    curves.reserve(config.csi.size());
    for (const CsiModel& m : config.csi) {
        BerCurve curve{config.scenario(m), config.seed, {}};
        for (double snr : config.snr_db) {
            curve.points.push_back(run_point(curve.scenario, snr, config.trials, config.seed, options.threads));
            if (options.progress)
                options.progress(m, curve.points.back());
        }
        curves.push_back(std::move(curve));
    }
    return curves;
}

void write_csv(std::ostream& out, const std::vector<BerCurve>& curves)
{
    out << kCsvHeader << '\n';
    for (const BerCurve& curve : curves) {
        const CsiModel& m = curve.scenario.csi;
        const std::string prefix = m.id() + "," + format("%g", m.perfect ? 0.0 : m.kappa) + ","
                                   + format("%g", m.perfect ? 0.0 : m.psi) + ",";
        for (const PointResult& point : curve.points)
            for (Node node : {Node::pu, Node::relay, Node::destination}) {
                const BerPoint& p = point.at(node);
                out << prefix << format("%g", p.snr_db) << ',' << node_name(node) << ',' << format("%.9e", p.ber)
                    << ',' << format("%.3e", p.ci_halfwidth) << ',' << p.trials << ',' << p.rejected << '\n';
            }
    }
}

AlignCheckReport align_check(const ScenarioConfig& config, std::size_t draws,
                             const std::function<void(ChannelRealization&)>& tamper)
{
    config.validate();
    if (draws == 0)
        throw ConfigError("draws", "must be at least 1");
    const Scenario scenario = config.scenario(config.csi.front());
    const CsiParams csi = scenario.csi_at(config.snr_db.front());

    AlignCheckReport report;
    report.draws = draws;
    for (std::size_t d = 0; d < draws; ++d) {
        RandomStream rng = RandomStream::for_trial(config.seed, d);
        ChannelRealization ch = draw_realization(rng, config.topology, csi);
        if (tamper)
            tamper(ch);
        try {
            const BeamformerSet beams = build_beamformers(ch, config.slot2_rule, config.streams);
            const AlignmentReport r = verify_alignment(ch, beams);
            report.max_leakage = std::max(report.max_leakage, r.max_leakage());
            report.all_ranks_ok = report.all_ranks_ok && r.all_full_rank();
        } catch (const RealizationRejected&) {
            ++report.rejected;
        }
    }
    return report;
}

} // namespace iasim
