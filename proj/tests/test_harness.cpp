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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "iasim/errors.hpp"
#include "iasim/harness.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace iasim;

namespace {

std::string config_error_path(const std::string& text)
{
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.path();
    }
    return "<no error>";
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        out.push_back(l);
    return out;
}

ScenarioConfig small_config()
{
    ScenarioConfig c;
    c.csi = {CsiModel::perfect_csi(), CsiModel::mismatch(1.0, 10.0)};
    c.snr_db = {5.0, 15.0};
    c.trials = 300;
    c.seed = 42;
    return c;
}

std::string sweep_csv(const ScenarioConfig& c, std::size_t threads)
{
    std::ostringstream out;
    SweepOptions o;
    o.threads = threads;
    write_csv(out, run_sweep(c, o));
    return out.str();
}

} // namespace

TEST_CASE("defaults")
{
    const ScenarioConfig c;
    CHECK(c.topology == Topology::homogeneous(2, 3.0, 2.7));
    CHECK(c.rho == 0.75);
    CHECK(c.eta == 0.8);
    CHECK(c.trials == 200000);
    CHECK_NOTHROW(c.validate());
    CHECK(parse_config("{}") == c);
}

TEST_CASE("config round trip")
{
    ScenarioConfig c = small_config();
    c.topology.distance[2][0] = 4.5;
    c.topology.exponent[3][3] = 3.1;
    c.rho = 0.6123456789012345;
    c.snr_offset_db = 0.0;
    c.slot2_rule = Slot2Rule::random_seed;
    c.destination_metric = DestinationMetric::hop;
    c.seed = 18446744073709551615ull;
    CHECK(parse_config(serialize_config(c)) == c);
    for (std::string_view name : kPresetNames)
        CHECK(parse_config(serialize_config(preset(name))) == preset(name));
}

TEST_CASE("scalar and tabular topology entries")
{
    const ScenarioConfig c = parse_config(R"({"topology": {"antennas": 4, "distance": 2.0,
        "pathloss_exponent": [[2,2,2,2],[2,2,2,2],[3,3,3,3],[2,2,2,2.5]]}})");
    CHECK(c.topology.antennas == 4);
    CHECK(c.topology.distance[1][3] == 2.0);
    CHECK(c.topology.exponent[2][0] == 3.0);
    CHECK(c.topology.exponent[3][3] == 2.5);
}

TEST_CASE("validation errors name the field")
{
    CHECK(config_error_path(R"({"snr_db": []})") == "snr_db");
    CHECK(config_error_path(R"({"csi": []})") == "csi");
    CHECK(config_error_path(R"({"power": {"rho": 1.5}})") == "power.rho");
    CHECK(config_error_path(R"({"power": {"gain": 1}})") == "power.gain");
    CHECK(config_error_path(R"({"topology": {"distance": [[1,2],[3,4]]}})") == "topology.distance");
    CHECK(config_error_path(R"({"csi": [{"kappa": 1}]})") == "csi[0]");
    CHECK(config_error_path(R"({"csi": ["perfect", {"kappa": 1, "psi": -2}]})") == "csi[1]");
    CHECK(config_error_path(R"({"snr_db": [10, 5]})") == "snr_db[1]");
    CHECK(config_error_path(R"({"trials": 0})") == "trials");
    CHECK(config_error_path(R"({"trials": -3})") == "trials");
    CHECK(config_error_path(R"({"slot2_rule": "eig"})") == "slot2_rule");
    CHECK(config_error_path(R"({"streams": 2})") == "streams");
    CHECK(config_error_path("{not json") == "");
    CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ConfigError);
}

TEST_CASE("presets")
{
    const ScenarioConfig a = preset("fig2a");
    REQUIRE(a.csi.size() == 3);
    CHECK(a.csi[0] == CsiModel::perfect_csi());
    CHECK(a.csi[1] == CsiModel::mismatch(0.0, 0.001));
    CHECK(a.csi[2] == CsiModel::mismatch(0.0, 0.05));
    CHECK(a.snr_db == std::vector<double>{0, 3, 6, 9, 12, 15, 18, 21, 24, 27, 30});

    const ScenarioConfig b = preset("fig2b");
    CHECK(b.rho == 0.75);
    CHECK(b.eta == 0.8);
    CHECK(b.csi == std::vector<CsiModel>{CsiModel::mismatch(0.75, 10), CsiModel::mismatch(1, 10),
                                         CsiModel::mismatch(1.5, 15)});
    CHECK(b.snr_db == a.snr_db);

    const ScenarioConfig f = preset("fig3");
    CHECK(f.snr_db == std::vector<double>{20.0});
    CHECK(f.csi.size() == 67);
    bool has_k3 = false, has_p20 = false;
    for (const CsiModel& m : f.csi) {
        CHECK_FALSE(m.perfect);
        has_k3 = has_k3 || m.kappa == 3.0;
        has_p20 = has_p20 || m.psi == 20.0;
    }
    CHECK(has_k3);
    CHECK(has_p20);

    try {
        preset("fig4");
        FAIL("expected an error");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("fig2a, fig2b, fig3") != std::string::npos);
    }
}

TEST_CASE("CSV output")
{
    const ScenarioConfig c = small_config();
    const std::string csv = sweep_csv(c, 1);
    const auto rows = lines(csv);
    REQUIRE(rows.size() == 1 + 2 * 2 * 3);
    CHECK(rows[0] == kCsvHeader);
    CHECK(rows[1].rfind("perfect,0,0,5,PU,", 0) == 0);
    CHECK(rows[2].rfind("perfect,0,0,5,Relay,", 0) == 0);
    CHECK(rows[3].rfind("perfect,0,0,5,Destination,", 0) == 0);
    CHECK(rows[7].rfind("k1_p10,1,10,5,PU,", 0) == 0);
    CHECK(rows.back().find(",300,") != std::string::npos);

    CHECK(sweep_csv(c, 1) == csv);
    CHECK(sweep_csv(c, 2) == csv);

    ScenarioConfig other = c;
    other.seed = 43;
    CHECK(sweep_csv(other, 1) != csv);
}

TEST_CASE("fig2b emits three scenarios by the grid by three series")
{
    ScenarioConfig c = preset("fig2b");
    c.trials = 2;
    const auto rows = lines(sweep_csv(c, 1));
    CHECK(rows.size() == 1 + 3 * 11 * 3);
}

TEST_CASE("sweep progress callback")
{
    ScenarioConfig c = small_config();
    std::size_t calls = 0;
    SweepOptions o;
    o.progress = [&](const CsiModel&, const PointResult& p) {
        ++calls;
        CHECK(p.trials == c.trials);
    };
    const auto curves = run_sweep(c, o);
    CHECK(calls == 4);
    CHECK(curves.size() == 2);
    CHECK(curves[1].points[1].snr_db == 15.0);
}

TEST_CASE("align_check")
{
    ScenarioConfig c;
    const AlignCheckReport r = align_check(c, 2000);
    CHECK(r.max_leakage <= 1e-10);
    CHECK(r.all_ranks_ok);
    CHECK(r.rejection_rate() < 1e-3);

    // A duplicated channel makes the alignment matrix degenerate.
    const AlignCheckReport t = align_check(c, 50, [](ChannelRealization& ch) {
        ch[Link::relay_pu2] = ch[Link::relay_pu1];
        ch[Link::pu12_s1] = ch[Link::relay_pu1];
        ch[Link::pu1_source] = ch[Link::relay_pu1];
        ch[Link::pu2_source] = ch[Link::relay_pu1];
        ch[Link::pu21_s1] = ch[Link::relay_pu1];
        ch[Link::relay_source] = ch[Link::relay_pu1];
    });
    CHECK(t.rejected == 50);
    CHECK(t.rejection_rate() == 1.0);

    const AlignCheckReport singular = align_check(c, 20, [](ChannelRealization& ch) {
        ch[Link::relay_pu1].h_hat = ComplexMatrix::from_rows({{1.0, 1.0}, {1.0, 1.0}});
    });
    CHECK(singular.rejected == 20);
    CHECK_THROWS_AS(align_check(c, 0), ConfigError);
}

TEST_CASE("load_config reads a file")
{
    const std::string path = "test_harness_config.json";
    {
        std::ofstream f(path);
        f << R"({"snr_db": [1, 2], "trials": 10, "csi": [{"kappa": 0.5, "psi": 2}]})";
    }
    const ScenarioConfig c = load_config(path);
    CHECK(c.trials == 10);
    CHECK(c.csi.front() == CsiModel::mismatch(0.5, 2.0));
    std::remove(path.c_str());
}
