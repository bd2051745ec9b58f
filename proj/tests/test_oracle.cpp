// Copyright 2026 The vodi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "vodi/alpha.hpp"
#include "vodi/oracle.hpp"

using namespace vodi;

TEST_CASE("exact_value: constant reward is flat at c/(1-beta) for every channel") {
    Rng rng(61);
    GameSpec g = vodi_test::tiny_game(rng, 0.9);
    for (double& v : g.reward_leader.data) v = 5.0;
    const PolicyProfile p = random_stochastic_profile(rng, g);
    for (auto [e1, e2] : {std::pair{0.0, 0.0}, {0.3, 0.8}, {1.0, 1.0}})
        for (double v : exact_value(g, p, e1, e2)) CHECK(v == doctest::Approx(50.0).epsilon(1e-10));
}

TEST_CASE("exact_value: report-blind profile is channel-independent") {
    Rng rng(62);
    const GameSpec g = vodi_test::tiny_game(rng, 0.9);
    const PolicyProfile p = random_report_blind_profile(rng, g);
    const Vec a = exact_value(g, p, 0.0, 0.0);
    const Vec b = exact_value(g, p, 0.4, 0.7);
    CHECK(sup_norm_diff(a, b) <= 1e-9);
}

TEST_CASE("exact_value: coincides with alpha00 at the origin") {
    Rng rng(63);
    const GameSpec g = vodi_test::tiny_game(rng, 0.95);
    const PolicyProfile p = random_stochastic_profile(rng, g);
    CHECK(sup_norm_diff(exact_value(g, p, 0.0, 0.0), compute_alpha00(g, p)) <= 1e-10);
}

TEST_CASE("exact_value: entrywise continuous along a channel sweep") {
    Rng rng(64);
    const GameSpec g = vodi_test::tiny_game(rng, 0.9);
    const PolicyProfile p = random_stochastic_profile(rng, g);
    Vec prev = exact_value(g, p, 0.0, 0.2);
    double scale = std::max(1.0, sup_norm(prev));
    for (int step = 1; step <= 50; ++step) {
        const Vec cur = exact_value(g, p, 0.02 * step, 0.2);
        CHECK(sup_norm_diff(cur, prev) <= 0.1 * scale);  // no jumps for a fixed profile
        prev = cur;
    }
}

TEST_CASE("simulate_value: deterministic game reproduces the exact value with zero error") {
    Rng rng(65);
    GameSpec g = vodi_test::tiny_game(rng, 0.5);
    for (auto& block : g.transitions)
        for (int s = 0; s < g.state_count(); ++s) {
            int best = 0;
            for (int t = 0; t < g.state_count(); ++t)
                if (block.at(s, t) > block.at(s, best)) best = t;
            for (int t = 0; t < g.state_count(); ++t) block.at(s, t) = (t == best) ? 1.0 : 0.0;
        }
    const PolicyProfile p = random_deterministic_profile(rng, g);
    const InfoSpace info = info_space(g);

    SimConfig cfg;
    cfg.episodes = 32;
    cfg.seed = 99;
    cfg.horizon = horizon_for_bias(g.beta, 60.0, 1e-10);
    cfg.initial.assign(info.count(), 0.0);
    cfg.initial[info.diagonal_index(3)] = 1.0;

    const SimResult r = simulate_value(g, p, 0.0, 0.0, Agent::Leader, cfg);
    const Vec exact = exact_value(g, p, 0.0, 0.0);
    CHECK(r.std_error == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::fabs(r.estimate - exact[info.diagonal_index(3)]) <= r.bias_bound + 1e-9);
}

TEST_CASE("simulate_value: identical seeds give bit-identical estimates") {
    Rng rng(66);
    const GameSpec g = vodi_test::tiny_game(rng, 0.8);
    const PolicyProfile p = random_stochastic_profile(rng, g);
    SimConfig cfg;
    cfg.episodes = 500;
    cfg.seed = 1234;
    cfg.horizon = 40;
    const SimResult a = simulate_value(g, p, 0.1, 0.2, Agent::Leader, cfg);
    const SimResult b = simulate_value(g, p, 0.1, 0.2, Agent::Leader, cfg);
    CHECK(a.estimate == b.estimate);
    CHECK(a.std_error == b.std_error);
    cfg.seed = 1235;
    const SimResult c = simulate_value(g, p, 0.1, 0.2, Agent::Leader, cfg);
    CHECK(a.estimate != c.estimate);
}

TEST_CASE("simulate_value: estimate within four standard errors plus bias of the oracle") {
    Rng rng(67);
    const GameSpec g = vodi_test::tiny_game(rng, 0.8);
    const PolicyProfile p = random_stochastic_profile(rng, g);
    const InfoSpace info = info_space(g);
    SimConfig cfg;
    cfg.episodes = 20000;
    cfg.seed = 7;
    cfg.horizon = horizon_for_bias(g.beta, 50.0, 1e-4);
    cfg.initial.assign(info.count(), 0.0);
    cfg.initial[info.diagonal_index(0)] = 1.0;
    const SimResult r = simulate_value(g, p, 0.15, 0.05, Agent::Leader, cfg);
    const Vec exact = exact_value(g, p, 0.15, 0.05);
    CHECK(std::fabs(r.estimate - exact[info.diagonal_index(0)]) <= 4.0 * r.std_error + r.bias_bound);
}

TEST_CASE("finite differences: zero for report-blind and constant-reward games") {
    Rng rng(68);
    const GameSpec g = vodi_test::tiny_game(rng, 0.9);
    const PolicyProfile blind = random_report_blind_profile(rng, g);
    // difference quotients amplify solver rounding by 1/h, hence the floor
    for (auto dir : {DiffDirection::DEps1, DiffDirection::DEps2, DiffDirection::Mixed})
        for (double v : finite_difference_alpha(g, blind, dir, 1e-3)) CHECK(std::fabs(v) <= 1e-6);

    GameSpec flat = g;
    for (double& v : flat.reward_leader.data) v = 2.0;
    const PolicyProfile p = random_stochastic_profile(rng, flat);
    for (double v : finite_difference_alpha(flat, p, DiffDirection::DEps1, 1e-4)) CHECK(std::fabs(v) <= 1e-6);
}

TEST_CASE("finite differences: error against the series coefficient shrinks linearly in h") {
    Rng rng(69);
    const GameSpec g = vodi_test::tiny_game(rng, 0.6);
    const PolicyProfile p = random_stochastic_profile(rng, g);
    const AlphaTable t = compute_alpha_table(g, p, 1);
    std::vector<double> hs{1e-3, 1e-4, 1e-5};
    std::vector<double> errs;
    for (double h : hs) errs.push_back(sup_norm_diff(finite_difference_alpha(g, p, DiffDirection::DEps1, h), t.at(1, 0)));
    const double slope = vodi_test::loglog_slope(hs, errs);
    CHECK(slope >= 0.9);
    CHECK(slope <= 1.1);
}

TEST_CASE("finite differences: non-positive step is rejected") {
    Rng rng(70);
    const GameSpec g = vodi_test::tiny_game(rng);
    const PolicyProfile p = random_stochastic_profile(rng, g);
    CHECK_THROWS_AS(finite_difference_alpha(g, p, DiffDirection::DEps1, 0.0), std::invalid_argument);
}
