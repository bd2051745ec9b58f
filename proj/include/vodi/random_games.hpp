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

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "vodi/game.hpp"
#include "vodi/oracle.hpp"

namespace vodi {

struct RandomGameConfig {
    int sl1 = 2, sl2 = 2, sf = 2;
    int al = 1, af1 = 2, af2 = 2;
    int reward_min = -50, reward_max = 50;
    double beta = 0.9;
};

/// Transition rows sampled uniformly from the probability simplex
/// (exponential draws, normalized); rewards are uniform integers.
inline GameSpec random_game(Rng& rng, const RandomGameConfig& cfg) {
    GameSpec g;
    g.sl1_size = cfg.sl1;
    g.sl2_size = cfg.sl2;
    g.sf_size = cfg.sf;
    g.al_size = cfg.al;
    g.af1_size = cfg.af1;
    g.af2_size = cfg.af2;
    g.beta = cfg.beta;
    g.sigma1 = uniform_sigma(cfg.sl2);
    g.sigma2 = uniform_sigma(cfg.sl1);

    const int ns = g.state_count();
    const int na = g.action_count();
    g.transitions.assign(na, Mat(ns, ns));
    for (int a = 0; a < na; ++a)
        for (int s = 0; s < ns; ++s) {
            double total = 0.0;
            for (int t = 0; t < ns; ++t) {
                const double e = -std::log(1.0 - rng.uniform());
                g.transitions[a].at(s, t) = e;
                total += e;
            }
            for (int t = 0; t < ns; ++t) g.transitions[a].at(s, t) /= total;
        }

    auto random_rewards = [&]() {
        Mat r(ns, na);
        for (double& v : r.data) v = rng.range(cfg.reward_min, cfg.reward_max);
        return r;
    };
    g.reward_leader = random_rewards();
    g.reward_f1 = random_rewards();
    g.reward_f2 = g.reward_f1;
    return g;
}

inline std::vector<Vec> random_leader_rule(Rng& rng, const GameSpec& g) {
    std::vector<Vec> leader(g.state_count());
    for (auto& row : leader) row = point_mass(g.al_size, rng.below(g.al_size));
    return leader;
}

inline PolicyProfile random_deterministic_profile(Rng& rng, const GameSpec& g) {
    const InfoSpace info = info_space(g);
    PolicyProfile p;
    p.leader = random_leader_rule(rng, g);
    p.follower1.resize(info.f1_point_count());
    for (auto& row : p.follower1) row = point_mass(g.af1_size, rng.below(g.af1_size));
    p.follower2.resize(info.f2_point_count());
    for (auto& row : p.follower2) row = point_mass(g.af2_size, rng.below(g.af2_size));
    return p;
}

inline PolicyProfile random_stochastic_profile(Rng& rng, const GameSpec& g) {
    const InfoSpace info = info_space(g);
    auto random_dist = [&rng](int n) {
        Vec v(n);
        double total = 0.0;
        for (double& x : v) {
            x = -std::log(1.0 - rng.uniform());
            total += x;
        }
        for (double& x : v) x /= total;
        return v;
    };
    PolicyProfile p;
    p.leader.resize(g.state_count());
    for (auto& row : p.leader) row = random_dist(g.al_size);
    p.follower1.resize(info.f1_point_count());
    for (auto& row : p.follower1) row = random_dist(g.af1_size);
    p.follower2.resize(info.f2_point_count());
    for (auto& row : p.follower2) row = random_dist(g.af2_size);
    return p;
}

/// Follower rules that never look at the received report: the value of
/// distorted information is exactly zero for such profiles.
inline PolicyProfile random_report_blind_profile(Rng& rng, const GameSpec& g) {
    const InfoSpace info = info_space(g);
    PolicyProfile p;
    p.leader = random_leader_rule(rng, g);
    p.follower1.resize(info.f1_point_count());
    for (int s1 = 0; s1 < info.n1; ++s1)
        for (int sf = 0; sf < info.nf; ++sf) {
            const Vec row = point_mass(g.af1_size, rng.below(g.af1_size));
            for (int z1 = 0; z1 < info.n2; ++z1) p.follower1[info.f1_point(s1, z1, sf)] = row;
        }
    p.follower2.resize(info.f2_point_count());
    for (int s2 = 0; s2 < info.n2; ++s2)
        for (int sf = 0; sf < info.nf; ++sf) {
            const Vec row = point_mass(g.af2_size, rng.below(g.af2_size));
            for (int z2 = 0; z2 < info.n1; ++z2) p.follower2[info.f2_point(z2, s2, sf)] = row;
        }
    return p;
}

}  // namespace vodi
