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

// Test-only oracles. These deliberately avoid the library's solve and
// kernel paths: kernels are enumerated outcome by outcome from the
// channel definition, and linear systems go through a local
// elimination routine, so agreement is evidence rather than tautology.

#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "vodi/game.hpp"
#include "vodi/kernels.hpp"
#include "vodi/random_games.hpp"

namespace vodi_test {

using vodi::GameSpec;
using vodi::InfoSpace;
using vodi::Mat;
using vodi::PolicyProfile;
using vodi::Vec;

/// Plain Gauss-Jordan elimination, shares no code with the library.
inline Vec dense_solve(std::vector<Vec> a, Vec b) {
    const int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int i = col + 1; i < n; ++i)
            if (std::fabs(a[i][col]) > std::fabs(a[pivot][col])) pivot = i;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        if (a[col][col] == 0.0) throw std::runtime_error("dense_solve: singular");
        for (int i = 0; i < n; ++i) {
            if (i == col) continue;
            const double f = a[i][col] / a[col][col];
            if (f == 0.0) continue;
            for (int j = col; j < n; ++j) a[i][j] -= f * a[col][j];
            b[i] -= f * b[col];
        }
    }
    for (int i = 0; i < n; ++i) b[i] /= a[i][i];
    return b;
}

/// Brute-force transition kernels over info states, built by
/// enumerating every (s', z1', z2') outcome with its probability under
/// the channel definition at symbolic branch level.
struct BruteKernels {
    std::vector<Vec> acc, e1, e2, e12;
};

inline BruteKernels brute_kernels(const GameSpec& g, const PolicyProfile& p) {
    const InfoSpace info = vodi::info_space(g);
    const int n = info.count();
    const int ns = g.state_count();
    BruteKernels k;
    k.acc.assign(n, Vec(n, 0.0));
    k.e1.assign(n, Vec(n, 0.0));
    k.e2.assign(n, Vec(n, 0.0));
    k.e12.assign(n, Vec(n, 0.0));
    for (int zi = 0; zi < n; ++zi) {
        const vodi::InfoState z = info.at(zi);
        const int s_idx = info.state_index(z.s.s1, z.s.s2, z.s.sf);
        for (int ai = 0; ai < g.action_count(); ++ai) {
            const vodi::JointAction a = g.action_at(ai);
            const double pa = vodi::action_probability(info, p, z, a);
            if (pa == 0.0) continue;
            for (int next = 0; next < ns; ++next) {
                const double pt = pa * g.transitions[ai].at(s_idx, next);
                if (pt == 0.0) continue;
                const vodi::FullState fs = info.state_at(next);
                // accurate branch
                k.acc[zi][info.index(next, fs.s2, fs.s1)] += pt;
                // channel 1 distorted only
                for (int z1 = 0; z1 < info.n2; ++z1)
                    if (z1 != fs.s2) k.e1[zi][info.index(next, z1, fs.s1)] += pt * g.sigma1.at(fs.s2, z1);
                // channel 2 distorted only
                for (int z2 = 0; z2 < info.n1; ++z2)
                    if (z2 != fs.s1) k.e2[zi][info.index(next, fs.s2, z2)] += pt * g.sigma2.at(fs.s1, z2);
                // both distorted
                for (int z1 = 0; z1 < info.n2; ++z1) {
                    if (z1 == fs.s2) continue;
                    for (int z2 = 0; z2 < info.n1; ++z2) {
                        if (z2 == fs.s1) continue;
                        k.e12[zi][info.index(next, z1, z2)] +=
                            pt * g.sigma1.at(fs.s2, z1) * g.sigma2.at(fs.s1, z2);
                    }
                }
            }
        }
    }
    return k;
}

/// Exact leader value by assembling the full blended N x N system and
/// solving it densely.
inline Vec brute_exact_value(const GameSpec& g, const PolicyProfile& p, double e1, double e2,
                             vodi::Agent agent = vodi::Agent::Leader) {
    const InfoSpace info = vodi::info_space(g);
    const int n = info.count();
    const BruteKernels k = brute_kernels(g, p);
    const double wa = (1.0 - e1) * (1.0 - e2), w1 = e1 * (1.0 - e2), w2 = (1.0 - e1) * e2, w12 = e1 * e2;
    std::vector<Vec> system(n, Vec(n, 0.0));
    for (int i = 0; i < n; ++i) {
        system[i][i] = 1.0;
        for (int j = 0; j < n; ++j)
            system[i][j] -= g.beta * (wa * k.acc[i][j] + w1 * k.e1[i][j] + w2 * k.e2[i][j] + w12 * k.e12[i][j]);
    }
    return dense_solve(std::move(system), vodi::expected_reward_vector(g, p, agent));
}

/// A 2x2x2 game with one leader action and binary follower actions;
/// deterministic variant has point-mass transitions.
inline GameSpec tiny_game(vodi::Rng& rng, double beta = 0.9) {
    vodi::RandomGameConfig cfg;
    cfg.beta = beta;
    return vodi::random_game(rng, cfg);
}

/// Least-squares slope of log(err) against log(h).
inline double loglog_slope(const std::vector<double>& h, const std::vector<double>& err) {
    const int n = static_cast<int>(h.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        const double x = std::log(h[i]);
        const double y = std::log(err[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace vodi_test
