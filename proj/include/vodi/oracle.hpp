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
#include <stdexcept>
#include <vector>

#include "vodi/game.hpp"
#include "vodi/kernels.hpp"
#include "vodi/matrix.hpp"

namespace vodi {

/// Exact per-info-state value of a fixed profile at arbitrary channel
/// error probabilities, via one linear solve on the blended chain.
/// Valid for every (eps1, eps2) in [0,1]^2, inside or outside the
/// series convergence radius.
inline Vec exact_value(const GameSpec& g, const PolicyProfile& p, double eps1, double eps2,
                       Agent agent = Agent::Leader) {
    require_valid(g, p);
    if (eps1 < 0.0 || eps1 > 1.0 || eps2 < 0.0 || eps2 > 1.0)
        throw std::invalid_argument("exact_value: error probabilities must lie in [0,1]");
    const InducedChain c = build_chain(g, p);
    return solve_discounted(c, c.reward(agent), channel_report_weights(c.info, g, eps1, eps2));
}

// Deterministic, platform-independent random primitives. The standard
// distributions are not bit-portable across library implementations,
// so sampling is done from raw 64-bit draws.

inline uint64_t splitmix64(uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// xoshiro-style generator seeded via splitmix so that nearby seeds
/// give unrelated streams.
class Rng {
  public:
    explicit Rng(uint64_t seed) {
        uint64_t s = seed;
        for (auto& w : state_) w = splitmix64(s);
    }

    uint64_t next() {
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n).
    int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }

    /// Uniform integer in [lo, hi] inclusive.
    int range(int lo, int hi) { return lo + below(hi - lo + 1); }

    /// Index drawn from an unnormalized nonnegative weight row.
    int categorical(const double* w, int n) {
        double total = 0.0;
        for (int i = 0; i < n; ++i) total += w[i];
        double u = uniform() * total;
        for (int i = 0; i < n; ++i) {
            u -= w[i];
            if (u < 0.0) return i;
        }
        return n - 1;
    }

  private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t state_[4];
};

/// Stream seed for one episode: independent of every other episode, so
/// results do not depend on scheduling or evaluation order.
inline uint64_t episode_seed(uint64_t seed, long episode) {
    uint64_t s = seed ^ (0x517cc1b727220a95ULL * static_cast<uint64_t>(episode + 1));
    return splitmix64(s);
}

struct SimConfig {
    int horizon = 0;       // rollout truncation T
    long episodes = 10000;
    uint64_t seed = 0;
    Vec initial;  // distribution over info states; empty = uniform on the accurate diagonal
};

struct SimResult {
    double estimate = 0.0;
    double std_error = 0.0;
    double bias_bound = 0.0;  // beta^T * max|r| / (1-beta), handled analytically
    long episodes = 0;
};

/// Horizon large enough that the truncation bias beta^T M/(1-beta)
/// falls below the requested bound.
inline int horizon_for_bias(double beta, double reward_bound, double bias) {
    if (beta == 0.0 || reward_bound == 0.0) return 1;
    const double target = bias * (1.0 - beta) / reward_bound;
    if (target >= 1.0) return 1;
    return static_cast<int>(std::ceil(std::log(target) / std::log(beta))) + 1;
}

/// Seeded rollouts of the full generative model: actions from the
/// profile, next state from the transition tensor, reports through the
/// two channels. Returns the mean discounted return truncated at the
/// horizon and its sample standard error.
inline SimResult simulate_value(const GameSpec& g, const PolicyProfile& p, double eps1, double eps2, Agent agent,
                                const SimConfig& config) {
    require_valid(g, p);
    if (config.episodes < 1) throw std::invalid_argument("simulate_value: episodes must be >= 1");
    if (config.horizon < 1) throw std::invalid_argument("simulate_value: horizon must be >= 1");
    const InfoSpace info = info_space(g);

    Vec initial = config.initial;
    if (initial.empty()) {
        initial.assign(info.count(), 0.0);
        for (int s = 0; s < info.state_count(); ++s) initial[info.diagonal_index(s)] = 1.0 / info.state_count();
    }
    if (initial.size() != static_cast<size_t>(info.count()))
        throw std::invalid_argument("simulate_value: initial distribution has wrong length");

    const Mat q1 = build_channel_matrix(g.channel1(eps1));
    const Mat q2 = build_channel_matrix(g.channel2(eps2));
    const Mat& reward = g.reward(agent);

    double reward_bound = 0.0;
    for (double v : reward.data) reward_bound = std::max(reward_bound, std::fabs(v));

    double sum = 0.0;
    double sum_sq = 0.0;
    for (long e = 0; e < config.episodes; ++e) {
        Rng rng(episode_seed(config.seed, e));
        InfoState z = info.at(rng.categorical(initial.data(), info.count()));
        double ret = 0.0;
        double discount = 1.0;
        for (int t = 0; t < config.horizon; ++t) {
            const int s_idx = info.state_index(z.s.s1, z.s.s2, z.s.sf);
            const int al = rng.categorical(p.leader[s_idx].data(), g.al_size);
            const int a1 = rng.categorical(p.follower1[info.f1_point(z.s.s1, z.z1, z.s.sf)].data(), g.af1_size);
            const int a2 = rng.categorical(p.follower2[info.f2_point(z.z2, z.s.s2, z.s.sf)].data(), g.af2_size);
            const int ai = g.action_index(al, a1, a2);
            ret += discount * reward.at(s_idx, ai);
            discount *= g.beta;
            const int next = rng.categorical(g.transitions[ai].row(s_idx), g.state_count());
            const FullState fs = info.state_at(next);
            const int z1 = rng.categorical(q1.row(fs.s2), info.n2);
            const int z2 = rng.categorical(q2.row(fs.s1), info.n1);
            z = info.at(info.index(next, z1, z2));
        }
        sum += ret;
        sum_sq += ret * ret;
    }

    SimResult out;
    out.episodes = config.episodes;
    out.estimate = sum / config.episodes;
    if (config.episodes > 1) {
        const double var = std::max(0.0, (sum_sq - sum * sum / config.episodes) / (config.episodes - 1));
        out.std_error = std::sqrt(var / config.episodes);
    }
    out.bias_bound = (g.beta == 0.0) ? 0.0
                                     : std::pow(g.beta, config.horizon) * reward_bound / (1.0 - g.beta);
    return out;
}

enum class DiffDirection { DEps1, DEps2, Mixed };

/// One-sided difference quotients of the exact oracle at the origin,
/// approximating alpha^{1,0}, alpha^{0,1} or alpha^{1,1}.
inline Vec finite_difference_alpha(const GameSpec& g, const PolicyProfile& p, DiffDirection direction, double h,
                                   Agent agent = Agent::Leader) {
    if (h <= 0.0) throw std::invalid_argument("finite_difference_alpha: h must be positive");
    const Vec g00 = exact_value(g, p, 0.0, 0.0, agent);
    Vec out(g00.size());
    switch (direction) {
        case DiffDirection::DEps1: {
            const Vec gh = exact_value(g, p, h, 0.0, agent);
            for (size_t i = 0; i < out.size(); ++i) out[i] = (gh[i] - g00[i]) / h;
            return out;
        }
        case DiffDirection::DEps2: {
            const Vec gh = exact_value(g, p, 0.0, h, agent);
            for (size_t i = 0; i < out.size(); ++i) out[i] = (gh[i] - g00[i]) / h;
            return out;
        }
        case DiffDirection::Mixed: {
            const Vec ghh = exact_value(g, p, h, h, agent);
            const Vec gh0 = exact_value(g, p, h, 0.0, agent);
            const Vec g0h = exact_value(g, p, 0.0, h, agent);
            for (size_t i = 0; i < out.size(); ++i) out[i] = (ghh[i] - gh0[i] - g0h[i] + g00[i]) / (h * h);
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace vodi
