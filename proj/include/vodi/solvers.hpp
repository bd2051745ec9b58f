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
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "vodi/game.hpp"
#include "vodi/kernels.hpp"
#include "vodi/matrix.hpp"

namespace vodi {

struct SolveOptions {
    double tolerance = 1e-10;
    int max_iterations = 1000000;
    // Ties always break toward the lexicographically smallest joint
    // action so solved tables are reproducible.
};

struct BestResponse {
    Vec follower_value;  // v over full states
    PolicyProfile profile;
};

namespace detail {

/// The followers' shared-reward decision problem under a fixed leader
/// rule: states are full states, actions are joint follower actions,
/// the leader's (possibly randomized) action is averaged out.
struct FollowerMdp {
    int ns = 0;
    int na = 0;  // af1_size * af2_size
    int af2 = 0;
    std::vector<Vec> reward;      // [s][joint follower action]
    std::vector<std::vector<Vec>> trans;  // [s][aF][s']
};

inline FollowerMdp build_follower_mdp(const GameSpec& g, const std::vector<Vec>& leader) {
    FollowerMdp m;
    m.ns = g.state_count();
    m.na = g.af1_size * g.af2_size;
    m.af2 = g.af2_size;
    m.reward.assign(m.ns, Vec(m.na, 0.0));
    m.trans.assign(m.ns, std::vector<Vec>(m.na, Vec(m.ns, 0.0)));
    for (int s = 0; s < m.ns; ++s) {
        for (int a1 = 0; a1 < g.af1_size; ++a1)
            for (int a2 = 0; a2 < g.af2_size; ++a2) {
                const int af = a1 * g.af2_size + a2;
                for (int al = 0; al < g.al_size; ++al) {
                    const double w = leader[s][al];
                    if (w == 0.0) continue;
                    const int ai = g.action_index(al, a1, a2);
                    m.reward[s][af] += w * g.reward_f1.at(s, ai);
                    const double* row = g.transitions[ai].row(s);
                    for (int t = 0; t < m.ns; ++t) m.trans[s][af][t] += w * row[t];
                }
            }
    }
    return m;
}

inline Vec bellman_sweep(const FollowerMdp& m, double beta, const Vec& v, std::vector<int>* argmax) {
    Vec out(m.ns);
    for (int s = 0; s < m.ns; ++s) {
        double best = -std::numeric_limits<double>::infinity();
        int best_a = 0;
        for (int a = 0; a < m.na; ++a) {
            double q = m.reward[s][a];
            if (beta != 0.0) {
                double cont = 0.0;
                for (int t = 0; t < m.ns; ++t) cont += m.trans[s][a][t] * v[t];
                q += beta * cont;
            }
            if (q > best) {
                best = q;
                best_a = a;
            }
        }
        out[s] = best;
        if (argmax) (*argmax)[s] = best_a;
    }
    return out;
}

/// Exact value of a fixed joint follower rule on the follower MDP.
inline Vec evaluate_follower_rule(const FollowerMdp& m, double beta, const std::vector<int>& rule) {
    Mat system = Mat::identity(m.ns);
    Vec rhs(m.ns);
    for (int s = 0; s < m.ns; ++s) {
        rhs[s] = m.reward[s][rule[s]];
        for (int t = 0; t < m.ns; ++t) system.at(s, t) -= beta * m.trans[s][rule[s]][t];
    }
    return lu_solve(system, rhs);
}

/// Extracts the zero-memory follower rules from a joint rule over full
/// states: each follower evaluates the rule at its believed state,
/// taking the received report at face value.
inline PolicyProfile profile_from_joint_rule(const GameSpec& g, const std::vector<Vec>& leader,
                                             const std::vector<int>& rule) {
    const InfoSpace info = info_space(g);
    PolicyProfile p;
    p.leader = leader;
    p.follower1.resize(info.f1_point_count());
    p.follower2.resize(info.f2_point_count());
    for (int s1 = 0; s1 < info.n1; ++s1)
        for (int z1 = 0; z1 < info.n2; ++z1)
            for (int sf = 0; sf < info.nf; ++sf) {
                const int joint = rule[info.f1_believed_state(s1, z1, sf)];
                p.follower1[info.f1_point(s1, z1, sf)] = point_mass(g.af1_size, joint / g.af2_size);
            }
    for (int z2 = 0; z2 < info.n1; ++z2)
        for (int s2 = 0; s2 < info.n2; ++s2)
            for (int sf = 0; sf < info.nf; ++sf) {
                const int joint = rule[info.f2_believed_state(z2, s2, sf)];
                p.follower2[info.f2_point(z2, s2, sf)] = point_mass(g.af2_size, joint % g.af2_size);
            }
    return p;
}

inline void require_shared_follower_reward(const GameSpec& g) {
    if (g.reward_f1.rows != g.reward_f2.rows || g.reward_f1.cols != g.reward_f2.cols)
        throw std::invalid_argument("follower rewards differ in shape");
    for (size_t i = 0; i < g.reward_f1.data.size(); ++i)
        if (g.reward_f1.data[i] != g.reward_f2.data[i])
            throw std::invalid_argument(
                "follower rewards differ: the joint best response requires a single shared follower reward");
}

}  // namespace detail

/// Joint best response of the followers to a fixed leader rule under
/// accurate communication: value iteration on the shared-reward
/// optimality equation, greedy extraction at every believed state, and
/// an exact evaluation of the extracted rule. The stopping gap
/// tolerance*(1-beta)/(2 beta) makes the greedy rule exactly optimal
/// for generic (untied) instances.
inline BestResponse solve_joint_best_response(const GameSpec& g, const std::vector<Vec>& leader,
                                              const SolveOptions& opts = SolveOptions{}) {
    require_valid(g);
    detail::require_shared_follower_reward(g);
    if (opts.tolerance <= 0.0) throw std::invalid_argument("tolerance must be positive");
    const detail::FollowerMdp m = detail::build_follower_mdp(g, leader);

    std::vector<int> rule(m.ns, 0);
    if (g.beta == 0.0) {
        detail::bellman_sweep(m, 0.0, Vec(m.ns, 0.0), &rule);
    } else {
        const double stop = opts.tolerance * (1.0 - g.beta) / (2.0 * g.beta);
        Vec v(m.ns, 0.0);
        int it = 0;
        for (;; ++it) {
            if (it >= opts.max_iterations) {
                Vec next = detail::bellman_sweep(m, g.beta, v, nullptr);
                throw std::runtime_error("best response did not converge: residual " +
                                         std::to_string(sup_norm_diff(next, v)));
            }
            Vec next = detail::bellman_sweep(m, g.beta, v, nullptr);
            const double gap = sup_norm_diff(next, v);
            v = std::move(next);
            if (gap < stop) break;
        }
        detail::bellman_sweep(m, g.beta, v, &rule);
    }

    BestResponse out;
    out.follower_value = detail::evaluate_follower_rule(m, g.beta, rule);
    out.profile = detail::profile_from_joint_rule(g, leader, rule);
    return out;
}

/// Followers maximize the immediate shared reward at the believed
/// state; the continuation is ignored entirely.
inline PolicyProfile myopic_policy(const GameSpec& g, const std::vector<Vec>& leader) {
    require_valid(g);
    detail::require_shared_follower_reward(g);
    const detail::FollowerMdp m = detail::build_follower_mdp(g, leader);
    std::vector<int> rule(m.ns, 0);
    detail::bellman_sweep(m, 0.0, Vec(m.ns, 0.0), &rule);
    return detail::profile_from_joint_rule(g, leader, rule);
}

/// Depth-k finite-horizon rule (terminal value zero): the first-stage
/// maximizer of the k-step problem, used as a stationary rule.
/// k = 1 is the myopic rule.
inline PolicyProfile k_step_policy(const GameSpec& g, const std::vector<Vec>& leader, int k) {
    require_valid(g);
    detail::require_shared_follower_reward(g);
    if (k < 1) throw std::invalid_argument("k_step_policy: k must be >= 1");
    const detail::FollowerMdp m = detail::build_follower_mdp(g, leader);
    Vec v(m.ns, 0.0);
    for (int step = 0; step < k - 1; ++step) v = detail::bellman_sweep(m, g.beta, v, nullptr);
    std::vector<int> rule(m.ns, 0);
    detail::bellman_sweep(m, g.beta, v, &rule);
    return detail::profile_from_joint_rule(g, leader, rule);
}

/// Pointwise convex combination (1-lambda) p + lambda q of every
/// action distribution.
inline PolicyProfile mix_policies(const PolicyProfile& p, const PolicyProfile& q, double lambda) {
    if (lambda < 0.0 || lambda > 1.0) throw std::invalid_argument("mix_policies: lambda must lie in [0,1]");
    auto mix = [lambda](const std::vector<Vec>& a, const std::vector<Vec>& b, const char* name) {
        if (a.size() != b.size()) throw std::invalid_argument(std::string("mix_policies: ") + name + " size mismatch");
        std::vector<Vec> out(a.size());
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i].size() != b[i].size())
                throw std::invalid_argument(std::string("mix_policies: ") + name + " action-space mismatch");
            out[i].resize(a[i].size());
            for (size_t j = 0; j < a[i].size(); ++j) out[i][j] = (1.0 - lambda) * a[i][j] + lambda * b[i][j];
        }
        return out;
    };
    PolicyProfile out;
    out.leader = mix(p.leader, q.leader, "leader");
    out.follower1 = mix(p.follower1, q.follower1, "follower1");
    out.follower2 = mix(p.follower2, q.follower2, "follower2");
    return out;
}

/// Installs lambda * r_star + (1-lambda) * r_other as the shared
/// follower reward; everything else is unchanged.
inline GameSpec mix_rewards(const GameSpec& g, const Mat& r_star, const Mat& r_other, double lambda) {
    if (lambda < 0.0 || lambda > 1.0) throw std::invalid_argument("mix_rewards: lambda must lie in [0,1]");
    if (r_star.rows != r_other.rows || r_star.cols != r_other.cols ||
        r_star.rows != g.state_count() || r_star.cols != g.action_count())
        throw std::invalid_argument("mix_rewards: reward table dimensions mismatch");
    GameSpec out = g;
    Mat mixed(r_star.rows, r_star.cols);
    for (size_t i = 0; i < mixed.data.size(); ++i)
        mixed.data[i] = lambda * r_star.data[i] + (1.0 - lambda) * r_other.data[i];
    out.reward_f1 = mixed;
    out.reward_f2 = std::move(mixed);
    return out;
}

/// d(p, q) for zero-memory profiles: the max absolute row-sum norm of
/// the accurate-branch kernel difference, which is the exact policy
/// distance in this case. Always in [0, 2].
inline double policy_distance(const GameSpec& g, const PolicyProfile& p, const PolicyProfile& q) {
    require_valid(g, p);
    require_valid(g, q);
    const InducedChain cp = build_chain(g, p);
    const InducedChain cq = build_chain(g, q);
    double best = 0.0;
    for (int zi = 0; zi < cp.info.count(); ++zi) {
        double s = 0.0;
        const double* a = cp.t.row(zi);
        const double* b = cq.t.row(zi);
        for (int t = 0; t < cp.info.state_count(); ++t) s += std::fabs(a[t] - b[t]);
        best = std::max(best, s);
    }
    return best;
}

enum class EnumerationMode { Full, SingleDeviation };

struct StabilityReport {
    double threshold = 0.0;   // c_i
    double gap = 0.0;         // b_i
    double reward_bound = 0.0;  // M^{F_i}
    EnumerationMode mode = EnumerationMode::Full;
    bool upper_bound_only = false;  // SINGLE_DEVIATION only estimates c from above
    long candidates = 0;
};

inline double stability_threshold_formula(double gap, double beta, double reward_bound) {
    if (beta == 0.0) return std::numeric_limits<double>::infinity();
    return gap * (1.0 - beta) * (1.0 - beta) / (4.0 * beta * reward_bound);
}

namespace detail {

inline std::vector<int> deterministic_rule(const std::vector<Vec>& dist_rules, const char* name) {
    std::vector<int> out(dist_rules.size());
    for (size_t i = 0; i < dist_rules.size(); ++i) {
        int arg = -1;
        for (size_t a = 0; a < dist_rules[i].size(); ++a) {
            if (std::fabs(dist_rules[i][a] - 1.0) < 1e-12) arg = static_cast<int>(a);
        }
        if (arg < 0) throw std::invalid_argument(std::string(name) + ": rule must be deterministic for enumeration");
        out[i] = arg;
    }
    return out;
}

/// Value vector of follower `agent` when it plays `rule` against the
/// rest of `base`, on the info-state chain at channel (e1, e2).
inline Vec unilateral_value(const GameSpec& g, PolicyProfile base, Agent agent, const std::vector<int>& rule,
                            int actions, double e1, double e2) {
    std::vector<Vec>& target = (agent == Agent::Follower1) ? base.follower1 : base.follower2;
    for (size_t i = 0; i < target.size(); ++i) target[i] = point_mass(actions, rule[i]);
    const InducedChain c = build_chain(g, base);
    return solve_discounted(c, c.reward(agent), channel_report_weights(c.info, g, e1, e2));
}

}  // namespace detail

/// How far the channel error probabilities can move before the given
/// best-response profile is no longer guaranteed to stay one:
/// c = b (1-beta)^2 / (4 beta M), with b the smallest value gap to an
/// alternative rule for the chosen follower (minimum over the accurate
/// diagonal), evaluated exactly at the nominal channel. FULL mode
/// enumerates every deterministic zero-memory rule; SINGLE_DEVIATION
/// only the one-point changes, so its c is an upper-bound estimate.
inline StabilityReport stability_threshold(const GameSpec& g, const PolicyProfile& profile, Agent follower,
                                           EnumerationMode mode, double eps1 = 0.0, double eps2 = 0.0,
                                           long budget = 1L << 20) {
    require_valid(g, profile);
    if (follower == Agent::Leader) throw std::invalid_argument("stability_threshold: follower must be F1 or F2");
    const InfoSpace info = info_space(g);
    const bool is_f1 = follower == Agent::Follower1;
    const int actions = is_f1 ? g.af1_size : g.af2_size;
    const int points = is_f1 ? info.f1_point_count() : info.f2_point_count();
    const std::vector<int> nominal =
        detail::deterministic_rule(is_f1 ? profile.follower1 : profile.follower2, "stability_threshold");

    double reward_bound = 0.0;
    const Mat& r = is_f1 ? g.reward_f1 : g.reward_f2;
    for (double v : r.data) reward_bound = std::max(reward_bound, std::fabs(v));

    const Vec v_nominal = detail::unilateral_value(g, profile, follower, nominal, actions, eps1, eps2);

    StabilityReport report;
    report.mode = mode;
    report.upper_bound_only = mode == EnumerationMode::SingleDeviation;
    report.reward_bound = reward_bound;

    auto diagonal_gap = [&](const std::vector<int>& candidate) {
        const Vec v = detail::unilateral_value(g, profile, follower, candidate, actions, eps1, eps2);
        double worst = std::numeric_limits<double>::infinity();
        for (int s = 0; s < info.state_count(); ++s) {
            const int d = info.diagonal_index(s);
            worst = std::min(worst, v_nominal[d] - v[d]);
        }
        return worst;
    };

    double b = std::numeric_limits<double>::infinity();
    if (mode == EnumerationMode::Full) {
        double total = 1.0;
        for (int i = 0; i < points; ++i) {
            total *= actions;
            if (total > static_cast<double>(budget))
                throw std::invalid_argument("stability_threshold: FULL enumeration exceeds budget, use SINGLE_DEVIATION");
        }
        std::vector<int> candidate(points, 0);
        for (;;) {
            if (candidate != nominal) {
                ++report.candidates;
                b = std::min(b, diagonal_gap(candidate));
            }
            int pos = 0;
            while (pos < points && ++candidate[pos] == actions) candidate[pos++] = 0;
            if (pos == points) break;
        }
    } else {
        std::vector<int> candidate = nominal;
        for (int i = 0; i < points; ++i) {
            for (int a = 0; a < actions; ++a) {
                if (a == nominal[i]) continue;
                candidate[i] = a;
                ++report.candidates;
                b = std::min(b, diagonal_gap(candidate));
            }
            candidate[i] = nominal[i];
        }
    }

    if (!(b > 0.0))
        throw std::runtime_error("stability_threshold: nominal profile not strictly best response (gap " +
                                 std::to_string(b) + ")");
    report.gap = b;
    report.threshold = stability_threshold_formula(b, g.beta, reward_bound);
    return report;
}

}  // namespace vodi
