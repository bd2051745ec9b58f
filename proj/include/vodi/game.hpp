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
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "vodi/matrix.hpp"

namespace vodi {

enum class Agent { Leader, Follower1, Follower2 };

inline const char* agent_name(Agent a) {
    switch (a) {
        case Agent::Leader: return "L";
        case Agent::Follower1: return "F1";
        case Agent::Follower2: return "F2";
    }
    return "?";
}

struct FullState {
    int s1;  // leader partial state observed by follower 1
    int s2;  // leader partial state observed by follower 2
    int sf;  // joint follower state
};

struct JointAction {
    int al;
    int a1;
    int a2;
};

/// One communication channel: error probability and redistribution
/// weights over the reported symbol. The induced matrix sends symbol x
/// to itself with probability 1-epsilon and to z != x with epsilon *
/// sigma(x, z).
struct Channel {
    double epsilon = 0.0;
    Mat sigma;  // square over the channel alphabet, zero diagonal
};

/// Redistribution weights when a spec does not pin them: uniform over
/// the other symbols (forced for a binary alphabet).
inline Mat uniform_sigma(int n) {
    Mat s(n, n);
    if (n <= 1) return s;
    const double w = 1.0 / (n - 1);
    for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z)
            if (z != x) s.at(x, z) = w;
    return s;
}

inline std::string check_sigma(const Mat& sigma, const std::string& name) {
    if (sigma.rows != sigma.cols) return name + ": must be square";
    const int n = sigma.rows;
    for (int x = 0; x < n; ++x) {
        if (std::fabs(sigma.at(x, x)) > 1e-12) return name + ": diagonal entry must be zero at row " + std::to_string(x);
        double sum = 0.0;
        for (int z = 0; z < n; ++z) {
            if (sigma.at(x, z) < -1e-12) return name + ": negative weight at (" + std::to_string(x) + "," + std::to_string(z) + ")";
            sum += sigma.at(x, z);
        }
        if (n >= 2 && std::fabs(sum - 1.0) > 1e-9)
            return name + ": row " + std::to_string(x) + " sums to " + std::to_string(sum) + ", expected 1";
    }
    return "";
}

/// Builds the row-stochastic communication matrix Q for a channel.
inline Mat build_channel_matrix(const Channel& ch) {
    if (ch.epsilon < 0.0 || ch.epsilon > 1.0) throw std::invalid_argument("channel: epsilon must lie in [0,1]");
    std::string err = check_sigma(ch.sigma, "sigma");
    if (!err.empty()) throw std::invalid_argument("channel: " + err);
    const int n = ch.sigma.rows;
    Mat q(n, n);
    if (n == 1) {
        q.at(0, 0) = 1.0;  // single-symbol alphabet: the report is always exact
        return q;
    }
    for (int x = 0; x < n; ++x) {
        q.at(x, x) = 1.0 - ch.epsilon;
        for (int z = 0; z < n; ++z)
            if (z != x) q.at(x, z) = ch.epsilon * ch.sigma.at(x, z);
    }
    return q;
}

/// Full description of the three-agent game. Transition and reward
/// tables are indexed by flat state and joint-action indices; see
/// state_index / action_index for the layout.
struct GameSpec {
    int sl1_size = 0;
    int sl2_size = 0;
    int sf_size = 0;
    int al_size = 0;
    int af1_size = 0;
    int af2_size = 0;
    double beta = 0.0;
    std::vector<Mat> transitions;  // [action](state x next_state)
    Mat reward_leader;             // state x action
    Mat reward_f1;
    Mat reward_f2;
    Mat sigma1;  // channel 1 weights, over the S^L_2 alphabet
    Mat sigma2;  // channel 2 weights, over the S^L_1 alphabet

    int state_count() const { return sl1_size * sl2_size * sf_size; }
    int action_count() const { return al_size * af1_size * af2_size; }

    int state_index(int s1, int s2, int sf) const { return (s1 * sl2_size + s2) * sf_size + sf; }
    FullState state_at(int idx) const {
        return FullState{idx / (sl2_size * sf_size), (idx / sf_size) % sl2_size, idx % sf_size};
    }
    int action_index(int al, int a1, int a2) const { return (al * af1_size + a1) * af2_size + a2; }
    JointAction action_at(int idx) const {
        return JointAction{idx / (af1_size * af2_size), (idx / af2_size) % af1_size, idx % af2_size};
    }

    const Mat& reward(Agent a) const {
        switch (a) {
            case Agent::Leader: return reward_leader;
            case Agent::Follower1: return reward_f1;
            case Agent::Follower2: return reward_f2;
        }
        throw std::logic_error("unreachable");
    }

    double trans(int a_idx, int s_idx, int next_idx) const { return transitions[a_idx].at(s_idx, next_idx); }

    Channel channel1(double epsilon) const { return Channel{epsilon, sigma1}; }
    Channel channel2(double epsilon) const { return Channel{epsilon, sigma2}; }
};

/// Joint information vector zeta = (s, z1, z2). z1 is follower 1's
/// received report of s^L_2, z2 is follower 2's received report of
/// s^L_1.
struct InfoState {
    FullState s;
    int z1;
    int z2;
    int index;
};

/// Flat enumeration of the information space. z1 varies fastest, then
/// z2, then the full state (s^L_1-major), which matches the row order
/// of the reference tables this library reproduces.
struct InfoSpace {
    int n1 = 0;  // |S^L_1| = report alphabet of channel 2
    int n2 = 0;  // |S^L_2| = report alphabet of channel 1
    int nf = 0;

    int state_count() const { return n1 * n2 * nf; }
    int report_count() const { return n1 * n2; }
    int count() const { return state_count() * report_count(); }

    int state_index(int s1, int s2, int sf) const { return (s1 * n2 + s2) * nf + sf; }
    FullState state_at(int s_idx) const { return FullState{s_idx / (n2 * nf), (s_idx / nf) % n2, s_idx % nf}; }

    int index(int s_idx, int z1, int z2) const { return (s_idx * n1 + z2) * n2 + z1; }
    int index(const FullState& s, int z1, int z2) const { return index(state_index(s.s1, s.s2, s.sf), z1, z2); }

    InfoState at(int idx) const {
        int z1 = idx % n2;
        int z2 = (idx / n2) % n1;
        int s_idx = idx / (n1 * n2);
        return InfoState{state_at(s_idx), z1, z2, idx};
    }

    /// Both reports truthful: z1 = s^L_2 and z2 = s^L_1.
    bool accurate(const InfoState& z) const { return z.z1 == z.s.s2 && z.z2 == z.s.s1; }

    int diagonal_index(int s_idx) const {
        FullState s = state_at(s_idx);
        return index(s_idx, s.s2, s.s1);
    }

    // Decision-rule domains.
    int f1_point(int s1, int z1, int sf) const { return (s1 * n2 + z1) * nf + sf; }
    int f2_point(int z2, int s2, int sf) const { return (z2 * n2 + s2) * nf + sf; }
    int f1_point_count() const { return n1 * n2 * nf; }
    int f2_point_count() const { return n1 * n2 * nf; }

    /// Follower i takes its report at face value; the believed full
    /// state reuses state_index with the report in the unseen slot.
    int f1_believed_state(int s1, int z1, int sf) const { return state_index(s1, z1, sf); }
    int f2_believed_state(int z2, int s2, int sf) const { return state_index(z2, s2, sf); }
};

inline InfoSpace info_space(const GameSpec& g) { return InfoSpace{g.sl1_size, g.sl2_size, g.sf_size}; }

/// Zero-memory decision rules for all three agents. Each entry is a
/// probability vector over the agent's action space; deterministic
/// rules are point masses.
struct PolicyProfile {
    std::vector<Vec> leader;     // [state]
    std::vector<Vec> follower1;  // [f1_point(s1, z1, sf)]
    std::vector<Vec> follower2;  // [f2_point(z2, s2, sf)]
};

inline Vec point_mass(int n, int a) {
    Vec v(n, 0.0);
    v[a] = 1.0;
    return v;
}

/// The leader's belief over the followers' received reports at a fixed
/// full state; weights indexed by (z2 * |Z1| + z1), matching the
/// report-offset layout of InfoSpace.
struct BeliefVector {
    Vec weights;
};

inline BeliefVector point_belief(const InfoSpace& info, int z1, int z2) {
    BeliefVector b{Vec(info.report_count(), 0.0)};
    b.weights[z2 * info.n2 + z1] = 1.0;
    return b;
}

inline BeliefVector uniform_belief(const InfoSpace& info) {
    return BeliefVector{Vec(info.report_count(), 1.0 / info.report_count())};
}

struct Violation {
    std::string where;
    std::string message;
};

/// Checks every structural invariant of a spec and reports all
/// violations found. An empty report means the spec is valid. Nothing
/// is repaired: a transition row off by more than 1e-9 is an error,
/// not a renormalization candidate.
inline std::vector<Violation> validate_game(const GameSpec& g) {
    std::vector<Violation> out;
    auto add = [&out](const std::string& where, const std::string& msg) { out.push_back(Violation{where, msg}); };

    if (g.sl1_size < 1) add("sL1_size", "must be positive");
    if (g.sl2_size < 1) add("sL2_size", "must be positive");
    if (g.sf_size < 1) add("sF_size", "must be positive");
    if (g.al_size < 1) add("aL_size", "must be positive");
    if (g.af1_size < 1) add("aF1_size", "must be positive");
    if (g.af2_size < 1) add("aF2_size", "must be positive");
    if (!(g.beta >= 0.0 && g.beta < 1.0)) add("beta", "discount factor out of range [0,1)");
    if (!out.empty()) return out;  // sizes are needed for everything below

    const int ns = g.state_count();
    const int na = g.action_count();

    if (static_cast<int>(g.transitions.size()) != na) {
        add("transitions", "expected " + std::to_string(na) + " action blocks, found " + std::to_string(g.transitions.size()));
    } else {
        for (int a = 0; a < na; ++a) {
            const Mat& p = g.transitions[a];
            if (p.rows != ns || p.cols != ns) {
                add("transitions[" + std::to_string(a) + "]", "expected " + std::to_string(ns) + "x" + std::to_string(ns));
                continue;
            }
            for (int s = 0; s < ns; ++s) {
                double sum = 0.0;
                bool range_ok = true;
                for (int t = 0; t < ns; ++t) {
                    double v = p.at(s, t);
                    if (v < -1e-12 || v > 1.0 + 1e-12) range_ok = false;
                    sum += v;
                }
                char buf[160];
                if (!range_ok) {
                    std::snprintf(buf, sizeof(buf), "transitions[a=%d][s=%d]", a, s);
                    add(buf, "entry outside [0,1]");
                }
                if (std::fabs(sum - 1.0) > 1e-9) {
                    std::snprintf(buf, sizeof(buf), "transitions[a=%d][s=%d]", a, s);
                    char msg[96];
                    std::snprintf(msg, sizeof(msg), "row sums to %.12g, expected 1", sum);
                    add(buf, msg);
                }
            }
        }
    }

    auto check_reward = [&](const Mat& r, const char* name) {
        if (r.rows != ns || r.cols != na)
            add(name, "expected " + std::to_string(ns) + "x" + std::to_string(na) + ", found " + std::to_string(r.rows) + "x" + std::to_string(r.cols));
    };
    check_reward(g.reward_leader, "rewards.L");
    check_reward(g.reward_f1, "rewards.F1");
    check_reward(g.reward_f2, "rewards.F2");

    if (g.sigma1.rows != g.sl2_size || g.sigma1.cols != g.sl2_size) {
        add("sigma1", "expected " + std::to_string(g.sl2_size) + "x" + std::to_string(g.sl2_size));
    } else {
        std::string err = check_sigma(g.sigma1, "sigma1");
        if (!err.empty()) add("sigma1", err);
    }
    if (g.sigma2.rows != g.sl1_size || g.sigma2.cols != g.sl1_size) {
        add("sigma2", "expected " + std::to_string(g.sl1_size) + "x" + std::to_string(g.sl1_size));
    } else {
        std::string err = check_sigma(g.sigma2, "sigma2");
        if (!err.empty()) add("sigma2", err);
    }
    return out;
}

inline std::vector<Violation> validate_profile(const GameSpec& g, const PolicyProfile& p) {
    std::vector<Violation> out;
    const InfoSpace info = info_space(g);
    auto check_rules = [&out](const std::vector<Vec>& rules, int points, int actions, const char* name) {
        if (static_cast<int>(rules.size()) != points) {
            out.push_back(Violation{name, "expected " + std::to_string(points) + " decision points"});
            return;
        }
        for (int i = 0; i < points; ++i) {
            if (static_cast<int>(rules[i].size()) != actions) {
                out.push_back(Violation{std::string(name) + "[" + std::to_string(i) + "]", "wrong action-space size"});
                continue;
            }
            double sum = 0.0;
            bool nonneg = true;
            for (double v : rules[i]) {
                sum += v;
                if (v < -1e-15) nonneg = false;
            }
            if (!nonneg || std::fabs(sum - 1.0) > 1e-12)
                out.push_back(Violation{std::string(name) + "[" + std::to_string(i) + "]", "not a probability vector"});
        }
    };
    check_rules(p.leader, g.state_count(), g.al_size, "leader");
    check_rules(p.follower1, info.f1_point_count(), g.af1_size, "follower1");
    check_rules(p.follower2, info.f2_point_count(), g.af2_size, "follower2");
    return out;
}

inline void require_valid(const GameSpec& g) {
    auto v = validate_game(g);
    if (!v.empty()) throw std::invalid_argument("invalid game spec: " + v.front().where + ": " + v.front().message);
}

inline void require_valid(const GameSpec& g, const PolicyProfile& p) {
    require_valid(g);
    auto v = validate_profile(g, p);
    if (!v.empty()) throw std::invalid_argument("invalid policy profile: " + v.front().where + ": " + v.front().message);
}

}  // namespace vodi
