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

#include <array>
#include <stdexcept>
#include <vector>

#include "vodi/game.hpp"
#include "vodi/matrix.hpp"

namespace vodi {

/// The Markov chain a fixed joint policy induces on the information
/// space. Everything downstream (value solves, series coefficients,
/// policy distances) reduces to this: the per-info-state expected
/// rewards and the next-full-state distribution rows
///
///     t[zeta][s'] = sum_a P(a | zeta) P(s' | s, a).
///
/// The next report pair is drawn independently of the action given s',
/// so the four observation branches never need to be materialized to
/// apply them.
struct InducedChain {
    InfoSpace info;
    double beta = 0.0;
    Mat t;  // count() x state_count()
    std::array<Vec, 3> rewards;  // per agent, over info states
    Mat sigma1;
    Mat sigma2;

    const Vec& reward(Agent a) const { return rewards[static_cast<int>(a)]; }
};

inline double action_probability(const InfoSpace& info, const PolicyProfile& p, const InfoState& z,
                                 const JointAction& a) {
    return p.leader[info.state_index(z.s.s1, z.s.s2, z.s.sf)][a.al] *
           p.follower1[info.f1_point(z.s.s1, z.z1, z.s.sf)][a.a1] *
           p.follower2[info.f2_point(z.z2, z.s.s2, z.s.sf)][a.a2];
}

inline InducedChain build_chain(const GameSpec& g, const PolicyProfile& p) {
    const InfoSpace info = info_space(g);
    const int n = info.count();
    const int ns = g.state_count();
    const int na = g.action_count();

    InducedChain chain;
    chain.info = info;
    chain.beta = g.beta;
    chain.t = Mat(n, ns);
    for (auto& r : chain.rewards) r.assign(n, 0.0);
    chain.sigma1 = g.sigma1;
    chain.sigma2 = g.sigma2;

    for (int zi = 0; zi < n; ++zi) {
        const InfoState z = info.at(zi);
        const int s_idx = info.state_index(z.s.s1, z.s.s2, z.s.sf);
        for (int ai = 0; ai < na; ++ai) {
            const JointAction a = g.action_at(ai);
            const double pa = action_probability(info, p, z, a);
            if (pa == 0.0) continue;
            const double* trow = g.transitions[ai].row(s_idx);
            double* crow = chain.t.row(zi);
            for (int t = 0; t < ns; ++t) crow[t] += pa * trow[t];
            chain.rewards[0][zi] += pa * g.reward_leader.at(s_idx, ai);
            chain.rewards[1][zi] += pa * g.reward_f1.at(s_idx, ai);
            chain.rewards[2][zi] += pa * g.reward_f2.at(s_idx, ai);
        }
    }
    return chain;
}

/// R_delta for one agent: the expected per-epoch reward at each joint
/// information state. The follower action components depend on the
/// received reports, not only on the true state.
inline Vec expected_reward_vector(const GameSpec& g, const PolicyProfile& p, Agent agent) {
    require_valid(g, p);
    return build_chain(g, p).reward(agent);
}

namespace detail {

/// Per-next-state aggregation of an info-state vector under the
/// accurate branch: both reports truthful.
inline Vec aggregate_accurate(const InducedChain& c, const Vec& x) {
    const int ns = c.info.state_count();
    Vec m(ns);
    for (int s = 0; s < ns; ++s) m[s] = x[c.info.diagonal_index(s)];
    return m;
}

/// Channel-1 distorted, channel-2 truthful: sigma-weighted average
/// over wrong z1 reports.
inline Vec aggregate_e1(const InducedChain& c, const Vec& x) {
    const int ns = c.info.state_count();
    Vec m(ns, 0.0);
    for (int s = 0; s < ns; ++s) {
        const FullState fs = c.info.state_at(s);
        for (int z1 = 0; z1 < c.info.n2; ++z1) {
            if (z1 == fs.s2) continue;
            m[s] += c.sigma1.at(fs.s2, z1) * x[c.info.index(s, z1, fs.s1)];
        }
    }
    return m;
}

inline Vec aggregate_e2(const InducedChain& c, const Vec& x) {
    const int ns = c.info.state_count();
    Vec m(ns, 0.0);
    for (int s = 0; s < ns; ++s) {
        const FullState fs = c.info.state_at(s);
        for (int z2 = 0; z2 < c.info.n1; ++z2) {
            if (z2 == fs.s1) continue;
            m[s] += c.sigma2.at(fs.s1, z2) * x[c.info.index(s, fs.s2, z2)];
        }
    }
    return m;
}

inline Vec aggregate_e12(const InducedChain& c, const Vec& x) {
    const int ns = c.info.state_count();
    Vec m(ns, 0.0);
    for (int s = 0; s < ns; ++s) {
        const FullState fs = c.info.state_at(s);
        for (int z1 = 0; z1 < c.info.n2; ++z1) {
            if (z1 == fs.s2) continue;
            const double w1 = c.sigma1.at(fs.s2, z1);
            for (int z2 = 0; z2 < c.info.n1; ++z2) {
                if (z2 == fs.s1) continue;
                m[s] += w1 * c.sigma2.at(fs.s1, z2) * x[c.info.index(s, z1, z2)];
            }
        }
    }
    return m;
}

inline Vec push_through(const InducedChain& c, const Vec& m, double factor) {
    const int n = c.info.count();
    const int ns = c.info.state_count();
    Vec out(n, 0.0);
    for (int zi = 0; zi < n; ++zi) {
        const double* row = c.t.row(zi);
        double s = 0.0;
        for (int t = 0; t < ns; ++t) s += row[t] * m[t];
        out[zi] = factor * s;
    }
    return out;
}

}  // namespace detail

/// The four observation-branch kernels applied to a vector, scaled by
/// the discount factor. apply_acc(x) = beta * P_acc x, etc.
inline Vec apply_acc(const InducedChain& c, const Vec& x) {
    return detail::push_through(c, detail::aggregate_accurate(c, x), c.beta);
}
inline Vec apply_e1(const InducedChain& c, const Vec& x) {
    return detail::push_through(c, detail::aggregate_e1(c, x), c.beta);
}
inline Vec apply_e2(const InducedChain& c, const Vec& x) {
    return detail::push_through(c, detail::aggregate_e2(c, x), c.beta);
}
inline Vec apply_e12(const InducedChain& c, const Vec& x) {
    return detail::push_through(c, detail::aggregate_e12(c, x), c.beta);
}

/// The four conditional transition kernels over info-state indices,
/// materialized as dense matrices. acc: both reports truthful; e1:
/// only channel 1 distorted (sigma-weighted); e2: only channel 2;
/// e12: both. For any (e1, e2) the convex blend
/// (1-e1)(1-e2) acc + e1 (1-e2) e1 + (1-e1) e2 e2 + e1 e2 e12
/// is row-stochastic.
struct KernelSet {
    Mat acc;
    Mat e1;
    Mat e2;
    Mat e12;
};

inline KernelSet info_transition_kernels(const GameSpec& g, const PolicyProfile& p) {
    require_valid(g, p);
    const InducedChain c = build_chain(g, p);
    const InfoSpace& info = c.info;
    const int n = info.count();
    const int ns = info.state_count();
    KernelSet k{Mat(n, n), Mat(n, n), Mat(n, n), Mat(n, n)};
    for (int zi = 0; zi < n; ++zi) {
        const double* row = c.t.row(zi);
        for (int s = 0; s < ns; ++s) {
            const double pt = row[s];
            if (pt == 0.0) continue;
            const FullState fs = info.state_at(s);
            k.acc.at(zi, info.diagonal_index(s)) += pt;
            for (int z1 = 0; z1 < info.n2; ++z1) {
                if (z1 == fs.s2) continue;
                const double w1 = c.sigma1.at(fs.s2, z1);
                k.e1.at(zi, info.index(s, z1, fs.s1)) += pt * w1;
                for (int z2 = 0; z2 < info.n1; ++z2) {
                    if (z2 == fs.s1) continue;
                    k.e12.at(zi, info.index(s, z1, z2)) += pt * w1 * c.sigma2.at(fs.s1, z2);
                }
            }
            for (int z2 = 0; z2 < info.n1; ++z2) {
                if (z2 == fs.s1) continue;
                k.e2.at(zi, info.index(s, fs.s2, z2)) += pt * c.sigma2.at(fs.s1, z2);
            }
        }
    }
    return k;
}

inline Mat blend_kernels(const KernelSet& k, double e1, double e2) {
    Mat out(k.acc.rows, k.acc.cols);
    const double wa = (1.0 - e1) * (1.0 - e2);
    const double w1 = e1 * (1.0 - e2);
    const double w2 = (1.0 - e1) * e2;
    const double w12 = e1 * e2;
    for (size_t i = 0; i < out.data.size(); ++i)
        out.data[i] = wa * k.acc.data[i] + w1 * k.e1.data[i] + w2 * k.e2.data[i] + w12 * k.e12.data[i];
    return out;
}

/// Solves x = rhs + beta * T W x, where W distributes each next full
/// state s' over report pairs with the given weights. The system is
/// closed on the |S| aggregates m(s') = sum_z W(z|s') x(zeta(s', z)),
/// so one |S| x |S| solve plus an extension step gives the exact
/// fixed point over the whole information space.
///
/// weights.row(s') holds the report-pair weights indexed by
/// (z2 * |Z1| + z1); rows need not be stochastic (source-term solves
/// use a point mass on the accurate pair).
inline Vec solve_discounted(const InducedChain& c, const Vec& rhs, const Mat& weights) {
    const InfoSpace& info = c.info;
    const int n = info.count();
    const int ns = info.state_count();
    const int nr = info.report_count();

    if (c.beta == 0.0) return rhs;

    Mat a(ns, ns);
    Vec b(ns, 0.0);
    for (int s = 0; s < ns; ++s) {
        for (int r = 0; r < nr; ++r) {
            const double w = weights.at(s, r);
            if (w == 0.0) continue;
            const int zi = s * nr + r;  // info.index(s, z1, z2) with r = z2*n2+z1
            b[s] += w * rhs[zi];
            const double* trow = c.t.row(zi);
            for (int t = 0; t < ns; ++t) a.at(s, t) += w * trow[t];
        }
    }
    // (I - beta A) m = b
    Mat system = Mat::identity(ns);
    for (int i = 0; i < ns; ++i)
        for (int j = 0; j < ns; ++j) system.at(i, j) -= c.beta * a.at(i, j);
    Vec m = lu_solve(system, b);

    Vec x(n);
    for (int zi = 0; zi < n; ++zi) {
        const double* trow = c.t.row(zi);
        double s = 0.0;
        for (int t = 0; t < ns; ++t) s += trow[t] * m[t];
        x[zi] = rhs[zi] + c.beta * s;
    }
    return x;
}

/// Point mass on the truthful report pair for every next state.
inline Mat accurate_report_weights(const InfoSpace& info) {
    Mat w(info.state_count(), info.report_count());
    for (int s = 0; s < info.state_count(); ++s) {
        const FullState fs = info.state_at(s);
        w.at(s, fs.s1 * info.n2 + fs.s2) = 1.0;
    }
    return w;
}

/// Product channel: P(z1, z2 | s') = Q1(z1 | s2') Q2(z2 | s1').
inline Mat channel_report_weights(const InfoSpace& info, const GameSpec& g, double e1, double e2) {
    const Mat q1 = build_channel_matrix(g.channel1(e1));
    const Mat q2 = build_channel_matrix(g.channel2(e2));
    Mat w(info.state_count(), info.report_count());
    for (int s = 0; s < info.state_count(); ++s) {
        const FullState fs = info.state_at(s);
        for (int z2 = 0; z2 < info.n1; ++z2)
            for (int z1 = 0; z1 < info.n2; ++z1) w.at(s, z2 * info.n2 + z1) = q1.at(fs.s2, z1) * q2.at(fs.s1, z2);
    }
    return w;
}

}  // namespace vodi
