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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "vodi/alpha.hpp"
#include "vodi/game.hpp"
#include "vodi/kernels.hpp"
#include "vodi/matrix.hpp"
#include "vodi/oracle.hpp"
#include "vodi/random_games.hpp"
#include "vodi/solvers.hpp"

namespace vodi {

// ---------------------------------------------------------------------------
// Sign classification of the value of distorted information.
// ---------------------------------------------------------------------------

enum class SignVerdict {
    Negative,  // every component <= 0: distortion hurts the leader
    Positive,  // every component >= 0: distortion helps the leader
    Zero,      // identically zero within tolerance (negative and positive at once)
    Unsigned   // mixed signs: the verdict depends on the leader's belief
};

inline const char* verdict_name(SignVerdict v) {
    switch (v) {
        case SignVerdict::Negative: return "NEGATIVE";
        case SignVerdict::Positive: return "POSITIVE";
        case SignVerdict::Zero: return "ZERO";
        case SignVerdict::Unsigned: return "UNSIGNED";
    }
    return "?";
}

struct ChannelClassification {
    SignVerdict verdict = SignVerdict::Zero;
    int positive = 0;  // components > tolerance
    int negative = 0;  // components < -tolerance
    int zero = 0;
};

struct VodiClassification {
    ChannelClassification channel1;  // from alpha^{1,0}
    ChannelClassification channel2;  // from alpha^{0,1}
    double tolerance = 0.0;
};

inline ChannelClassification classify_signs(const Vec& alpha, double tolerance) {
    ChannelClassification c;
    for (double v : alpha) {
        if (v > tolerance)
            ++c.positive;
        else if (v < -tolerance)
            ++c.negative;
        else
            ++c.zero;
    }
    if (c.positive == 0 && c.negative == 0)
        c.verdict = SignVerdict::Zero;
    else if (c.positive == 0)
        c.verdict = SignVerdict::Negative;
    else if (c.negative == 0)
        c.verdict = SignVerdict::Positive;
    else
        c.verdict = SignVerdict::Unsigned;
    return c;
}

inline VodiClassification classify_vodi(const AlphaTable& table, double tolerance = 1e-9) {
    if (table.truncation < 1) throw std::invalid_argument("classify_vodi: table must contain first-order coefficients");
    VodiClassification out;
    out.tolerance = tolerance;
    out.channel1 = classify_signs(table.at(1, 0), tolerance);
    out.channel2 = classify_signs(table.at(0, 1), tolerance);
    return out;
}

// ---------------------------------------------------------------------------
// Zero value of distorted information.
// ---------------------------------------------------------------------------

/// True iff both followers ignore their received reports: follower 1's
/// rule is constant in z1 for each fixed (s1, sF) and follower 2's is
/// constant in z2. In that case every alpha^{k,l} with k+l >= 1
/// vanishes and the leader's value is independent of both error
/// probabilities.
inline bool check_zero_value(const GameSpec& g, const PolicyProfile& p) {
    const InfoSpace info = info_space(g);
    auto rows_equal = [](const Vec& a, const Vec& b) {
        for (size_t i = 0; i < a.size(); ++i)
            if (std::fabs(a[i] - b[i]) > 1e-12) return false;
        return true;
    };
    for (int s1 = 0; s1 < info.n1; ++s1)
        for (int sf = 0; sf < info.nf; ++sf) {
            const Vec& first = p.follower1[info.f1_point(s1, 0, sf)];
            for (int z1 = 1; z1 < info.n2; ++z1)
                if (!rows_equal(first, p.follower1[info.f1_point(s1, z1, sf)])) return false;
        }
    for (int s2 = 0; s2 < info.n2; ++s2)
        for (int sf = 0; sf < info.nf; ++sf) {
            const Vec& first = p.follower2[info.f2_point(0, s2, sf)];
            for (int z2 = 1; z2 < info.n1; ++z2)
                if (!rows_equal(first, p.follower2[info.f2_point(z2, s2, sf)])) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Zero-memory deviation conditions.
// ---------------------------------------------------------------------------

struct DeviationReport {
    double eta1 = 0.0;
    double eta2 = 0.0;
    double h1 = 0.0;
    double h2 = 0.0;
    double distance = 0.0;     // ||P(candidate) - P(nominal)||
    double alpha00_gap = 0.0;  // ||alpha00_nominal - alpha00_candidate||
    double lhs1 = 0.0, rhs1 = 0.0;
    double lhs2 = 0.0, rhs2 = 0.0;
    bool pass1 = false;  // certifies candidate alpha^{1,0} <= 0
    bool pass2 = false;  // certifies candidate alpha^{0,1} <= 0
};

namespace detail {

/// max over s of | sum_{z != truthful} sigma(truth, z) a00(distorted zeta) - a00(diagonal zeta) |
inline double offdiagonal_a00_spread(const GameSpec& g, const Vec& alpha00, bool channel1) {
    const InfoSpace info = info_space(g);
    double best = 0.0;
    for (int s = 0; s < info.state_count(); ++s) {
        const FullState fs = info.state_at(s);
        double acc = -alpha00[info.diagonal_index(s)];
        if (channel1) {
            for (int z1 = 0; z1 < info.n2; ++z1)
                if (z1 != fs.s2) acc += g.sigma1.at(fs.s2, z1) * alpha00[info.index(s, z1, fs.s1)];
        } else {
            for (int z2 = 0; z2 < info.n1; ++z2)
                if (z2 != fs.s1) acc += g.sigma2.at(fs.s1, z2) * alpha00[info.index(s, fs.s2, z2)];
        }
        best = std::max(best, std::fabs(acc));
    }
    return best;
}

}  // namespace detail

/// Checkable sufficient condition that a candidate zero-memory profile
/// inherits the nominal profile's strictly negative first-order
/// coefficients: for each channel i,
///
///   eta^i ||P(candidate) - P(nominal)|| + 2 ||a00* - a00|| <= (1-beta)/beta h_i.
///
/// A pass certifies the sign; a failure is only inconclusive (the
/// condition is sufficient, not necessary).
inline DeviationReport check_deviation_zero_memory(const GameSpec& g, const PolicyProfile& nominal,
                                                   const PolicyProfile& candidate, const AlphaTable& nominal_table,
                                                   const Vec& candidate_alpha00) {
    require_valid(g, nominal);
    require_valid(g, candidate);
    if (nominal_table.truncation < 1)
        throw std::invalid_argument("check_deviation_zero_memory: nominal table must contain first-order coefficients");

    const Vec& a10 = nominal_table.at(1, 0);
    const Vec& a01 = nominal_table.at(0, 1);
    const double max10 = *std::max_element(a10.begin(), a10.end());
    const double max01 = *std::max_element(a01.begin(), a01.end());
    if (max10 >= 0.0 || max01 >= 0.0)
        throw std::invalid_argument(
            "check_deviation_zero_memory: premise violated, nominal alpha^{1,0} and alpha^{0,1} must be strictly negative");

    const Vec& a00 = nominal_table.at(0, 0);
    if (candidate_alpha00.size() != a00.size())
        throw std::invalid_argument("check_deviation_zero_memory: candidate alpha00 has wrong length");

    DeviationReport r;
    r.h1 = std::fabs(max10);
    r.h2 = std::fabs(max01);
    r.eta1 = sup_norm(a10) + detail::offdiagonal_a00_spread(g, a00, true);
    r.eta2 = sup_norm(a01) + detail::offdiagonal_a00_spread(g, a00, false);
    r.distance = policy_distance(g, candidate, nominal);
    r.alpha00_gap = sup_norm_diff(a00, candidate_alpha00);

    const double budget = (g.beta == 0.0) ? std::numeric_limits<double>::infinity() : (1.0 - g.beta) / g.beta;
    r.lhs1 = r.eta1 * r.distance + 2.0 * r.alpha00_gap;
    r.lhs2 = r.eta2 * r.distance + 2.0 * r.alpha00_gap;
    r.rhs1 = budget * r.h1;
    r.rhs2 = budget * r.h2;
    r.pass1 = r.lhs1 <= r.rhs1;
    r.pass2 = r.lhs2 <= r.rhs2;
    return r;
}

// ---------------------------------------------------------------------------
// Isotonicity conditions for comparing the two marginal values.
// ---------------------------------------------------------------------------

/// A total order on the accurate-diagonal information states,
/// represented by the rank of each full state.
struct Ordering {
    std::vector<int> rank;  // rank[s_idx] in [0, |S|)

    bool is_permutation() const {
        std::vector<bool> seen(rank.size(), false);
        for (int r : rank) {
            if (r < 0 || r >= static_cast<int>(rank.size()) || seen[r]) return false;
            seen[r] = true;
        }
        return true;
    }
};

/// Default order: accurate-diagonal states sorted by ascending induced
/// reward, index order breaking ties.
inline Ordering default_ordering(const GameSpec& g, const PolicyProfile& p) {
    const InducedChain c = build_chain(g, p);
    const int ns = c.info.state_count();
    std::vector<int> order(ns);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return c.reward(Agent::Leader)[c.info.diagonal_index(a)] < c.reward(Agent::Leader)[c.info.diagonal_index(b)];
    });
    Ordering mu;
    mu.rank.assign(ns, 0);
    for (int r = 0; r < ns; ++r) mu.rank[order[r]] = r;
    return mu;
}

struct ConditionResult {
    bool pass = true;
    std::string counterexample;  // empty when the condition holds
};

struct IsotonicityReport {
    ConditionResult reward_isotone;        // (i)
    ConditionResult tail_mass_isotone;     // (ii)
    ConditionResult distorted_reward_cmp;  // (iii)
    ConditionResult tail_mass_cmp;         // (iv)
    bool all_pass = false;
    bool alpha_relation_holds = false;  // alpha^{1,0} <= alpha^{0,1} componentwise, verified when all pass
    Vec alpha10;
    Vec alpha01;
};

/// Evaluates the four checkable conditions under which errors on
/// channel 1 are at least as damaging as errors on channel 2
/// (alpha^{1,0} <= alpha^{0,1}), and verifies the conclusion on the
/// computed coefficients whenever all four hold.
inline IsotonicityReport check_isotonicity_conditions(const GameSpec& g, const PolicyProfile& p,
                                                      const Ordering& mu, double tol = 1e-9) {
    require_valid(g, p);
    if (static_cast<int>(mu.rank.size()) != g.state_count() || !mu.is_permutation())
        throw std::invalid_argument("check_isotonicity_conditions: ordering is not a bijection on the diagonal states");

    const InducedChain c = build_chain(g, p);
    const InfoSpace& info = c.info;
    const int ns = info.state_count();
    const Vec& reward = c.reward(Agent::Leader);

    std::vector<int> by_rank(ns);
    for (int s = 0; s < ns; ++s) by_rank[mu.rank[s]] = s;

    IsotonicityReport report;

    auto label = [&](int s_idx) {
        const FullState fs = info.state_at(s_idx);
        return "(s=[" + std::to_string(fs.s1) + "," + std::to_string(fs.s2) + "," + std::to_string(fs.sf) + "])";
    };

    // (i) diagonal reward nondecreasing along the order
    for (int r = 0; r + 1 < ns; ++r) {
        const int a = by_rank[r], b = by_rank[r + 1];
        if (reward[info.diagonal_index(a)] > reward[info.diagonal_index(b)] + tol) {
            report.reward_isotone.pass = false;
            report.reward_isotone.counterexample = label(a) + " -> " + label(b);
            break;
        }
    }

    // Upper-tail transition masses. tail[s][r] = P(mu(s') >= r | diagonal zeta of s).
    auto tail_from_row = [&](const double* row) {
        Vec tail(ns + 1, 0.0);
        for (int r = ns - 1; r >= 0; --r) tail[r] = tail[r + 1] + row[by_rank[r]];
        return tail;
    };

    std::vector<Vec> diag_tail(ns);
    for (int s = 0; s < ns; ++s) diag_tail[s] = tail_from_row(c.t.row(info.diagonal_index(s)));

    // (ii) tail mass nondecreasing along the order, for every threshold
    for (int k = 0; k <= ns && report.tail_mass_isotone.pass; ++k) {
        for (int r = 0; r + 1 < ns; ++r) {
            const int a = by_rank[r], b = by_rank[r + 1];
            if (diag_tail[a][k] > diag_tail[b][k] + tol) {
                report.tail_mass_isotone.pass = false;
                report.tail_mass_isotone.counterexample =
                    label(a) + " -> " + label(b) + " at threshold " + std::to_string(k);
                break;
            }
        }
    }

    // sigma-weighted distorted rows per state, for (iii) and (iv)
    for (int s = 0; s < ns && (report.distorted_reward_cmp.pass || report.tail_mass_cmp.pass); ++s) {
        const FullState fs = info.state_at(s);
        double r1 = 0.0, r2 = 0.0;
        Vec row1(ns, 0.0), row2(ns, 0.0);
        for (int z1 = 0; z1 < info.n2; ++z1) {
            if (z1 == fs.s2) continue;
            const double w = c.sigma1.at(fs.s2, z1);
            const int zi = info.index(s, z1, fs.s1);
            r1 += w * reward[zi];
            const double* trow = c.t.row(zi);
            for (int t = 0; t < ns; ++t) row1[t] += w * trow[t];
        }
        for (int z2 = 0; z2 < info.n1; ++z2) {
            if (z2 == fs.s1) continue;
            const double w = c.sigma2.at(fs.s1, z2);
            const int zi = info.index(s, fs.s2, z2);
            r2 += w * reward[zi];
            const double* trow = c.t.row(zi);
            for (int t = 0; t < ns; ++t) row2[t] += w * trow[t];
        }
        if (report.distorted_reward_cmp.pass && r1 > r2 + tol) {
            report.distorted_reward_cmp.pass = false;
            report.distorted_reward_cmp.counterexample = label(s);
        }
        if (report.tail_mass_cmp.pass) {
            const Vec t1 = tail_from_row(row1.data());
            const Vec t2 = tail_from_row(row2.data());
            for (int k = 0; k <= ns; ++k)
                if (t1[k] > t2[k] + tol) {
                    report.tail_mass_cmp.pass = false;
                    report.tail_mass_cmp.counterexample = label(s) + " at threshold " + std::to_string(k);
                    break;
                }
        }
    }

    report.all_pass = report.reward_isotone.pass && report.tail_mass_isotone.pass &&
                      report.distorted_reward_cmp.pass && report.tail_mass_cmp.pass;

    const AlphaTable table = detail::alpha_table_from_chain(c, 1, Agent::Leader);
    report.alpha10 = table.at(1, 0);
    report.alpha01 = table.at(0, 1);
    report.alpha_relation_holds = true;
    for (size_t i = 0; i < report.alpha10.size(); ++i)
        if (report.alpha10[i] > report.alpha01[i] + 1e-9) report.alpha_relation_holds = false;
    return report;
}

// ---------------------------------------------------------------------------
// Garbling / informativeness comparison of two channels.
// ---------------------------------------------------------------------------

struct GarblingResult {
    bool exists = false;
    bool inconclusive = false;  // Q singular: the inverse test cannot decide
    Mat r;
    double residual = 0.0;  // ||Q R - Q'||
    std::string note;
};

/// Tests whether Q' = Q R for some row-stochastic R. With invertible Q
/// the candidate R = Q^{-1} Q' is the only possibility, so the test is
/// exact; a singular Q is reported inconclusive rather than guessed.
inline GarblingResult check_garbling(const Mat& q, const Mat& q_prime, double tolerance = 1e-9) {
    if (q.rows != q.cols || q_prime.rows != q_prime.cols || q.rows != q_prime.rows)
        throw std::invalid_argument("check_garbling: channel matrices must be square and equally sized");
    GarblingResult out;
    Mat candidate;
    try {
        candidate = lu_solve_multi(q, q_prime);
    } catch (const SingularMatrixError&) {
        out.inconclusive = true;
        out.note = "inconclusive: Q not invertible";
        return out;
    }
    out.r = std::move(candidate);
    bool stochastic = true;
    for (int i = 0; i < out.r.rows; ++i) {
        double sum = 0.0;
        for (int j = 0; j < out.r.cols; ++j) {
            if (out.r.at(i, j) < -tolerance) stochastic = false;
            sum += out.r.at(i, j);
        }
        if (std::fabs(sum - 1.0) > tolerance) stochastic = false;
    }
    Mat prod = mat_mul(q, out.r);
    for (size_t i = 0; i < prod.data.size(); ++i) prod.data[i] -= q_prime.data[i];
    out.residual = row_sum_norm(prod);
    out.exists = stochastic;
    if (!stochastic) out.note = "candidate R is not row-stochastic: Q' is not a garbling of Q";
    return out;
}

// ---------------------------------------------------------------------------
// Randomized intuition study.
// ---------------------------------------------------------------------------

enum class Structure { Cooperative, ZeroSum, General };

inline const char* structure_name(Structure s) {
    switch (s) {
        case Structure::Cooperative: return "cooperative";
        case Structure::ZeroSum: return "zero-sum";
        case Structure::General: return "general";
    }
    return "?";
}

struct StudyConfig {
    int count = 100;
    Structure structure = Structure::General;
    uint64_t seed = 0;
    double beta = 0.9;
    double tolerance = 1e-7;
    int sl_min = 2, sl_max = 2;   // leader partial-state sizes
    int sf_min = 2, sf_max = 2;   // follower state size
    int af_min = 2, af_max = 2;   // follower action sizes
    int al_min = 1, al_max = 1;   // leader action size
    int reward_min = -50, reward_max = 50;
};

struct StudyGameRecord {
    uint64_t seed = 0;
    int sl1 = 0, sl2 = 0, sf = 0, al = 0, af1 = 0, af2 = 0;
    bool adversarial = false;  // expected sign: >= 0 when adversarial, <= 0 when cooperative
    SignVerdict verdict1 = SignVerdict::Zero;
    SignVerdict verdict2 = SignVerdict::Zero;
    int unexpected_components = 0;
    bool violation = false;
};

struct StudyReport {
    StudyConfig config;
    std::vector<StudyGameRecord> games;
    int violations = 0;
    double fraction = 0.0;
};

/// Seeded sweep over random games: solve the followers' best response,
/// compute the first-order coefficients, and count the games whose
/// signs contradict the prevalent intuition (distortion between
/// adversaries helps the leader, between allies hurts). Cooperative
/// and zero-sum structures use exact reward ties and must never
/// violate; the general structure only sign-aligns (or sign-opposes)
/// the follower reward with the leader's, magnitudes independent.
inline StudyReport random_study(const StudyConfig& cfg) {
    if (cfg.count < 1) throw std::invalid_argument("random_study: count must be >= 1");
    StudyReport report;
    report.config = cfg;
    uint64_t seq = cfg.seed;
    for (int i = 0; i < cfg.count; ++i) {
        const uint64_t game_seed = splitmix64(seq);
        Rng rng(game_seed);

        RandomGameConfig gc;
        gc.sl1 = rng.range(cfg.sl_min, cfg.sl_max);
        gc.sl2 = rng.range(cfg.sl_min, cfg.sl_max);
        gc.sf = rng.range(cfg.sf_min, cfg.sf_max);
        gc.al = rng.range(cfg.al_min, cfg.al_max);
        gc.af1 = rng.range(cfg.af_min, cfg.af_max);
        gc.af2 = rng.range(cfg.af_min, cfg.af_max);
        gc.reward_min = cfg.reward_min;
        gc.reward_max = cfg.reward_max;
        gc.beta = cfg.beta;
        GameSpec g = random_game(rng, gc);

        StudyGameRecord rec;
        rec.seed = game_seed;
        rec.sl1 = gc.sl1;
        rec.sl2 = gc.sl2;
        rec.sf = gc.sf;
        rec.al = gc.al;
        rec.af1 = gc.af1;
        rec.af2 = gc.af2;

        switch (cfg.structure) {
            case Structure::Cooperative:
                g.reward_f1 = g.reward_leader;
                rec.adversarial = false;
                break;
            case Structure::ZeroSum:
                g.reward_f1 = g.reward_leader;
                for (double& v : g.reward_f1.data) v = -v;
                rec.adversarial = true;
                break;
            case Structure::General: {
                rec.adversarial = rng.below(2) == 1;
                g.reward_f1 = g.reward_leader;
                for (double& v : g.reward_f1.data) {
                    const double mag = std::fabs(static_cast<double>(rng.range(cfg.reward_min, cfg.reward_max)));
                    const double sign = (v > 0) ? 1.0 : (v < 0 ? -1.0 : 0.0);
                    v = (rec.adversarial ? -sign : sign) * mag;
                }
                break;
            }
        }
        g.reward_f2 = g.reward_f1;

        const std::vector<Vec> leader = random_leader_rule(rng, g);
        const BestResponse best = solve_joint_best_response(g, leader);
        const AlphaTable table = compute_alpha_table(g, best.profile, 1, Agent::Leader);
        const VodiClassification cla = classify_vodi(table, cfg.tolerance);
        rec.verdict1 = cla.channel1.verdict;
        rec.verdict2 = cla.channel2.verdict;
        rec.unexpected_components = rec.adversarial ? cla.channel1.negative + cla.channel2.negative
                                                    : cla.channel1.positive + cla.channel2.positive;
        rec.violation = rec.unexpected_components > 0;
        if (rec.violation) ++report.violations;
        report.games.push_back(rec);
    }
    report.fraction = static_cast<double>(report.violations) / cfg.count;
    return report;
}

// ---------------------------------------------------------------------------
// Lambda sweeps: reward and policy mixtures.
// ---------------------------------------------------------------------------

enum class SweepKind { RewardMix, PolicyMix };

struct SweepOptions {
    bool star_is_cooperative = true;  // reward mix target: r^{F,*} = r^L (else -r^L)
    int kstep = 3;                    // policy mix endpoint away from optimal
    double tolerance = 1e-9;
};

struct SweepRecord {
    double lambda = 0.0;
    double percent_positive = 0.0;  // share of alpha^{1,0} components > tolerance
    SignVerdict verdict1 = SignVerdict::Zero;
    SignVerdict verdict2 = SignVerdict::Zero;
};

/// Reward mix: install lambda r^{F,*} + (1-lambda) r^{F,other} as the
/// shared follower reward and re-solve the best response at each
/// lambda. Policy mix: blend the k-step rule toward the optimal rule
/// with weight lambda and evaluate the fixed mixture. Records the
/// share of positive components of alpha^{1,0} per lambda.
inline std::vector<SweepRecord> sweep_lambda(const GameSpec& g, const std::vector<Vec>& leader, SweepKind kind,
                                             const std::vector<double>& grid, const SweepOptions& opts = SweepOptions{}) {
    for (double l : grid)
        if (l < 0.0 || l > 1.0) throw std::invalid_argument("sweep_lambda: grid values must lie in [0,1]");

    std::vector<SweepRecord> out;
    if (kind == SweepKind::RewardMix) {
        Mat r_star = g.reward_leader;
        if (!opts.star_is_cooperative)
            for (double& v : r_star.data) v = -v;
        const Mat r_other = g.reward_f1;
        for (double lambda : grid) {
            const GameSpec mixed = mix_rewards(g, r_star, r_other, lambda);
            const BestResponse best = solve_joint_best_response(mixed, leader);
            const AlphaTable table = compute_alpha_table(mixed, best.profile, 1, Agent::Leader);
            const VodiClassification cla = classify_vodi(table, opts.tolerance);
            const double pct = 100.0 * cla.channel1.positive / static_cast<double>(table.info.count());
            out.push_back(SweepRecord{lambda, pct, cla.channel1.verdict, cla.channel2.verdict});
        }
    } else {
        const PolicyProfile coarse = k_step_policy(g, leader, opts.kstep);
        const PolicyProfile optimal = solve_joint_best_response(g, leader).profile;
        for (double lambda : grid) {
            const PolicyProfile mixed = mix_policies(coarse, optimal, lambda);
            const AlphaTable table = compute_alpha_table(g, mixed, 1, Agent::Leader);
            const VodiClassification cla = classify_vodi(table, opts.tolerance);
            const double pct = 100.0 * cla.channel1.positive / static_cast<double>(table.info.count());
            out.push_back(SweepRecord{lambda, pct, cla.channel1.verdict, cla.channel2.verdict});
        }
    }
    return out;
}

}  // namespace vodi
