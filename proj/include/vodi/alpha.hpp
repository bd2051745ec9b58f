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
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "vodi/game.hpp"
#include "vodi/kernels.hpp"
#include "vodi/matrix.hpp"

namespace vodi {

/// Power-series coefficients of the leader's value function in the two
/// channel error probabilities: g = sum_{k,l} e1^k e2^l alpha[k][l].
/// Rectangular truncation (k <= K and l <= K), so evaluations at
/// symmetric (e1, e2) stay symmetric at every order.
struct AlphaTable {
    int truncation = 0;  // K
    Agent agent = Agent::Leader;
    double beta = 0.0;
    double reward_bound = 0.0;  // max_zeta |R_delta(zeta)| for the agent
    InfoSpace info;
    std::vector<std::vector<Vec>> coeffs;  // [k][l], each over info states

    const Vec& at(int k, int l) const {
        if (k < 0 || l < 0 || k > truncation || l > truncation) throw std::out_of_range("alpha index outside table");
        return coeffs[k][l];
    }
};

enum class SourceKind { Delta, DeltaBar, Theta };

namespace detail {

/// Source operators of the coefficient recursion, as kernel
/// differences. Algebraically identical to the sigma-weighted sums
/// they come from: each branch kernel is the accurate kernel with one
/// or both report coordinates redistributed.
inline Vec source_term(const InducedChain& c, const Vec& x, SourceKind kind) {
    const Vec m_acc = aggregate_accurate(c, x);
    switch (kind) {
        case SourceKind::Delta: {
            Vec m = aggregate_e1(c, x);
            for (size_t i = 0; i < m.size(); ++i) m[i] -= m_acc[i];
            return push_through(c, m, c.beta);
        }
        case SourceKind::DeltaBar: {
            Vec m = aggregate_e2(c, x);
            for (size_t i = 0; i < m.size(); ++i) m[i] -= m_acc[i];
            return push_through(c, m, c.beta);
        }
        case SourceKind::Theta: {
            Vec m = aggregate_e12(c, x);
            const Vec m1 = aggregate_e1(c, x);
            const Vec m2 = aggregate_e2(c, x);
            for (size_t i = 0; i < m.size(); ++i) m[i] += m_acc[i] - m1[i] - m2[i];
            return push_through(c, m, c.beta);
        }
    }
    throw std::logic_error("unreachable");
}

/// Unique solution of (I - beta P_acc) x = rhs.
inline Vec solve_accurate(const InducedChain& c, const Vec& rhs) {
    return solve_discounted(c, rhs, accurate_report_weights(c.info));
}

inline AlphaTable alpha_table_from_chain(const InducedChain& c, int truncation, Agent agent) {
    AlphaTable table;
    table.truncation = truncation;
    table.agent = agent;
    table.beta = c.beta;
    table.reward_bound = sup_norm(c.reward(agent));
    table.info = c.info;
    table.coeffs.assign(truncation + 1, std::vector<Vec>(truncation + 1));

    table.coeffs[0][0] = solve_accurate(c, c.reward(agent));
    // Increasing total order; each coefficient only needs lower ones.
    for (int order = 1; order <= 2 * truncation; ++order) {
        for (int k = std::max(0, order - truncation); k <= std::min(order, truncation); ++k) {
            const int l = order - k;
            Vec rhs(c.info.count(), 0.0);
            auto accumulate = [&rhs](const Vec& v) {
                for (size_t i = 0; i < rhs.size(); ++i) rhs[i] += v[i];
            };
            if (k >= 1) accumulate(source_term(c, table.coeffs[k - 1][l], SourceKind::Delta));
            if (l >= 1) accumulate(source_term(c, table.coeffs[k][l - 1], SourceKind::DeltaBar));
            if (k >= 1 && l >= 1) accumulate(source_term(c, table.coeffs[k - 1][l - 1], SourceKind::Theta));
            table.coeffs[k][l] = solve_accurate(c, rhs);
        }
    }
    return table;
}

}  // namespace detail

/// alpha^{0,0}: the fixed point of x = R_delta + beta P_acc x, the
/// leader's value under fully accurate communication.
inline Vec compute_alpha00(const GameSpec& g, const PolicyProfile& p, Agent agent = Agent::Leader) {
    require_valid(g, p);
    const InducedChain c = build_chain(g, p);
    return detail::solve_accurate(c, c.reward(agent));
}

inline Vec compute_source_terms(const GameSpec& g, const PolicyProfile& p, const Vec& alpha_kl, SourceKind kind) {
    require_valid(g, p);
    const InducedChain c = build_chain(g, p);
    if (alpha_kl.size() != static_cast<size_t>(c.info.count()))
        throw std::invalid_argument("compute_source_terms: coefficient vector has wrong length");
    return detail::source_term(c, alpha_kl, kind);
}

inline AlphaTable compute_alpha_table(const GameSpec& g, const PolicyProfile& p, int truncation,
                                      Agent agent = Agent::Leader) {
    if (truncation < 0) throw std::invalid_argument("compute_alpha_table: truncation must be non-negative");
    require_valid(g, p);
    return detail::alpha_table_from_chain(build_chain(g, p), truncation, agent);
}

/// Guaranteed convergence radius of the series in each error
/// probability: 1 for beta <= 1/9, otherwise (1-beta)/(8 beta).
inline double convergence_radius(double beta) {
    if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("convergence_radius: beta must lie in (0,1)");
    if (beta <= 1.0 / 9.0) return 1.0;
    return (1.0 - beta) / (8.0 * beta);
}

/// The proven geometric norm envelope for one coefficient.
inline double alpha_norm_bound(int k, int l, double beta, double reward_bound) {
    const double m = reward_bound / (1.0 - beta);
    if (k == 0 && l == 0) return m;
    const double first_order = 2.0 * beta * reward_bound / ((1.0 - beta) * (1.0 - beta));
    if (k + l == 1) return first_order;
    // Pure powers admit the tighter single-channel envelope.
    if (k == 0 || l == 0) return std::pow(2.0 * beta / (1.0 - beta), k + l) * m;
    const double rho = 8.0 * beta / (1.0 - beta);
    const int exponent = (beta <= 1.0 / 9.0) ? std::max(k, l) : (k + l);
    return std::pow(rho, exponent) * m;
}

struct NormBoundRow {
    int k;
    int l;
    double norm;
    double bound;
    bool pass;
};

/// Checks every computed coefficient against the proven envelope:
/// the first-order marginal bound 2 beta M / (1-beta)^2 and the
/// geometric higher-order bounds (max(k,l) exponent for beta <= 1/9,
/// k+l exponent otherwise).
inline std::vector<NormBoundRow> check_norm_bounds(const AlphaTable& table, const GameSpec& g,
                                                   const PolicyProfile& p) {
    require_valid(g, p);
    const Vec r = expected_reward_vector(g, p, table.agent);
    const double m = sup_norm(r);
    std::vector<NormBoundRow> rows;
    for (int k = 0; k <= table.truncation; ++k)
        for (int l = 0; l <= table.truncation; ++l) {
            const double norm = sup_norm(table.at(k, l));
            const double bound = alpha_norm_bound(k, l, g.beta, m);
            rows.push_back(NormBoundRow{k, l, norm, bound, norm <= bound + 1e-9});
        }
    return rows;
}

struct SeriesValue {
    Vec values;
    double tail_bound = 0.0;
    bool inside_radius = true;
};

/// Truncated series evaluation with a conservative tail bound from the
/// geometric norm envelope. Outside the convergence radius the values
/// are still the truncated sum but the result is flagged and the tail
/// bound is infinite.
inline SeriesValue evaluate_series(const AlphaTable& table, double eps1, double eps2) {
    if (eps1 < 0.0 || eps2 < 0.0) throw std::invalid_argument("evaluate_series: error probabilities must be >= 0");
    const int n = table.info.count();
    SeriesValue out;
    out.values.assign(n, 0.0);
    double p1 = 1.0;
    for (int k = 0; k <= table.truncation; ++k) {
        double p2 = 1.0;
        for (int l = 0; l <= table.truncation; ++l) {
            const Vec& a = table.at(k, l);
            const double w = p1 * p2;
            for (int i = 0; i < n; ++i) out.values[i] += w * a[i];
            p2 *= eps2;
        }
        p1 *= eps1;
    }

    const double radius = (table.beta > 0.0) ? convergence_radius(table.beta) : 1.0;
    out.inside_radius = eps1 < radius && eps2 < radius;
    if (!out.inside_radius) {
        out.tail_bound = std::numeric_limits<double>::infinity();
        return out;
    }
    // Sum the envelope over every (k,l) outside the K x K rectangle.
    const double mm = table.reward_bound / (1.0 - table.beta);
    if (table.beta <= 1.0 / 9.0) {
        // max(k,l) exponent; terms decay geometrically in each index,
        // so direct summation with early exit is exact enough.
        const double rho = 8.0 * table.beta / (1.0 - table.beta);
        double tail = 0.0;
        const int cap = 4000;
        for (int k = 0; k <= cap; ++k) {
            double row = 0.0;
            for (int l = 0; l <= cap; ++l) {
                if (k <= table.truncation && l <= table.truncation) continue;
                const double term = std::pow(eps1, k) * std::pow(eps2, l) * std::pow(rho, std::max(k, l));
                row += term;
                if (l > table.truncation && term < 1e-18 * (1.0 + tail)) break;
            }
            tail += row;
            if (k > table.truncation && row < 1e-18 * (1.0 + tail)) break;
        }
        out.tail_bound = mm * tail;
    } else {
        const double rho = 8.0 * table.beta / (1.0 - table.beta);
        const double u = eps1 * rho;
        const double v = eps2 * rho;
        auto head = [](double x, int kk) { return x == 1.0 ? kk + 1.0 : (1.0 - std::pow(x, kk + 1)) / (1.0 - x); };
        auto rest = [](double x, int kk) { return std::pow(x, kk + 1) / (1.0 - x); };
        if (u >= 1.0 || v >= 1.0) {
            out.tail_bound = std::numeric_limits<double>::infinity();
        } else {
            const int kk = table.truncation;
            out.tail_bound = mm * (rest(u, kk) * head(v, kk) + head(u, kk) * rest(v, kk) + rest(u, kk) * rest(v, kk));
        }
    }
    return out;
}

/// v(zeta^L, y) = sum over report pairs of y(z1, z2) g(s, z1, z2).
inline double belief_value(const Vec& g_vector, const InfoSpace& info, int s_idx, const BeliefVector& belief) {
    if (belief.weights.size() != static_cast<size_t>(info.report_count()))
        throw std::invalid_argument("belief_value: belief has wrong report-space size");
    double sum = 0.0;
    for (double w : belief.weights) sum += w;
    if (std::fabs(sum - 1.0) > 1e-9) throw std::invalid_argument("belief_value: belief weights must sum to 1");
    double v = 0.0;
    for (int r = 0; r < info.report_count(); ++r) v += belief.weights[r] * g_vector[s_idx * info.report_count() + r];
    return v;
}

inline double belief_value(const AlphaTable& table, double eps1, double eps2, int s_idx, const BeliefVector& belief) {
    return belief_value(evaluate_series(table, eps1, eps2).values, table.info, s_idx, belief);
}

}  // namespace vodi
