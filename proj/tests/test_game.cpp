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

#include <array>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "vodi/game.hpp"
#include "vodi/random_games.hpp"

using namespace vodi;

TEST_CASE("channel matrix: identity at epsilon zero") {
    Channel ch{0.0, uniform_sigma(4)};
    const Mat q = build_channel_matrix(ch);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(q.at(i, j) == doctest::Approx(i == j ? 1.0 : 0.0));
}

TEST_CASE("channel matrix: binary symmetric at epsilon 0.3") {
    Channel ch{0.3, uniform_sigma(2)};
    const Mat q = build_channel_matrix(ch);
    CHECK(q.at(0, 0) == doctest::Approx(0.7));
    CHECK(q.at(0, 1) == doctest::Approx(0.3));
    CHECK(q.at(1, 0) == doctest::Approx(0.3));
    CHECK(q.at(1, 1) == doctest::Approx(0.7));
    Mat diff = q;
    diff.at(0, 0) -= 1.0;
    diff.at(1, 1) -= 1.0;
    CHECK(row_sum_norm(diff) == doctest::Approx(0.6));
}

TEST_CASE("channel matrix: rows sum to 1 and ||Q - I|| = 2 eps across the grid") {
    Rng rng(7);
    for (int n : {2, 3, 5}) {
        for (int trial = 0; trial < 20; ++trial) {
            const double eps = rng.uniform();
            const Mat q = build_channel_matrix(Channel{eps, uniform_sigma(n)});
            Mat diff = q;
            for (int i = 0; i < n; ++i) {
                double sum = 0.0;
                for (int j = 0; j < n; ++j) sum += q.at(i, j);
                CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
                diff.at(i, i) -= 1.0;
            }
            CHECK(row_sum_norm(diff) == doctest::Approx(2.0 * eps).epsilon(1e-12));
        }
    }
}

TEST_CASE("channel matrix: rejects a sigma row that does not sum to 1") {
    Mat sigma(2, 2);
    sigma.at(0, 1) = 0.5;  // short row
    sigma.at(1, 0) = 1.0;
    CHECK_THROWS_AS(build_channel_matrix(Channel{0.2, sigma}), std::invalid_argument);
}

TEST_CASE("info space: flat index is a bijection") {
    for (auto dims : {std::array<int, 3>{2, 2, 2}, std::array<int, 3>{3, 2, 4}, std::array<int, 3>{2, 5, 1}}) {
        const InfoSpace info{dims[0], dims[1], dims[2]};
        std::vector<bool> seen(info.count(), false);
        for (int idx = 0; idx < info.count(); ++idx) {
            const InfoState z = info.at(idx);
            CHECK(info.index(z.s, z.z1, z.z2) == idx);
            CHECK(!seen[idx]);
            seen[idx] = true;
        }
    }
}

TEST_CASE("info space: accurate diagonal predicate") {
    const InfoSpace info{2, 3, 2};
    int diag = 0;
    for (int idx = 0; idx < info.count(); ++idx) {
        const InfoState z = info.at(idx);
        const bool acc = z.z1 == z.s.s2 && z.z2 == z.s.s1;
        CHECK(info.accurate(z) == acc);
        if (acc) {
            CHECK(info.diagonal_index(info.state_index(z.s.s1, z.s.s2, z.s.sf)) == idx);
            ++diag;
        }
    }
    CHECK(diag == info.state_count());
}

TEST_CASE("validate_game: reports a non-stochastic transition row with its location") {
    Rng rng(3);
    GameSpec g = vodi_test::tiny_game(rng);
    g.transitions[1].at(2, 0) -= 0.02;  // row now sums to 0.98
    const auto report = validate_game(g);
    REQUIRE(report.size() == 1);
    CHECK(report[0].where == "transitions[a=1][s=2]");
    CHECK(report[0].message.find("0.98") != std::string::npos);
}

TEST_CASE("validate_game: discount factor out of range") {
    Rng rng(4);
    GameSpec g = vodi_test::tiny_game(rng);
    g.beta = 1.0;
    const auto report = validate_game(g);
    REQUIRE(report.size() == 1);
    CHECK(report[0].where == "beta");
    CHECK(report[0].message.find("out of range") != std::string::npos);
}

TEST_CASE("validate_game: clean random games pass") {
    Rng rng(5);
    for (int i = 0; i < 10; ++i) {
        const GameSpec g = random_game(rng, RandomGameConfig{});
        CHECK(validate_game(g).empty());
    }
}

TEST_CASE("validate_profile: catches an unnormalized rule") {
    Rng rng(6);
    const GameSpec g = vodi_test::tiny_game(rng);
    PolicyProfile p = random_stochastic_profile(rng, g);
    p.follower1[0][0] += 0.25;
    CHECK(!validate_profile(g, p).empty());
    CHECK_THROWS_AS(expected_reward_vector(g, p, Agent::Leader), std::invalid_argument);
}
