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

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "vodi/alpha.hpp"
#include "vodi/game.hpp"

namespace vodi {

/// Declarative game description: a validated GameSpec plus optional
/// named zero-memory policy blocks. Version 1 of the file format.
struct SpecDocument {
    int schema_version = 1;
    GameSpec game;
    std::map<std::string, PolicyProfile> policies;
    std::string name;
    std::string notes;
};

class SpecParseError : public std::runtime_error {
  public:
    explicit SpecParseError(std::vector<std::string> errs)
        : std::runtime_error(errs.empty() ? "spec parse error" : errs.front()), errors(std::move(errs)) {}
    std::vector<std::string> errors;
};

namespace io_detail {

using nlohmann::json;

inline int line_of_byte(const std::string& text, size_t byte) {
    int line = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

inline void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where,
                                std::vector<std::string>& errors) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) ok = true;
        if (!ok) errors.push_back(where + ": unknown field \"" + it.key() + "\"");
    }
}

inline Mat parse_matrix(const json& rows, const std::string& where, std::vector<std::string>& errors) {
    if (!rows.is_array() || rows.empty() || !rows[0].is_array()) {
        errors.push_back(where + ": expected an array of number rows");
        return Mat();
    }
    Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_array() || rows[i].size() != rows[0].size()) {
            errors.push_back(where + ": row " + std::to_string(i) + " has inconsistent length");
            return Mat();
        }
        for (size_t j = 0; j < rows[i].size(); ++j) {
            if (!rows[i][j].is_number()) {
                errors.push_back(where + ": non-numeric entry at [" + std::to_string(i) + "][" + std::to_string(j) + "]");
                return Mat();
            }
            m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j].get<double>();
        }
    }
    return m;
}

inline std::vector<Vec> parse_rule_block(const json& rows, const std::string& where, std::vector<std::string>& errors) {
    std::vector<Vec> out;
    if (!rows.is_array()) {
        errors.push_back(where + ": expected an array of probability vectors");
        return out;
    }
    for (size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_array()) {
            errors.push_back(where + "[" + std::to_string(i) + "]: expected a probability vector");
            return out;
        }
        Vec v;
        for (const auto& x : rows[i]) {
            if (!x.is_number()) {
                errors.push_back(where + "[" + std::to_string(i) + "]: non-numeric entry");
                return out;
            }
            v.push_back(x.get<double>());
        }
        out.push_back(std::move(v));
    }
    return out;
}

inline json matrix_to_json(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json rules_to_json(const std::vector<Vec>& rules) {
    json rows = json::array();
    for (const Vec& r : rules) rows.push_back(r);
    return rows;
}

}  // namespace io_detail

/// Parses and fully validates a spec document. Strict: unknown fields
/// are rejected, dimensions must match the declared sizes, transition
/// rows must be stochastic. Collects every error it can find before
/// throwing.
inline SpecDocument parse_spec(const std::string& text) {
    using io_detail::json;
    std::vector<std::string> errors;

    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SpecParseError({"line " + std::to_string(io_detail::line_of_byte(text, e.byte)) + ": " + e.what()});
    }
    if (!root.is_object()) throw SpecParseError({"top level: expected an object"});

    io_detail::reject_unknown_keys(root, {"schema_version", "metadata", "game", "channels", "policies"}, "top level",
                                   errors);

    SpecDocument doc;
    if (!root.contains("schema_version") || !root["schema_version"].is_number_integer())
        errors.push_back("schema_version: required integer field");
    else
        doc.schema_version = root["schema_version"].get<int>();
    if (doc.schema_version != 1) errors.push_back("schema_version: unsupported version " + std::to_string(doc.schema_version));

    if (root.contains("metadata")) {
        const json& meta = root["metadata"];
        if (!meta.is_object()) {
            errors.push_back("metadata: expected an object");
        } else {
            if (meta.contains("name") && meta["name"].is_string()) doc.name = meta["name"].get<std::string>();
            if (meta.contains("notes") && meta["notes"].is_string()) doc.notes = meta["notes"].get<std::string>();
        }
    }

    if (!root.contains("game") || !root["game"].is_object()) {
        errors.push_back("game: required object field");
        throw SpecParseError(std::move(errors));
    }
    const json& game = root["game"];
    io_detail::reject_unknown_keys(game,
                                   {"sL1_size", "sL2_size", "sF_size", "aL_size", "aF1_size", "aF2_size", "beta",
                                    "transitions", "rewards", "sigma1", "sigma2"},
                                   "game", errors);

    GameSpec& g = doc.game;
    auto get_int = [&](const char* key, int& out) {
        if (!game.contains(key) || !game[key].is_number_integer())
            errors.push_back(std::string("game.") + key + ": required integer field");
        else
            out = game[key].get<int>();
    };
    get_int("sL1_size", g.sl1_size);
    get_int("sL2_size", g.sl2_size);
    get_int("sF_size", g.sf_size);
    get_int("aL_size", g.al_size);
    get_int("aF1_size", g.af1_size);
    get_int("aF2_size", g.af2_size);
    if (!game.contains("beta") || !game["beta"].is_number())
        errors.push_back("game.beta: required numeric field");
    else
        g.beta = game["beta"].get<double>();
    if (!errors.empty()) throw SpecParseError(std::move(errors));

    // transitions: [action][state][next_state]
    if (!game.contains("transitions") || !game["transitions"].is_array()) {
        errors.push_back("game.transitions: required array field, indexed [action][state][next_state]");
    } else {
        for (size_t a = 0; a < game["transitions"].size(); ++a)
            g.transitions.push_back(
                io_detail::parse_matrix(game["transitions"][a], "game.transitions[" + std::to_string(a) + "]", errors));
    }

    // rewards: [state][action] per agent
    if (!game.contains("rewards") || !game["rewards"].is_object()) {
        errors.push_back("game.rewards: required object with L, F1, F2 tables indexed [state][action]");
    } else {
        const json& rewards = game["rewards"];
        io_detail::reject_unknown_keys(rewards, {"L", "F1", "F2"}, "game.rewards", errors);
        for (const char* key : {"L", "F1", "F2"}) {
            if (!rewards.contains(key)) {
                errors.push_back(std::string("game.rewards.") + key + ": required table");
                continue;
            }
            Mat m = io_detail::parse_matrix(rewards[key], std::string("game.rewards.") + key, errors);
            if (std::string(key) == "L")
                g.reward_leader = std::move(m);
            else if (std::string(key) == "F1")
                g.reward_f1 = std::move(m);
            else
                g.reward_f2 = std::move(m);
        }
    }

    g.sigma1 = game.contains("sigma1") ? io_detail::parse_matrix(game["sigma1"], "game.sigma1", errors)
                                       : uniform_sigma(g.sl2_size);
    g.sigma2 = game.contains("sigma2") ? io_detail::parse_matrix(game["sigma2"], "game.sigma2", errors)
                                       : uniform_sigma(g.sl1_size);

    if (root.contains("channels")) {
        const json& ch = root["channels"];
        if (!ch.is_object()) {
            errors.push_back("channels: expected an object with sigma overrides");
        } else {
            io_detail::reject_unknown_keys(ch, {"sigma1", "sigma2"}, "channels", errors);
            if (ch.contains("sigma1")) g.sigma1 = io_detail::parse_matrix(ch["sigma1"], "channels.sigma1", errors);
            if (ch.contains("sigma2")) g.sigma2 = io_detail::parse_matrix(ch["sigma2"], "channels.sigma2", errors);
        }
    }

    if (!errors.empty()) throw SpecParseError(std::move(errors));

    for (const Violation& v : validate_game(g)) errors.push_back("game." + v.where + ": " + v.message);
    if (!errors.empty()) throw SpecParseError(std::move(errors));

    if (root.contains("policies")) {
        const json& pols = root["policies"];
        if (!pols.is_object()) {
            errors.push_back("policies: expected an object of named policy blocks");
        } else {
            for (auto it = pols.begin(); it != pols.end(); ++it) {
                const std::string where = "policies." + it.key();
                if (!it.value().is_object()) {
                    errors.push_back(where + ": expected an object");
                    continue;
                }
                io_detail::reject_unknown_keys(it.value(), {"leader", "follower1", "follower2"}, where, errors);
                PolicyProfile p;
                for (const char* key : {"leader", "follower1", "follower2"}) {
                    if (!it.value().contains(key)) {
                        errors.push_back(where + "." + key + ": required rule block");
                        continue;
                    }
                    auto rules = io_detail::parse_rule_block(it.value()[key], where + "." + key, errors);
                    if (std::string(key) == "leader")
                        p.leader = std::move(rules);
                    else if (std::string(key) == "follower1")
                        p.follower1 = std::move(rules);
                    else
                        p.follower2 = std::move(rules);
                }
                for (const Violation& v : validate_profile(g, p))
                    errors.push_back(where + "." + v.where + ": " + v.message);
                doc.policies.emplace(it.key(), std::move(p));
            }
        }
    }

    if (!errors.empty()) throw SpecParseError(std::move(errors));
    return doc;
}

inline SpecDocument parse_spec_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SpecParseError({"cannot open spec file: " + path});
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
}

inline std::string serialize_spec(const SpecDocument& doc) {
    using io_detail::json;
    json root;
    root["schema_version"] = doc.schema_version;
    if (!doc.name.empty() || !doc.notes.empty()) {
        json meta;
        if (!doc.name.empty()) meta["name"] = doc.name;
        if (!doc.notes.empty()) meta["notes"] = doc.notes;
        root["metadata"] = std::move(meta);
    }
    json game;
    game["sL1_size"] = doc.game.sl1_size;
    game["sL2_size"] = doc.game.sl2_size;
    game["sF_size"] = doc.game.sf_size;
    game["aL_size"] = doc.game.al_size;
    game["aF1_size"] = doc.game.af1_size;
    game["aF2_size"] = doc.game.af2_size;
    game["beta"] = doc.game.beta;
    json trans = json::array();
    for (const Mat& block : doc.game.transitions) trans.push_back(io_detail::matrix_to_json(block));
    game["transitions"] = std::move(trans);
    game["rewards"] = {{"L", io_detail::matrix_to_json(doc.game.reward_leader)},
                       {"F1", io_detail::matrix_to_json(doc.game.reward_f1)},
                       {"F2", io_detail::matrix_to_json(doc.game.reward_f2)}};
    game["sigma1"] = io_detail::matrix_to_json(doc.game.sigma1);
    game["sigma2"] = io_detail::matrix_to_json(doc.game.sigma2);
    root["game"] = std::move(game);
    if (!doc.policies.empty()) {
        json pols;
        for (const auto& [name, p] : doc.policies) {
            pols[name] = {{"leader", io_detail::rules_to_json(p.leader)},
                          {"follower1", io_detail::rules_to_json(p.follower1)},
                          {"follower2", io_detail::rules_to_json(p.follower2)}};
        }
        root["policies"] = std::move(pols);
    }
    return root.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Tabular output.
// ---------------------------------------------------------------------------

enum class TableLayout { Paper, Flat };

/// "[s1 z1] [z2 s2] sf", the row-label convention of the reference
/// tables: follower 1's view, follower 2's view, joint follower state.
inline std::string zeta_label(const InfoSpace& info, int idx) {
    const InfoState z = info.at(idx);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "[%d %d] [%d %d] %d", z.s.s1, z.z1, z.z2, z.s.s2, z.s.sf);
    return buf;
}

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Paper layout: the zeta column split into two side-by-side blocks
/// (first half / second half of the flat order), columns alpha^{0,1}
/// then alpha^{1,0}. Flat layout: one row per (k, l, zeta index) for
/// the whole table; exact round-trip via parse_flat_table.
inline std::string emit_table(const AlphaTable& table, TableLayout layout) {
    std::ostringstream out;
    if (layout == TableLayout::Paper) {
        if (table.truncation < 1) throw std::invalid_argument("emit_table: paper layout needs first-order coefficients");
        const int n = table.info.count();
        const int half = n / 2;
        const Vec& a01 = table.at(0, 1);
        const Vec& a10 = table.at(1, 0);
        out << "zeta,alpha01,alpha10,zeta,alpha01,alpha10\n";
        for (int i = 0; i < half; ++i) {
            const int j = half + i;
            out << zeta_label(table.info, i) << ',' << format_double(a01[i]) << ',' << format_double(a10[i]) << ','
                << zeta_label(table.info, j) << ',' << format_double(a01[j]) << ',' << format_double(a10[j]) << '\n';
        }
    } else {
        out << "# alpha-table K=" << table.truncation << " agent=" << agent_name(table.agent)
            << " beta=" << format_double(table.beta) << " bound=" << format_double(table.reward_bound)
            << " dims=" << table.info.n1 << 'x' << table.info.n2 << 'x' << table.info.nf << '\n';
        out << "k,l,zeta_index,value\n";
        for (int k = 0; k <= table.truncation; ++k)
            for (int l = 0; l <= table.truncation; ++l)
                for (int i = 0; i < table.info.count(); ++i)
                    out << k << ',' << l << ',' << i << ',' << format_double(table.at(k, l)[i]) << '\n';
    }
    return out.str();
}

/// Inverse of the flat layout emitter.
inline AlphaTable parse_flat_table(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) || line.rfind("# alpha-table", 0) != 0)
        throw std::invalid_argument("parse_flat_table: missing header line");
    AlphaTable table;
    {
        char agent[8] = {0};
        int n1 = 0, n2 = 0, nf = 0;
        if (std::sscanf(line.c_str(), "# alpha-table K=%d agent=%7s beta=%lf bound=%lf dims=%dx%dx%d",
                        &table.truncation, agent, &table.beta, &table.reward_bound, &n1, &n2, &nf) != 7)
            throw std::invalid_argument("parse_flat_table: malformed header line");
        table.info = InfoSpace{n1, n2, nf};
        const std::string a = agent;
        table.agent = a == "L" ? Agent::Leader : (a == "F1" ? Agent::Follower1 : Agent::Follower2);
    }
    if (!std::getline(in, line) || line != "k,l,zeta_index,value")
        throw std::invalid_argument("parse_flat_table: missing column header");
    table.coeffs.assign(table.truncation + 1, std::vector<Vec>(table.truncation + 1, Vec(table.info.count(), 0.0)));
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        int k, l, idx;
        double value;
        if (std::sscanf(line.c_str(), "%d,%d,%d,%lf", &k, &l, &idx, &value) != 4)
            throw std::invalid_argument("parse_flat_table: malformed row: " + line);
        if (k < 0 || k > table.truncation || l < 0 || l > table.truncation || idx < 0 || idx >= table.info.count())
            throw std::invalid_argument("parse_flat_table: index out of range: " + line);
        table.coeffs[k][l][idx] = value;
    }
    return table;
}

}  // namespace vodi
