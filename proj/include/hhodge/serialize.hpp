#pragma once

#include <json.hpp>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <hhodge/groups.hpp>
#include <hhodge/potentials.hpp>
#include <hhodge/solvers.hpp>

namespace hhodge {

using ordered_json = nlohmann::ordered_json;

// A table flattened for output: every row is an exponent vector over the
// group's nontrivial classes plus the exact value. Rows are kept in
// lexicographic exponent order so emission is byte-deterministic.
struct TableDump {
    std::string group;
    int order = 0;
    std::vector<std::string> class_tokens;  // nontrivial classes
    std::map<std::vector<int>, Rational> rows;
};

inline TableDump dump_table(const HurwitzTable& t) {
    const GroupData& g = group_table(t.group);
    TableDump d;
    d.group = group_token(t.group);
    d.order = t.order;
    for (int c = 1; c < g.nclasses; ++c) d.class_tokens.push_back(g.class_token[static_cast<std::size_t>(c)]);
    d.rows = t.entries;
    return d;
}

// The S4 families flattened over (tau, sigma, rho, zeta) exponents: the
// (sigma, zeta) section plus the four tracked auxiliary families, with the
// tau-rho values carrying the signs anchored by the length-three counts.
inline TableDump dump_s4_tables(const S4Tables& t, const CdRecovery& cd) {
    const GroupData& g = group_table(Group::S4);
    TableDump d;
    d.group = group_token(Group::S4);
    d.order = t.order;
    for (int c = 1; c < g.nclasses; ++c) d.class_tokens.push_back(g.class_token[static_cast<std::size_t>(c)]);
    for (const auto& [key, value] : t.sigma_zeta)
        if (key[0] + key[1] >= 3) d.rows[{0, key[0], 0, key[1]}] = value;
    for (int a = 1; a < static_cast<int>(t.tau2_sigma.size()); ++a)
        d.rows[{2, a, 0, 0}] = t.tau2_sigma[static_cast<std::size_t>(a)];
    for (int a = 0; a < static_cast<int>(t.tau2_sigma_zeta.size()); ++a)
        d.rows[{2, a, 0, 1}] = t.tau2_sigma_zeta[static_cast<std::size_t>(a)];
    for (int a = 1; a - 1 <= cd.d.order() && a + 2 <= t.order; ++a)
        d.rows[{1, a, 1, 0}] = cd.d[a - 1] * Rational(factorial(static_cast<unsigned>(a - 1)));
    for (int a = 0; a <= cd.c.order() && a + 3 <= t.order; ++a)
        d.rows[{1, a, 1, 1}] = cd.c[a] * Rational(factorial(static_cast<unsigned>(a)));
    return d;
}

inline ordered_json to_json(const TableDump& d) {
    ordered_json out;
    out["group"] = d.group;
    out["order"] = d.order;
    ordered_json integrals = ordered_json::array();
    for (const auto& [key, value] : d.rows) {
        ordered_json row;
        ordered_json ins;
        for (std::size_t c = 0; c < key.size(); ++c)
            if (key[c] != 0) ins[d.class_tokens[c]] = key[c];
        row["insertions"] = std::move(ins);
        row["value"] = to_string(value);
        integrals.push_back(std::move(row));
    }
    out["integrals"] = std::move(integrals);
    return out;
}

inline std::string to_csv(const TableDump& d) {
    std::string out = "group";
    for (const auto& tok : d.class_tokens) out += "," + tok;
    out += ",value\n";
    for (const auto& [key, value] : d.rows) {
        out += d.group;
        for (int e : key) out += "," + std::to_string(e);
        out += "," + to_string(value) + "\n";
    }
    return out;
}

// Inverse of to_json, for round-trip checks and downstream consumers.
inline TableDump table_from_json(const ordered_json& j) {
    TableDump d;
    d.group = j.at("group").get<std::string>();
    d.order = j.at("order").get<int>();
    Group g;
    if (d.group == "z2z2")
        g = Group::Z2xZ2;
    else if (d.group == "a4")
        g = Group::A4;
    else if (d.group == "s4")
        g = Group::S4;
    else
        throw Error("unknown group in JSON: " + d.group);
    const GroupData& gd = group_table(g);
    for (int c = 1; c < gd.nclasses; ++c) d.class_tokens.push_back(gd.class_token[static_cast<std::size_t>(c)]);
    for (const auto& row : j.at("integrals")) {
        std::vector<int> key(d.class_tokens.size(), 0);
        for (const auto& [tok, e] : row.at("insertions").items()) {
            bool found = false;
            for (std::size_t c = 0; c < d.class_tokens.size(); ++c)
                if (d.class_tokens[c] == tok) {
                    key[c] = e.get<int>();
                    found = true;
                }
            if (!found) throw Error("unknown class token in JSON: " + tok);
        }
        d.rows[key] = rational_from_string(row.at("value").get<std::string>());
    }
    return d;
}

inline HurwitzTable hurwitz_from_dump(const TableDump& d, Group g) {
    HurwitzTable t;
    t.group = g;
    t.order = d.order;
    t.entries = d.rows;
    return t;
}

}  // namespace hhodge
