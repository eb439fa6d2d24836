#pragma once
/**
 * @file json_io.hpp
 * @brief JSON interchange for rationals, vectors, tables, reports and
 *        signed permutations.
 *
 * Rationals travel as strings "p" or "p/q". Table files list one
 * orientation (i < j) per independent component:
 *
 *     {"dimension": 3, "entries": [{"i":1,"j":2,"k":3,"c":"1"}, ...]}
 *
 * Output uses insertion-ordered objects so the bytes are stable.
 */

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

#include "cayley_dickson.hpp"
#include "errors.hpp"
#include "identity.hpp"
#include "isomorphism.hpp"
#include "product_table.hpp"
#include "rational.hpp"
#include "vector.hpp"

namespace xprod::json {

using ordered = nlohmann::ordered_json;

[[nodiscard]] inline ordered to_json(const Rational& r) { return r.str(); }

[[nodiscard]] inline Rational rational_from_json(const nlohmann::json& j) {
    if (!j.is_string()) throw InputError("expected a rational string, got " + j.dump());
    return Rational::parse(j.get<std::string>());
}

[[nodiscard]] inline ordered to_json(const Vector& v) {
    ordered a = ordered::array();
    for (const auto& x : v.components()) a.push_back(x.str());
    return a;
}

[[nodiscard]] inline Vector vector_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw InputError("expected a non-empty JSON array of rationals");
    std::vector<Rational> c;
    for (const auto& x : j) c.push_back(rational_from_json(x));
    return Vector(std::move(c));
}

[[nodiscard]] inline Vector parse_vector(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("vector is not valid JSON: ") + e.what());
    }
    return vector_from_json(j);
}

[[nodiscard]] inline ordered to_json(const ProductTable& t) {
    ordered entries = ordered::array();
    for (const auto& e : t.independent()) {
        ordered o;
        o["i"] = e.i;
        o["j"] = e.j;
        o["k"] = e.k;
        o["c"] = e.c.str();
        entries.push_back(std::move(o));
    }
    ordered out;
    out["dimension"] = t.dim();
    out["entries"] = std::move(entries);
    return out;
}

/// Canonical text: one entry per line, trailing newline.
[[nodiscard]] inline std::string dump_table(const ProductTable& t) {
    const auto j = to_json(t);
    std::string s = "{\"dimension\": " + std::to_string(t.dim()) + ", \"entries\": [";
    const auto& entries = j["entries"];
    for (std::size_t x = 0; x < entries.size(); ++x) {
        s += x ? ",\n  " : "\n  ";
        s += entries[x].dump();
    }
    s += entries.empty() ? "]}\n" : "\n]}\n";
    return s;
}

[[nodiscard]] inline ProductTable table_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InputError("table: expected a JSON object");
    for (const auto& [key, _] : j.items()) {
        if (key != "dimension" && key != "entries") throw InputError("table: unknown key \"" + key + "\"");
    }
    if (!j.contains("dimension") || !j["dimension"].is_number_unsigned() || j["dimension"].get<std::size_t>() == 0) {
        throw InputError("table: \"dimension\" must be a positive integer");
    }
    if (!j.contains("entries") || !j["entries"].is_array()) throw InputError("table: \"entries\" must be an array");
    const auto n = j["dimension"].get<std::size_t>();
    std::vector<TableEntry> entries;
    for (const auto& e : j["entries"]) {
        if (!e.is_object()) throw InputError("table: entries must be objects");
        TableEntry te;
        for (auto [name, slot] : {std::pair{"i", &te.i}, std::pair{"j", &te.j}, std::pair{"k", &te.k}}) {
            if (!e.contains(name) || !e[name].is_number_unsigned()) {
                throw InputError(std::string("table: entry field \"") + name + "\" must be a positive integer");
            }
            *slot = e[name].get<std::size_t>();
            if (*slot < 1 || *slot > n) {
                throw InputError(std::string("table: entry field \"") + name + "\" out of range 1.." + std::to_string(n));
            }
        }
        if (!e.contains("c")) throw InputError("table: entry missing \"c\"");
        te.c = rational_from_json(e["c"]);
        if (e.size() != 4) throw InputError("table: entry has unexpected fields");
        entries.push_back(std::move(te));
    }
    return ProductTable(n, entries);
}

[[nodiscard]] inline ProductTable parse_table(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("table is not valid JSON: ") + e.what());
    }
    return table_from_json(j);
}

[[nodiscard]] inline ordered to_json(const Quantity& q) {
    return std::visit([](const auto& v) { return to_json(v); }, q);
}

[[nodiscard]] inline ordered to_json(const IdentityReport& r) {
    ordered o;
    o["identity"] = std::string(identity_name(r.id));
    o["status"] = r.holds() ? "holds" : "violated";
    o["cases"] = r.cases;
    if (r.witness) {
        const auto& w = *r.witness;
        ordered wj;
        if (!w.inputs.empty()) {
            ordered in;
            for (const auto& [name, v] : w.inputs) in[name] = to_json(v);
            wj["inputs"] = std::move(in);
        }
        if (!w.indices.empty()) wj["indices"] = w.indices;
        wj["lhs"] = to_json(w.lhs);
        wj["rhs"] = to_json(w.rhs);
        for (const auto& [name, v] : w.extra) wj[name] = v.str();
        o["witness"] = std::move(wj);
    }
    return o;
}

[[nodiscard]] inline ordered to_json(const SignedPermutation& s) {
    ordered o;
    o["perm"] = s.perm;
    o["signs"] = s.signs;
    return o;
}

[[nodiscard]] inline SignedPermutation signed_permutation_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("perm") || !j.contains("signs")) {
        throw InputError("signed permutation: expected {\"perm\": [...], \"signs\": [...]}");
    }
    SignedPermutation s;
    try {
        s.perm = j["perm"].get<std::vector<std::size_t>>();
        s.signs = j["signs"].get<std::vector<int>>();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("signed permutation: ") + e.what());
    }
    s.validate();
    return s;
}

[[nodiscard]] inline ordered to_json(const ObstructionReport& o) {
    ordered j;
    j["dimension"] = o.dim;
    j["lhs_sum"] = o.lhs_sum.str();
    j["rhs_sum"] = o.rhs_sum.str();
    j["lhs_closed"] = o.lhs_closed.str();
    j["rhs_closed"] = o.rhs_closed.str();
    j["poly"] = o.poly.str();
    j["consistent"] = o.consistent();
    return j;
}

[[nodiscard]] inline ordered to_json(const CDElement& x) {
    ordered a = ordered::array();
    for (const auto& c : x.coefficients()) a.push_back(c.str());
    return a;
}

} // namespace xprod::json
