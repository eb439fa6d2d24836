#pragma once
/**
 * @file cli.hpp
 * @brief Command-line front end. Kept header-only so tests can drive it
 *        in-process.
 *
 * Exit codes: 0 everything holds, 1 an identity is violated, 2 bad input
 * (arguments, JSON, table schema), 3 internal invariant breach.
 */

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "xprod/xprod.hpp"

namespace xprod::cli {

enum ExitCode : int { kOk = 0, kViolated = 1, kBadInput = 2, kInternal = 3 };

enum class Command { emit_table, cross, verify, obstruction, g_tensor, iso, cd_check, falsify };

struct CliConfig {
    Command command = Command::verify;
    std::string table = "cross7";
    std::string target = "cross7"; ///< second table for iso
    std::size_t samples = 50;
    std::uint64_t seed = 1;
    bool json = false;
    std::optional<std::string> out;
    std::vector<std::string> vectors; ///< positional JSON arrays for cross
    int level = 3;                    ///< cd-check
    std::size_t count = 100;          ///< falsify candidates per dimension
    bool independent = false;         ///< g-tensor: strictly increasing indices only
};

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline ProductTable load_table(const std::string& source) {
    if (source == "cross3") return canonical_table(CanonicalKind::cross3);
    if (source == "cross7") return canonical_table(CanonicalKind::cross7);
    if (source == "octonion-derived") return derived_table();
    std::ifstream in(source);
    if (!in) throw BadInput("cannot open table file \"" + source + "\" (builtins: cross3, cross7, octonion-derived)");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return json::parse_table(ss.str());
    } catch (const std::exception& e) {
        throw BadInput(source + ": " + e.what());
    }
}

namespace detail {

inline std::string text(const Quantity& q) {
    return std::visit(
        [](const auto& v) {
            std::ostringstream os;
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Vector>) {
                os << json::to_json(v).dump();
            } else {
                os << v;
            }
            return os.str();
        },
        q);
}

inline void describe(std::ostream& os, const IdentityReport& r) {
    os << identity_name(r.id) << ": " << (r.holds() ? "holds" : "violated") << " (" << r.cases << " cases)\n";
    if (!r.witness) return;
    const auto& w = *r.witness;
    for (const auto& [name, v] : w.inputs) os << "  " << name << " = " << json::to_json(v).dump() << '\n';
    if (!w.indices.empty()) {
        os << "  indices =";
        for (auto i : w.indices) os << ' ' << i;
        os << '\n';
    }
    os << "  lhs = " << text(w.lhs) << '\n' << "  rhs = " << text(w.rhs) << '\n';
    for (const auto& [name, v] : w.extra) os << "  " << name << " = " << v << '\n';
}

inline std::string index_label(const std::array<std::size_t, 4>& q) {
    return "g(" + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," + std::to_string(q[2]) + "," +
           std::to_string(q[3]) + ")";
}

inline int cmd_emit_table(const CliConfig& c, std::ostream& os) {
    os << json::dump_table(load_table(c.table));
    return kOk;
}

inline int cmd_cross(const CliConfig& c, std::ostream& os) {
    const ProductTable t = load_table(c.table);
    if (c.vectors.size() != 2) throw BadInput("cross expects exactly two vector arguments");
    Vector a(1), b(1);
    try {
        a = json::parse_vector(c.vectors[0]);
        b = json::parse_vector(c.vectors[1]);
    } catch (const std::exception& e) {
        throw BadInput(e.what());
    }
    if (a.dim() != t.dim() || b.dim() != t.dim()) {
        throw BadInput("vector dimensions must equal the table dimension " + std::to_string(t.dim()));
    }
    const Vector p = cross(t, a, b);
    if (c.json) {
        json::ordered o;
        o["product"] = json::to_json(p);
        os << o.dump() << '\n';
    } else {
        os << json::to_json(p).dump() << '\n';
    }
    return kOk;
}

inline int cmd_verify(const CliConfig& c, std::ostream& os) {
    const ProductTable t = load_table(c.table);
    const auto reports = verify_all(t, c.samples, c.seed);
    const auto eq6 = find_eq6_counterexample(t);
    const bool ok = all_hold(reports);
    if (c.json) {
        json::ordered o;
        o["table"] = c.table;
        o["dimension"] = t.dim();
        o["samples"] = c.samples;
        o["seed"] = c.seed;
        json::ordered rs = json::ordered::array();
        for (const auto& r : reports) rs.push_back(json::to_json(r));
        o["reports"] = std::move(rs);
        if (eq6) {
            json::ordered e;
            e["triple"] = {eq6->i, eq6->j, eq6->k};
            e["value"] = json::to_json(eq6->value);
            o["eq6_counterexample"] = std::move(e);
        } else {
            o["eq6_counterexample"] = nullptr;
        }
        o["all_hold"] = ok;
        os << o.dump(2) << '\n';
    } else {
        os << "table " << c.table << " (dimension " << t.dim() << "), " << c.samples << " samples, seed " << c.seed
           << '\n';
        for (const auto& r : reports) describe(os, r);
        if (eq6) {
            os << "eq6 (informational): fails at {e" << eq6->i << ",e" << eq6->j << ",e" << eq6->k
               << "} = " << json::to_json(eq6->value).dump() << '\n';
        } else {
            os << "eq6 (informational): ternary product vanishes on all basis triples\n";
        }
        os << (ok ? "all identities hold\n" : "some identities are violated\n");
    }
    return ok ? kOk : kViolated;
}

inline int cmd_obstruction(const CliConfig& c, std::ostream& os) {
    const auto r = obstruction_report(load_table(c.table));
    if (c.json) {
        os << json::to_json(r).dump(2) << '\n';
    } else {
        os << "dimension " << r.dim << '\n'
           << "lhs_sum " << r.lhs_sum << '\n'
           << "rhs_sum " << r.rhs_sum << '\n'
           << "lhs_closed " << r.lhs_closed << '\n'
           << "rhs_closed " << r.rhs_closed << '\n'
           << "poly " << r.poly << '\n'
           << "consistent " << (r.consistent() ? "yes" : "no") << '\n';
    }
    return r.consistent() ? kOk : kViolated;
}

inline int cmd_g_tensor(const CliConfig& c, std::ostream& os) {
    const auto g = g_tensor(load_table(c.table));
    const auto comps = c.independent ? g.independent() : g.nonzero();
    if (c.json) {
        json::ordered a = json::ordered::array();
        for (const auto& comp : comps) {
            json::ordered o;
            o["index"] = comp.index;
            o["value"] = comp.value.str();
            a.push_back(std::move(o));
        }
        os << a.dump() << '\n';
    } else {
        for (const auto& comp : comps) os << index_label(comp.index) << " = " << comp.value << '\n';
    }
    return kOk;
}

inline int cmd_iso(const CliConfig& c, std::ostream& os) {
    const ProductTable a = load_table(c.table);
    const ProductTable b = load_table(c.target);
    if (a.dim() != 7 || b.dim() != 7) throw BadInput("iso requires two seven-dimensional tables");
    const auto res = find_signed_isomorphism(a, b);
    const std::size_t pairs = res.match ? verified_pairs(*res.match, a, b) : 0;
    if (res.match && pairs != 21) throw std::logic_error("iso: reported match fails verification");
    if (c.json) {
        json::ordered o;
        o["match"] = res.match ? json::to_json(*res.match) : json::ordered(nullptr);
        o["verified_pairs"] = pairs;
        o["candidates_tried"] = res.candidates_tried;
        os << o.dump() << '\n';
    } else if (res.match) {
        os << json::to_json(*res.match).dump() << '\n'
           << "verified basis pairs: " << pairs << " of 21\n"
           << "candidates tried: " << res.candidates_tried << '\n';
    } else {
        os << "no signed permutation found (" << res.candidates_tried << " candidates)\n";
    }
    return res.match ? kOk : kViolated;
}

inline int cmd_cd_check(const CliConfig& c, std::ostream& os) {
    if (c.level < 0 || c.level > kMaxCdLevel) throw BadInput("--level must be in 0..4");
    const auto samples = c.level <= 3 ? random_pairs(c.level, c.samples, c.seed)
                                      : std::vector<std::pair<CDElement, CDElement>>{};
    const auto r = hurwitz_boundary_check(c.level, samples);
    if (c.json) {
        json::ordered o;
        o["level"] = r.level;
        o["pairs_checked"] = r.pairs_checked;
        o["multiplicative"] = r.multiplicative;
        if (r.witness) {
            json::ordered w;
            w["x"] = json::to_json(r.witness->x);
            w["y"] = json::to_json(r.witness->y);
            w["norm_sq_product"] = r.witness->product_norm_sq.str();
            w["product_of_norm_sq"] = r.witness->norm_product.str();
            o["witness"] = std::move(w);
        }
        os << o.dump() << '\n';
    } else {
        os << "level " << r.level << ": " << r.pairs_checked << " pairs, norm "
           << (r.multiplicative ? "multiplicative" : "not multiplicative") << '\n';
        if (r.witness) {
            os << "  x = " << json::to_json(r.witness->x).dump() << '\n'
               << "  y = " << json::to_json(r.witness->y).dump() << '\n'
               << "  |xy|^2 = " << r.witness->product_norm_sq << ", |x|^2|y|^2 = " << r.witness->norm_product
               << '\n';
        }
    }
    return r.matches_hurwitz() ? kOk : kViolated;
}

inline int cmd_falsify(const CliConfig& c, std::ostream& os) {
    json::ordered all = json::ordered::array();
    bool every_rejected = true;
    for (std::size_t n : sweep_dimensions()) {
        const auto certs = falsification_sweep(n, c.count, c.samples, c.seed);
        std::size_t rejected = 0;
        for (std::size_t x = 0; x < certs.size(); ++x) {
            const auto& cert = certs[x];
            rejected += cert.rejected();
            if (c.json) {
                json::ordered o;
                o["dimension"] = n;
                o["candidate"] = x;
                o["family"] = cert.candidate.family;
                o["table"] = json::to_json(cert.candidate.table);
                o["rejection"] = cert.rejection ? json::to_json(*cert.rejection) : json::ordered(nullptr);
                all.push_back(std::move(o));
            } else {
                os << "n=" << n << " #" << x << " " << cert.candidate.family << ": ";
                if (cert.rejection) {
                    describe(os, *cert.rejection);
                } else {
                    os << "NOT rejected\n";
                }
            }
        }
        every_rejected = every_rejected && rejected == certs.size();
        if (!c.json) os << "n=" << n << ": " << rejected << " of " << certs.size() << " candidates rejected\n";
    }
    if (c.json) os << all.dump(1) << '\n';
    return every_rejected ? kOk : kViolated;
}

} // namespace detail

/// Execute one parsed command, writing its output to `os`.
inline int run(const CliConfig& c, std::ostream& os) {
    switch (c.command) {
    case Command::emit_table: return detail::cmd_emit_table(c, os);
    case Command::cross: return detail::cmd_cross(c, os);
    case Command::verify: return detail::cmd_verify(c, os);
    case Command::obstruction: return detail::cmd_obstruction(c, os);
    case Command::g_tensor: return detail::cmd_g_tensor(c, os);
    case Command::iso: return detail::cmd_iso(c, os);
    case Command::cd_check: return detail::cmd_cd_check(c, os);
    case Command::falsify: return detail::cmd_falsify(c, os);
    }
    return kInternal;
}

/// Parse argv and run. Diagnostics go to `err`.
inline int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact construction and verification of vector cross products", "xprod"};
    app.require_subcommand(1);
    CliConfig c;

    auto common = [&c](CLI::App* sub, bool with_table) {
        if (with_table) sub->add_option("--table", c.table, "builtin (cross3, cross7, octonion-derived) or JSON file");
        sub->add_flag("--json", c.json, "machine-readable output");
        sub->add_option("--out", c.out, "write output to this file instead of stdout");
    };
    auto sampling = [&c](CLI::App* sub) {
        sub->add_option("--samples", c.samples, "random instances per identity")->check(CLI::PositiveNumber);
        sub->add_option("--seed", c.seed, "64-bit seed");
    };

    auto* emit = app.add_subcommand("emit-table", "write a table in canonical JSON");
    common(emit, true);
    auto* crs = app.add_subcommand("cross", "evaluate a x b");
    common(crs, true);
    // Separate scalar positionals: CLI11 would split a bracketed argument bound to a vector.
    std::string lhs_vec, rhs_vec;
    crs->add_option("a", lhs_vec, "left operand, JSON array of rationals")->required();
    crs->add_option("b", rhs_vec, "right operand, JSON array of rationals")->required();
    auto* ver = app.add_subcommand("verify", "run every identity check");
    common(ver, true);
    sampling(ver);
    auto* obs = app.add_subcommand("obstruction", "dimension obstruction certificate");
    common(obs, true);
    auto* gt = app.add_subcommand("g-tensor", "nonzero components of g_ijmn");
    common(gt, true);
    gt->add_flag("--independent", c.independent, "only strictly increasing index quadruples");
    auto* iso = app.add_subcommand("iso", "search a signed permutation between two 7D tables");
    common(iso, true);
    iso->add_option("--target", c.target, "second table (default cross7)");
    auto* cd = app.add_subcommand("cd-check", "norm multiplicativity on the doubling ladder");
    common(cd, false);
    sampling(cd);
    cd->add_option("--level", c.level, "0 reals .. 4 sedenions")->check(CLI::Range(0, kMaxCdLevel));
    auto* fal = app.add_subcommand("falsify", "reject candidate products in n = 2, 4, 5, 6");
    common(fal, false);
    sampling(fal);
    fal->add_option("--count", c.count, "candidates per dimension")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "xprod: " << e.what() << '\n';
        return kBadInput;
    }

    const std::pair<CLI::App*, Command> table[] = {
        {emit, Command::emit_table}, {crs, Command::cross},   {ver, Command::verify},
        {obs, Command::obstruction}, {gt, Command::g_tensor}, {iso, Command::iso},
        {cd, Command::cd_check},     {fal, Command::falsify},
    };
    for (const auto& [sub, cmd] : table) {
        if (sub->parsed()) c.command = cmd;
    }
    if (c.command == Command::cross) c.vectors = {lhs_vec, rhs_vec};

    std::ostringstream buffer;
    int code = kInternal;
    try {
        code = run(c, buffer);
    } catch (const BadInput& e) {
        err << "xprod: " << e.what() << '\n';
        return kBadInput;
    } catch (const std::exception& e) {
        err << "xprod: internal error: " << e.what() << '\n';
        return kInternal;
    }
    if (c.out) {
        std::ofstream f(*c.out, std::ios::binary);
        if (!f) {
            err << "xprod: cannot write " << *c.out << '\n';
            return kBadInput;
        }
        f << buffer.str();
    } else {
        out << buffer.str();
    }
    return code;
}

} // namespace xprod::cli
