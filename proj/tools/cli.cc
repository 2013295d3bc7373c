// Copyright 2026 The hgs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <iostream>
#include <charconv>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "hgs/boolean_function.h"
#include "hgs/entanglement.h"
#include "hgs/errors.h"
#include "hgs/hypergraph.h"
#include "hgs/json_io.h"
#include "hgs/pauli.h"
#include "hgs/sign_state.h"
#include "hgs/transforms.h"

namespace hgs::cli {

namespace {

constexpr int kSchemaVersion = 1;
constexpr std::size_t kMaxAnalyzeVertices = 8;

// Input failed verification against the numeric engine.
class VerificationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct Context {
    std::istream &in;
    std::ostream &out;
};

Hypergraph read_hypergraph(const std::string &arg, Context &ctx) {
    if (arg == "-") {
        std::string text((std::istreambuf_iterator<char>(ctx.in)), std::istreambuf_iterator<char>());
        return parse_hypergraph_any(text);
    }
    return parse_hypergraph_any(arg);
}

nlohmann::json envelope(const std::string &command) {
    return nlohmann::json{{"schema", kSchemaVersion}, {"command", command}};
}

const char *yes_no(bool b) {
    return b ? "yes" : "no";
}

ZOutcome parse_outcome(const std::string &text) {
    if (text == "+1" || text == "1" || text == "+") {
        return ZOutcome::Plus;
    }
    if (text == "-1" || text == "-") {
        return ZOutcome::Minus;
    }
    throw ParseError("measurement outcome must be +1 or -1, got '" + text + "'");
}

std::uint64_t parse_seed(const std::string &text) {
    constexpr std::string_view prefix = "seed=";
    std::string_view v = text;
    if (v.starts_with(prefix)) {
        v.remove_prefix(prefix.size());
    }
    std::uint64_t seed = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), seed);
    if (v.empty() || ec != std::errc{} || ptr != v.data() + v.size()) {
        throw ParseError("--sample expects seed=<u64>, got '" + text + "'");
    }
    return seed;
}

// ---------------------------------------------------------------------------

void cmd_show(const Hypergraph &g, bool json, Context &ctx) {
    auto report = separability_structure(g);
    auto cls = classify(g);
    if (json) {
        auto doc = envelope("show");
        doc["hypergraph"] = to_string(g);
        doc["graph"] = hypergraph_to_json(g);
        doc["rank"] = rank(g);
        doc["components"] = report.max_m;
        doc["trivial"] = is_trivial(g);
        doc["fully_separable"] = report.fully_separable;
        doc["completely_entangled"] = report.completely_entangled;
        doc["class"] = to_string(cls);
        ctx.out << doc.dump(2) << "\n";
        return;
    }
    ctx.out << "hypergraph: " << to_string(g) << "\n"
            << "vertices: " << g.num_vertices() << "\n"
            << "edges: " << g.num_edges() << "\n"
            << "rank: " << rank(g) << "\n"
            << "components: " << report.max_m << "\n"
            << "trivial: " << yes_no(is_trivial(g)) << "\n"
            << "fully_separable: " << yes_no(report.fully_separable) << "\n"
            << "completely_entangled: " << yes_no(report.completely_entangled) << "\n"
            << "class: " << to_string(cls) << "\n";
}

void cmd_state(const Hypergraph &g, bool json, Context &ctx) {
    check_qubit_capacity(g.num_vertices());
    auto s = build_state(g);
    if (json) {
        auto doc = envelope("state");
        doc["n"] = s.num_qubits();
        doc["signs"] = sign_string(s);
        doc["phase"] = s.phase().str();
        ctx.out << doc.dump(2) << "\n";
        return;
    }
    ctx.out << sign_string(s) << "\n"
            << "phase: " << s.phase().str() << "\n";
}

void cmd_apply(const Hypergraph &g, const std::string &pauli_text, bool verify, bool json, Context &ctx) {
    auto p = parse_pauli(pauli_text);
    auto result = apply_pauli_element(g, p);
    std::optional<bool> verified;
    if (verify) {
        verified = same_vector(build_state(result), apply_pauli(build_state(g), p));
    }
    if (json) {
        auto doc = envelope("apply");
        doc["input"] = to_string(g);
        doc["pauli"] = to_string(p);
        doc["hypergraph"] = to_string(result.graph);
        doc["phase"] = result.phase.str();
        if (verified) {
            doc["verified"] = *verified;
        }
        ctx.out << doc.dump(2) << "\n";
    } else {
        ctx.out << to_string(result.graph) << "\n"
                << "phase: " << result.phase.str() << "\n";
        if (verified) {
            ctx.out << "verify: " << (*verified ? "ok" : "MISMATCH") << "\n";
        }
    }
    if (verified && !*verified) {
        throw VerificationError("symbolic result disagrees with the numeric state");
    }
}

void cmd_measure(const Hypergraph &g,
                 long long k,
                 const std::string &outcome_text,
                 const std::string &sample,
                 bool verify,
                 bool json,
                 Context &ctx) {
    if (k < 1 || static_cast<std::size_t>(k) > g.num_vertices()) {
        throw std::out_of_range("vertex " + std::to_string(k) + " outside 1.." + std::to_string(g.num_vertices()));
    }
    auto vertex = static_cast<std::size_t>(k);
    check_qubit_capacity(g.num_vertices());
    auto state = build_state(g);
    ZOutcome outcome;
    if (!sample.empty()) {
        // Draw the outcome with its exact probability.
        std::mt19937_64 rng(parse_seed(sample));
        auto plus = project_z(state, vertex, ZOutcome::Plus).probability;
        std::uniform_int_distribution<std::uint64_t> draw(0, plus.denominator - 1);
        outcome = draw(rng) < plus.numerator ? ZOutcome::Plus : ZOutcome::Minus;
    } else if (!outcome_text.empty()) {
        outcome = parse_outcome(outcome_text);
    } else {
        throw ParseError("measure needs an outcome (+1 or -1) or --sample seed=<u64>");
    }
    auto projection = project_z(state, vertex, outcome);
    auto post = measure_z_rule(g, vertex, outcome);
    std::optional<bool> verified;
    if (verify) {
        verified = same_vector(projection.post_state, build_state(post));
    }
    std::string outcome_str = outcome == ZOutcome::Plus ? "+1" : "-1";
    if (json) {
        auto doc = envelope("measure");
        doc["input"] = to_string(g);
        doc["vertex"] = vertex;
        doc["outcome"] = outcome_str;
        doc["hypergraph"] = to_string(post);
        doc["probability"] = projection.probability.str();
        if (verified) {
            doc["verified"] = *verified;
        }
        ctx.out << doc.dump(2) << "\n";
    } else {
        ctx.out << to_string(post) << "\n"
                << "outcome: " << outcome_str << "\n"
                << "probability: " << projection.probability.str() << "\n";
        if (verified) {
            ctx.out << "verify: " << (*verified ? "ok" : "MISMATCH") << "\n";
        }
    }
    if (verified && !*verified) {
        throw VerificationError("symbolic result disagrees with the numeric state");
    }
}

void cmd_analyze(const Hypergraph &g, bool json, Context &ctx) {
    if (g.num_vertices() > kMaxAnalyzeVertices) {
        throw CapacityError("analyze supports at most " + std::to_string(kMaxAnalyzeVertices) + " vertices");
    }
    auto report = separability_structure(g);
    auto bounds = schmidt_bounds(g);
    if (json) {
        auto doc = envelope("analyze");
        doc["hypergraph"] = to_string(g);
        doc["separability"] = to_json(report);
        doc["schmidt_bounds"] = to_json(bounds);
        ctx.out << doc.dump(2) << "\n";
        return;
    }
    ctx.out << "hypergraph: " << to_string(g) << "\n"
            << "components: " << report.max_m << "\n";
    for (std::size_t i = 0; i < report.components.size(); ++i) {
        ctx.out << "  " << report.components[i].str() << " -> " << to_string(report.factors[i]) << "\n";
    }
    ctx.out << "max_m: " << report.max_m << "\n"
            << "fully_separable: " << yes_no(report.fully_separable) << "\n"
            << "completely_entangled: " << yes_no(report.completely_entangled) << "\n"
            << "schmidt_lower_bound: " << bounds.lower << " (bipartition " << bounds.witness_bipartition.str()
            << ")\n"
            << "schmidt_upper_bound: " << bounds.upper << " (cover " << bounds.witness_cover.str()
            << ", every deletion branch trivial)\n"
            << "existential_cover: " << bounds.existential_cover_size << " (cover "
            << bounds.existential_cover.str() << ", some deletion branch trivial)\n"
            << "schmidt_bounds: [" << bounds.lower << "," << bounds.upper << "]"
            << (bounds.exact() ? " exact" : "") << "\n";
    if (bounds.existential_cover_size < bounds.lower) {
        ctx.out << "note: the existential cover is smaller than the lower bound and does not bound the Schmidt "
                   "measure\n";
    }
}

void cmd_census(long long n, bool check, bool json, Context &ctx) {
    if (n < 1 || n > 4) {
        throw std::out_of_range("census supports 1 <= n <= 4, got " + std::to_string(n));
    }
    auto report = census(static_cast<std::size_t>(n));
    if (json) {
        auto doc = envelope("census");
        doc["census"] = to_json(report);
        ctx.out << doc.dump(2) << "\n";
    } else {
        ctx.out << "n: " << report.n << "\n"
                << "total: " << report.total << "\n"
                << "disconnected: " << report.disconnected << "\n"
                << "connected: " << report.connected << "\n"
                << "trivial: " << report.trivial << "\n"
                << "containing_full_edge: " << report.containing_full_edge << "\n"
                << "stabilizer: " << report.stabilizer << "\n"
                << "graph_state: " << report.graph_state << "\n"
                << "disconnected_bound: " << report.disconnected_bound << "\n";
    }
    if (check) {
        if (!json) {
            ctx.out << "check disconnected <= bound: " << (report.bound_holds() ? "ok" : "FAILED") << "\n"
                    << "check full edge implies connected: " << (report.full_edge_implies_connected ? "ok" : "FAILED")
                    << "\n";
        }
        if (!report.bound_holds() || !report.full_edge_implies_connected) {
            throw VerificationError("census check failed");
        }
    }
}

void cmd_isomorphic(const Hypergraph &g, const Hypergraph &h, bool json, Context &ctx) {
    auto p = isomorphic(g, h);
    if (json) {
        auto doc = envelope("isomorphic");
        doc["isomorphic"] = p.has_value();
        if (p) {
            doc["permutation"] = std::vector<std::size_t>(p->images().begin(), p->images().end());
        }
        ctx.out << doc.dump(2) << "\n";
        return;
    }
    ctx.out << "isomorphic: " << yes_no(p.has_value()) << "\n";
    if (p) {
        ctx.out << "permutation: " << p->str() << "\n";
    }
}

void cmd_export_dot(const Hypergraph &g, Context &ctx) {
    ctx.out << "graph hypergraph {\n";
    for (std::size_t v = 1; v <= g.num_vertices(); ++v) {
        ctx.out << "  v" << v << " [shape=circle, label=\"" << v << "\"];\n";
    }
    std::size_t index = 0;
    for (auto e : g.edges()) {
        ++index;
        std::string label = e.empty() ? "\xE2\x88\x85" : e.str();  // U+2205 for Φ
        ctx.out << "  e" << index << " [shape=box, label=\"" << label << "\"];\n";
    }
    index = 0;
    for (auto e : g.edges()) {
        ++index;
        for (auto v : e.vertices()) {
            ctx.out << "  v" << v << " -- e" << index << ";\n";
        }
    }
    ctx.out << "}\n";
}

}  // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact hypergraph-state calculus", "hgs"};
    app.require_subcommand(1);

    std::string graph_arg;
    std::string other_arg;
    std::string pauli_arg;
    std::string outcome_arg;
    std::string sample_arg;
    long long number = 0;
    bool json = false;
    bool verify = false;
    bool check = false;

    auto *show = app.add_subcommand("show", "Summarize a hypergraph");
    auto *state = app.add_subcommand("state", "Print the sign table of |g>");
    auto *apply = app.add_subcommand("apply", "Apply a Pauli element symbolically");
    auto *measure = app.add_subcommand("measure", "Measure sigma_z on one vertex");
    auto *analyze = app.add_subcommand("analyze", "Separability and Schmidt-measure bounds");
    auto *census_cmd = app.add_subcommand("census", "Enumerate all hypergraphs on n vertices");
    auto *iso = app.add_subcommand("isomorphic", "Search for a vertex permutation between two hypergraphs");
    auto *dot = app.add_subcommand("export-dot", "Emit a DOT incidence drawing");

    for (auto *sub : {show, state, apply, measure, analyze, iso, dot}) {
        sub->add_option("hypergraph", graph_arg, "Compact text or JSON; '-' reads stdin")->required();
    }
    for (auto *sub : {show, state, apply, measure, analyze, census_cmd, iso}) {
        sub->add_flag("--json", json, "Machine-readable output");
    }
    apply->add_option("pauli", pauli_arg, "e.g. XIZY or \"-i XZIY\" (use -- before a leading '-')")->required();
    apply->add_flag("--verify", verify, "Cross-check against the numeric state engine");
    measure->add_option("vertex", number, "Vertex to measure")->required();
    measure->add_option("outcome", outcome_arg, "+1 or -1");
    measure->add_option("--sample", sample_arg, "Draw the outcome: seed=<u64>");
    measure->add_flag("--verify", verify, "Cross-check against the numeric state engine");
    census_cmd->add_option("n", number, "Vertex count, 1..4")->required();
    census_cmd->add_flag("--check", check, "Assert the disconnected-count bound and full-edge connectivity");
    iso->add_option("other", other_arg, "Second hypergraph")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        std::ostringstream sink_out;
        std::ostringstream sink_err;
        int code = app.exit(e, sink_out, sink_err);
        out << sink_out.str();
        err << sink_err.str();
        return code == 0 ? kSuccess : kParseFailure;
    }

    Context ctx{in, out};
    try {
        if (*census_cmd) {
            cmd_census(number, check, json, ctx);
            return kSuccess;
        }
        auto g = read_hypergraph(graph_arg, ctx);
        if (*show) {
            cmd_show(g, json, ctx);
        } else if (*state) {
            cmd_state(g, json, ctx);
        } else if (*apply) {
            cmd_apply(g, pauli_arg, verify, json, ctx);
        } else if (*measure) {
            cmd_measure(g, number, outcome_arg, sample_arg, verify, json, ctx);
        } else if (*analyze) {
            cmd_analyze(g, json, ctx);
        } else if (*iso) {
            cmd_isomorphic(g, read_hypergraph(other_arg, ctx), json, ctx);
        } else if (*dot) {
            cmd_export_dot(g, ctx);
        }
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return kParseFailure;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kValidationFailure;
    }
    return kSuccess;
}

}  // namespace hgs::cli
