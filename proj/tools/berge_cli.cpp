// Copyright 2026 The berge-turan Authors
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

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "berge/berge.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitError = 2;
constexpr int kExitAbsent = 3;

struct Owned {
    char* ptr = nullptr;
    ~Owned() { berge_string_free(ptr); }
    std::string str() const { return ptr ? ptr : ""; }
};

struct HypergraphDeleter {
    void operator()(berge_hypergraph* h) const { berge_hypergraph_free(h); }
};
using HypergraphPtr = std::unique_ptr<berge_hypergraph, HypergraphDeleter>;

class Failure {
public:
    explicit Failure(berge_status status, std::string message = {}) : status(status), message(std::move(message)) {}
    berge_status status;
    std::string message;
};

berge_status checked(berge_status status) {
    if (status < 0) throw Failure(status);
    return status;
}

HypergraphPtr load(const std::string& path) {
    berge_hypergraph* h = nullptr;
    if (path == "-") {
        const std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
        checked(berge_hypergraph_parse(text.c_str(), &h));
    } else {
        checked(berge_hypergraph_read(path.c_str(), &h));
    }
    return HypergraphPtr(h);
}

void write_stdout(const std::string& s) { std::fwrite(s.data(), 1, s.size(), stdout); }

void write_report(const std::string& path, const std::string& s) {
    if (path.empty()) {
        std::fwrite(s.data(), 1, s.size(), stderr);
        return;
    }
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (f == nullptr) throw Failure(BERGE_ERR_IO, "cannot open " + path + " for writing");
    std::fwrite(s.data(), 1, s.size(), f);
    std::fclose(f);
}

int exit_code(berge_status status) {
    switch (status) {
    case BERGE_OK: return kExitOk;
    case BERGE_ABSENT: return kExitAbsent;
    case BERGE_VIOLATED: return kExitViolated;
    default: return kExitError;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Berge hypergraph toolkit: containment, shadow embeddings, Ramsey checks, constructions, bounds"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", berge_version());

    berge_config config;
    berge_config_init(&config);
    app.add_option("--workers", config.workers, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", config.seed, "Root seed for every random choice");
    app.add_option("--pattern-guard", config.pattern_guard, "Largest pattern accepted by containment")
        ->check(CLI::PositiveNumber);
    app.add_option("--search-guard", config.search_guard, "Largest n for exact hypergraph search (env BERGE_GUARD_N)")
        ->check(CLI::PositiveNumber);
    app.add_option("--graph-guard", config.graph_guard, "Largest n for exact graph search")->check(CLI::PositiveNumber);

    std::string host_path, pattern, report_path;

    auto* check = app.add_subcommand("check", "Search for a Berge copy of a pattern (exit 3 when absent)");
    check->add_option("--host", host_path, "Hypergraph file, or - for stdin")->required();
    check->add_option("--pattern", pattern, "Pattern such as K3, K2,3, C4, P4")->required();

    int g_max = 6;
    auto* girth = app.add_subcommand("girth", "Berge girth up to a bound");
    girth->add_option("--host", host_path, "Hypergraph file, or - for stdin")->required();
    girth->add_option("--g-max", g_max, "Largest cycle length searched")->check(CLI::Range(2, 64));

    auto* validate = app.add_subcommand("validate", "Report invalid hyperedges (exit 1 when any)");
    validate->add_option("--host", host_path, "Hypergraph file, or - for stdin")->required();

    auto* count = app.add_subcommand("count", "Edge count, degree sum and deficiency sum");
    count->add_option("--host", host_path, "Hypergraph file, or - for stdin")->required();

    std::string procedure;
    std::optional<std::uint64_t> shuffle;
    auto* embed = app.add_subcommand("embed", "Greedy shadow-graph embedding (exit 1 on a violation)");
    embed->add_option("--proc", procedure, "Procedure")
        ->required()
        ->check(CLI::IsMember({"unique", "matching", "c4", "triangle"}));
    embed->add_option("--host", host_path, "Hypergraph file, or - for stdin")->required();
    embed->add_option("--pattern", pattern, "Pattern for the matching threshold and the witness");
    embed->add_option("--shuffle", shuffle, "Process hyperedges in a seeded random order");
    embed->add_option("--report", report_path, "Write the JSON summary here instead of stderr");

    std::string lemma;
    berge_verify_params verify_params;
    berge_verify_params_init(&verify_params);
    auto* verify = app.add_subcommand("verify", "Exhaustive or randomized lemma check (exit 1 on a counterexample)");
    verify->add_option("--lemma", lemma, "Lemma")
        ->required()
        ->check(CLI::IsMember({"ramsey-k5", "ramsey-k6", "ramsey-k7", "mono-triangle", "rainbow", "rainbow-bipartite"}));
    verify->add_option("--r", verify_params.r, "Clique size for rainbow");
    verify->add_option("--s", verify_params.s, "Row count for rainbow-bipartite");
    verify->add_option("--t", verify_params.t, "Column count sought for rainbow-bipartite");
    verify->add_option("--vertices", verify_params.vertices,
                       "Order of the coloured graph (columns for rainbow-bipartite); default the guaranteed size");
    verify->add_option("--trials", verify_params.trials, "Random colourings");

    std::string kind, input_path;
    berge_construct_params construct_params;
    berge_construct_params_init(&construct_params);
    auto* construct = app.add_subcommand("construct", "Build an extremal construction with certificates");
    construct->add_option("--kind", kind, "Construction")
        ->required()
        ->check(CLI::IsMember({"kr-blowup", "kst-blowup", "star-free", "girth5", "triple-blowup", "turan", "plane"}));
    construct->add_option("--n", construct_params.n, "Vertex count");
    construct->add_option("--r", construct_params.r, "Clique size");
    construct->add_option("--s", construct_params.s, "Biclique side s");
    construct->add_option("--t", construct_params.t, "Biclique side t, or star size");
    construct->add_option("--p", construct_params.p, "Part count for turan");
    construct->add_option("--q", construct_params.q, "Prime field order for plane");
    construct->add_option("--trials", construct_params.trials, "Greedy restarts for girth5");
    construct->add_option("--input", input_path, "Base graph (kst-blowup) or triple system (triple-blowup)");
    construct->add_option("--report", report_path, "Write the certificate JSON here instead of stderr");

    int n = 0;
    std::vector<std::string> forbid;
    std::optional<int> uniform;
    std::vector<int> sizes;
    bool simple = false;
    bool graph = false;
    std::string objective = "edges";
    auto* search = app.add_subcommand("search", "Exact extremal search by branch and bound");
    search->add_option("--n", n, "Vertex count")->required();
    search->add_option("--forbid", forbid, "Forbidden pattern (repeatable)")->required();
    search->add_option("--uniform", uniform, "Single hyperedge size");
    search->add_option("--sizes", sizes, "Allowed hyperedge sizes")->delimiter(',');
    search->add_flag("--simple", simple, "Forbid repeated hyperedges");
    search->add_flag("--graph", graph, "Compute ex(n, forbidden) over simple graphs");
    search->add_option("--objective", objective, "Objective")
        ->check(CLI::IsMember({"edges", "degree_sum", "deficiency_sum"}));

    std::string bound_name, inequality;
    int girth_value = 5;
    std::map<std::string, std::int64_t> bound_params;
    bool list_bounds = false;
    auto* bounds = app.add_subcommand("bounds", "Evaluate a bound formula, or check an inequality on a hypergraph");
    bounds->add_option("--name", bound_name, "Bound name");
    bounds->add_flag("--list", list_bounds, "List bound names");
    for (const char* key : {"n", "k", "m", "r", "s", "t", "edges"}) {
        bounds->add_option_function<std::int64_t>(std::string("--") + key,
                                                  [&bound_params, key](const std::int64_t& v) { bound_params[key] = v; },
                                                  "Bound parameter");
    }
    bounds->add_option("--check", inequality, "Inequality to check on --host")
        ->check(CLI::IsMember({"edge_sum", "linear_observation", "girth_proposition"}));
    bounds->add_option("--host", host_path, "Hypergraph file for --check, or - for stdin");
    bounds->add_option("--pattern", pattern, "Forbidden pattern for --check");
    bounds->add_option("--girth", girth_value, "Girth for girth_proposition");

    std::string suite = "paper";
    std::vector<int> table_ns;
    auto* table = app.add_subcommand("table", "Finite-n table of constructions and bound evaluations (CSV)");
    table->add_option("--suite", suite, "Suite")->check(CLI::IsMember({"paper"}));
    table->add_option("--n", table_ns, "Vertex counts (default 9 27 81)")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    if (const char* guard = std::getenv("BERGE_GUARD_N"); guard != nullptr && *guard != '\0') {
        char* end = nullptr;
        const long value = std::strtol(guard, &end, 10);
        if (*end != '\0' || value < 1 || value > 64) {
            std::fprintf(stderr, "error: BERGE_GUARD_N must be an integer in 1..64\n");
            return kExitError;
        }
        config.search_guard = static_cast<int>(value);
    }

    const char* pattern_arg = pattern.empty() ? nullptr : pattern.c_str();
    try {
        Owned json, body;
        berge_status status = BERGE_OK;
        if (*check) {
            const auto h = load(host_path);
            status = checked(berge_check(h.get(), pattern.c_str(), &config, &json.ptr));
            write_stdout(json.str());
        } else if (*girth) {
            const auto h = load(host_path);
            status = checked(berge_girth(h.get(), g_max, &config, &json.ptr));
            write_stdout(json.str());
        } else if (*validate) {
            const auto h = load(host_path);
            status = checked(berge_hypergraph_validate(h.get(), &json.ptr));
            write_stdout(json.str());
        } else if (*count) {
            const auto h = load(host_path);
            status = checked(berge_count_report(h.get(), &json.ptr));
            write_stdout(json.str());
        } else if (*embed) {
            const auto h = load(host_path);
            status = checked(berge_embed(h.get(), procedure.c_str(), pattern_arg, shuffle ? &*shuffle : nullptr,
                                         &config, &body.ptr, &json.ptr));
            write_stdout(body.str());
            write_report(report_path, json.str());
        } else if (*verify) {
            status = checked(berge_verify(lemma.c_str(), &verify_params, &config, &json.ptr));
            write_stdout(json.str());
        } else if (*construct) {
            HypergraphPtr input;
            if (!input_path.empty()) input = load(input_path);
            status = checked(berge_construct(kind.c_str(), &construct_params, input.get(), &config, &body.ptr, &json.ptr));
            write_stdout(body.str());
            write_report(report_path, json.str());
        } else if (*search) {
            if (uniform) sizes.push_back(*uniform);
            std::vector<const char*> names;
            for (const auto& f : forbid) names.push_back(f.c_str());
            berge_search_params p{n, names.data(), names.size(), sizes.data(), sizes.size(), simple ? 1 : 0,
                                  objective.c_str(), graph ? 1 : 0};
            status = checked(berge_search(&p, &config, &json.ptr));
            write_stdout(json.str());
        } else if (*bounds) {
            if (list_bounds) {
                for (const char* name : {"path_bound", "edge_sum_bound", "general_upper", "kst_graph_bound",
                                         "c4_free_upper", "c4_free_lower", "c4_weak_upper", "lv_girth5"})
                    std::printf("%s\n", name);
                return kExitOk;
            }
            if (!inequality.empty()) {
                if (host_path.empty()) {
                    std::fprintf(stderr, "error: --check needs --host\n");
                    return kExitError;
                }
                const auto h = load(host_path);
                status = checked(berge_inequality(inequality.c_str(), h.get(), pattern_arg, girth_value, &config,
                                                  &json.ptr));
            } else {
                if (bound_name.empty()) {
                    std::fprintf(stderr, "error: bounds needs --name, --check or --list\n");
                    return kExitError;
                }
                std::vector<const char*> keys;
                std::vector<std::int64_t> values;
                for (const auto& [k, v] : bound_params) {
                    keys.push_back(k.c_str());
                    values.push_back(v);
                }
                status = checked(berge_bounds(bound_name.c_str(), keys.data(), values.data(), keys.size(), &json.ptr));
            }
            write_stdout(json.str());
        } else if (*table) {
            status = checked(berge_table(suite.c_str(), table_ns.data(), table_ns.size(), &config, &json.ptr));
            write_stdout(json.str());
        }
        std::fflush(stdout);
        return exit_code(status);
    } catch (const Failure& f) {
        std::fflush(stdout);
        const std::string message = f.message.empty() ? berge_last_error() : f.message;
        std::fprintf(stderr, "error: %s: %s\n", berge_status_name(f.status), message.c_str());
        return kExitError;
    }
}
