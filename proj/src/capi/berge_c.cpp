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

#include "berge/berge.h"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <new>
#include <string>
#include <vector>

#include "berge/constructions.hpp"
#include "berge/containment.hpp"
#include "berge/core.hpp"
#include "berge/embeddings.hpp"
#include "berge/error.hpp"
#include "berge/extremal.hpp"
#include "berge/io.hpp"
#include "berge/ramsey.hpp"
#include "berge/report.hpp"
#include "berge/suite.hpp"

struct berge_hypergraph {
    berge::io::LabeledHypergraph value;
};

namespace {

using namespace berge;

thread_local std::string last_error;

berge_status to_status(ErrorCode code) {
    switch (code) {
    case ErrorCode::invalid_argument: return BERGE_ERR_INVALID_ARGUMENT;
    case ErrorCode::parse: return BERGE_ERR_PARSE;
    case ErrorCode::io: return BERGE_ERR_IO;
    case ErrorCode::guard_exceeded: return BERGE_ERR_GUARD;
    case ErrorCode::precondition: return BERGE_ERR_PRECONDITION;
    case ErrorCode::internal: return BERGE_ERR_INTERNAL;
    }
    return BERGE_ERR_INTERNAL;
}

template <typename Body>
berge_status guarded(Body&& body) {
    try {
        last_error.clear();
        return body();
    } catch (const Error& e) {
        last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return BERGE_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return BERGE_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown failure";
        return BERGE_ERR_INTERNAL;
    }
}

char* duplicate(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(char** out, const std::string& s) {
    if (out != nullptr) *out = duplicate(s);
}

void require(bool condition, const std::string& what) {
    if (!condition) fail(ErrorCode::invalid_argument, what);
}

std::string text(const char* s, const char* what) {
    require(s != nullptr, std::string(what) + " is required");
    return s;
}

berge_config config_or_default(const berge_config* config) {
    berge_config c;
    berge_config_init(&c);
    if (config != nullptr) c = *config;
    require(c.workers >= 1, "workers must be at least 1");
    return c;
}

const berge::io::LabeledHypergraph& host(const berge_hypergraph* h) {
    require(h != nullptr, "hypergraph handle is null");
    return h->value;
}

report::Labels labels_of(const berge::io::LabeledHypergraph& h) {
    return h.identity() ? report::Labels{} : h.labels;
}

ContainmentOptions containment_options(const berge_config& c) {
    ContainmentOptions o;
    o.vertex_guard = c.pattern_guard;
    o.workers = c.workers;
    return o;
}

SearchOptions search_options(const berge_config& c) {
    SearchOptions o;
    o.search_guard = c.search_guard;
    o.graph_guard = c.graph_guard;
    o.pattern_guard = c.pattern_guard;
    o.workers = c.workers;
    return o;
}

CertifyOptions certify_options(const berge_config& c) {
    CertifyOptions o;
    o.pattern_guard = c.pattern_guard;
    o.workers = c.workers;
    return o;
}

Graph as_graph(const Hypergraph& h) {
    Graph g(h.order());
    for (std::size_t i = 0; i < h.size(); ++i) {
        const auto& e = h.hyperedge(i);
        require(e.size() == 2, "input must be a graph: hyperedge " + std::to_string(i) + " has size " +
                                   std::to_string(e.size()));
        require(g.add_edge(e[0], e[1]), "input graph repeats edge " + std::to_string(i));
    }
    return g;
}

/// Columns after which the greedy biclique finder cannot get stuck.
int biclique_guarantee(int s, int t) { return s * (s - 1) * (t - 1) + t; }

berge_status verify_impl(const std::string& lemma, const berge_verify_params& p, const berge_config& c,
                         char** json_out) {
    if (lemma == "ramsey-k5" || lemma == "ramsey-k6" || lemma == "ramsey-k7") {
        const RamseyVerdict v = verify_ramsey_lemma(lemma.back() - '0', c.workers);
        emit(json_out, report::dump(report::ramsey(v, lemma)));
        return v.counterexample ? BERGE_VIOLATED : BERGE_OK;
    }
    if (lemma == "mono-triangle") {
        const int order = p.vertices > 0 ? p.vertices : 6;
        require(order >= 3 && order <= 7, "mono-triangle needs 3 <= vertices <= 7");
        const RamseyVerdict v = verify_monochromatic_triangle(order, c.workers);
        emit(json_out, report::dump(report::ramsey(v, lemma)));
        return v.counterexample ? BERGE_VIOLATED : BERGE_OK;
    }
    require(p.trials >= 1, "trials must be at least 1");
    RainbowTrials t;
    std::map<std::string, std::int64_t> params;
    bool guaranteed = false;
    if (lemma == "rainbow") {
        require(p.r >= 2, "rainbow needs r >= 2");
        const int guarantee = p.r * p.r * p.r;
        const int vertices = p.vertices > 0 ? p.vertices : guarantee;
        guaranteed = vertices >= guarantee;
        t = rainbow_clique_trials(p.r, vertices, p.trials, c.seed, c.workers);
        params = {{"r", p.r}, {"vertices", vertices}};
    } else if (lemma == "rainbow-bipartite") {
        require(p.s >= 1 && p.t >= 1, "rainbow-bipartite needs s, t >= 1");
        const int guarantee = biclique_guarantee(p.s, p.t);
        const int columns = p.vertices > 0 ? p.vertices : guarantee;
        guaranteed = columns >= guarantee;
        t = rainbow_biclique_trials(p.s, p.t, columns, p.trials, c.seed, c.workers);
        params = {{"s", p.s}, {"t", p.t}, {"columns", columns}};
    } else {
        fail(ErrorCode::invalid_argument, "unknown lemma '" + lemma + "'");
    }
    report::Json j = report::rainbow(t, lemma, params);
    j["seed"] = c.seed;
    j["guaranteed"] = guaranteed;
    // Below the guaranteed size a miss is allowed; only non-rainbow output counts.
    const bool holds = t.bad_outputs == 0 && (!guaranteed || t.misses == 0);
    j["holds"] = holds;
    emit(json_out, report::dump(j));
    return holds ? BERGE_OK : BERGE_VIOLATED;
}

struct Built {
    std::string body;
    int order = 0;
    std::size_t size = 0;
    std::vector<Certificate> certificates;
};

Built built_hypergraph(const Hypergraph& h) {
    return {io::write_hypergraph_text(h), h.order(), h.size(), {}};
}

Built built_graph(const Graph& g) { return {io::write_graph_text(g), g.order(), g.size(), {}}; }

Built construct_impl(const std::string& kind, const berge_construct_params& p, const berge_hypergraph* input,
                     const berge_config& c) {
    const CertifyOptions co = certify_options(c);
    if (kind == "turan") {
        const Graph g = turan_graph(p.n, p.p);
        Built b = built_graph(g);
        b.certificates.push_back(certify_subgraph_free(g, Pattern::complete(p.p + 1)));
        return b;
    }
    if (kind == "plane") {
        const Graph g = c4_free_incidence_graph(p.q);
        Built b = built_graph(g);
        b.certificates.push_back(certify_subgraph_free(g, Pattern::cycle(4)));
        return b;
    }
    if (kind == "kr-blowup") {
        const BlowupSpec spec = kr_blowup_spec(p.n, p.r);
        const Hypergraph h = blow_up(spec);
        Built b = built_hypergraph(h);
        b.certificates.push_back(certify_blowup_structure(h, spec));
        b.certificates.push_back(certify_berge_free(h, Pattern::complete(p.r), co));
        return b;
    }
    if (kind == "kst-blowup") {
        const Graph g = as_graph(host(input).value);
        const BlowupSpec spec = kst_blowup_spec(g, p.s, p.t);
        const Hypergraph h = blow_up(spec);
        Built b = built_hypergraph(h);
        b.certificates.push_back(certify_blowup_structure(h, spec));
        b.certificates.push_back(certify_berge_free(h, Pattern::biclique(p.s, p.t), co));
        return b;
    }
    if (kind == "star-free") {
        const Hypergraph h = star_free_construction(p.n, p.t);
        Built b = built_hypergraph(h);
        b.certificates.push_back(certify_berge_free(h, Pattern::biclique(1, p.t), co));
        return b;
    }
    if (kind == "girth5") {
        require(p.trials >= 1, "trials must be at least 1");
        const Hypergraph h = girth5_greedy(p.n, c.seed, p.trials, c.workers);
        Built b = built_hypergraph(h);
        b.certificates.push_back(certify_berge_girth(h, 5, co));
        return b;
    }
    if (kind == "triple-blowup") {
        const Hypergraph& g3 = host(input).value;
        const Hypergraph h = triple_blowup(g3);
        Built b = built_hypergraph(h);
        Certificate deficiency;
        deficiency.claimed_property = "deficiency_sum = 6 * " + std::to_string(g3.size());
        deficiency.check_performed = "count_report";
        deficiency.passed = count_report(h).deficiency_sum == 6 * static_cast<std::int64_t>(g3.size());
        b.certificates.push_back(deficiency);
        b.certificates.push_back(certify_berge_free(h, Pattern::cycle(4), co));
        return b;
    }
    fail(ErrorCode::invalid_argument, "unknown construction '" + kind + "'");
}

EmbeddingOutcome run_procedure(const std::string& procedure, const Hypergraph& h, const std::optional<Pattern>& p) {
    if (procedure == "unique") return embed_unique_edges(h);
    if (procedure == "matching") return embed_matchings(h, *p);
    if (procedure == "c4") return embed_c4_matchings(h);
    return embed_triangles_and_edges(h);
}

Inequality inequality_kind(const std::string& name) {
    if (name == "edge_sum") return Inequality::edge_sum;
    if (name == "linear_observation") return Inequality::linear_observation;
    if (name == "girth_proposition") return Inequality::girth_proposition;
    fail(ErrorCode::invalid_argument, "unknown inequality '" + name + "'");
}

Objective objective_kind(const std::string& name) {
    if (name == "edges") return Objective::edge_count;
    if (name == "degree_sum") return Objective::degree_sum;
    if (name == "deficiency_sum") return Objective::deficiency_sum;
    fail(ErrorCode::invalid_argument, "unknown objective '" + name + "'");
}

}  // namespace

extern "C" {

void berge_config_init(berge_config* config) {
    if (config == nullptr) return;
    config->workers = 1;
    config->seed = 1;
    config->pattern_guard = 8;
    config->search_guard = 7;
    config->graph_guard = 9;
}

void berge_verify_params_init(berge_verify_params* params) {
    if (params == nullptr) return;
    params->r = 3;
    params->s = 2;
    params->t = 2;
    params->vertices = 0;
    params->trials = 1000;
}

void berge_construct_params_init(berge_construct_params* params) {
    if (params == nullptr) return;
    params->n = 0;
    params->r = 3;
    params->s = 2;
    params->t = 2;
    params->p = 2;
    params->q = 2;
    params->trials = 4;
}

const char* berge_version(void) { return "1.0.0"; }

const char* berge_last_error(void) { return last_error.c_str(); }

const char* berge_status_name(berge_status status) {
    switch (status) {
    case BERGE_OK: return "ok";
    case BERGE_ABSENT: return "absent";
    case BERGE_VIOLATED: return "violated";
    case BERGE_ERR_INVALID_ARGUMENT: return "invalid argument";
    case BERGE_ERR_PARSE: return "parse error";
    case BERGE_ERR_IO: return "i/o error";
    case BERGE_ERR_GUARD: return "guard exceeded";
    case BERGE_ERR_PRECONDITION: return "precondition failed";
    case BERGE_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void berge_string_free(char* s) { std::free(s); }

berge_status berge_hypergraph_new(int n, berge_hypergraph** out) {
    return guarded([&] {
        require(out != nullptr, "output handle is null");
        require(n >= 0, "vertex count must be non-negative");
        auto* h = new berge_hypergraph{{Hypergraph(n), {}}};
        for (int v = 0; v < n; ++v) h->value.labels.push_back(v);
        *out = h;
        return BERGE_OK;
    });
}

berge_status berge_hypergraph_add(berge_hypergraph* h, const int32_t* vertices, size_t count) {
    return guarded([&] {
        require(h != nullptr, "hypergraph handle is null");
        require(count == 0 || vertices != nullptr, "vertex array is null");
        std::vector<Vertex> e(vertices, vertices + count);
        for (Vertex v : e)
            require(v >= 0 && v < h->value.value.order(), "vertex " + std::to_string(v) + " is out of range");
        h->value.value.add(std::move(e));
        return BERGE_OK;
    });
}

berge_status berge_hypergraph_parse(const char* text_in, berge_hypergraph** out) {
    return guarded([&] {
        require(out != nullptr, "output handle is null");
        *out = new berge_hypergraph{io::parse_hypergraph(text(text_in, "text"))};
        return BERGE_OK;
    });
}

berge_status berge_hypergraph_read(const char* path, berge_hypergraph** out) {
    return guarded([&] {
        require(out != nullptr, "output handle is null");
        *out = new berge_hypergraph{io::read_hypergraph(text(path, "path"))};
        return BERGE_OK;
    });
}

berge_status berge_hypergraph_write(const berge_hypergraph* h, int json, char** out) {
    return guarded([&] {
        const auto& lh = host(h);
        emit(out, json ? io::write_hypergraph_json(lh.value, labels_of(lh)) : io::write_hypergraph_text(lh.value, labels_of(lh)));
        return BERGE_OK;
    });
}

void berge_hypergraph_free(berge_hypergraph* h) { delete h; }

int berge_hypergraph_order(const berge_hypergraph* h) { return h == nullptr ? 0 : h->value.value.order(); }

size_t berge_hypergraph_size(const berge_hypergraph* h) { return h == nullptr ? 0 : h->value.value.size(); }

berge_status berge_hypergraph_validate(const berge_hypergraph* h, char** json_out) {
    return guarded([&] {
        const auto violations = validate(host(h).value);
        emit(json_out, report::dump(report::validation(violations)));
        return violations.empty() ? BERGE_OK : BERGE_VIOLATED;
    });
}

berge_status berge_count_report(const berge_hypergraph* h, char** json_out) {
    return guarded([&] {
        const auto& lh = host(h);
        require_valid(lh.value);
        emit(json_out, report::dump(report::counts(count_report(lh.value), lh.value.order())));
        return BERGE_OK;
    });
}

berge_status berge_check(const berge_hypergraph* h, const char* pattern, const berge_config* config,
                         char** json_out) {
    return guarded([&] {
        const auto& lh = host(h);
        const berge_config c = config_or_default(config);
        const Pattern p = Pattern::parse(text(pattern, "pattern"));
        require_valid(lh.value);
        const auto w = contains_berge(lh.value, p, containment_options(c));
        emit(json_out, report::dump(report::check(p, w, labels_of(lh))));
        return w ? BERGE_OK : BERGE_ABSENT;
    });
}

berge_status berge_girth(const berge_hypergraph* h, int g_max, const berge_config* config, char** json_out) {
    return guarded([&] {
        const auto& lh = host(h);
        const berge_config c = config_or_default(config);
        require(g_max >= 2, "g_max must be at least 2");
        require_valid(lh.value);
        const GirthReport r = berge_girth(lh.value, g_max, containment_options(c));
        emit(json_out, report::dump(report::girth(r, is_linear(lh.value), labels_of(lh))));
        return BERGE_OK;
    });
}

berge_status berge_embed(const berge_hypergraph* h, const char* procedure, const char* pattern,
                         const uint64_t* shuffle_seed, const berge_config* config, char** shadow_out,
                         char** json_out) {
    return guarded([&] {
        const auto& lh = host(h);
        config_or_default(config);
        const std::string proc = text(procedure, "procedure");
        require(proc == "unique" || proc == "matching" || proc == "c4" || proc == "triangle",
                "unknown procedure '" + proc + "'");
        std::optional<Pattern> p;
        if (pattern != nullptr) p = Pattern::parse(pattern);
        else if (proc == "c4" || proc == "triangle") p = Pattern::cycle(4);
        require(proc != "matching" || p.has_value(), "procedure 'matching' needs a pattern");
        require_valid(lh.value);

        const auto run = [&](const Hypergraph& g) { return run_procedure(proc, g, p); };
        const EmbeddingOutcome out = shuffle_seed ? embed_shuffled(lh.value, *shuffle_seed, run) : run(lh.value);
        std::optional<LiftedWitness> lifted;
        if (out.violation && p) lifted = extract_witness(lh.value, *out.violation, *p);

        report::Json j = report::embedding(out, proc, lifted, labels_of(lh));
        j["pattern"] = p ? report::Json(p->name()) : report::Json(nullptr);
        j["shuffle_seed"] = shuffle_seed ? report::Json(*shuffle_seed) : report::Json(nullptr);
        emit(shadow_out, io::write_graph_text(out.shadow, labels_of(lh)));
        emit(json_out, report::dump(j));
        return out.ok() ? BERGE_OK : BERGE_VIOLATED;
    });
}

berge_status berge_verify(const char* lemma, const berge_verify_params* params, const berge_config* config,
                          char** json_out) {
    return guarded([&] {
        berge_verify_params p;
        berge_verify_params_init(&p);
        if (params != nullptr) p = *params;
        return verify_impl(text(lemma, "lemma"), p, config_or_default(config), json_out);
    });
}

berge_status berge_construct(const char* kind, const berge_construct_params* params, const berge_hypergraph* input,
                             const berge_config* config, char** body_out, char** json_out) {
    return guarded([&] {
        berge_construct_params p;
        berge_construct_params_init(&p);
        if (params != nullptr) p = *params;
        const std::string k = text(kind, "kind");
        const Built b = construct_impl(k, p, input, config_or_default(config));
        const report::Json j = report::construction(k, b.order, b.size, b.certificates);
        emit(body_out, b.body);
        emit(json_out, report::dump(j));
        return j["passed"].get<bool>() ? BERGE_OK : BERGE_VIOLATED;
    });
}

berge_status berge_search(const berge_search_params* params, const berge_config* config, char** json_out) {
    return guarded([&] {
        require(params != nullptr, "search parameters are null");
        const berge_config c = config_or_default(config);
        require(params->forbid_count >= 1 && params->forbid != nullptr, "at least one forbidden pattern is required");
        std::vector<Pattern> forbidden;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < params->forbid_count; ++i) {
            forbidden.push_back(Pattern::parse(text(params->forbid[i], "pattern")));
            names.push_back(forbidden.back().name());
        }
        if (params->graph) {
            std::vector<Graph> graphs;
            for (const Pattern& f : forbidden) graphs.push_back(realize_pattern(f));
            const GraphSearchResult r = graph_ex_search(params->n, graphs, search_options(c));
            emit(json_out, report::dump(report::graph_search(params->n, names, r)));
            return BERGE_OK;
        }
        require(params->size_count >= 1 && params->sizes != nullptr, "at least one hyperedge size is required");
        SearchProblem problem;
        problem.n = params->n;
        problem.forbidden = forbidden;
        problem.sizes.assign(params->sizes, params->sizes + params->size_count);
        problem.simple_only = params->simple != 0;
        problem.objective = objective_kind(params->objective ? params->objective : "edges");
        const SearchResult r = exact_search(problem, search_options(c));
        emit(json_out, report::dump(report::search(problem, r)));
        return BERGE_OK;
    });
}

berge_status berge_bounds(const char* name, const char* const* keys, const int64_t* values, size_t count,
                          char** json_out) {
    return guarded([&] {
        require(count == 0 || (keys != nullptr && values != nullptr), "parameter arrays are null");
        std::map<std::string, std::int64_t> parameters;
        for (std::size_t i = 0; i < count; ++i) parameters[text(keys[i], "parameter name")] = values[i];
        emit(json_out, report::dump(report::bound(evaluate_bound(text(name, "name"), parameters))));
        return BERGE_OK;
    });
}

berge_status berge_inequality(const char* inequality, const berge_hypergraph* h, const char* pattern, int girth,
                              const berge_config* config, char** json_out) {
    return guarded([&] {
        const berge_config c = config_or_default(config);
        InequalityRequest request;
        request.kind = inequality_kind(text(inequality, "inequality"));
        request.hypergraph = host(h).value;
        if (pattern != nullptr) request.pattern = Pattern::parse(pattern);
        request.girth = girth;
        const BoundReport r = check_inequality(request, search_options(c));
        report::Json j = report::bound(r);
        j["command"] = "inequality";
        emit(json_out, report::dump(j));
        return r.satisfied == false ? BERGE_VIOLATED : BERGE_OK;
    });
}

berge_status berge_table(const char* suite, const int* ns, size_t count, const berge_config* config,
                         char** csv_out) {
    return guarded([&] {
        const std::string name = text(suite, "suite");
        require(name == "paper", "unknown suite '" + name + "'");
        const berge_config c = config_or_default(config);
        std::vector<int> sizes = {9, 27, 81};
        if (count > 0) {
            require(ns != nullptr, "size array is null");
            sizes.assign(ns, ns + count);
        }
        const auto rows = summary_table(sizes, c.seed, search_options(c));
        emit(csv_out, table_csv(rows));
        bool ok = true;
        for (const TableRow& row : rows) ok = ok && row.satisfied != "false";
        return ok ? BERGE_OK : BERGE_VIOLATED;
    });
}

}  // extern "C"
