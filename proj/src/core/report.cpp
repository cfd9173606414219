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

#include "berge/report.hpp"

namespace berge::report {

namespace {

std::int64_t label(const Labels& labels, Vertex v) {
    return labels.empty() ? v : labels[static_cast<std::size_t>(v)];
}

Json header(const std::string& command) { return Json{{"schema_version", kSchemaVersion}, {"command", command}}; }

Json edges_json(const std::vector<Edge>& edges, const Labels& labels) {
    Json out = Json::array();
    for (const Edge& e : edges) out.push_back({label(labels, e.u), label(labels, e.v)});
    return out;
}

const char* objective_name(Objective o) {
    switch (o) {
    case Objective::edge_count: return "edges";
    case Objective::degree_sum: return "degree_sum";
    case Objective::deficiency_sum: return "deficiency_sum";
    }
    return "";
}

}  // namespace

Json witness(const BergeWitness& w, const Labels& labels) {
    Json map = Json::object();
    for (const auto& [p, host] : w.vertex_map) map[std::to_string(p)] = label(labels, host);
    Json assignment = Json::array();
    for (const auto& a : w.edge_assignment) assignment.push_back({a.pattern_edge.u, a.pattern_edge.v, a.hyperedge});
    return {{"vertex_map", map}, {"edge_assignment", assignment}};
}

Json check(const Pattern& p, const std::optional<BergeWitness>& w, const Labels& labels) {
    Json j = header("check");
    j["pattern"] = p.name();
    j["found"] = w.has_value();
    j["witness"] = w ? witness(*w, labels) : Json(nullptr);
    return j;
}

Json girth(const GirthReport& r, bool linear, const Labels& labels) {
    Json j = header("girth");
    j["g_max"] = r.g_max;
    j["girth"] = r.girth ? Json(*r.girth) : Json(nullptr);
    j["at_least"] = r.lower_bound();
    j["linear"] = linear;
    j["witness"] = r.witness ? witness(*r.witness, labels) : Json(nullptr);
    j["c2_pair"] = r.c2_pair ? Json{r.c2_pair->first, r.c2_pair->second} : Json(nullptr);
    return j;
}

Json embedding(const EmbeddingOutcome& out, const std::string& procedure, const std::optional<LiftedWitness>& lifted,
               const Labels& labels) {
    Json j = header("embed");
    j["procedure"] = procedure;
    j["edges_embedded"] = out.edges_embedded();
    Json counts = Json::array();
    for (const auto& set : out.per_hyperedge) counts.push_back(set.size());
    j["per_hyperedge_counts"] = counts;
    if (!out.violation) {
        j["violation"] = nullptr;
        return j;
    }
    const EmbeddingViolation& v = *out.violation;
    Json saturated = Json::array();
    for (Vertex x : v.saturated) saturated.push_back(label(labels, x));
    Json colors = Json::array();
    for (const auto& c : v.colors) colors.push_back({label(labels, c.edge.u), label(labels, c.edge.v), c.color});
    j["violation"] = {{"hyperedge", v.hyperedge},
                      {"saturated", saturated},
                      {"colors", colors},
                      {"reason", v.reason},
                      {"witness", lifted ? witness(lifted->witness, labels) : Json(nullptr)},
                      {"pattern_edges", lifted ? edges_json(lifted->pattern_edges, {}) : Json(nullptr)}};
    return j;
}

Json ramsey(const RamseyVerdict& v, const std::string& lemma) {
    Json j = header("verify");
    j["lemma"] = lemma;
    j["order"] = v.order;
    j["checked"] = v.colorings_checked;
    j["holds"] = !v.counterexample.has_value();
    if (v.counterexample) {
        const TwoColoring c{v.order, *v.counterexample};
        j["counterexample"] = {{"mask", *v.counterexample},
                               {"red_edges", edges_json(c.red_edges(), {})},
                               {"blue_edges", edges_json(c.blue_edges(), {})}};
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

Json rainbow(const RainbowTrials& t, const std::string& lemma, const std::map<std::string, std::int64_t>& parameters) {
    Json j = header("verify");
    j["lemma"] = lemma;
    j["parameters"] = parameters;
    j["trials"] = t.trials;
    j["misses"] = t.misses;
    j["bad_outputs"] = t.bad_outputs;
    j["holds"] = t.misses == 0 && t.bad_outputs == 0;
    return j;
}

Json construction(const std::string& kind, int order, std::size_t size, const std::vector<Certificate>& certificates) {
    Json j = header("construct");
    j["kind"] = kind;
    j["order"] = order;
    j["size"] = size;
    Json list = Json::array();
    bool passed = true;
    for (const Certificate& c : certificates) {
        list.push_back({{"claimed_property", c.claimed_property},
                        {"check_performed", c.check_performed},
                        {"passed", c.passed}});
        passed = passed && c.passed;
    }
    j["certificates"] = list;
    j["passed"] = passed;
    return j;
}

Json bound(const BoundReport& b) {
    Json j = header("bounds");
    j["name"] = b.name;
    j["parameters"] = b.parameters;
    j["value"] = b.value;
    j["exact"] = b.exact ? Json(b.exact->str()) : Json(nullptr);
    j["leading_term_only"] = b.leading_term_only;
    j["measured"] = b.measured ? Json(*b.measured) : Json(nullptr);
    j["satisfied"] = b.satisfied ? Json(*b.satisfied) : Json(nullptr);
    j["hypotheses_met"] = b.hypotheses_met ? Json(*b.hypotheses_met) : Json(nullptr);
    j["note"] = b.note;
    return j;
}

Json search(const SearchProblem& p, const SearchResult& r) {
    Json j = header("search");
    j["n"] = p.n;
    Json forbidden = Json::array();
    for (const Pattern& f : p.forbidden) forbidden.push_back(f.name());
    j["forbidden"] = forbidden;
    j["sizes"] = p.sizes;
    j["simple"] = p.simple_only;
    j["objective"] = objective_name(p.objective);
    j["optimum"] = r.optimum;
    j["witness"] = r.witness.hyperedges();
    return j;
}

Json graph_search(int n, const std::vector<std::string>& forbidden, const GraphSearchResult& r) {
    Json j = header("search");
    j["n"] = n;
    j["forbidden"] = forbidden;
    j["graph"] = true;
    j["optimum"] = r.ex;
    j["witness"] = edges_json(r.witness.edges(), {});
    return j;
}

Json counts(const CountReport& c, int order) {
    Json j = header("count");
    j["n"] = order;
    j["edge_count"] = c.edge_count;
    j["degree_sum"] = c.degree_sum;
    j["deficiency_sum"] = c.deficiency_sum;
    j["min_size"] = c.min_size;
    j["max_size"] = c.max_size;
    return j;
}

Json validation(const std::vector<Violation>& violations) {
    Json j = header("validate");
    Json list = Json::array();
    for (const Violation& v : violations) list.push_back({{"hyperedge", v.hyperedge}, {"rule", v.rule}, {"message", v.message()}});
    j["violations"] = list;
    j["valid"] = violations.empty();
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace berge::report
