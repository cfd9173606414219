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

#include <doctest.h>

#include "berge/constructions.hpp"
#include "berge/containment.hpp"
#include "berge/error.hpp"
#include "berge/extremal.hpp"
#include "berge/graph_algo.hpp"
#include "oracles.hpp"

using namespace berge;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::internal;
}

std::int64_t oracle_score(const Hypergraph& h, Objective o) {
    switch (o) {
    case Objective::edge_count: return static_cast<std::int64_t>(h.size());
    case Objective::degree_sum: return oracle::degree_sum(h);
    case Objective::deficiency_sum: return oracle::deficiency_sum(h);
    }
    return 0;
}

std::size_t candidate_count(int n, const std::vector<int>& sizes) {
    std::size_t total = 0;
    for (int s : sizes) total += oracle::subsets_of_size(n, s).size();
    return total;
}

void check_witness(const SearchProblem& p, const SearchResult& r) {
    CHECK(objective_value(r.witness, p.objective) == r.optimum);
    for (const Pattern& f : p.forbidden) CHECK_FALSE(contains_berge(r.witness, f));
    for (const auto& e : r.witness.hyperedges())
        CHECK(std::find(p.sizes.begin(), p.sizes.end(), static_cast<int>(e.size())) != p.sizes.end());
}

}  // namespace

TEST_CASE("bound formulas") {
    const BoundReport p1 = evaluate_bound("path_bound", {{"n", 12}, {"k", 4}, {"m", 3}});
    CHECK(p1.value == 12.0);
    CHECK(p1.exact == Rational::of(12));
    const BoundReport p2 = evaluate_bound("path_bound", {{"n", 10}, {"k", 3}, {"m", 4}});
    CHECK(p2.exact == Rational::of(4));
    CHECK(evaluate_bound("path_bound", {{"n", 7}, {"k", 3}, {"m", 4}}).exact == Rational::of(14, 5));
    CHECK(evaluate_bound("edge_sum_bound", {{"n", 10}, {"r", 2}, {"edges", 3}}).exact == Rational::of(114));
    CHECK(evaluate_bound("kst_graph_bound", {{"n", 16}, {"s", 2}, {"t", 2}}).value == doctest::Approx(38.0));
    CHECK(evaluate_bound("general_upper", {{"n", 6}, {"r", 3}}).exact == Rational::of(2 * 15 + 27 * 9));

    const BoundReport lead = evaluate_bound("c4_free_upper", {{"n", 100}});
    CHECK(lead.leading_term_only);
    CHECK_FALSE(lead.exact);
    CHECK(lead.value == doctest::Approx(std::sqrt(6.0) / 2.0 * 1000.0));
    CHECK(evaluate_bound("lv_girth5", {{"n", 36}}).value == doctest::Approx(36.0));

    CHECK(code_of([] { evaluate_bound("nope", {}); }) == ErrorCode::invalid_argument);
    CHECK(code_of([] { evaluate_bound("path_bound", {{"n", 5}, {"k", 3}, {"m", 2}}); }) == ErrorCode::invalid_argument);
    CHECK(code_of([] { evaluate_bound("path_bound", {{"n", 5}}); }) == ErrorCode::invalid_argument);
    for (const auto& name : bound_names()) CHECK_FALSE(name.empty());

    CHECK(Rational::of(6, -4) == Rational{-3, 2});
    CHECK(Rational::of(6, -4).str() == "-3/2");
}

TEST_CASE("shadow expansion") {
    CHECK(shadow_expand(Hypergraph(3, {{0, 1, 2}})).size() == 3);
    const Graph two = shadow_expand(Hypergraph(4, {{0, 1, 2}, {0, 1, 3}}));
    CHECK(two.size() == 5);
    CHECK(has_cycle_between(two, 4, 4));
    const Hypergraph g5 = girth5_greedy(12, 4, 2);
    const Graph s = shadow_expand(g5);
    CHECK(s.size() == 3 * g5.size());
    CHECK_FALSE(has_cycle_between(s, 4, 4));
    CHECK_THROWS_AS(shadow_expand(Hypergraph(4, {{0, 1, 2, 3}})), Error);
}

TEST_CASE("exact search examples") {
    SearchProblem k3{4, {Pattern::complete(3)}, {3}, true, Objective::edge_count};
    const SearchResult r1 = exact_search(k3);
    CHECK(r1.optimum == 2);
    check_witness(k3, r1);

    SearchProblem c2{4, {Pattern::cycle(2)}, {3}, true, Objective::edge_count};
    CHECK(exact_search(c2).optimum == 1);

    SearchProblem k2{3, {Pattern::complete(2)}, {2, 3}, true, Objective::edge_count};
    CHECK(exact_search(k2).optimum == 0);
}

TEST_CASE("exact search errors") {
    SearchOptions o;
    o.search_guard = 5;
    CHECK(code_of([&] { exact_search({6, {Pattern::complete(3)}, {3}, true, Objective::edge_count}, o); }) ==
          ErrorCode::guard_exceeded);
    CHECK(code_of([] { exact_search({4, {Pattern::complete(3)}, {5}, true, Objective::edge_count}); }) ==
          ErrorCode::invalid_argument);
    CHECK(code_of([] { exact_search({4, {}, {3}, true, Objective::edge_count}); }) == ErrorCode::invalid_argument);
    // A triple can be repeated without bound when the pattern has four vertices.
    CHECK(code_of([] { exact_search({5, {Pattern::complete(4)}, {3}, false, Objective::edge_count}); }) ==
          ErrorCode::invalid_argument);
    try {
        exact_search({8, {Pattern::complete(3)}, {3}, true, Objective::edge_count});
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("BERGE_GUARD_N") != std::string::npos);
    }
}

TEST_CASE("exact search agrees with unpruned enumeration on small simple problems") {
    const std::vector<const char*> patterns = {"K3", "C2", "C3", "C4", "P3", "P4", "K1,2", "K2,2", "K1,3"};
    const std::vector<std::vector<int>> size_sets = {{2}, {3}, {2, 3}, {3, 4}, {2, 4}, {2, 3, 4}, {4}, {4, 5}};
    int problems = 0;
    for (int n : {4, 5}) {
        for (const auto& sizes : size_sets) {
            if (sizes.back() > n || candidate_count(n, sizes) > 12) continue;
            for (const char* spec : patterns) {
                for (Objective obj : {Objective::edge_count, Objective::degree_sum, Objective::deficiency_sum}) {
                    const Pattern f = Pattern::parse(spec);
                    const SearchProblem p{n, {f}, sizes, true, obj};
                    const SearchResult r = exact_search(p);
                    const auto want = oracle::unpruned_search(n, sizes, {f.edge_list()}, 1,
                                                              [&](const Hypergraph& h) { return oracle_score(h, obj); });
                    CAPTURE(n);
                    CAPTURE(spec);
                    CAPTURE(sizes.front());
                    CHECK(r.optimum == want.value);
                    check_witness(p, r);
                    ++problems;
                }
            }
        }
    }
    CHECK(problems > 100);
}

TEST_CASE("multiset search agrees with enumeration past the multiplicity cap") {
    for (const char* spec : {"K3", "C3", "P3", "K1,2", "C4"}) {
        const Pattern f = Pattern::parse(spec);
        for (const std::vector<int>& sizes : {std::vector<int>{4}, std::vector<int>{3, 4}}) {
            if (sizes.front() < f.vertex_count()) continue;
            const SearchProblem p{4, {f}, sizes, false, Objective::edge_count};
            const SearchResult r = exact_search(p);
            const auto want = oracle::unpruned_search(4, sizes, {f.edge_list()}, f.edge_count(),
                                                      [](const Hypergraph& h) { return static_cast<std::int64_t>(h.size()); });
            CAPTURE(spec);
            CHECK(r.optimum == want.value);
            check_witness(p, r);
        }
    }
}

TEST_CASE("several forbidden patterns at once") {
    const SearchProblem p{5, {Pattern::cycle(2), Pattern::cycle(3)}, {3}, true, Objective::edge_count};
    const SearchResult r = exact_search(p);
    const auto want = oracle::unpruned_search(5, {3}, {oracle::cycle_edges(2), oracle::cycle_edges(3)}, 1,
                                              [](const Hypergraph& h) { return static_cast<std::int64_t>(h.size()); });
    CHECK(r.optimum == want.value);
    check_witness(p, r);
}

TEST_CASE("path bound holds on exact optima") {
    const BoundReport b = evaluate_bound("path_bound", {{"n", 4}, {"k", 4}, {"m", 3}});
    CHECK(b.value == 4.0);
    for (int n = 4; n <= 7; ++n) {
        SearchOptions o;
        o.workers = 4;
        const SearchResult r = exact_search({n, {Pattern::path(5)}, {3}, true, Objective::edge_count}, o);
        const double bound = evaluate_bound("path_bound", {{"n", n}, {"k", 4}, {"m", 3}}).value;
        CAPTURE(n);
        CHECK(static_cast<double>(r.optimum) <= bound);
    }
}

TEST_CASE("exact search is independent of the worker count") {
    for (const SearchProblem& p : {SearchProblem{6, {Pattern::complete(3)}, {3}, true, Objective::edge_count},
                                   SearchProblem{5, {Pattern::cycle(4)}, {3, 4}, true, Objective::degree_sum},
                                   SearchProblem{6, {Pattern::cycle(2), Pattern::cycle(3)}, {3}, true,
                                                 Objective::edge_count}}) {
        SearchOptions one, four;
        four.workers = 4;
        const SearchResult a = exact_search(p, one);
        const SearchResult b = exact_search(p, four);
        CHECK(a.optimum == b.optimum);
        CHECK(a.witness == b.witness);
    }
}

TEST_CASE("graph Turan numbers") {
    const Graph c4 = realize_pattern(Pattern::cycle(4));
    const Graph k3 = realize_pattern(Pattern::complete(3));
    CHECK(graph_ex_search(4, {c4}).ex == 4);
    const GraphSearchResult t = graph_ex_search(5, {k3});
    CHECK(t.ex == 6);
    CHECK(two_coloring(t.witness));
    CHECK(graph_ex_search(3, {realize_pattern(Pattern::complete(2))}).ex == 0);

    for (int n = 3; n <= 6; ++n)
        for (const char* spec : {"K3", "C4", "P4", "K1,3", "C5"}) {
            const Pattern f = Pattern::parse(spec);
            const GraphSearchResult r = graph_ex_search(n, {realize_pattern(f)});
            CAPTURE(n);
            CAPTURE(spec);
            CHECK(r.ex == oracle::unpruned_graph_ex(n, {f.edge_list()}));
            CHECK(static_cast<std::int64_t>(r.witness.size()) == r.ex);
            CHECK_FALSE(oracle::naive_subgraph(r.witness, f.edge_list()));
        }
    CHECK(graph_ex_search(6, {k3, c4}).ex == oracle::unpruned_graph_ex(6, {oracle::clique_edges(3), oracle::cycle_edges(4)}));

    std::int64_t last = 0;
    for (int n = 3; n <= 8; ++n) {
        const std::int64_t ex = graph_ex_search(n, {c4}).ex;
        CHECK(ex >= last);
        last = ex;
    }

    SearchOptions o;
    o.graph_guard = 6;
    CHECK(code_of([&] { graph_ex_search(7, {c4}, o); }) == ErrorCode::guard_exceeded);

    SearchOptions four;
    four.workers = 4;
    const GraphSearchResult a = graph_ex_search(8, {c4});
    const GraphSearchResult b = graph_ex_search(8, {c4}, four);
    CHECK(a.ex == b.ex);
    CHECK(a.witness == b.witness);
}

TEST_CASE("inequality checks") {
    SUBCASE("edge sum with size-1 hyperedges misses its size hypothesis") {
        InequalityRequest req{Inequality::edge_sum, Hypergraph(5, {{0}, {3}, {4}}), Pattern::complete(2), 5, {}};
        const BoundReport b = check_inequality(req);
        CHECK(b.hypotheses_met == false);
        CHECK_FALSE(b.satisfied);
        CHECK(b.measured == 3);
        CHECK(b.note.find("hypotheses not met") != std::string::npos);
    }
    SUBCASE("edge sum on a K3-free sunflower of large petals") {
        Hypergraph h(55);
        std::vector<Vertex> a{0}, b{0};
        for (Vertex v = 1; v <= 27; ++v) a.push_back(v);
        for (Vertex v = 28; v <= 54; ++v) b.push_back(v);
        h.add(a);
        h.add(b);
        const BoundReport r = check_inequality({Inequality::edge_sum, h, Pattern::complete(3), 5, {}});
        CHECK(r.hypotheses_met == true);
        CHECK(r.satisfied == true);
        CHECK(r.measured == 56);
    }
    SUBCASE("observation on a linear K3-free family") {
        const Hypergraph h(5, {{0, 1, 2}, {0, 3, 4}});
        const BoundReport r = check_inequality({Inequality::linear_observation, h, Pattern::complete(3), 5, {}});
        CHECK(r.hypotheses_met == true);
        CHECK(r.value == 6.0);
        CHECK(r.satisfied == true);
        const BoundReport not_linear =
            check_inequality({Inequality::linear_observation, Hypergraph(4, {{0, 1, 2}, {0, 1, 3}}), Pattern::complete(3), 5, {}});
        CHECK(not_linear.hypotheses_met == false);
        CHECK_FALSE(not_linear.satisfied);
    }
    SUBCASE("proposition on a greedy girth-5 system") {
        const Hypergraph h = girth5_greedy(7, 1, 4);
        const BoundReport r = check_inequality({Inequality::girth_proposition, h, std::nullopt, 5, {}});
        CHECK(r.hypotheses_met == true);
        CHECK(r.exact == Rational::of(graph_ex_search(7, {realize_pattern(Pattern::cycle(4))}).ex, 3));
        CHECK(r.satisfied == true);
        CHECK(code_of([&] { check_inequality({Inequality::girth_proposition, h, std::nullopt, 4, {}}); }) ==
              ErrorCode::invalid_argument);
    }
    SUBCASE("supplied upper bound") {
        const Hypergraph h = girth5_greedy(12, 2, 2);
        const BoundReport r = check_inequality({Inequality::linear_observation, h, Pattern::complete(3), 5, 36});
        CHECK(r.value == 36.0);
        CHECK(r.note.find("ex side supplied as an upper bound") != std::string::npos);
    }
}
