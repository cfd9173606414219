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

#include "berge/core.hpp"
#include "berge/error.hpp"
#include "berge/io.hpp"
#include "oracles.hpp"

using namespace berge;

TEST_CASE("graph rejects loops, duplicates and out-of-range endpoints") {
    CHECK_THROWS_AS(Graph(3, {Edge(0, 0)}), Error);
    CHECK_THROWS_AS(Graph(3, {Edge(0, 1), Edge(1, 0)}), Error);
    CHECK_THROWS_AS(Graph(3, {Edge(0, 3)}), Error);
    Graph g(4, {Edge(2, 1), Edge(0, 3)});
    CHECK(g.size() == 2);
    CHECK(g.edges().front() == Edge(0, 3));
    CHECK(g.adjacent(1, 2));
    CHECK_FALSE(g.add_edge(2, 1));
}

TEST_CASE("validate") {
    SUBCASE("repeated vertex") {
        Hypergraph h(5, {{1, 1, 2}});
        const auto v = validate(h);
        REQUIRE(v.size() == 1);
        CHECK(v[0].message() == "repeated vertex in hyperedge 0");
    }
    SUBCASE("empty family is valid") { CHECK(validate(Hypergraph(5)).empty()); }
    SUBCASE("duplicate hyperedges are valid") { CHECK(validate(Hypergraph(3, {{0, 1, 2}, {0, 1, 2}})).empty()); }
    SUBCASE("out of range and empty") {
        Hypergraph h(3, {{0, 3}, {}});
        const auto v = validate(h);
        REQUIRE(v.size() == 2);
        CHECK(v[0].rule == "vertex out of range");
        CHECK(v[1].rule == "empty hyperedge");
        CHECK_THROWS_AS(require_valid(h), Error);
    }
}

TEST_CASE("count report") {
    const CountReport c = count_report(Hypergraph(6, {{0, 1, 2}, {2, 3, 4, 5}}));
    CHECK(c.edge_count == 2);
    CHECK(c.degree_sum == 7);
    CHECK(c.deficiency_sum == 1);
    CHECK(c.min_size == 3);
    CHECK(c.max_size == 4);
    CHECK(count_report(Hypergraph(4)) == CountReport{});
}

TEST_CASE("degree sum equals the vertex-degree sum on random hypergraphs") {
    for (std::uint64_t i = 0; i < 200; ++i) {
        Rng rng = make_rng(11, i);
        const Hypergraph h = oracle::random_hypergraph(rng, 8, 1 + static_cast<int>(i % 12), 1, 6);
        std::int64_t by_vertex = 0;
        for (auto d : vertex_degrees(h)) by_vertex += d;
        const CountReport c = count_report(h);
        CHECK(c.degree_sum == by_vertex);
        CHECK(c.degree_sum == oracle::degree_sum(h));
        CHECK(c.deficiency_sum == c.degree_sum - 3 * static_cast<std::int64_t>(c.edge_count));
    }
}

TEST_CASE("patterns") {
    CHECK(realize_pattern(Pattern::complete(3)).size() == 3);
    CHECK(realize_pattern(Pattern::biclique(2, 3)).size() == 6);
    CHECK(realize_pattern(Pattern::path(4)).size() == 3);
    CHECK(isomorphic(realize_pattern(Pattern::cycle(4)), realize_pattern(Pattern::biclique(2, 2))));
    CHECK_FALSE(isomorphic(realize_pattern(Pattern::cycle(4)), realize_pattern(Pattern::path(4))));
    CHECK_THROWS_AS(realize_pattern(Pattern::cycle(2)), Error);
    CHECK(Pattern::cycle(2).edge_count() == 2);

    CHECK(Pattern::parse("K_{2,3}").name() == "K2,3");
    CHECK(Pattern::parse("k4").name() == "K4");
    CHECK(Pattern::parse("C5").vertex_count() == 5);
    CHECK(Pattern::parse("P4").edge_count() == 3);
    CHECK_THROWS_AS(Pattern::parse("Q3"), Error);
    CHECK_THROWS_AS(Pattern::parse("K"), Error);
}

TEST_CASE("text and JSON round trips keep order and duplicates") {
    const Hypergraph h(6, {{3, 1, 2}, {0, 5}, {1, 2, 3}, {1, 2, 3}});
    for (bool json : {false, true}) {
        const std::string s = json ? io::write_hypergraph_json(h) : io::write_hypergraph_text(h);
        const auto back = io::parse_hypergraph(s);
        CHECK(back.value == h);
        CHECK(back.identity());
    }
    CHECK(io::write_hypergraph_text(h) == "n=6\n1 2 3\n0 5\n1 2 3\n1 2 3\n");
}

TEST_CASE("labels are compacted without a header") {
    const auto lh = io::parse_hypergraph_text("# comment\n10 30\n30 20 40\n");
    CHECK(lh.value.order() == 4);
    CHECK(lh.labels == std::vector<std::int64_t>{10, 20, 30, 40});
    CHECK(lh.value.hyperedge(1) == std::vector<Vertex>{1, 2, 3});
    CHECK_FALSE(lh.identity());
    CHECK(io::write_hypergraph_text(lh.value, lh.labels).find("# labels: 10 20 30 40") != std::string::npos);
}

TEST_CASE("parse errors") {
    auto code = [](const std::string& text) {
        try {
            io::parse_hypergraph(text);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::internal;
    };
    CHECK(code("n=3\n0 3\n") == ErrorCode::parse);
    CHECK(code("0 x\n") == ErrorCode::parse);
    CHECK(code("0 -1\n") == ErrorCode::parse);
    CHECK(code("{\"n\": 3, \"hyperedges\": [[0, 1], ") == ErrorCode::parse);
    CHECK(code("1 2\nn=4\n") == ErrorCode::parse);
    CHECK_THROWS_AS(io::parse_graph("0 1 2\n"), Error);
    CHECK_THROWS_AS(io::read_hypergraph("/nonexistent/file.txt"), Error);
}
