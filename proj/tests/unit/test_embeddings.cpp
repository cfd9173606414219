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

#include <set>

#include "berge/constructions.hpp"
#include "berge/embeddings.hpp"
#include "berge/error.hpp"
#include "berge/graph_algo.hpp"
#include "oracles.hpp"

using namespace berge;

namespace {

Hypergraph copies(int n, std::vector<Vertex> e, int count) {
    Hypergraph h(n);
    for (int i = 0; i < count; ++i) h.add(e);
    return h;
}

std::vector<Vertex> range(int lo, int hi) {
    std::vector<Vertex> out;
    for (int v = lo; v < hi; ++v) out.push_back(v);
    return out;
}

/// Pairwise disjoint sets, each inside its hyperedge, whose union is the shadow.
void check_outcome_shape(const Hypergraph& h, const EmbeddingOutcome& out) {
    REQUIRE(out.per_hyperedge.size() == h.size());
    std::set<Edge> seen;
    std::size_t total = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        for (const Edge& e : out.per_hyperedge[i]) {
            CHECK(h.contains(i, e.u));
            CHECK(h.contains(i, e.v));
            CHECK(seen.insert(e).second);
            CHECK(out.shadow.adjacent(e.u, e.v));
        }
        total += out.per_hyperedge[i].size();
    }
    CHECK(out.shadow.size() == total);
}

bool is_matching(const std::vector<Edge>& edges) {
    std::set<Vertex> used;
    for (const Edge& e : edges)
        if (!used.insert(e.u).second || !used.insert(e.v).second) return false;
    return true;
}

std::size_t ceil_half(std::size_t x) { return (x + 1) / 2; }

}  // namespace

TEST_CASE("unique edges") {
    SUBCASE("lexicographic choice") {
        const auto out = embed_unique_edges(copies(3, {0, 1, 2}, 2));
        CHECK(out.ok());
        CHECK(out.per_hyperedge[0] == std::vector<Edge>{Edge(0, 1)});
        CHECK(out.per_hyperedge[1] == std::vector<Edge>{Edge(0, 2)});
    }
    SUBCASE("fourth copy of a triple is stuck") {
        const Hypergraph h = copies(3, {0, 1, 2}, 4);
        const auto out = embed_unique_edges(h);
        REQUIRE(out.violation);
        CHECK(out.violation->hyperedge == 3);
        CHECK(out.violation->saturated == std::vector<Vertex>{0, 1, 2});
        CHECK(out.violation->colors.size() == 3);
        const auto lifted = extract_witness(h, *out.violation, Pattern::complete(3));
        REQUIRE(lifted);
        CHECK(verify_witness(h, lifted->pattern_edges, lifted->witness));
    }
    SUBCASE("empty family") {
        const auto out = embed_unique_edges(Hypergraph(4));
        CHECK(out.ok());
        CHECK(out.shadow.size() == 0);
    }
    SUBCASE("singleton hyperedge is refused") { CHECK_THROWS_AS(embed_unique_edges(Hypergraph(3, {{0}, {1, 2}})), Error); }
}

TEST_CASE("matchings") {
    CHECK(matching_threshold(Pattern::complete(2)) == 8);
    CHECK(matching_threshold(Pattern::complete(3)) == 27);
    CHECK(matching_threshold(Pattern::biclique(2, 3)) == 2 + 2 * 1 * 2 + 3);
    CHECK_THROWS_AS(matching_threshold(Pattern::cycle(4)), Error);

    SUBCASE("first hyperedge gets a perfect matching") {
        const auto out = embed_matchings(Hypergraph(10, {range(0, 10)}), Pattern::complete(2));
        CHECK(out.ok());
        CHECK(out.per_hyperedge[0].size() == 5);
        CHECK(is_matching(out.per_hyperedge[0]));
    }
    SUBCASE("second copy avoids the first matching") {
        const Hypergraph h = copies(9, range(0, 9), 2);
        const auto out = embed_matchings(h, Pattern::complete(2));
        CHECK(out.ok());
        CHECK(out.per_hyperedge[0].size() == 4);
        CHECK(out.per_hyperedge[1].size() == 4);
        check_outcome_shape(h, out);
    }
    SUBCASE("empty family") { CHECK(embed_matchings(Hypergraph(3), Pattern::complete(3)).ok()); }
    SUBCASE("small hyperedges are skipped") {
        const auto out = embed_matchings(Hypergraph(5, {{0, 1, 2, 3, 4}}), Pattern::complete(2));
        CHECK(out.ok());
        CHECK(out.shadow.size() == 0);
    }
    SUBCASE("stuck copies yield a verified rainbow witness") {
        const Pattern p = Pattern::biclique(1, 2);
        const Hypergraph h = copies(6, range(0, 6), 12);
        const auto out = embed_matchings(h, p);
        REQUIRE(out.violation);
        CHECK(out.violation->saturated.size() > static_cast<std::size_t>(matching_threshold(p)));
        const auto lifted = extract_witness(h, *out.violation, p);
        REQUIRE(lifted);
        CHECK(verify_witness(h, lifted->pattern_edges, lifted->witness));
    }
}

TEST_CASE("C4 matchings") {
    SUBCASE("size five") {
        const auto out = embed_c4_matchings(Hypergraph(5, {range(0, 5)}));
        CHECK(out.per_hyperedge[0].size() == 1);
    }
    SUBCASE("two copies of a 4-set take disjoint pairs") {
        const Hypergraph h = copies(4, range(0, 4), 2);
        const auto out = embed_c4_matchings(h);
        CHECK(out.ok());
        CHECK(out.per_hyperedge[0].size() == 1);
        CHECK(out.per_hyperedge[1].size() == 1);
        check_outcome_shape(h, out);
    }
    SUBCASE("triples are skipped") { CHECK(embed_c4_matchings(Hypergraph(3, {{0, 1, 2}})).shadow.size() == 0); }
    SUBCASE("seven copies of a 4-set contain a Berge-C4") {
        const Hypergraph h = copies(4, range(0, 4), 7);
        const auto out = embed_c4_matchings(h);
        REQUIRE(out.violation);
        CHECK(out.violation->hyperedge == 6);
        const auto lifted = extract_witness(h, *out.violation, Pattern::cycle(4));
        REQUIRE(lifted);
        CHECK(lifted->pattern_edges.size() == 4);
        CHECK(verify_witness(h, lifted->pattern_edges, lifted->witness));
    }
}

TEST_CASE("triangles and edges") {
    SUBCASE("size four") { CHECK(embed_triangles_and_edges(Hypergraph(4, {range(0, 4)})).shadow.size() == 1); }
    SUBCASE("size five is a 2-matching") {
        const auto out = embed_triangles_and_edges(Hypergraph(5, {range(0, 5)}));
        REQUIRE(out.per_hyperedge[0].size() == 2);
        CHECK(is_matching(out.per_hyperedge[0]));
    }
    SUBCASE("size seven is a triangle plus an edge") {
        const auto out = embed_triangles_and_edges(Hypergraph(7, {range(0, 7)}));
        REQUIRE(out.per_hyperedge[0].size() == 4);
        CHECK(contains_subgraph(out.shadow, realize_pattern(Pattern::complete(3))));
        std::vector<int> deg(7, 0);
        for (const Edge& e : out.per_hyperedge[0]) ++deg[static_cast<std::size_t>(e.u)], ++deg[static_cast<std::size_t>(e.v)];
        CHECK(std::count(deg.begin(), deg.end(), 2) == 3);
        CHECK(std::count(deg.begin(), deg.end(), 1) == 2);
    }
    SUBCASE("dense repeats report a verified C4") {
        const Hypergraph h = copies(5, range(0, 5), 6);
        const auto out = embed_triangles_and_edges(h);
        REQUIRE(out.violation);
        const auto lifted = extract_witness(h, *out.violation, Pattern::cycle(4));
        REQUIRE(lifted);
        CHECK(verify_witness(h, lifted->pattern_edges, lifted->witness));
    }
}

TEST_CASE("lifting rainbow subgraphs") {
    Hypergraph h(4);
    for (int i = 0; i < 8; ++i) h.add({0, 1, 2});
    EmbeddingViolation v;
    v.saturated = {0, 1, 2};
    const std::vector<ColoredEdge> triangle = {{Edge(0, 1), 2}, {Edge(1, 2), 5}, {Edge(0, 2), 7}};
    v.colors = triangle;
    const LiftedWitness w = lift_rainbow_to_berge(h, v, triangle);
    std::set<std::size_t> used;
    for (const auto& a : w.witness.edge_assignment) used.insert(a.hyperedge);
    CHECK(used == std::set<std::size_t>{2, 5, 7});
    CHECK(verify_witness(h, w.pattern_edges, w.witness));

    const std::vector<ColoredEdge> repeated = {{Edge(0, 1), 2}, {Edge(1, 2), 2}};
    CHECK_THROWS_AS(lift_rainbow_to_berge(h, v, repeated), Error);
    const std::vector<ColoredEdge> outside = {{Edge(0, 3), 2}};
    CHECK_THROWS_AS(lift_rainbow_to_berge(h, v, outside), Error);
}

TEST_CASE("count contracts and disjointness on random hosts") {
    int violations = 0;
    for (std::uint64_t i = 0; i < 300; ++i) {
        Rng rng = make_rng(31, i);
        const int n = 6 + static_cast<int>(i % 6);
        const Hypergraph h = oracle::random_hypergraph(rng, n, 1 + static_cast<int>(i % 9), 2, n);
        CAPTURE(i);

        const auto unique = embed_unique_edges(h);
        check_outcome_shape(h, unique);
        if (unique.ok()) CHECK(unique.shadow.size() == h.size());

        const auto c4 = embed_c4_matchings(h);
        check_outcome_shape(h, c4);
        const auto tri = embed_triangles_and_edges(h);
        check_outcome_shape(h, tri);
        for (std::size_t j = 0; j < h.size(); ++j) {
            const std::size_t size = h.hyperedge(j).size();
            if (c4.ok()) {
                CHECK(c4.per_hyperedge[j].size() == (size >= 4 ? ceil_half(size - 3) : 0));
                CHECK(is_matching(c4.per_hyperedge[j]));
            }
            if (tri.ok()) CHECK(tri.per_hyperedge[j].size() == (size >= 4 ? size - 3 : 0));
        }
        for (const EmbeddingOutcome* out : {&c4, &tri}) {
            if (!out->violation) continue;
            ++violations;
            const auto lifted = extract_witness(h, *out->violation, Pattern::cycle(4));
            REQUIRE(lifted);
            CHECK(verify_witness(h, lifted->pattern_edges, lifted->witness));
        }
    }
    CHECK(violations > 0);
}

TEST_CASE("shuffled order") {
    Rng rng = make_rng(32, 0);
    const Hypergraph h = oracle::random_hypergraph(rng, 10, 8, 4, 7);
    const auto a = embed_shuffled(h, 5, embed_triangles_and_edges);
    const auto b = embed_shuffled(h, 5, embed_triangles_and_edges);
    CHECK(a.shadow == b.shadow);
    CHECK(a.per_hyperedge == b.per_hyperedge);
    check_outcome_shape(h, a);
    if (a.ok())
        for (std::size_t j = 0; j < h.size(); ++j) CHECK(a.per_hyperedge[j].size() == h.hyperedge(j).size() - 3);
}

TEST_CASE("C4-free hosts never stall and inherit freeness") {
    for (std::uint64_t i = 0; i < 12; ++i) {
        const Hypergraph g = girth5_greedy(6 + static_cast<int>(i % 5), split_seed(33, i), 2);
        const Hypergraph h = triple_blowup(g);
        const auto c4 = embed_c4_matchings(h);
        const auto tri = embed_triangles_and_edges(h);
        REQUIRE(c4.ok());
        REQUIRE(tri.ok());
        CHECK_FALSE(find_k2t(c4.shadow, 4));
        CHECK_FALSE(find_k2t(tri.shadow, 7));
    }
}
