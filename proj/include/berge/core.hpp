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

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace berge {

using Vertex = std::int32_t;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Unordered vertex pair stored with `u < v`.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool contains(Vertex x) const { return x == u || x == v; }
    auto operator<=>(const Edge&) const = default;
};

std::uint64_t pair_key(Vertex a, Vertex b);

/// Simple undirected graph on vertices 0..order()-1. Edges are kept sorted.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    /// Throws Error(invalid_argument) on loops, duplicates, or out-of-range endpoints.
    Graph(int n, const std::vector<Edge>& edges);

    int order() const { return n_; }
    std::size_t size() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool adjacent(Vertex a, Vertex b) const;
    const Bitset& neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).count()); }

    /// Returns false when the edge was already present.
    bool add_edge(Vertex a, Vertex b);

    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<Bitset> adjacency_;
};

/// Ordered multiset of hyperedges. Each hyperedge is stored sorted; repeated
/// vertices are kept so that validate() can report them.
class Hypergraph {
public:
    Hypergraph() = default;
    explicit Hypergraph(int n) : n_(n) {}
    Hypergraph(int n, std::vector<std::vector<Vertex>> hyperedges);

    int order() const { return n_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    const std::vector<std::vector<Vertex>>& hyperedges() const { return edges_; }
    const std::vector<Vertex>& hyperedge(std::size_t i) const { return edges_[i]; }

    void add(std::vector<Vertex> hyperedge);

    bool contains(std::size_t index, Vertex v) const;

    bool operator==(const Hypergraph&) const = default;

private:
    int n_ = 0;
    std::vector<std::vector<Vertex>> edges_;
};

struct Violation {
    std::size_t hyperedge = 0;
    std::string rule;

    std::string message() const;
    bool operator==(const Violation&) const = default;
};

std::vector<Violation> validate(const Hypergraph& h);

/// Throws Error(invalid_argument) naming the first violation.
void require_valid(const Hypergraph& h);

struct CountReport {
    std::size_t edge_count = 0;
    std::int64_t degree_sum = 0;
    std::int64_t deficiency_sum = 0;
    std::size_t min_size = 0;
    std::size_t max_size = 0;

    bool operator==(const CountReport&) const = default;
};

CountReport count_report(const Hypergraph& h);

/// Number of hyperedges containing each vertex.
std::vector<std::int64_t> vertex_degrees(const Hypergraph& h);

class Pattern {
public:
    enum class Kind { complete, biclique, cycle, path, arbitrary };

    static Pattern complete(int r);
    static Pattern biclique(int s, int t);
    static Pattern cycle(int k);
    static Pattern path(int k);
    static Pattern arbitrary(Graph g);

    /// Accepts `K<r>`, `K<s>,<t>`, `C<k>`, `P<k>` (case-insensitive, braces
    /// and underscores ignored, e.g. `K_{2,3}`).
    static Pattern parse(std::string_view spec);

    Kind kind() const { return kind_; }
    int first() const { return a_; }
    int second() const { return b_; }
    const Graph& graph() const { return graph_; }

    bool is_c2() const { return kind_ == Kind::cycle && a_ == 2; }

    /// Vertices of positive degree.
    int vertex_count() const;
    int edge_count() const;

    /// Edge list, possibly with a parallel pair (only for C2).
    std::vector<Edge> edge_list() const;

    std::string name() const;

private:
    Pattern(Kind kind, int a, int b) : kind_(kind), a_(a), b_(b) {}

    Kind kind_ = Kind::complete;
    int a_ = 0;
    int b_ = 0;
    Graph graph_;
};

/// Throws Error(invalid_argument) for C2, which has no simple-graph realization.
Graph realize_pattern(const Pattern& p);

/// Cheap isomorphism test by permutation search; intended for graphs on at most ~9 vertices.
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace berge
