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

#include "berge/core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "berge/error.hpp"

namespace berge {

std::uint64_t pair_key(Vertex a, Vertex b) {
    const Edge e(a, b);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.u)) << 32) |
           static_cast<std::uint32_t>(e.v);
}

Graph::Graph(int n) : n_(n) {
    if (n < 0) fail(ErrorCode::invalid_argument, "graph order must be non-negative");
    adjacency_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (const Edge& e : edges) {
        if (!add_edge(e.u, e.v)) {
            fail(ErrorCode::invalid_argument,
                 "duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
        }
    }
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) {
        fail(ErrorCode::invalid_argument,
             "vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
    }
}

bool Graph::adjacent(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
    return adjacency_[static_cast<std::size_t>(a)].test(static_cast<std::size_t>(b));
}

bool Graph::add_edge(Vertex a, Vertex b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) fail(ErrorCode::invalid_argument, "loop at vertex " + std::to_string(a));
    if (adjacent(a, b)) return false;
    const Edge e(a, b);
    edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
    adjacency_[static_cast<std::size_t>(a)].set(static_cast<std::size_t>(b));
    adjacency_[static_cast<std::size_t>(b)].set(static_cast<std::size_t>(a));
    return true;
}

Hypergraph::Hypergraph(int n, std::vector<std::vector<Vertex>> hyperedges) : n_(n) {
    edges_.reserve(hyperedges.size());
    for (auto& h : hyperedges) add(std::move(h));
}

void Hypergraph::add(std::vector<Vertex> hyperedge) {
    std::sort(hyperedge.begin(), hyperedge.end());
    edges_.push_back(std::move(hyperedge));
}

bool Hypergraph::contains(std::size_t index, Vertex v) const {
    const auto& h = edges_[index];
    return std::binary_search(h.begin(), h.end(), v);
}

std::string Violation::message() const {
    return rule + " in hyperedge " + std::to_string(hyperedge);
}

std::vector<Violation> validate(const Hypergraph& h) {
    std::vector<Violation> out;
    if (h.order() < 0) out.push_back({0, "negative vertex count"});
    for (std::size_t i = 0; i < h.size(); ++i) {
        const auto& e = h.hyperedge(i);
        if (e.empty()) {
            out.push_back({i, "empty hyperedge"});
            continue;
        }
        if (std::adjacent_find(e.begin(), e.end()) != e.end()) out.push_back({i, "repeated vertex"});
        if (e.front() < 0 || e.back() >= h.order()) out.push_back({i, "vertex out of range"});
    }
    return out;
}

void require_valid(const Hypergraph& h) {
    const auto violations = validate(h);
    if (!violations.empty()) fail(ErrorCode::invalid_argument, "invalid hypergraph: " + violations.front().message());
}

std::vector<std::int64_t> vertex_degrees(const Hypergraph& h) {
    std::vector<std::int64_t> deg(static_cast<std::size_t>(std::max(h.order(), 0)), 0);
    for (const auto& e : h.hyperedges())
        for (Vertex v : e) ++deg[static_cast<std::size_t>(v)];
    return deg;
}

CountReport count_report(const Hypergraph& h) {
    require_valid(h);
    CountReport r;
    r.edge_count = h.size();
    for (const auto& e : h.hyperedges()) r.degree_sum += static_cast<std::int64_t>(e.size());
    const auto deg = vertex_degrees(h);
    const auto by_vertex = std::accumulate(deg.begin(), deg.end(), std::int64_t{0});
    if (by_vertex != r.degree_sum) fail(ErrorCode::internal, "degree sum identity failed");
    r.deficiency_sum = r.degree_sum - 3 * static_cast<std::int64_t>(r.edge_count);
    if (!h.empty()) {
        auto [lo, hi] = std::minmax_element(h.hyperedges().begin(), h.hyperedges().end(),
                                            [](const auto& a, const auto& b) { return a.size() < b.size(); });
        r.min_size = lo->size();
        r.max_size = hi->size();
    }
    return r;
}

Pattern Pattern::complete(int r) {
    if (r < 2) fail(ErrorCode::invalid_argument, "K_r requires r >= 2");
    return Pattern(Kind::complete, r, 0);
}

Pattern Pattern::biclique(int s, int t) {
    if (s < 1 || s > t) fail(ErrorCode::invalid_argument, "K_{s,t} requires 1 <= s <= t");
    return Pattern(Kind::biclique, s, t);
}

Pattern Pattern::cycle(int k) {
    if (k < 2) fail(ErrorCode::invalid_argument, "C_k requires k >= 2");
    return Pattern(Kind::cycle, k, 0);
}

Pattern Pattern::path(int k) {
    if (k < 2) fail(ErrorCode::invalid_argument, "P_k requires k >= 2");
    return Pattern(Kind::path, k, 0);
}

Pattern Pattern::arbitrary(Graph g) {
    if (g.size() == 0) fail(ErrorCode::invalid_argument, "pattern graph has no edges");
    Pattern p(Kind::arbitrary, g.order(), 0);
    p.graph_ = std::move(g);
    return p;
}

namespace {

int parse_int(std::string_view s, std::string_view spec) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        fail(ErrorCode::parse, "bad pattern spec '" + std::string(spec) + "'");
    return value;
}

}  // namespace

Pattern Pattern::parse(std::string_view spec) {
    std::string s;
    for (char c : spec) {
        if (c == '_' || c == '{' || c == '}' || std::isspace(static_cast<unsigned char>(c))) continue;
        s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    if (s.size() < 2) fail(ErrorCode::parse, "bad pattern spec '" + std::string(spec) + "'");
    const char head = s[0];
    std::string_view rest(s);
    rest.remove_prefix(1);
    switch (head) {
    case 'K': {
        const auto sep = rest.find_first_of(",X");
        if (sep == std::string_view::npos) return complete(parse_int(rest, spec));
        return biclique(parse_int(rest.substr(0, sep), spec), parse_int(rest.substr(sep + 1), spec));
    }
    case 'C': return cycle(parse_int(rest, spec));
    case 'P': return path(parse_int(rest, spec));
    default: fail(ErrorCode::parse, "bad pattern spec '" + std::string(spec) + "'");
    }
}

int Pattern::vertex_count() const {
    switch (kind_) {
    case Kind::complete: return a_;
    case Kind::biclique: return a_ + b_;
    case Kind::cycle: return a_;
    case Kind::path: return a_;
    case Kind::arbitrary: {
        int count = 0;
        for (Vertex v = 0; v < graph_.order(); ++v) count += graph_.degree(v) > 0 ? 1 : 0;
        return count;
    }
    }
    return 0;
}

int Pattern::edge_count() const { return static_cast<int>(edge_list().size()); }

std::vector<Edge> Pattern::edge_list() const {
    if (is_c2()) return {Edge(0, 1), Edge(0, 1)};
    return realize_pattern(*this).edges();
}

std::string Pattern::name() const {
    switch (kind_) {
    case Kind::complete: return "K" + std::to_string(a_);
    case Kind::biclique: return "K" + std::to_string(a_) + "," + std::to_string(b_);
    case Kind::cycle: return "C" + std::to_string(a_);
    case Kind::path: return "P" + std::to_string(a_);
    case Kind::arbitrary: return "graph(" + std::to_string(graph_.order()) + "," + std::to_string(graph_.size()) + ")";
    }
    return {};
}

Graph realize_pattern(const Pattern& p) {
    using Kind = Pattern::Kind;
    switch (p.kind()) {
    case Kind::complete: {
        Graph g(p.first());
        for (Vertex a = 0; a < p.first(); ++a)
            for (Vertex b = a + 1; b < p.first(); ++b) g.add_edge(a, b);
        return g;
    }
    case Kind::biclique: {
        const int s = p.first(), t = p.second();
        Graph g(s + t);
        for (Vertex a = 0; a < s; ++a)
            for (Vertex b = s; b < s + t; ++b) g.add_edge(a, b);
        return g;
    }
    case Kind::cycle: {
        if (p.is_c2())
            fail(ErrorCode::invalid_argument, "C2 has no simple-graph realization; use the linearity predicate");
        const int k = p.first();
        Graph g(k);
        for (Vertex a = 0; a < k; ++a) g.add_edge(a, (a + 1) % k);
        return g;
    }
    case Kind::path: {
        const int k = p.first();
        Graph g(k);
        for (Vertex a = 0; a + 1 < k; ++a) g.add_edge(a, a + 1);
        return g;
    }
    case Kind::arbitrary: return p.graph();
    }
    return Graph();
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<int> da, db;
    for (Vertex v = 0; v < a.order(); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    std::vector<Vertex> perm(static_cast<std::size_t>(a.order()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const Edge& e : a.edges()) {
            if (!b.adjacent(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)])) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace berge
