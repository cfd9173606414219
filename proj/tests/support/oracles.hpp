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

// Brute-force reference implementations used only by tests. Nothing here
// shares code with the library beyond the data types.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "berge/core.hpp"
#include "berge/random.hpp"

namespace oracle {

using berge::Edge;
using berge::Graph;
using berge::Hypergraph;
using berge::Vertex;

inline bool member(const std::vector<Vertex>& h, Vertex v) { return std::find(h.begin(), h.end(), v) != h.end(); }

inline int endpoint_count(const std::vector<Edge>& edges) {
    int n = 0;
    for (const Edge& e : edges) n = std::max(n, e.v + 1);
    return n;
}

/// Tries every injective vertex map and every injective edge-to-hyperedge
/// assignment. `required` forces that hyperedge into the image.
inline bool naive_berge(const Hypergraph& h, const std::vector<Edge>& pattern,
                        std::optional<std::size_t> required = std::nullopt) {
    const int k = endpoint_count(pattern);
    const int n = h.order();
    const std::size_t m = h.size();
    if (pattern.size() > m || k > n) return false;

    std::vector<Vertex> phi(static_cast<std::size_t>(k), -1);
    std::vector<bool> used_vertex(static_cast<std::size_t>(n), false);
    std::vector<std::size_t> f(pattern.size());
    std::vector<bool> used_edge(m, false);

    auto assign_edges = [&](auto&& self, std::size_t i) -> bool {
        if (i == pattern.size()) return !required || used_edge[*required];
        const Vertex a = phi[static_cast<std::size_t>(pattern[i].u)];
        const Vertex b = phi[static_cast<std::size_t>(pattern[i].v)];
        for (std::size_t j = 0; j < m; ++j) {
            if (used_edge[j] || !member(h.hyperedge(j), a) || !member(h.hyperedge(j), b)) continue;
            used_edge[j] = true;
            f[i] = j;
            const bool ok = self(self, i + 1);
            used_edge[j] = false;
            if (ok) return true;
        }
        return false;
    };
    auto assign_vertices = [&](auto&& self, int p) -> bool {
        if (p == k) return assign_edges(assign_edges, 0);
        for (Vertex x = 0; x < n; ++x) {
            if (used_vertex[static_cast<std::size_t>(x)]) continue;
            used_vertex[static_cast<std::size_t>(x)] = true;
            phi[static_cast<std::size_t>(p)] = x;
            const bool ok = self(self, p + 1);
            used_vertex[static_cast<std::size_t>(x)] = false;
            if (ok) return true;
        }
        return false;
    };
    return assign_vertices(assign_vertices, 0);
}

inline bool naive_subgraph(const Graph& host, const std::vector<Edge>& pattern) {
    const int k = endpoint_count(pattern);
    const int n = host.order();
    if (k > n) return false;
    std::vector<Vertex> phi(static_cast<std::size_t>(k));
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    auto go = [&](auto&& self, int p) -> bool {
        if (p == k) {
            for (const Edge& e : pattern)
                if (!host.adjacent(phi[static_cast<std::size_t>(e.u)], phi[static_cast<std::size_t>(e.v)])) return false;
            return true;
        }
        for (Vertex x = 0; x < n; ++x) {
            if (used[static_cast<std::size_t>(x)]) continue;
            used[static_cast<std::size_t>(x)] = true;
            phi[static_cast<std::size_t>(p)] = x;
            const bool ok = self(self, p + 1);
            used[static_cast<std::size_t>(x)] = false;
            if (ok) return true;
        }
        return false;
    };
    return go(go, 0);
}

inline std::vector<Edge> cycle_edges(int k) {
    if (k == 2) return {Edge(0, 1), Edge(0, 1)};
    std::vector<Edge> out;
    for (int i = 0; i < k; ++i) out.emplace_back(i, (i + 1) % k);
    return out;
}

inline std::vector<Edge> clique_edges(int r) {
    std::vector<Edge> out;
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b) out.emplace_back(a, b);
    return out;
}

inline std::vector<Edge> biclique_edges(int s, int t) {
    std::vector<Edge> out;
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < t; ++b) out.emplace_back(a, s + b);
    return out;
}

inline std::vector<Edge> path_edges(int k) {
    std::vector<Edge> out;
    for (int i = 0; i + 1 < k; ++i) out.emplace_back(i, i + 1);
    return out;
}

/// Smallest k in 2..g_max with a Berge-C_k, or nullopt.
inline std::optional<int> naive_girth(const Hypergraph& h, int g_max) {
    for (int k = 2; k <= g_max; ++k)
        if (naive_berge(h, cycle_edges(k))) return k;
    return std::nullopt;
}

inline std::vector<std::vector<Vertex>> subsets_of_size(int n, int size) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> cur;
    auto go = [&](auto&& self, Vertex next) -> void {
        if (static_cast<int>(cur.size()) == size) {
            out.push_back(cur);
            return;
        }
        for (Vertex v = next; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    go(go, 0);
    return out;
}

struct Best {
    std::int64_t value = 0;
    Hypergraph witness;
};

/// Every family of candidate hyperedges (each used at most `multiplicity`
/// times), free of every forbidden edge list, maximizing `score`.
template <typename Score>
Best unpruned_search(int n, const std::vector<int>& sizes, const std::vector<std::vector<Edge>>& forbidden,
                     int multiplicity, Score&& score) {
    std::vector<std::vector<Vertex>> candidates;
    for (int s : sizes)
        for (auto& c : subsets_of_size(n, s)) candidates.push_back(std::move(c));
    Best best{0, Hypergraph(n)};
    std::vector<int> counts(candidates.size(), 0);
    auto evaluate = [&] {
        Hypergraph h(n);
        for (std::size_t i = 0; i < candidates.size(); ++i)
            for (int c = 0; c < counts[i]; ++c) h.add(candidates[i]);
        for (const auto& f : forbidden)
            if (naive_berge(h, f)) return;
        const std::int64_t v = score(h);
        if (v > best.value) best = {v, h};
    };
    auto go = [&](auto&& self, std::size_t i) -> void {
        if (i == candidates.size()) {
            evaluate();
            return;
        }
        for (int c = 0; c <= multiplicity; ++c) {
            counts[i] = c;
            self(self, i + 1);
        }
        counts[i] = 0;
    };
    go(go, 0);
    return best;
}

/// ex(n, forbidden) over all 2^C(n,2) graphs.
inline std::int64_t unpruned_graph_ex(int n, const std::vector<std::vector<Edge>>& forbidden) {
    std::vector<Edge> all;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) all.emplace_back(a, b);
    std::int64_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
        const auto size = static_cast<std::int64_t>(__builtin_popcountll(mask));
        if (size <= best) continue;
        Graph g(n);
        for (std::size_t i = 0; i < all.size(); ++i)
            if ((mask >> i) & 1U) g.add_edge(all[i].u, all[i].v);
        bool free = true;
        for (const auto& f : forbidden) free = free && !naive_subgraph(g, f);
        if (free) best = size;
    }
    return best;
}

inline std::int64_t degree_sum(const Hypergraph& h) {
    std::int64_t s = 0;
    for (const auto& e : h.hyperedges()) s += static_cast<std::int64_t>(e.size());
    return s;
}

inline std::int64_t deficiency_sum(const Hypergraph& h) {
    std::int64_t s = 0;
    for (const auto& e : h.hyperedges()) s += static_cast<std::int64_t>(e.size()) - 3;
    return s;
}

inline bool linear(const Hypergraph& h) {
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = i + 1; j < h.size(); ++j) {
            int common = 0;
            for (Vertex v : h.hyperedge(i)) common += member(h.hyperedge(j), v) ? 1 : 0;
            if (common >= 2) return false;
        }
    return true;
}

// Generators. Each draws from its own seeded stream so cases reproduce.

inline std::vector<Vertex> random_set(berge::Rng& rng, int n, int size) {
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(size));
    std::sort(all.begin(), all.end());
    return all;
}

inline Hypergraph random_hypergraph(berge::Rng& rng, int n, int edges, int min_size, int max_size) {
    Hypergraph h(n);
    std::uniform_int_distribution<int> size(min_size, std::min(max_size, n));
    for (int i = 0; i < edges; ++i) h.add(random_set(rng, n, size(rng)));
    return h;
}

inline Graph random_graph(berge::Rng& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution keep(p);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (keep(rng)) g.add_edge(a, b);
    return g;
}

/// Random triples kept only while the family stays linear.
inline Hypergraph random_linear_triples(berge::Rng& rng, int n, int attempts) {
    Hypergraph h(n);
    for (int i = 0; i < attempts; ++i) {
        Hypergraph next = h;
        next.add(random_set(rng, n, 3));
        if (linear(next)) h = std::move(next);
    }
    return h;
}

/// Every hypergraph on n vertices with up to max_edges hyperedges of sizes
/// lo..hi, as sorted index lists into the candidate list (repeats allowed).
inline std::vector<Hypergraph> exhaustive_family(int n, int max_edges, int lo, int hi) {
    std::vector<std::vector<Vertex>> candidates;
    for (int s = lo; s <= hi; ++s)
        for (auto& c : subsets_of_size(n, s)) candidates.push_back(std::move(c));
    std::vector<Hypergraph> out;
    std::vector<std::size_t> pick;
    auto go = [&](auto&& self, std::size_t from) -> void {
        Hypergraph h(n);
        for (std::size_t i : pick) h.add(candidates[i]);
        out.push_back(std::move(h));
        if (static_cast<int>(pick.size()) == max_edges) return;
        for (std::size_t i = from; i < candidates.size(); ++i) {
            pick.push_back(i);
            self(self, i);
            pick.pop_back();
        }
    };
    go(go, 0);
    return out;
}

}  // namespace oracle
