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

#include "berge/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

#include "berge/containment.hpp"
#include "berge/error.hpp"
#include "berge/graph_algo.hpp"
#include "berge/parallel.hpp"
#include "berge/random.hpp"

namespace berge {

int BlowupSpec::order() const {
    return static_cast<int>(base.a_side.size()) * copies + static_cast<int>(base.b_side.size());
}

Graph turan_graph(int n, int p) {
    if (p < 1 || p > n) fail(ErrorCode::invalid_argument, "turan_graph needs 1 <= p <= n");
    std::vector<int> part(static_cast<std::size_t>(n));
    Vertex v = 0;
    for (int i = 0; i < p; ++i) {
        const int size = n / p + (i < n % p ? 1 : 0);
        for (int j = 0; j < size; ++j) part[static_cast<std::size_t>(v++)] = i;
    }
    Graph g(n);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (part[static_cast<std::size_t>(a)] != part[static_cast<std::size_t>(b)]) g.add_edge(a, b);
    return g;
}

Bipartition bipartite_half(const Graph& g) {
    const int n = g.order();
    std::vector<int> side(static_cast<std::size_t>(n));
    if (auto coloring = two_coloring(g)) {
        side = std::move(*coloring);
    } else {
        for (Vertex v = 0; v < n; ++v) side[static_cast<std::size_t>(v)] = v < n / 2 ? 0 : 1;
        for (bool moved = true; moved;) {
            moved = false;
            for (Vertex v = 0; v < n; ++v) {
                int internal = 0, cross = 0;
                for (auto w = g.neighbors(v).find_first(); w != Bitset::npos; w = g.neighbors(v).find_next(w))
                    (side[w] == side[static_cast<std::size_t>(v)] ? internal : cross) += 1;
                if (internal > cross) {
                    side[static_cast<std::size_t>(v)] ^= 1;
                    moved = true;
                }
            }
        }
    }
    Bipartition out;
    for (Vertex v = 0; v < n; ++v) (side[static_cast<std::size_t>(v)] == 0 ? out.a_side : out.b_side).push_back(v);
    for (const Edge& e : g.edges())
        if (side[static_cast<std::size_t>(e.u)] != side[static_cast<std::size_t>(e.v)]) out.cross.push_back(e);
    if (2 * out.cross.size() < g.size()) fail(ErrorCode::internal, "local switching kept fewer than half the edges");
    return out;
}

Hypergraph blow_up(const BlowupSpec& spec) {
    if (spec.copies < 1) fail(ErrorCode::invalid_argument, "blow-up needs at least one copy per vertex");
    std::map<Vertex, std::size_t> a_index;
    std::map<Vertex, std::size_t> b_index;
    for (std::size_t i = 0; i < spec.base.a_side.size(); ++i) a_index[spec.base.a_side[i]] = i;
    for (std::size_t i = 0; i < spec.base.b_side.size(); ++i) b_index[spec.base.b_side[i]] = i;
    const Vertex b_start = static_cast<Vertex>(spec.base.a_side.size()) * spec.copies;
    Hypergraph h(spec.order());
    for (const Edge& e : spec.base.cross) {
        Vertex a = e.u, b = e.v;
        if (!a_index.contains(a)) std::swap(a, b);
        if (!a_index.contains(a) || !b_index.contains(b))
            fail(ErrorCode::invalid_argument, "cross edge does not join the two sides");
        std::vector<Vertex> hyperedge;
        const Vertex start = spec.block_start(a_index[a]);
        for (int c = 0; c < spec.copies; ++c) hyperedge.push_back(start + c);
        hyperedge.push_back(b_start + static_cast<Vertex>(b_index[b]));
        h.add(std::move(hyperedge));
    }
    return h;
}

BlowupSpec kr_blowup_spec(int n, int r) {
    if (r < 3) fail(ErrorCode::invalid_argument, "K_r blow-up needs r >= 3");
    if (n < r - 1) fail(ErrorCode::invalid_argument, "K_r blow-up needs n >= r - 1");
    return BlowupSpec{bipartite_half(turan_graph(n, r - 1)), r - 1};
}

BlowupSpec kst_blowup_spec(const Graph& g, int s, int t) {
    if (s < 2 || s > t) fail(ErrorCode::invalid_argument, "K_{s,t} blow-up needs 2 <= s <= t");
    const Pattern kst = Pattern::biclique(s, t);
    if (auto copy = find_subgraph(g, realize_pattern(kst))) {
        std::string where;
        for (Vertex v : *copy) where += (where.empty() ? "" : " ") + std::to_string(v);
        fail(ErrorCode::precondition, "graph contains " + kst.name() + " on vertices " + where);
    }
    return BlowupSpec{bipartite_half(g), s + t - 1};
}

Hypergraph blowup_kr(int n, int r) { return blow_up(kr_blowup_spec(n, r)); }

Hypergraph blowup_kst(const Graph& g, int s, int t) { return blow_up(kst_blowup_spec(g, s, t)); }

Hypergraph star_free_construction(int n, int t) {
    if (t < 2) fail(ErrorCode::invalid_argument, "star-free construction needs t >= 2");
    if (n < 1 + t) fail(ErrorCode::invalid_argument, "star-free construction needs n >= 1 + t");
    Hypergraph h(n);
    const int blocks = n / (1 + t);
    for (int b = 0; b < blocks; ++b) {
        std::vector<Vertex> block(static_cast<std::size_t>(1 + t));
        std::iota(block.begin(), block.end(), b * (1 + t));
        for (int c = 0; c < t - 1; ++c) h.add(block);
    }
    return h;
}

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

Graph c4_free_incidence_graph(int q) {
    if (!is_prime(q)) fail(ErrorCode::invalid_argument, "plane order " + std::to_string(q) + " is not prime");
    std::vector<std::array<int, 3>> points;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) points.push_back({1, a, b});
    for (int b = 0; b < q; ++b) points.push_back({0, 1, b});
    points.push_back({0, 0, 1});
    const int count = static_cast<int>(points.size());
    Graph g(2 * count);
    for (int p = 0; p < count; ++p)
        for (int l = 0; l < count; ++l) {
            const auto& x = points[static_cast<std::size_t>(p)];
            const auto& y = points[static_cast<std::size_t>(l)];
            if ((x[0] * y[0] + x[1] * y[1] + x[2] * y[2]) % q == 0) g.add_edge(p, count + l);
        }
    return g;
}

namespace {

struct GreedyRun {
    std::vector<std::vector<Vertex>> edges;
};

GreedyRun greedy_girth5(int n, Rng& rng) {
    std::vector<std::array<Vertex, 3>> triples;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c) triples.push_back({a, b, c});
    std::shuffle(triples.begin(), triples.end(), rng);
    Graph shadow(n);
    GreedyRun run;
    auto pair_ok = [&](Vertex x, Vertex y) {
        if (shadow.adjacent(x, y)) return false;
        const Bitset& nx = shadow.neighbors(x);
        const Bitset& ny = shadow.neighbors(y);
        if (nx.intersects(ny)) return false;
        // A shadow path x-z-w-y would close a short Berge cycle.
        for (auto z = nx.find_first(); z != Bitset::npos; z = nx.find_next(z)) {
            Bitset mid = shadow.neighbors(static_cast<Vertex>(z)) & ny;
            mid.reset(static_cast<std::size_t>(x));
            if (mid.any()) return false;
        }
        return true;
    };
    for (const auto& [a, b, c] : triples) {
        if (!pair_ok(a, b) || !pair_ok(a, c) || !pair_ok(b, c)) continue;
        shadow.add_edge(a, b);
        shadow.add_edge(a, c);
        shadow.add_edge(b, c);
        run.edges.push_back({a, b, c});
    }
    std::sort(run.edges.begin(), run.edges.end());
    return run;
}

}  // namespace

Hypergraph girth5_greedy(int n, std::uint64_t seed, int trials, int workers) {
    if (n < 3) fail(ErrorCode::invalid_argument, "girth5_greedy needs n >= 3");
    if (trials < 1) fail(ErrorCode::invalid_argument, "girth5_greedy needs at least one trial");
    std::vector<GreedyRun> runs(static_cast<std::size_t>(trials));
    parallel_for(runs.size(), workers, [&](std::size_t i) {
        Rng rng = make_rng(seed, i);
        runs[i] = greedy_girth5(n, rng);
    });
    const GreedyRun* best = &runs.front();
    for (const GreedyRun& run : runs)
        if (run.edges.size() > best->edges.size() ||
            (run.edges.size() == best->edges.size() && run.edges < best->edges))
            best = &run;
    return Hypergraph(n, best->edges);
}

Hypergraph triple_blowup(const Hypergraph& g3) {
    require_valid(g3);
    for (std::size_t i = 0; i < g3.size(); ++i)
        if (g3.hyperedge(i).size() != 3)
            fail(ErrorCode::precondition, "hyperedge " + std::to_string(i) + " does not have size 3");
    const GirthReport report = berge_girth(g3, 4);
    if (report.girth) {
        std::string detail;
        if (report.c2_pair) {
            detail = "hyperedges " + std::to_string(report.c2_pair->first) + " and " +
                     std::to_string(report.c2_pair->second) + " share two vertices";
        } else {
            for (const auto& a : report.witness->edge_assignment)
                detail += (detail.empty() ? "hyperedges " : ", ") + std::to_string(a.hyperedge);
        }
        fail(ErrorCode::precondition, "input has a Berge-C" + std::to_string(*report.girth) + ": " + detail);
    }
    Hypergraph out(3 * g3.order());
    for (const auto& e : g3.hyperedges()) {
        std::vector<Vertex> blown;
        for (Vertex v : e)
            for (int c = 0; c < 3; ++c) blown.push_back(3 * v + c);
        out.add(std::move(blown));
    }
    return out;
}

Certificate certify_berge_free(const Hypergraph& h, const Pattern& p, const CertifyOptions& options) {
    Certificate c;
    c.claimed_property = "Berge-" + p.name() + "-free";
    if (h.order() > options.host_limit) {
        c.check_performed = "skipped: host has " + std::to_string(h.order()) + " vertices, above the oracle limit " +
                            std::to_string(options.host_limit);
        c.passed = false;
        return c;
    }
    ContainmentOptions co;
    co.vertex_guard = options.pattern_guard;
    co.workers = options.workers;
    const auto w = contains_berge(h, p, co);
    c.check_performed = "exhaustive containment search";
    c.passed = !w.has_value();
    return c;
}

Certificate certify_blowup_structure(const Hypergraph& h, const BlowupSpec& spec) {
    Certificate c;
    c.claimed_property = "each hyperedge is one A-block plus one B vertex";
    c.check_performed = "structural scan of all hyperedges";
    const Vertex b_start = static_cast<Vertex>(spec.base.a_side.size()) * spec.copies;
    c.passed = h.size() == spec.base.cross.size() && h.order() == spec.order();
    for (const auto& e : h.hyperedges()) {
        if (!c.passed) break;
        const auto b_count = std::count_if(e.begin(), e.end(), [&](Vertex v) { return v >= b_start; });
        const bool one_block = e.size() == static_cast<std::size_t>(spec.uniformity()) && e.front() % spec.copies == 0 &&
                               e[static_cast<std::size_t>(spec.copies) - 1] == e.front() + spec.copies - 1 &&
                               e[static_cast<std::size_t>(spec.copies) - 1] < b_start;
        c.passed = b_count == 1 && one_block;
    }
    return c;
}

Certificate certify_berge_girth(const Hypergraph& h, int g, const CertifyOptions& options) {
    Certificate c;
    c.claimed_property = "Berge girth >= " + std::to_string(g);
    if (h.order() > options.host_limit) {
        c.check_performed = "skipped: host has " + std::to_string(h.order()) + " vertices, above the oracle limit " +
                            std::to_string(options.host_limit);
        return c;
    }
    ContainmentOptions co;
    co.vertex_guard = options.pattern_guard;
    co.workers = options.workers;
    c.check_performed = "exhaustive Berge-C_k search for k = 2.." + std::to_string(g - 1);
    c.passed = !berge_girth(h, g - 1, co).girth.has_value();
    return c;
}

Certificate certify_subgraph_free(const Graph& g, const Pattern& p) {
    Certificate c;
    c.claimed_property = p.name() + "-free";
    c.check_performed = "exhaustive subgraph search";
    c.passed = !contains_subgraph(g, realize_pattern(p));
    return c;
}

}  // namespace berge
