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

#include "berge/embeddings.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <unordered_map>

#include "berge/error.hpp"
#include "berge/random.hpp"
#include "berge/ramsey.hpp"

namespace berge {

namespace {

class Embedder {
public:
    explicit Embedder(const Hypergraph& h) : h_(h) {
        require_valid(h);
        out_.shadow = Graph(h.order());
        out_.per_hyperedge.resize(h.size());
    }

    bool used(Vertex a, Vertex b) const { return owner_.contains(pair_key(a, b)); }

    void embed(std::size_t index, Edge e) {
        if (!owner_.emplace(pair_key(e.u, e.v), index).second)
            fail(ErrorCode::internal, "pair embedded twice");
        out_.shadow.add_edge(e.u, e.v);
        out_.per_hyperedge[index].push_back(e);
    }

    int used_among(const std::vector<Vertex>& vs) const {
        int count = 0;
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b) count += used(vs[a], vs[b]) ? 1 : 0;
        return count;
    }

    void violate(std::size_t index, std::vector<Vertex> saturated, std::string reason) {
        EmbeddingViolation v;
        v.hyperedge = index;
        std::sort(saturated.begin(), saturated.end());
        for (std::size_t a = 0; a < saturated.size(); ++a)
            for (std::size_t b = a + 1; b < saturated.size(); ++b) {
                auto it = owner_.find(pair_key(saturated[a], saturated[b]));
                if (it != owner_.end()) v.colors.push_back({Edge(saturated[a], saturated[b]), it->second});
            }
        v.saturated = std::move(saturated);
        v.reason = std::move(reason);
        out_.violation = std::move(v);
    }

    /// Lexicographically first unused pair among `vs` (sorted).
    std::optional<Edge> first_free_pair(const std::vector<Vertex>& vs) const {
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b)
                if (!used(vs[a], vs[b])) return Edge(vs[a], vs[b]);
        return std::nullopt;
    }

    std::optional<std::array<Vertex, 3>> first_free_triangle(const std::vector<Vertex>& vs) const {
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b) {
                if (used(vs[a], vs[b])) continue;
                for (std::size_t c = b + 1; c < vs.size(); ++c)
                    if (!used(vs[a], vs[c]) && !used(vs[b], vs[c])) return std::array{vs[a], vs[b], vs[c]};
            }
        return std::nullopt;
    }

    /// Lexicographically first k-matching of unused pairs among `vs`.
    std::optional<std::vector<Edge>> first_free_matching(const std::vector<Vertex>& vs, int k) const {
        std::vector<Edge> pairs;
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b)
                if (!used(vs[a], vs[b])) pairs.emplace_back(vs[a], vs[b]);
        std::vector<Edge> chosen;
        std::set<Vertex> covered;
        auto search = [&](auto&& self, std::size_t from) -> bool {
            if (static_cast<int>(chosen.size()) == k) return true;
            for (std::size_t i = from; i < pairs.size(); ++i) {
                const Edge& e = pairs[i];
                if (covered.contains(e.u) || covered.contains(e.v)) continue;
                chosen.push_back(e);
                covered.insert(e.u);
                covered.insert(e.v);
                if (self(self, i + 1)) return true;
                covered.erase(e.u);
                covered.erase(e.v);
                chosen.pop_back();
            }
            return false;
        };
        if (search(search, 0)) return chosen;
        return std::nullopt;
    }

    const Hypergraph& hypergraph() const { return h_; }
    EmbeddingOutcome take() { return std::move(out_); }
    bool failed() const { return out_.violation.has_value(); }

private:
    const Hypergraph& h_;
    EmbeddingOutcome out_;
    std::unordered_map<std::uint64_t, std::size_t> owner_;
};

void remove_vertices(std::vector<Vertex>& from, std::initializer_list<Vertex> gone) {
    from.erase(std::remove_if(from.begin(), from.end(),
                              [&](Vertex v) { return std::find(gone.begin(), gone.end(), v) != gone.end(); }),
               from.end());
}

}  // namespace

EmbeddingOutcome embed_unique_edges(const Hypergraph& h) {
    Embedder run(h);
    for (std::size_t i = 0; i < h.size(); ++i)
        if (h.hyperedge(i).size() < 2)
            fail(ErrorCode::precondition, "hyperedge " + std::to_string(i) + " has fewer than 2 vertices");
    for (std::size_t i = 0; i < h.size(); ++i) {
        const auto& e = h.hyperedge(i);
        if (auto pair = run.first_free_pair(e)) {
            run.embed(i, *pair);
        } else {
            run.violate(i, e, "every pair inside the hyperedge is already used");
            break;
        }
    }
    return run.take();
}

long matching_threshold(const Pattern& p) {
    const long a = p.first(), b = p.second();
    switch (p.kind()) {
    case Pattern::Kind::complete: return a * a * a;
    case Pattern::Kind::biclique: return a + a * (a - 1) * (b - 1) + b;
    default: fail(ErrorCode::invalid_argument, "matching embedding supports K_r and K_{s,t} patterns only");
    }
}

EmbeddingOutcome embed_matchings(const Hypergraph& h, const Pattern& p) {
    const long threshold = matching_threshold(p);
    Embedder run(h);
    for (std::size_t i = 0; i < h.size(); ++i) {
        const auto& e = h.hyperedge(i);
        const long size = static_cast<long>(e.size());
        if (size < threshold) continue;
        std::vector<char> matched(e.size(), 0);
        std::vector<Edge> matching;
        for (std::size_t a = 0; a < e.size(); ++a) {
            if (matched[a]) continue;
            for (std::size_t b = a + 1; b < e.size(); ++b) {
                if (matched[b] || run.used(e[a], e[b])) continue;
                matching.emplace_back(e[a], e[b]);
                matched[a] = matched[b] = 1;
                break;
            }
        }
        if (2 * static_cast<long>(matching.size()) < size - threshold) {
            std::vector<Vertex> rest;
            for (std::size_t a = 0; a < e.size(); ++a)
                if (!matched[a]) rest.push_back(e[a]);
            run.violate(i, std::move(rest),
                        "maximal matching below (|h| - " + std::to_string(threshold) + ") / 2; unmatched vertices are saturated");
            break;
        }
        for (const Edge& m : matching) run.embed(i, m);
    }
    return run.take();
}

EmbeddingOutcome embed_c4_matchings(const Hypergraph& h) {
    Embedder run(h);
    for (std::size_t i = 0; i < h.size() && !run.failed(); ++i) {
        std::vector<Vertex> untouched = h.hyperedge(i);
        if (untouched.size() < 4) continue;
        while (untouched.size() >= 4) {
            const auto pair = run.first_free_pair(untouched);
            if (!pair) {
                run.violate(i, {untouched.begin(), untouched.begin() + 4}, "all six pairs on four untouched vertices are used");
                break;
            }
            run.embed(i, *pair);
            remove_vertices(untouched, {pair->u, pair->v});
        }
    }
    return run.take();
}

EmbeddingOutcome embed_triangles_and_edges(const Hypergraph& h) {
    Embedder run(h);
    for (std::size_t i = 0; i < h.size() && !run.failed(); ++i) {
        const auto& e = h.hyperedge(i);
        if (e.size() < 4) continue;

        // No four vertices of the hyperedge may already span five embedded edges.
        std::vector<Vertex> quad(4);
        for (std::size_t a = 0; a < e.size() && !run.failed(); ++a)
            for (std::size_t b = a + 1; b < e.size() && !run.failed(); ++b)
                for (std::size_t c = b + 1; c < e.size() && !run.failed(); ++c)
                    for (std::size_t d = c + 1; d < e.size(); ++d) {
                        quad = {e[a], e[b], e[c], e[d]};
                        if (run.used_among(quad) >= 5) {
                            run.violate(i, quad, "four vertices of the hyperedge already span five embedded edges");
                            break;
                        }
                    }
        if (run.failed()) break;

        std::vector<Vertex> rest = e;
        while (rest.size() >= 4) {
            const std::size_t k = rest.size();
            if (k >= 6) {
                if (auto tri = run.first_free_triangle(rest)) {
                    const auto [x, y, z] = *tri;
                    run.embed(i, Edge(x, y));
                    run.embed(i, Edge(x, z));
                    run.embed(i, Edge(y, z));
                    remove_vertices(rest, {x, y, z});
                    continue;
                }
                if (k >= 7) fail(ErrorCode::internal, "no unused triangle among 7 or more vertices without a dense quadruple");
            }
            const int want = static_cast<int>(k) - 3;
            auto matching = run.first_free_matching(rest, want);
            if (!matching)
                fail(ErrorCode::internal, "no unused " + std::to_string(want) + "-matching on " + std::to_string(k) +
                                              " vertices without a dense quadruple");
            for (const Edge& m : *matching) run.embed(i, m);
            break;
        }
    }
    return run.take();
}

EmbeddingOutcome embed_shuffled(const Hypergraph& h, std::uint64_t seed,
                                const std::function<EmbeddingOutcome(const Hypergraph&)>& procedure) {
    std::vector<std::size_t> perm(h.size());
    std::iota(perm.begin(), perm.end(), 0);
    Rng rng = make_rng(seed, 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Hypergraph shuffled(h.order());
    for (std::size_t i : perm) shuffled.add(h.hyperedge(i));
    EmbeddingOutcome inner = procedure(shuffled);
    EmbeddingOutcome out;
    out.shadow = std::move(inner.shadow);
    out.per_hyperedge.resize(h.size());
    for (std::size_t i = 0; i < perm.size(); ++i) out.per_hyperedge[perm[i]] = std::move(inner.per_hyperedge[i]);
    if (inner.violation) {
        EmbeddingViolation v = std::move(*inner.violation);
        v.hyperedge = perm[v.hyperedge];
        for (auto& c : v.colors) c.color = perm[c.color];
        out.violation = std::move(v);
    }
    return out;
}

LiftedWitness lift_rainbow_to_berge(const Hypergraph& h, const EmbeddingViolation& violation,
                                    const std::vector<ColoredEdge>& rainbow) {
    if (rainbow.empty()) fail(ErrorCode::invalid_argument, "invalid violation: empty rainbow subgraph");
    std::set<std::size_t> allowed{violation.hyperedge};
    for (const auto& c : violation.colors) allowed.insert(c.color);
    std::set<std::size_t> seen;
    std::set<Vertex> endpoints;
    for (const auto& c : rainbow) {
        if (!seen.insert(c.color).second) fail(ErrorCode::invalid_argument, "invalid violation: color repeated");
        if (!allowed.contains(c.color))
            fail(ErrorCode::invalid_argument, "invalid violation: color " + std::to_string(c.color) + " not part of the violation");
        if (c.color >= h.size() || !h.contains(c.color, c.edge.u) || !h.contains(c.color, c.edge.v))
            fail(ErrorCode::invalid_argument, "invalid violation: edge not inside its hyperedge");
        endpoints.insert(c.edge.u);
        endpoints.insert(c.edge.v);
    }
    const std::vector<Vertex> hosts(endpoints.begin(), endpoints.end());
    auto id = [&](Vertex v) {
        return static_cast<Vertex>(std::lower_bound(hosts.begin(), hosts.end(), v) - hosts.begin());
    };
    LiftedWitness out;
    for (std::size_t i = 0; i < hosts.size(); ++i) out.witness.vertex_map[static_cast<Vertex>(i)] = hosts[i];
    for (const auto& c : rainbow) {
        const Edge pe(id(c.edge.u), id(c.edge.v));
        out.pattern_edges.push_back(pe);
        out.witness.edge_assignment.push_back({pe, c.color});
    }
    return out;
}

namespace {

std::optional<std::vector<ColoredEdge>> rainbow_by_search(const Hypergraph& h, const EmbeddingViolation& v,
                                                          const Pattern& pattern) {
    const auto& sat = v.saturated;
    std::set<std::size_t> candidates{v.hyperedge};
    for (const auto& c : v.colors) candidates.insert(c.color);
    Hypergraph local(static_cast<int>(sat.size()));
    std::vector<std::size_t> source;
    for (std::size_t idx : candidates) {
        std::vector<Vertex> inside;
        for (std::size_t i = 0; i < sat.size(); ++i)
            if (h.contains(idx, sat[i])) inside.push_back(static_cast<Vertex>(i));
        if (inside.size() < 2) continue;
        local.add(std::move(inside));
        source.push_back(idx);
    }
    ContainmentOptions options;
    options.vertex_guard = std::max(options.vertex_guard, pattern.vertex_count());
    const auto w = contains_berge(local, pattern, options);
    if (!w) return std::nullopt;
    std::vector<ColoredEdge> rainbow;
    for (const auto& a : w->edge_assignment) {
        const Vertex x = sat[static_cast<std::size_t>(w->vertex_map.at(a.pattern_edge.u))];
        const Vertex y = sat[static_cast<std::size_t>(w->vertex_map.at(a.pattern_edge.v))];
        rainbow.push_back({Edge(x, y), source[a.hyperedge]});
    }
    return rainbow;
}

/// The constructive route: colour the saturated clique by source hyperedge
/// and run the rainbow finders.
std::optional<std::vector<ColoredEdge>> rainbow_by_coloring(const EmbeddingViolation& v, const Pattern& pattern) {
    const auto& sat = v.saturated;
    const int k = static_cast<int>(sat.size());
    const std::size_t pairs = static_cast<std::size_t>(k) * static_cast<std::size_t>(k - 1) / 2;
    if (v.colors.size() != pairs) return std::nullopt;
    const Graph base = complete_graph(k);
    std::vector<int> colors;
    colors.reserve(pairs);
    for (const auto& c : v.colors) colors.push_back(static_cast<int>(c.color));
    // v.colors is in lexicographic pair order over sorted `sat`, matching base.edges().
    const EdgeColoring coloring(base, std::move(colors));
    if (!is_proper(coloring)) return std::nullopt;
    std::vector<Edge> local;
    if (pattern.kind() == Pattern::Kind::complete) {
        const auto clique = find_rainbow_clique(coloring, pattern.first());
        if (!clique) return std::nullopt;
        for (std::size_t a = 0; a < clique->size(); ++a)
            for (std::size_t b = a + 1; b < clique->size(); ++b) local.emplace_back((*clique)[a], (*clique)[b]);
    } else if (pattern.kind() == Pattern::Kind::biclique) {
        const int s = pattern.first();
        if (k < s) return std::nullopt;
        std::vector<Vertex> rows(static_cast<std::size_t>(s)), cols;
        std::iota(rows.begin(), rows.end(), 0);
        for (Vertex x = s; x < k; ++x) cols.push_back(x);
        const auto found = find_rainbow_biclique(coloring, rows, cols, pattern.second());
        if (!found) return std::nullopt;
        local = found->edges();
    } else {
        return std::nullopt;
    }
    std::vector<ColoredEdge> rainbow;
    for (const Edge& e : local)
        rainbow.push_back({Edge(sat[static_cast<std::size_t>(e.u)], sat[static_cast<std::size_t>(e.v)]),
                           static_cast<std::size_t>(coloring.color(e.u, e.v))});
    return rainbow;
}

}  // namespace

std::optional<LiftedWitness> extract_witness(const Hypergraph& h, const EmbeddingViolation& violation,
                                             const Pattern& pattern) {
    std::optional<std::vector<ColoredEdge>> rainbow;
    if (pattern.kind() == Pattern::Kind::complete || pattern.kind() == Pattern::Kind::biclique)
        rainbow = rainbow_by_coloring(violation, pattern);
    if (!rainbow) rainbow = rainbow_by_search(h, violation, pattern);
    if (!rainbow) return std::nullopt;
    return lift_rainbow_to_berge(h, violation, *rainbow);
}

}  // namespace berge
