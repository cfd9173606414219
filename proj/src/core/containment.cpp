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

#include "berge/containment.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>

#include "berge/error.hpp"
#include "berge/parallel.hpp"

namespace berge {

namespace {

std::size_t intersection_size(const std::vector<Vertex>& a, const std::vector<Vertex>& b, Vertex* first,
                              Vertex* second) {
    std::size_t count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else {
            if (count == 0 && first) *first = *i;
            if (count == 1 && second) *second = *i;
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

struct PreparedPattern {
    std::vector<Vertex> order;
    std::vector<int> position;
    std::vector<int> degree;
    std::vector<Edge> edges;
    /// Edge indices whose later endpoint (in search order) sits at each position.
    std::vector<std::vector<int>> closing;
    std::vector<std::vector<Vertex>> automorphisms;
};

PreparedPattern prepare(const Graph& g, bool want_automorphisms) {
    PreparedPattern p;
    const auto n = static_cast<std::size_t>(g.order());
    p.degree.resize(n);
    for (Vertex v = 0; v < g.order(); ++v) {
        p.degree[static_cast<std::size_t>(v)] = g.degree(v);
        if (g.degree(v) > 0) p.order.push_back(v);
    }
    std::stable_sort(p.order.begin(), p.order.end(), [&](Vertex a, Vertex b) {
        return p.degree[static_cast<std::size_t>(a)] > p.degree[static_cast<std::size_t>(b)];
    });
    p.position.assign(n, -1);
    for (std::size_t i = 0; i < p.order.size(); ++i) p.position[static_cast<std::size_t>(p.order[i])] = static_cast<int>(i);
    p.edges = g.edges();
    p.closing.resize(p.order.size());
    for (std::size_t e = 0; e < p.edges.size(); ++e) {
        const int later = std::max(p.position[static_cast<std::size_t>(p.edges[e].u)],
                                   p.position[static_cast<std::size_t>(p.edges[e].v)]);
        p.closing[static_cast<std::size_t>(later)].push_back(static_cast<int>(e));
    }
    if (want_automorphisms) {
        std::vector<Vertex> active = p.order;
        std::sort(active.begin(), active.end());
        std::vector<Vertex> perm = active;
        do {
            if (perm == active) continue;
            std::vector<Vertex> sigma(n);
            std::iota(sigma.begin(), sigma.end(), 0);
            for (std::size_t i = 0; i < active.size(); ++i) sigma[static_cast<std::size_t>(active[i])] = perm[i];
            bool ok = true;
            for (const Edge& e : p.edges) {
                if (!g.adjacent(sigma[static_cast<std::size_t>(e.u)], sigma[static_cast<std::size_t>(e.v)])) {
                    ok = false;
                    break;
                }
            }
            if (ok) p.automorphisms.push_back(std::move(sigma));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return p;
}

class PlacementSearch {
public:
    PlacementSearch(const Hypergraph& h, const std::vector<Bitset>& incidence, const PreparedPattern& p,
                    std::optional<std::size_t> required)
        : h_(h), incidence_(incidence), p_(p), required_(required) {
        image_.assign(p.degree.size(), -1);
        used_.resize(static_cast<std::size_t>(h.order()));
        avail_.resize(p.edges.size());
        edge_match_.assign(p.edges.size(), -1);
        hyper_match_.assign(h.size(), -1);
        visited_.resize(h.size());
    }

    /// Searches with the first pattern vertex fixed to `first`, or free.
    std::optional<BergeWitness> run(std::optional<Vertex> first) {
        first_ = first;
        if (extend(0)) return witness();
        return std::nullopt;
    }

private:
    bool augment(int e) {
        const Bitset& a = avail_[static_cast<std::size_t>(e)];
        for (auto j = a.find_first(); j != Bitset::npos; j = a.find_next(j)) {
            if (visited_.test(j)) continue;
            visited_.set(j);
            if (hyper_match_[j] < 0 || augment(hyper_match_[j])) {
                hyper_match_[j] = e;
                edge_match_[static_cast<std::size_t>(e)] = static_cast<int>(j);
                return true;
            }
        }
        return false;
    }

    void restore(const std::vector<int>& saved) {
        for (int j : edge_match_)
            if (j >= 0) hyper_match_[static_cast<std::size_t>(j)] = -1;
        edge_match_ = saved;
        for (std::size_t e = 0; e < edge_match_.size(); ++e)
            if (edge_match_[e] >= 0) hyper_match_[static_cast<std::size_t>(edge_match_[e])] = static_cast<int>(e);
    }

    bool lex_leader_violated(std::size_t pos) const {
        for (const auto& sigma : p_.automorphisms) {
            for (std::size_t q = 0; q <= pos; ++q) {
                const Vertex v = p_.order[q];
                const Vertex sv = sigma[static_cast<std::size_t>(v)];
                if (p_.position[static_cast<std::size_t>(sv)] > static_cast<int>(pos)) break;
                const Vertex a = image_[static_cast<std::size_t>(v)];
                const Vertex b = image_[static_cast<std::size_t>(sv)];
                if (b < a) return true;
                if (b > a) break;
            }
        }
        return false;
    }

    bool uses_required() const {
        if (!required_) return true;
        for (const auto& a : avail_)
            if (a.test(*required_)) return true;
        return false;
    }

    bool extend(std::size_t pos) {
        if (pos == p_.order.size()) return uses_required();
        const Vertex pv = p_.order[pos];
        const int need = p_.degree[static_cast<std::size_t>(pv)];
        Vertex lo = 0, hi = h_.order();
        if (pos == 0 && first_) {
            lo = *first_;
            hi = *first_ + 1;
        }
        for (Vertex host = lo; host < hi; ++host) {
            if (used_.test(static_cast<std::size_t>(host))) continue;
            if (static_cast<int>(incidence_[static_cast<std::size_t>(host)].count()) < need) continue;
            bool covered = true;
            for (int e : p_.closing[pos]) {
                const Edge& pe = p_.edges[static_cast<std::size_t>(e)];
                const Vertex other = pe.u == pv ? pe.v : pe.u;
                avail_[static_cast<std::size_t>(e)] =
                    incidence_[static_cast<std::size_t>(host)] & incidence_[static_cast<std::size_t>(image_[static_cast<std::size_t>(other)])];
                if (avail_[static_cast<std::size_t>(e)].none()) {
                    covered = false;
                    break;
                }
            }
            if (!covered) continue;
            image_[static_cast<std::size_t>(pv)] = host;
            if (!p_.automorphisms.empty() && lex_leader_violated(pos)) {
                image_[static_cast<std::size_t>(pv)] = -1;
                continue;
            }
            used_.set(static_cast<std::size_t>(host));
            const auto saved = edge_match_;
            bool hall = true;
            for (int e : p_.closing[pos]) {
                visited_.reset();
                if (!augment(e)) {
                    hall = false;
                    break;
                }
            }
            if (hall && extend(pos + 1)) return true;
            restore(saved);
            used_.reset(static_cast<std::size_t>(host));
            image_[static_cast<std::size_t>(pv)] = -1;
        }
        return false;
    }

    BergeWitness witness() {
        if (required_) {
            // The saturating matching leaves the required hyperedge free unless
            // already used; move one edge onto it.
            const auto r = *required_;
            if (hyper_match_[r] < 0) {
                for (std::size_t e = 0; e < avail_.size(); ++e) {
                    if (avail_[e].test(r)) {
                        hyper_match_[static_cast<std::size_t>(edge_match_[e])] = -1;
                        edge_match_[e] = static_cast<int>(r);
                        hyper_match_[r] = static_cast<int>(e);
                        break;
                    }
                }
            }
        }
        BergeWitness w;
        for (Vertex v : p_.order) w.vertex_map[v] = image_[static_cast<std::size_t>(v)];
        for (std::size_t e = 0; e < p_.edges.size(); ++e)
            w.edge_assignment.push_back({p_.edges[e], static_cast<std::size_t>(edge_match_[e])});
        return w;
    }

    const Hypergraph& h_;
    const std::vector<Bitset>& incidence_;
    const PreparedPattern& p_;
    std::optional<std::size_t> required_;
    std::optional<Vertex> first_;
    std::vector<Vertex> image_;
    Bitset used_;
    std::vector<Bitset> avail_;
    std::vector<int> edge_match_;
    std::vector<int> hyper_match_;
    Bitset visited_;
};

std::optional<BergeWitness> c2_witness(const Hypergraph& h, std::optional<std::size_t> required) {
    for (std::size_t i = 0; i < h.size(); ++i) {
        for (std::size_t j = i + 1; j < h.size(); ++j) {
            if (required && i != *required && j != *required) continue;
            Vertex a = -1, b = -1;
            if (intersection_size(h.hyperedge(i), h.hyperedge(j), &a, &b) >= 2) {
                BergeWitness w;
                w.vertex_map = {{0, a}, {1, b}};
                w.edge_assignment = {{Edge(0, 1), i}, {Edge(0, 1), j}};
                return w;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<BergeWitness> contains_berge(const Hypergraph& h, const Pattern& p, const ContainmentOptions& options) {
    require_valid(h);
    if (p.vertex_count() > options.vertex_guard) {
        fail(ErrorCode::guard_exceeded, "pattern " + p.name() + " has " + std::to_string(p.vertex_count()) +
                                            " vertices, above the pattern guard (--pattern-guard " +
                                            std::to_string(options.vertex_guard) + ")");
    }
    if (options.required_hyperedge && *options.required_hyperedge >= h.size())
        fail(ErrorCode::invalid_argument, "required hyperedge index out of range");
    if (p.is_c2()) return c2_witness(h, options.required_hyperedge);

    const Graph g = realize_pattern(p);
    const PreparedPattern prepared = prepare(g, options.automorphism_pruning);
    if (static_cast<int>(prepared.order.size()) > h.order() || g.size() > h.size()) return std::nullopt;

    std::vector<Bitset> incidence(static_cast<std::size_t>(h.order()), Bitset(h.size()));
    for (std::size_t i = 0; i < h.size(); ++i)
        for (Vertex v : h.hyperedge(i)) incidence[static_cast<std::size_t>(v)].set(i);

    if (options.workers <= 1) return PlacementSearch(h, incidence, prepared, options.required_hyperedge).run(std::nullopt);

    // One shard per choice of host for the first pattern vertex; the lowest
    // successful shard is what the sequential search would have returned.
    const auto shards = static_cast<std::size_t>(h.order());
    std::vector<std::optional<BergeWitness>> found(shards);
    std::atomic<std::size_t> best{shards};
    parallel_for(shards, options.workers, [&](std::size_t shard) {
        if (shard > best.load()) return;
        PlacementSearch search(h, incidence, prepared, options.required_hyperedge);
        found[shard] = search.run(static_cast<Vertex>(shard));
        if (found[shard]) {
            auto cur = best.load();
            while (shard < cur && !best.compare_exchange_weak(cur, shard)) {
            }
        }
    });
    for (auto& w : found)
        if (w) return w;
    return std::nullopt;
}

WitnessCheck verify_witness(const Hypergraph& h, const std::vector<Edge>& pattern_edges, const BergeWitness& w) {
    std::set<Vertex> endpoints;
    for (const Edge& e : pattern_edges) {
        endpoints.insert(e.u);
        endpoints.insert(e.v);
    }
    for (Vertex v : endpoints)
        if (!w.vertex_map.contains(v)) return {false, "vertex map missing pattern vertex " + std::to_string(v)};
    if (w.vertex_map.size() != endpoints.size()) return {false, "vertex map has extra vertices"};
    std::set<Vertex> images;
    for (const auto& [p, host] : w.vertex_map) {
        if (host < 0 || host >= h.order()) return {false, "host vertex out of range"};
        if (!images.insert(host).second) return {false, "vertex map not injective"};
    }
    std::vector<Edge> expected = pattern_edges, got;
    for (const auto& a : w.edge_assignment) got.push_back(a.pattern_edge);
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    if (expected != got) return {false, "edge assignment does not match pattern edges"};
    std::set<std::size_t> indices;
    for (const auto& a : w.edge_assignment) {
        if (a.hyperedge >= h.size()) return {false, "hyperedge index out of range"};
        if (!indices.insert(a.hyperedge).second) return {false, "assignment not injective"};
    }
    for (const auto& a : w.edge_assignment) {
        const Vertex x = w.vertex_map.at(a.pattern_edge.u);
        const Vertex y = w.vertex_map.at(a.pattern_edge.v);
        if (!h.contains(a.hyperedge, x) || !h.contains(a.hyperedge, y)) return {false, "endpoint not covered"};
    }
    return {true, {}};
}

WitnessCheck verify_witness(const Hypergraph& h, const Pattern& p, const BergeWitness& w) {
    return verify_witness(h, p.edge_list(), w);
}

std::optional<std::pair<std::size_t, std::size_t>> find_c2_pair(const Hypergraph& h) {
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = i + 1; j < h.size(); ++j)
            if (intersection_size(h.hyperedge(i), h.hyperedge(j), nullptr, nullptr) >= 2) return std::pair{i, j};
    return std::nullopt;
}

bool is_linear(const Hypergraph& h) { return !find_c2_pair(h).has_value(); }

GirthReport berge_girth(const Hypergraph& h, int g_max, const ContainmentOptions& options) {
    if (g_max < 2) fail(ErrorCode::invalid_argument, "g_max must be at least 2");
    require_valid(h);
    GirthReport report;
    report.g_max = g_max;
    if (auto pair = find_c2_pair(h)) {
        report.girth = 2;
        report.c2_pair = pair;
        report.witness = c2_witness(h, std::nullopt);
        return report;
    }
    for (int k = 3; k <= g_max; ++k) {
        if (auto w = contains_berge(h, Pattern::cycle(k), options)) {
            report.girth = k;
            report.witness = std::move(w);
            return report;
        }
    }
    return report;
}

}  // namespace berge
