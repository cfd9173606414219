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

#include "berge/ramsey.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

#include "berge/error.hpp"
#include "berge/parallel.hpp"

namespace berge {

EdgeColoring::EdgeColoring(Graph base, std::vector<int> colors) : base_(std::move(base)), colors_(std::move(colors)) {
    if (colors_.size() != base_.size()) fail(ErrorCode::invalid_argument, "colouring must cover every edge");
    const auto n = static_cast<std::size_t>(base_.order());
    matrix_.assign(n * n, -1);
    for (std::size_t i = 0; i < colors_.size(); ++i) {
        if (colors_[i] < 0) fail(ErrorCode::invalid_argument, "colours must be non-negative");
        const Edge& e = base_.edges()[i];
        matrix_[static_cast<std::size_t>(e.u) * n + static_cast<std::size_t>(e.v)] = colors_[i];
        matrix_[static_cast<std::size_t>(e.v) * n + static_cast<std::size_t>(e.u)] = colors_[i];
    }
}

int EdgeColoring::color(Vertex a, Vertex b) const {
    const auto n = static_cast<std::size_t>(base_.order());
    if (a < 0 || b < 0 || a >= base_.order() || b >= base_.order()) return -1;
    return matrix_[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)];
}

bool is_proper(const EdgeColoring& c) {
    const Graph& g = c.base();
    for (Vertex v = 0; v < g.order(); ++v) {
        std::set<int> seen;
        const auto& nb = g.neighbors(v);
        for (auto w = nb.find_first(); w != Bitset::npos; w = nb.find_next(w))
            if (!seen.insert(c.color(v, static_cast<Vertex>(w))).second) return false;
    }
    return true;
}

bool is_rainbow(const EdgeColoring& c, std::span<const Edge> edges) {
    std::set<int> seen;
    for (const Edge& e : edges) {
        const int col = c.color(e.u, e.v);
        if (col < 0 || !seen.insert(col).second) return false;
    }
    return true;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) g.add_edge(a, b);
    return g;
}

Graph complete_bipartite(int s, int m) {
    Graph g(s + m);
    for (Vertex a = 0; a < s; ++a)
        for (Vertex b = s; b < s + m; ++b) g.add_edge(a, b);
    return g;
}

EdgeColoring random_proper_coloring(const Graph& base, Rng& rng) {
    std::vector<std::size_t> order(base.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const auto n = static_cast<std::size_t>(base.order());
    std::vector<std::set<int>> at(n);
    std::vector<int> colors(base.size(), -1);
    for (std::size_t i : order) {
        const Edge& e = base.edges()[i];
        const auto& cu = at[static_cast<std::size_t>(e.u)];
        const auto& cv = at[static_cast<std::size_t>(e.v)];
        int c = 0;
        while (cu.contains(c) || cv.contains(c)) ++c;
        colors[i] = c;
        at[static_cast<std::size_t>(e.u)].insert(c);
        at[static_cast<std::size_t>(e.v)].insert(c);
    }
    return EdgeColoring(base, std::move(colors));
}

std::optional<std::vector<Vertex>> find_rainbow_clique(const EdgeColoring& c, int r) {
    if (!is_proper(c)) fail(ErrorCode::precondition, "colouring is not proper");
    const Graph& g = c.base();
    const int n = g.order();
    if (r <= 1) return r == 1 && n >= 1 ? std::optional(std::vector<Vertex>{0}) : std::nullopt;
    for (Vertex seed = 0; seed < n; ++seed) {
        std::vector<Vertex> clique{seed};
        std::set<int> used;
        bool grew = true;
        while (grew && static_cast<int>(clique.size()) < r) {
            grew = false;
            for (Vertex x = 0; x < n && static_cast<int>(clique.size()) < r; ++x) {
                if (std::find(clique.begin(), clique.end(), x) != clique.end()) continue;
                std::set<int> fresh;
                bool ok = true;
                for (Vertex y : clique) {
                    const int col = c.color(x, y);
                    if (col < 0 || used.contains(col) || !fresh.insert(col).second) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                clique.push_back(x);
                used.insert(fresh.begin(), fresh.end());
                grew = true;
            }
        }
        if (static_cast<int>(clique.size()) >= r) {
            std::sort(clique.begin(), clique.end());
            return clique;
        }
    }
    return std::nullopt;
}

std::vector<Edge> RainbowBiclique::edges() const {
    std::vector<Edge> out;
    for (Vertex a : s_side)
        for (Vertex b : t_side) out.emplace_back(a, b);
    return out;
}

std::optional<RainbowBiclique> find_rainbow_biclique(const EdgeColoring& c, std::span<const Vertex> rows,
                                                     std::span<const Vertex> columns, int t) {
    if (!is_proper(c)) fail(ErrorCode::precondition, "colouring is not proper");
    RainbowBiclique out;
    out.s_side.assign(rows.begin(), rows.end());
    std::set<int> used;
    for (Vertex x : columns) {
        if (static_cast<int>(out.t_side.size()) >= t) break;
        std::set<int> fresh;
        bool ok = true;
        for (Vertex y : rows) {
            const int col = c.color(x, y);
            if (col < 0 || used.contains(col) || !fresh.insert(col).second) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        out.t_side.push_back(x);
        used.insert(fresh.begin(), fresh.end());
    }
    if (static_cast<int>(out.t_side.size()) < t) return std::nullopt;
    return out;
}

std::optional<RainbowBiclique> find_rainbow_biclique(const EdgeColoring& c, int s, int t) {
    std::vector<Vertex> rows(static_cast<std::size_t>(s)), cols;
    std::iota(rows.begin(), rows.end(), 0);
    for (Vertex v = s; v < c.base().order(); ++v) cols.push_back(v);
    return find_rainbow_biclique(c, rows, cols, t);
}

int TwoColoring::edge_index(int order, Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    // Pairs (0,1),(0,2),...,(0,n-1),(1,2),...
    return a * order - a * (a + 1) / 2 + (b - a - 1);
}

std::vector<Edge> TwoColoring::red_edges() const {
    std::vector<Edge> out;
    for (Vertex a = 0; a < order; ++a)
        for (Vertex b = a + 1; b < order; ++b)
            if (red(a, b)) out.emplace_back(a, b);
    return out;
}

std::vector<Edge> TwoColoring::blue_edges() const {
    std::vector<Edge> out;
    for (Vertex a = 0; a < order; ++a)
        for (Vertex b = a + 1; b < order; ++b)
            if (!red(a, b)) out.emplace_back(a, b);
    return out;
}

namespace {

struct MaskTables {
    int order = 0;
    std::uint32_t full = 0;
    std::vector<std::uint32_t> quads;
    std::vector<std::uint32_t> triangles;
    /// matchings[k] lists every k-matching as an edge mask.
    std::vector<std::vector<std::uint32_t>> matchings;

    explicit MaskTables(int n) : order(n) {
        if (n < 2 || n > 8) fail(ErrorCode::invalid_argument, "two-colourings supported for 2 <= order <= 8");
        const int m = TwoColoring::edge_count(n);
        full = m == 32 ? ~0U : ((1U << m) - 1U);
        auto bit = [n](Vertex a, Vertex b) { return 1U << TwoColoring::edge_index(n, a, b); };
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                for (Vertex c = b + 1; c < n; ++c) {
                    triangles.push_back(bit(a, b) | bit(a, c) | bit(b, c));
                    for (Vertex d = c + 1; d < n; ++d)
                        quads.push_back(bit(a, b) | bit(a, c) | bit(a, d) | bit(b, c) | bit(b, d) | bit(c, d));
                }
        matchings.resize(static_cast<std::size_t>(n / 2 + 1));
        matchings[0].push_back(0);
        // Grow k-matchings from (k-1)-matchings, keeping each edge set once.
        for (std::size_t k = 1; k < matchings.size(); ++k) {
            std::set<std::uint32_t> seen;
            for (std::uint32_t base : matchings[k - 1]) {
                std::uint32_t covered = 0;
                for (Vertex a = 0; a < n; ++a)
                    for (Vertex b = a + 1; b < n; ++b)
                        if (base & bit(a, b)) covered |= (1U << a) | (1U << b);
                for (Vertex a = 0; a < n; ++a)
                    for (Vertex b = a + 1; b < n; ++b)
                        if (!(covered & ((1U << a) | (1U << b)))) seen.insert(base | bit(a, b));
            }
            matchings[k].assign(seen.begin(), seen.end());
        }
    }

    bool red_k4_minus(std::uint32_t red) const {
        for (auto q : quads)
            if (std::popcount(red & q) >= 5) return true;
        return false;
    }
    bool blue_triangle(std::uint32_t red) const {
        const std::uint32_t blue = ~red & full;
        for (auto t : triangles)
            if ((blue & t) == t) return true;
        return false;
    }
    bool red_triangle(std::uint32_t red) const {
        for (auto t : triangles)
            if ((red & t) == t) return true;
        return false;
    }
    bool blue_matching(std::uint32_t red, int k) const {
        if (k < 0) return false;
        if (static_cast<std::size_t>(k) >= matchings.size()) return false;
        const std::uint32_t blue = ~red & full;
        for (auto m : matchings[static_cast<std::size_t>(k)])
            if ((blue & m) == m) return true;
        return false;
    }

    bool lemma(std::uint32_t red) const {
        switch (order) {
        case 5: return red_k4_minus(red) || blue_matching(red, 2);
        case 6: return red_k4_minus(red) || blue_triangle(red) || blue_matching(red, 3);
        case 7: return red_k4_minus(red) || blue_triangle(red);
        default: fail(ErrorCode::invalid_argument, "orders 5, 6 and 7 only");
        }
    }
};

const MaskTables& tables(int order) {
    static std::mutex mutex;
    static std::vector<std::unique_ptr<MaskTables>> cache(9);
    if (order < 2 || order > 8) fail(ErrorCode::invalid_argument, "two-colourings supported for 2 <= order <= 8");
    std::lock_guard lock(mutex);
    auto& slot = cache[static_cast<std::size_t>(order)];
    if (!slot) slot = std::make_unique<MaskTables>(order);
    return *slot;
}

template <typename Predicate>
RamseyVerdict exhaust(int order, int workers, Predicate&& holds) {
    const MaskTables& t = tables(order);
    const std::uint64_t total = std::uint64_t{1} << TwoColoring::edge_count(order);
    const std::uint64_t shards = std::min<std::uint64_t>(total, 64);
    const std::uint64_t chunk = (total + shards - 1) / shards;
    std::vector<std::optional<std::uint32_t>> first_bad(shards);
    std::vector<std::uint64_t> counted(shards, 0);
    parallel_for(shards, workers, [&](std::size_t s) {
        const std::uint64_t lo = s * chunk;
        const std::uint64_t hi = std::min(total, lo + chunk);
        for (std::uint64_t m = lo; m < hi; ++m) {
            ++counted[s];
            if (!first_bad[s] && !holds(t, static_cast<std::uint32_t>(m))) first_bad[s] = static_cast<std::uint32_t>(m);
        }
    });
    RamseyVerdict v;
    v.order = order;
    for (std::size_t s = 0; s < shards; ++s) {
        v.colorings_checked += counted[s];
        if (!v.counterexample && first_bad[s]) v.counterexample = first_bad[s];
    }
    return v;
}

}  // namespace

bool has_substructure(const TwoColoring& c, Substructure s) {
    const MaskTables& t = tables(c.order);
    switch (s.kind) {
    case Substructure::Kind::red_k4_minus: return t.red_k4_minus(c.red_mask);
    case Substructure::Kind::blue_matching: return t.blue_matching(c.red_mask, s.size);
    case Substructure::Kind::blue_triangle: return t.blue_triangle(c.red_mask);
    case Substructure::Kind::monochromatic_triangle: return t.blue_triangle(c.red_mask) || t.red_triangle(c.red_mask);
    }
    return false;
}

bool ramsey_lemma_holds(const TwoColoring& c) { return tables(c.order).lemma(c.red_mask); }

RamseyVerdict verify_ramsey_lemma(int order, int workers) {
    if (order < 5 || order > 7) fail(ErrorCode::invalid_argument, "orders 5, 6 and 7 only");
    return exhaust(order, workers, [](const MaskTables& t, std::uint32_t m) { return t.lemma(m); });
}

RamseyVerdict verify_monochromatic_triangle(int order, int workers) {
    return exhaust(order, workers,
                   [](const MaskTables& t, std::uint32_t m) { return t.blue_triangle(m) || t.red_triangle(m); });
}

RainbowTrials rainbow_clique_trials(int r, int vertices, std::uint64_t trials, std::uint64_t seed, int workers) {
    const Graph base = complete_graph(vertices);
    std::vector<char> miss(trials, 0), bad(trials, 0);
    parallel_for(trials, workers, [&](std::size_t i) {
        Rng rng = make_rng(seed, i);
        const EdgeColoring c = random_proper_coloring(base, rng);
        const auto clique = find_rainbow_clique(c, r);
        if (!clique) {
            miss[i] = 1;
            return;
        }
        std::vector<Edge> edges;
        for (std::size_t a = 0; a < clique->size(); ++a)
            for (std::size_t b = a + 1; b < clique->size(); ++b) edges.emplace_back((*clique)[a], (*clique)[b]);
        if (static_cast<int>(clique->size()) != r || !is_rainbow(c, edges)) bad[i] = 1;
    });
    RainbowTrials out;
    out.trials = trials;
    for (std::size_t i = 0; i < trials; ++i) {
        out.misses += static_cast<std::uint64_t>(miss[i]);
        out.bad_outputs += static_cast<std::uint64_t>(bad[i]);
    }
    return out;
}

RainbowTrials rainbow_biclique_trials(int s, int t, int columns, std::uint64_t trials, std::uint64_t seed,
                                      int workers) {
    const Graph base = complete_bipartite(s, columns);
    std::vector<char> miss(trials, 0), bad(trials, 0);
    parallel_for(trials, workers, [&](std::size_t i) {
        Rng rng = make_rng(seed, i);
        const EdgeColoring c = random_proper_coloring(base, rng);
        const auto found = find_rainbow_biclique(c, s, t);
        if (!found) {
            miss[i] = 1;
            return;
        }
        const auto edges = found->edges();
        if (static_cast<int>(found->t_side.size()) != t || !is_rainbow(c, edges)) bad[i] = 1;
    });
    RainbowTrials out;
    out.trials = trials;
    for (std::size_t i = 0; i < trials; ++i) {
        out.misses += static_cast<std::uint64_t>(miss[i]);
        out.bad_outputs += static_cast<std::uint64_t>(bad[i]);
    }
    return out;
}

}  // namespace berge
