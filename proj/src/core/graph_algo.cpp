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

#include "berge/graph_algo.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace berge {

namespace {

class SubgraphSearch {
public:
    SubgraphSearch(const Graph& host, const Graph& pattern) : host_(host), pattern_(pattern) {
        for (Vertex v = 0; v < pattern.order(); ++v)
            if (pattern.degree(v) > 0) active_.push_back(v);
        map_.assign(static_cast<std::size_t>(pattern.order()), -1);
        used_.resize(static_cast<std::size_t>(host.order()));
    }

    std::optional<std::vector<Vertex>> run(std::optional<Edge> required) {
        if (active_.empty()) return map_;
        if (static_cast<int>(active_.size()) > host_.order() || pattern_.size() > host_.size()) return std::nullopt;
        if (!required) {
            build_order({});
            if (extend(0)) return map_;
            return std::nullopt;
        }
        if (!host_.adjacent(required->u, required->v)) return std::nullopt;
        for (const Edge& pe : pattern_.edges()) {
            for (int flip = 0; flip < 2; ++flip) {
                const Vertex a = flip ? pe.v : pe.u;
                const Vertex b = flip ? pe.u : pe.v;
                build_order({a, b});
                std::fill(map_.begin(), map_.end(), -1);
                used_.reset();
                if (!assign(a, required->u) || !assign(b, required->v)) continue;
                if (extend(2)) return map_;
                unassign(a);
                unassign(b);
            }
        }
        return std::nullopt;
    }

private:
    // Greedy connectivity-first order: next vertex has the most placed
    // neighbours, ties by degree then id.
    void build_order(std::vector<Vertex> seed) {
        order_ = std::move(seed);
        std::vector<char> placed(static_cast<std::size_t>(pattern_.order()), 0);
        for (Vertex v : order_) placed[static_cast<std::size_t>(v)] = 1;
        while (order_.size() < active_.size()) {
            Vertex best = -1;
            int best_links = -1, best_degree = -1;
            for (Vertex v : active_) {
                if (placed[static_cast<std::size_t>(v)]) continue;
                int links = 0;
                for (Vertex u : order_) links += pattern_.adjacent(u, v) ? 1 : 0;
                const int d = pattern_.degree(v);
                if (links > best_links || (links == best_links && d > best_degree)) {
                    best = v;
                    best_links = links;
                    best_degree = d;
                }
            }
            placed[static_cast<std::size_t>(best)] = 1;
            order_.push_back(best);
        }
    }

    bool consistent(Vertex p, Vertex h) const {
        if (used_.test(static_cast<std::size_t>(h))) return false;
        if (host_.degree(h) < pattern_.degree(p)) return false;
        for (Vertex q : active_) {
            const Vertex hq = map_[static_cast<std::size_t>(q)];
            if (hq >= 0 && pattern_.adjacent(p, q) && !host_.adjacent(h, hq)) return false;
        }
        return true;
    }

    bool assign(Vertex p, Vertex h) {
        if (!consistent(p, h)) return false;
        map_[static_cast<std::size_t>(p)] = h;
        used_.set(static_cast<std::size_t>(h));
        return true;
    }

    void unassign(Vertex p) {
        used_.reset(static_cast<std::size_t>(map_[static_cast<std::size_t>(p)]));
        map_[static_cast<std::size_t>(p)] = -1;
    }

    bool extend(std::size_t depth) {
        if (depth == order_.size()) return true;
        const Vertex p = order_[depth];
        Bitset candidates(static_cast<std::size_t>(host_.order()));
        candidates.set();
        for (Vertex q : order_) {
            const Vertex hq = map_[static_cast<std::size_t>(q)];
            if (hq >= 0 && pattern_.adjacent(p, q)) candidates &= host_.neighbors(hq);
        }
        candidates -= used_;
        for (auto h = candidates.find_first(); h != Bitset::npos; h = candidates.find_next(h)) {
            if (!assign(p, static_cast<Vertex>(h))) continue;
            if (extend(depth + 1)) return true;
            unassign(p);
        }
        return false;
    }

    const Graph& host_;
    const Graph& pattern_;
    std::vector<Vertex> active_;
    std::vector<Vertex> order_;
    std::vector<Vertex> map_;
    Bitset used_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_subgraph(const Graph& host, const Graph& pattern,
                                                 std::optional<Edge> required) {
    return SubgraphSearch(host, pattern).run(required);
}

std::optional<K2t> find_k2t(const Graph& g, int t) {
    for (Vertex x = 0; x < g.order(); ++x) {
        for (Vertex y = x + 1; y < g.order(); ++y) {
            const Bitset common = g.neighbors(x) & g.neighbors(y);
            if (static_cast<int>(common.count()) < t) continue;
            K2t out{x, y, {}};
            for (auto z = common.find_first(); z != Bitset::npos && static_cast<int>(out.common.size()) < t;
                 z = common.find_next(z))
                out.common.push_back(static_cast<Vertex>(z));
            return out;
        }
    }
    return std::nullopt;
}

int max_common_neighbors(const Graph& g) {
    int best = 0;
    for (Vertex x = 0; x < g.order(); ++x)
        for (Vertex y = x + 1; y < g.order(); ++y)
            best = std::max(best, static_cast<int>((g.neighbors(x) & g.neighbors(y)).count()));
    return best;
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
    std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
    for (Vertex root = 0; root < g.order(); ++root) {
        if (side[static_cast<std::size_t>(root)] >= 0) continue;
        side[static_cast<std::size_t>(root)] = 0;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop_front();
            const auto& nb = g.neighbors(v);
            for (auto w = nb.find_first(); w != Bitset::npos; w = nb.find_next(w)) {
                int& s = side[w];
                if (s < 0) {
                    s = 1 - side[static_cast<std::size_t>(v)];
                    queue.push_back(static_cast<Vertex>(w));
                } else if (s == side[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

std::optional<int> girth(const Graph& g) {
    int best = std::numeric_limits<int>::max();
    const auto n = static_cast<std::size_t>(g.order());
    for (Vertex root = 0; root < g.order(); ++root) {
        std::vector<int> dist(n, -1), parent(n, -1);
        dist[static_cast<std::size_t>(root)] = 0;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop_front();
            const auto& nb = g.neighbors(v);
            for (auto w = nb.find_first(); w != Bitset::npos; w = nb.find_next(w)) {
                if (dist[w] < 0) {
                    dist[w] = dist[static_cast<std::size_t>(v)] + 1;
                    parent[w] = v;
                    queue.push_back(static_cast<Vertex>(w));
                } else if (parent[static_cast<std::size_t>(v)] != static_cast<int>(w)) {
                    best = std::min(best, dist[static_cast<std::size_t>(v)] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

bool has_cycle_between(const Graph& g, int lo, int hi) {
    for (int k = std::max(lo, 3); k <= hi; ++k)
        if (contains_subgraph(g, realize_pattern(Pattern::cycle(k)))) return true;
    return false;
}

}  // namespace berge
