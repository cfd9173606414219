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

#include "berge/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <numeric>

#include "berge/containment.hpp"
#include "berge/error.hpp"
#include "berge/graph_algo.hpp"
#include "berge/parallel.hpp"

namespace berge {

Rational Rational::of(std::int64_t num, std::int64_t den) {
    if (den == 0) fail(ErrorCode::internal, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    return {num / (g == 0 ? 1 : g), den / (g == 0 ? 1 : g)};
}

std::string Rational::str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t out = 1;
    for (std::int64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

/// Edges of the balanced complete p-partite graph on n vertices.
std::int64_t turan_edges(std::int64_t n, std::int64_t p) {
    if (p <= 0) return 0;
    std::int64_t inside = 0;
    for (std::int64_t i = 0; i < p; ++i) inside += binomial(n / p + (i < n % p ? 1 : 0), 2);
    return binomial(n, 2) - inside;
}

std::int64_t param(const std::map<std::string, std::int64_t>& ps, const std::string& name, const std::string& bound) {
    auto it = ps.find(name);
    if (it == ps.end()) fail(ErrorCode::invalid_argument, bound + " needs parameter " + name);
    return it->second;
}

void require(bool ok, const std::string& what) {
    if (!ok) fail(ErrorCode::invalid_argument, what);
}

BoundReport exact_report(std::string name, std::map<std::string, std::int64_t> ps, Rational r) {
    BoundReport b;
    b.name = std::move(name);
    b.parameters = std::move(ps);
    b.exact = r;
    b.value = r.value();
    return b;
}

BoundReport leading_report(std::string name, std::int64_t n, double constant, std::string note) {
    BoundReport b;
    b.name = std::move(name);
    b.parameters = {{"n", n}};
    b.value = constant * std::pow(static_cast<double>(n), 1.5);
    b.leading_term_only = true;
    b.note = std::move(note);
    return b;
}

}  // namespace

std::vector<std::string> bound_names() {
    return {"c4_free_lower", "c4_free_upper", "c4_weak_upper", "edge_sum_bound", "general_upper",
            "kst_graph_bound", "lv_girth5", "path_bound"};
}

BoundReport evaluate_bound(const std::string& name, const std::map<std::string, std::int64_t>& ps) {
    if (name == "path_bound") {
        const auto n = param(ps, "n", name), k = param(ps, "k", name), m = param(ps, "m", name);
        require(n >= 1 && k >= 1, "path_bound needs n >= 1 and k >= 1");
        require(m > 2, "path_bound needs m > 2");
        auto b = k > m ? exact_report(name, {{"n", n}, {"k", k}, {"m", m}}, Rational::of(n * binomial(k, m), k))
                       : exact_report(name, {{"n", n}, {"k", k}, {"m", m}}, Rational::of(n * (k - 1), m + 1));
        b.note = "maximum edges of a P_{k+1}-free m-uniform hypergraph";
        return b;
    }
    if (name == "edge_sum_bound") {
        const auto n = param(ps, "n", name), r = param(ps, "r", name), e = param(ps, "edges", name);
        require(n >= 0 && r >= 2 && e >= 0, "edge_sum_bound needs n >= 0, r >= 2, edges >= 0");
        auto b = exact_report(name, {{"n", n}, {"r", r}, {"edges", e}}, Rational::of(2 * binomial(n, 2) + r * r * r * e));
        b.note = "degree sum of an F-free hypergraph, |V(F)| = r, all hyperedges of size >= r^3";
        return b;
    }
    if (name == "general_upper") {
        const auto n = param(ps, "n", name), r = param(ps, "r", name);
        require(n >= 0 && r >= 2, "general_upper needs n >= 0 and r >= 2");
        auto b = exact_report(name, {{"n", n}, {"r", r}},
                              Rational::of(2 * binomial(n, 2) + r * r * r * turan_edges(n, r - 1)));
        b.note = "degree sum of a K_r-free hypergraph with all hyperedges of size >= r: 2C(n,2) + r^3 ex(n,K_r)";
        return b;
    }
    if (name == "kst_graph_bound") {
        const auto n = param(ps, "n", name), s = param(ps, "s", name), t = param(ps, "t", name);
        require(n >= 1 && s >= 1 && s <= t, "kst_graph_bound needs n >= 1 and 1 <= s <= t");
        BoundReport b;
        b.name = name;
        b.parameters = {{"n", n}, {"s", s}, {"t", t}};
        const double nd = static_cast<double>(n), sd = static_cast<double>(s);
        b.value = 0.5 * (std::pow(static_cast<double>(t - 1), 1.0 / sd) * (nd - sd + 1.0) * std::pow(nd, 1.0 - 1.0 / sd) +
                         (sd - 1.0) * nd);
        b.note = "closed-form Zarankiewicz bound, stand-in for the unspecified constant C in C n^{2-1/s}";
        return b;
    }
    if (name == "c4_free_upper")
        return leading_report(name, param(ps, "n", name), std::sqrt(6.0) / 2.0,
                              "leading term only; the O(n) term is unspecified");
    if (name == "c4_free_lower")
        return leading_report(name, param(ps, "n", name), 1.0 / (3.0 * std::sqrt(3.0)),
                              "leading term only; the o(n^{3/2}) term is unspecified");
    if (name == "c4_weak_upper")
        return leading_report(name, param(ps, "n", name), std::sqrt(3.0), "leading term only; the O(n) term is unspecified");
    if (name == "lv_girth5")
        return leading_report(name, param(ps, "n", name), 1.0 / 6.0,
                              "reference value for girth-5 triple systems; the o(n^{3/2}) term is unspecified");
    fail(ErrorCode::invalid_argument, "unknown bound " + name);
}

Graph shadow_expand(const Hypergraph& h3) {
    require_valid(h3);
    Graph g(h3.order());
    for (std::size_t i = 0; i < h3.size(); ++i) {
        const auto& e = h3.hyperedge(i);
        if (e.size() != 3) fail(ErrorCode::invalid_argument, "hyperedge " + std::to_string(i) + " does not have size 3");
        g.add_edge(e[0], e[1]);
        g.add_edge(e[0], e[2]);
        g.add_edge(e[1], e[2]);
    }
    if (is_linear(h3) && g.size() != 3 * h3.size()) fail(ErrorCode::internal, "linear triple system lost shadow edges");
    return g;
}

std::int64_t objective_value(const Hypergraph& h, Objective objective) {
    const CountReport c = count_report(h);
    switch (objective) {
    case Objective::edge_count: return static_cast<std::int64_t>(c.edge_count);
    case Objective::degree_sum: return c.degree_sum;
    case Objective::deficiency_sum: return c.deficiency_sum;
    }
    return 0;
}

namespace {

std::int64_t hyperedge_weight(std::size_t size, Objective objective) {
    switch (objective) {
    case Objective::edge_count: return 1;
    case Objective::degree_sum: return static_cast<std::int64_t>(size);
    case Objective::deficiency_sum: return static_cast<std::int64_t>(size) - 3;
    }
    return 0;
}

/// Candidate sets with an incremental freeness test; shared by the
/// hypergraph and graph searches.
struct SearchSpace {
    int n = 0;
    std::vector<std::vector<Vertex>> candidates;
    std::vector<std::int64_t> weights;
    int cap = 1;
    /// Whether `chosen` plus one more copy of `candidate` stays free.
    std::function<bool(const std::vector<std::size_t>& chosen, std::size_t candidate)> addable;
    /// Optimum of the same problem on n-1 vertices.
    std::optional<std::int64_t> sub_optimum;
    /// Proven upper bound on the optimum.
    std::optional<std::int64_t> ceiling;
    /// Weight fixed outside the candidates, in total and per vertex.
    std::int64_t base_weight = 0;
    std::vector<std::int64_t> base_vertex_weight;
    /// Graph searches only: every vertex degree stays at most this.
    std::optional<std::int64_t> degree_cap;
};

struct EngineResult {
    std::int64_t best = 0;
    std::vector<std::size_t> chosen;
    std::uint64_t nodes = 0;
};

constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::min();

class Shard {
public:
    Shard(const SearchSpace& space, const std::vector<char>& alive, std::atomic<std::int64_t>& global)
        : s_(space), global_(global), alive_(alive), weight_(space.base_weight) {
        counts_.assign(s_.candidates.size(), 0);
        vertex_weight_ = s_.base_vertex_weight;
        vertex_weight_.resize(static_cast<std::size_t>(s_.n), 0);
    }

    EngineResult run(std::optional<std::size_t> first) {
        if (!first) {
            record();
        } else if (alive_[*first]) {
            std::vector<std::size_t> undo;
            include(*first, undo);
            node(*first);
        }
        return {best_, best_chosen_, nodes_};
    }

private:
    std::int64_t target() const { return std::max(best_, global_.load(std::memory_order_relaxed)); }

    void record() {
        if (best_ != kNone && weight_ <= best_) return;
        best_ = weight_;
        best_chosen_ = chosen_;
        auto cur = global_.load();
        while (best_ > cur && !global_.compare_exchange_weak(cur, best_)) {
        }
        if (s_.ceiling && best_ >= *s_.ceiling) done_ = true;
    }

    bool prune(std::size_t idx) const {
        const std::int64_t goal = target();
        if (goal == kNone) return false;
        std::int64_t potential = weight_;
        std::vector<std::int64_t> vertex_potential = vertex_weight_;
        for (std::size_t j = idx; j < s_.candidates.size(); ++j) {
            if (!alive_[j] || counts_[j] >= s_.cap || s_.weights[j] <= 0) continue;
            const std::int64_t gain = s_.weights[j] * (s_.cap - counts_[j]);
            potential += gain;
            for (Vertex v : s_.candidates[j]) vertex_potential[static_cast<std::size_t>(v)] += gain;
        }
        if (potential < goal) return true;
        if (s_.degree_cap) {
            std::int64_t degree_total = 0;
            for (std::int64_t vp : vertex_potential) degree_total += std::min(vp, *s_.degree_cap);
            if (degree_total / 2 < goal) return true;
        }
        // Dropping a vertex leaves a free family on n-1 vertices.
        if (s_.sub_optimum)
            for (std::int64_t vp : vertex_potential)
                if (vp < goal - *s_.sub_optimum) return true;
        return false;
    }

    void include(std::size_t idx, std::vector<std::size_t>& undo) {
        ++counts_[idx];
        chosen_.push_back(idx);
        weight_ += s_.weights[idx];
        for (Vertex v : s_.candidates[idx]) vertex_weight_[static_cast<std::size_t>(v)] += s_.weights[idx];
        for (std::size_t j = idx; j < s_.candidates.size(); ++j) {
            if (!alive_[j] || counts_[j] >= s_.cap) continue;
            if (!s_.addable(chosen_, j)) {
                alive_[j] = 0;
                undo.push_back(j);
            }
        }
    }

    void rollback(std::size_t idx, const std::vector<std::size_t>& undo) {
        for (std::size_t j : undo) alive_[j] = 1;
        --counts_[idx];
        chosen_.pop_back();
        weight_ -= s_.weights[idx];
        for (Vertex v : s_.candidates[idx]) vertex_weight_[static_cast<std::size_t>(v)] -= s_.weights[idx];
    }

    /// Decisions are fixed for candidates below idx; more copies of idx may follow.
    void node(std::size_t idx) {
        if (done_) return;
        ++nodes_;
        record();
        if (done_ || prune(idx)) return;
        for (std::size_t j = idx; j < s_.candidates.size() && !done_; ++j) {
            if (!alive_[j] || counts_[j] >= s_.cap) continue;
            std::vector<std::size_t> undo;
            include(j, undo);
            node(j);
            rollback(j, undo);
            if (prune(j + 1)) return;
        }
    }

    const SearchSpace& s_;
    std::atomic<std::int64_t>& global_;
    std::vector<char> alive_;
    std::int64_t weight_ = 0;
    std::vector<int> counts_;
    std::vector<std::size_t> chosen_;
    std::vector<std::int64_t> vertex_weight_;
    std::int64_t best_ = kNone;
    std::vector<std::size_t> best_chosen_;
    std::uint64_t nodes_ = 0;
    bool done_ = false;
};

/// Shard k explores families whose first included candidate is k; the last
/// shard is the empty family. Shards are in include-first preorder, so the
/// first shard reaching the optimum holds the canonical witness.
EngineResult branch_and_bound(const SearchSpace& space, int workers) {
    const std::size_t m = space.candidates.size();
    std::vector<EngineResult> results(m + 1);
    std::vector<char> alive(m);
    parallel_for(m, workers, [&](std::size_t j) { alive[j] = space.addable({}, j) ? 1 : 0; });
    std::atomic<std::int64_t> global{kNone};
    parallel_for(m + 1, workers, [&](std::size_t k) {
        Shard shard(space, alive, global);
        results[k] = shard.run(k < m ? std::optional<std::size_t>(k) : std::nullopt);
    });
    EngineResult out;
    out.best = kNone;
    for (auto& r : results) {
        out.nodes += r.nodes;
        if (r.best != kNone && r.best > out.best) {
            out.best = r.best;
            out.chosen = r.chosen;
        }
    }
    std::sort(out.chosen.begin(), out.chosen.end());
    return out;
}

std::vector<std::vector<Vertex>> subsets_of_size(int n, int k) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> cur;
    auto rec = [&](auto&& self, Vertex from) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (Vertex v = from; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

SearchResult search_unguarded(const SearchProblem& p, const SearchOptions& options, int cap) {
    SearchSpace space;
    space.n = p.n;
    space.cap = cap;
    std::vector<int> sizes = p.sizes;
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    for (int k : sizes)
        for (auto& c : subsets_of_size(p.n, k)) {
            space.weights.push_back(hyperedge_weight(c.size(), p.objective));
            space.candidates.push_back(std::move(c));
        }
    space.addable = [&](const std::vector<std::size_t>& chosen, std::size_t candidate) {
        Hypergraph h(p.n);
        for (std::size_t i : chosen) h.add(space.candidates[i]);
        h.add(space.candidates[candidate]);
        ContainmentOptions co;
        co.vertex_guard = options.pattern_guard;
        co.required_hyperedge = h.size() - 1;
        for (const Pattern& f : p.forbidden)
            if (contains_berge(h, f, co)) return false;
        return true;
    };

    if (p.n > 1) {
        SearchProblem smaller = p;
        smaller.n = p.n - 1;
        smaller.sizes.clear();
        for (int k : sizes)
            if (k <= smaller.n) smaller.sizes.push_back(k);
        const std::int64_t sub = smaller.sizes.empty() ? 0 : search_unguarded(smaller, options, cap).optimum;
        space.sub_optimum = sub;
        // Averaging over vertex deletions: every hyperedge avoids n-k vertices.
        const bool uniform_positive = sizes.size() == 1 && sizes[0] < p.n && !space.weights.empty() && space.weights[0] > 0;
        if (uniform_positive) {
            const std::int64_t w = space.weights[0];
            space.ceiling = w * ((p.n * (sub / w)) / (p.n - sizes[0]));
        }
    }

    const EngineResult r = branch_and_bound(space, options.workers);
    SearchResult out;
    out.optimum = r.best;
    out.nodes = r.nodes;
    out.witness = Hypergraph(p.n);
    for (std::size_t i : r.chosen) out.witness.add(space.candidates[i]);
    return out;
}

}  // namespace

SearchResult exact_search(const SearchProblem& p, const SearchOptions& options) {
    if (p.n < 1) fail(ErrorCode::invalid_argument, "search needs n >= 1");
    if (p.n > options.search_guard)
        fail(ErrorCode::guard_exceeded, "n = " + std::to_string(p.n) + " is above the search guard " +
                                            std::to_string(options.search_guard) + " (BERGE_GUARD_N)");
    if (p.sizes.empty()) fail(ErrorCode::invalid_argument, "search needs at least one allowed hyperedge size");
    for (int k : p.sizes)
        if (k < 2 || k > p.n) fail(ErrorCode::invalid_argument, "hyperedge sizes must lie in 2..n");
    if (p.forbidden.empty()) fail(ErrorCode::invalid_argument, "search needs at least one forbidden pattern");
    int cap = 1;
    if (!p.simple_only) {
        int largest = 0;
        int fewest_edges = std::numeric_limits<int>::max();
        for (const Pattern& f : p.forbidden) {
            largest = std::max(largest, f.vertex_count());
            fewest_edges = std::min(fewest_edges, f.edge_count());
        }
        for (int k : p.sizes)
            if (k < largest)
                fail(ErrorCode::invalid_argument,
                     "unbounded: with multi-hyperedges allowed, size " + std::to_string(k) +
                         " is below the largest forbidden vertex count " + std::to_string(largest) +
                         " and copies of one hyperedge can be repeated without creating the pattern; use --simple");
        // |E(F)| copies of a hyperedge with at least |V(F)| vertices host a Berge-F.
        cap = fewest_edges - 1;
    }
    return search_unguarded(p, options, cap);
}

namespace {

GraphSearchResult graph_search_unguarded(int n, const std::vector<Graph>& forbidden, int workers);

/// Results are pure functions of (n, forbidden), so repeated requests reuse them.
GraphSearchResult graph_search_cached(int n, const std::vector<Graph>& forbidden, int workers) {
    static std::mutex mutex;
    static std::map<std::pair<int, std::vector<std::vector<Edge>>>, GraphSearchResult> memo;
    std::vector<std::vector<Edge>> key_graphs;
    for (const Graph& f : forbidden) key_graphs.push_back(f.edges());
    auto key = std::make_pair(n, std::move(key_graphs));
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    GraphSearchResult r = graph_search_unguarded(n, forbidden, workers);
    std::lock_guard lock(mutex);
    return memo.emplace(std::move(key), std::move(r)).first->second;
}

GraphSearchResult graph_search_unguarded(int n, const std::vector<Graph>& forbidden, int workers) {
    std::optional<std::int64_t> sub;
    if (n > 2) sub = graph_search_cached(n - 1, forbidden, workers).ex;
    GraphSearchResult out;
    out.ex = 0;
    out.witness = Graph(n);
    // Up to isomorphism vertex 0 has maximum degree d and neighbours 1..d.
    for (int d = n - 1; d >= 0; --d) {
        if (d < n - 1 && static_cast<std::int64_t>(n) * d / 2 <= out.ex) break;
        Graph star(n);
        for (Vertex v = 1; v <= d; ++v) star.add_edge(0, v);
        if (std::any_of(forbidden.begin(), forbidden.end(), [&](const Graph& f) { return contains_subgraph(star, f); }))
            continue;
        SearchSpace space;
        space.n = n;
        for (auto& c : subsets_of_size(n, 2)) {
            if (c[0] == 0) continue;
            space.candidates.push_back(std::move(c));
            space.weights.push_back(1);
        }
        space.base_weight = d;
        space.base_vertex_weight.assign(static_cast<std::size_t>(n), 0);
        space.base_vertex_weight[0] = d;
        for (Vertex v = 1; v <= d; ++v) space.base_vertex_weight[static_cast<std::size_t>(v)] = 1;
        space.degree_cap = d;
        space.sub_optimum = sub;
        space.ceiling = static_cast<std::int64_t>(n) * d / 2;
        if (sub) space.ceiling = std::min(*space.ceiling, (n * *sub) / (n - 2));
        space.addable = [&](const std::vector<std::size_t>& chosen, std::size_t candidate) {
            Graph g = star;
            for (std::size_t i : chosen) g.add_edge(space.candidates[i][0], space.candidates[i][1]);
            const Edge e(space.candidates[candidate][0], space.candidates[candidate][1]);
            g.add_edge(e.u, e.v);
            if (g.degree(e.u) > d || g.degree(e.v) > d) return false;
            for (const Graph& f : forbidden)
                if (find_subgraph(g, f, e)) return false;
            return true;
        };
        const EngineResult r = branch_and_bound(space, workers);
        out.nodes += r.nodes;
        if (r.best > out.ex || (d == n - 1 && r.best == out.ex)) {
            out.ex = r.best;
            out.witness = star;
            for (std::size_t i : r.chosen) out.witness.add_edge(space.candidates[i][0], space.candidates[i][1]);
        }
    }
    return out;
}

}  // namespace

GraphSearchResult graph_ex_search(int n, const std::vector<Graph>& forbidden, const SearchOptions& options) {
    if (n < 1) fail(ErrorCode::invalid_argument, "graph search needs n >= 1");
    if (n > options.graph_guard)
        fail(ErrorCode::guard_exceeded,
             "n = " + std::to_string(n) + " is above the graph search guard " + std::to_string(options.graph_guard));
    if (forbidden.empty()) fail(ErrorCode::invalid_argument, "graph search needs at least one forbidden graph");
    for (const Graph& f : forbidden)
        if (f.size() == 0) fail(ErrorCode::invalid_argument, "forbidden graphs need at least one edge");
    return graph_search_cached(n, forbidden, options.workers);
}

namespace {

BoundReport compare(BoundReport b, std::int64_t measured, bool hypotheses, std::string note) {
    b.measured = measured;
    b.hypotheses_met = hypotheses;
    if (hypotheses) {
        b.satisfied = b.exact ? measured * b.exact->den <= b.exact->num
                              : static_cast<double>(measured) <= b.value;
    }
    if (!note.empty()) b.note = b.note.empty() ? note : b.note + "; " + note;
    return b;
}

}  // namespace

BoundReport check_inequality(const InequalityRequest& req, const SearchOptions& options) {
    const Hypergraph& h = req.hypergraph;
    require_valid(h);
    const CountReport counts = count_report(h);
    ContainmentOptions co;
    co.vertex_guard = options.pattern_guard;
    co.workers = options.workers;
    const std::int64_t n = h.order();

    switch (req.kind) {
    case Inequality::edge_sum: {
        if (!req.pattern) fail(ErrorCode::invalid_argument, "edge_sum needs a pattern F");
        const std::int64_t r = req.pattern->vertex_count();
        const bool sizes_ok = std::all_of(h.hyperedges().begin(), h.hyperedges().end(), [&](const auto& e) {
            return static_cast<std::int64_t>(e.size()) >= r * r * r;
        });
        const bool free = !contains_berge(h, *req.pattern, co);
        BoundReport b = evaluate_bound("edge_sum_bound", {{"n", n}, {"r", r}, {"edges", static_cast<std::int64_t>(h.size())}});
        std::string note;
        if (!sizes_ok) note = "hypotheses not met: some hyperedge has fewer than r^3 vertices";
        else if (!free) note = "hypotheses not met: hypergraph contains Berge-" + req.pattern->name();
        return compare(std::move(b), counts.degree_sum, sizes_ok && free, note);
    }
    case Inequality::linear_observation: {
        if (!req.pattern) fail(ErrorCode::invalid_argument, "linear_observation needs a pattern F");
        if (req.pattern->is_c2()) fail(ErrorCode::invalid_argument, "linear_observation needs a simple pattern");
        const bool sizes_ok = std::all_of(h.hyperedges().begin(), h.hyperedges().end(),
                                          [](const auto& e) { return e.size() >= 2; });
        const bool linear = is_linear(h);
        const bool free = !contains_berge(h, *req.pattern, co);
        const std::int64_t ex =
            req.ex_upper ? *req.ex_upper : graph_ex_search(h.order(), {realize_pattern(*req.pattern)}, options).ex;
        BoundReport b = exact_report("linear_observation", {{"n", n}}, Rational::of(ex));
        b.note = "|H| <= ex(n, " + req.pattern->name() + ") for linear hypergraphs";
        std::string note;
        if (req.ex_upper) note = "ex side supplied as an upper bound";
        if (!sizes_ok) note = "hypotheses not met: some hyperedge has fewer than 2 vertices";
        else if (!linear) note = "hypotheses not met: hypergraph is not linear";
        else if (!free) note = "hypotheses not met: hypergraph contains Berge-" + req.pattern->name();
        return compare(std::move(b), static_cast<std::int64_t>(counts.edge_count), sizes_ok && linear && free, note);
    }
    case Inequality::girth_proposition: {
        const int g = req.girth;
        if (g < 5) fail(ErrorCode::invalid_argument, "girth_proposition needs g >= 5");
        const bool uniform = std::all_of(h.hyperedges().begin(), h.hyperedges().end(),
                                         [](const auto& e) { return e.size() == 3; });
        bool girth_ok = false;
        if (uniform) {
            girth_ok = !berge_girth(h, g - 1, co).girth.has_value();
            if (girth_ok && has_cycle_between(shadow_expand(h), 4, g - 1))
                fail(ErrorCode::internal, "shadow of a girth-" + std::to_string(g) + " triple system has a short cycle");
        }
        std::vector<Graph> cycles;
        for (int k = 4; k < g; ++k) cycles.push_back(realize_pattern(Pattern::cycle(k)));
        const std::int64_t ex = req.ex_upper ? *req.ex_upper : graph_ex_search(h.order(), cycles, options).ex;
        BoundReport b = exact_report("girth_proposition", {{"n", n}, {"g", g}}, Rational::of(ex, 3));
        b.note = "|H| <= ex(n, C_4..C_{g-1}) / 3 for 3-uniform hypergraphs of girth >= g";
        std::string note;
        if (req.ex_upper) note = "ex side supplied as an upper bound";
        if (!uniform) note = "hypotheses not met: hypergraph is not 3-uniform";
        else if (!girth_ok) note = "hypotheses not met: Berge girth below " + std::to_string(g);
        return compare(std::move(b), static_cast<std::int64_t>(counts.edge_count), uniform && girth_ok, note);
    }
    }
    fail(ErrorCode::invalid_argument, "unknown inequality");
}

}  // namespace berge
