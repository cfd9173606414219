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

#include "berge/suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "berge/constructions.hpp"
#include "berge/containment.hpp"
#include "berge/error.hpp"
#include "berge/parallel.hpp"
#include "berge/random.hpp"

namespace berge {

std::vector<Hypergraph> girth5_corpus(const CorpusOptions& o) {
    if (o.count < 0 || o.min_n < 3 || o.max_n < o.min_n) fail(ErrorCode::invalid_argument, "invalid corpus options");
    std::vector<Hypergraph> out(static_cast<std::size_t>(o.count));
    const int span = o.max_n - o.min_n + 1;
    parallel_for(out.size(), o.workers, [&](std::size_t i) {
        const int n = o.min_n + static_cast<int>(i % static_cast<std::size_t>(span));
        out[i] = girth5_greedy(n, split_seed(o.seed, i), o.trials);
    });
    return out;
}

namespace {

int below(Rng& rng, int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); }

Hypergraph relabel_randomly(const Hypergraph& h, int n, Rng& rng) {
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Hypergraph out(n);
    for (const auto& e : h.hyperedges()) {
        std::vector<Vertex> moved;
        for (Vertex v : e) moved.push_back(perm[static_cast<std::size_t>(v)]);
        out.add(std::move(moved));
    }
    return out;
}

/// Petals of the given sizes sharing vertex 0 and nothing else.
Hypergraph sunflower(const std::vector<int>& sizes) {
    std::vector<std::vector<Vertex>> petals;
    Vertex next = 1;
    for (int s : sizes) {
        std::vector<Vertex> petal{0};
        for (int j = 1; j < s; ++j) petal.push_back(next++);
        petals.push_back(std::move(petal));
    }
    return Hypergraph(next, std::move(petals));
}

Hypergraph disjoint_blocks(const std::vector<int>& sizes) {
    std::vector<std::vector<Vertex>> blocks;
    Vertex next = 0;
    for (int s : sizes) {
        std::vector<Vertex> block(static_cast<std::size_t>(s));
        std::iota(block.begin(), block.end(), next);
        next += s;
        blocks.push_back(std::move(block));
    }
    return Hypergraph(next, std::move(blocks));
}

Hypergraph with_order(const Hypergraph& h, int n) { return Hypergraph(n, h.hyperedges()); }

}  // namespace

std::vector<InequalityCase> inequality_corpus(std::uint64_t seed, const SearchOptions& options) {
    std::vector<InequalityCase> out;
    auto run = [&](std::string label, InequalityRequest req) {
        out.push_back({std::move(label), check_inequality(req, options)});
    };

    for (int i = 0; i < 12; ++i) {
        Rng rng = make_rng(seed, 1000 + static_cast<std::uint64_t>(i));
        InequalityRequest req;
        req.kind = Inequality::edge_sum;
        std::vector<int> sizes;
        std::string label;
        switch (i % 3) {
        case 0: {
            for (int m = below(rng, 4); m > 0; --m) sizes.push_back(27 + below(rng, 3));
            const Hypergraph h = sunflower(sizes);
            req.hypergraph = relabel_randomly(h, h.order() + below(rng, 3), rng);
            req.pattern = Pattern::complete(3);
            label = "sunflower";
            break;
        }
        case 1: {
            for (int m = below(rng, 3); m > 0; --m) sizes.push_back(27 + below(rng, 3));
            const Hypergraph h = disjoint_blocks(sizes);
            req.hypergraph = relabel_randomly(h, h.order() + below(rng, 3), rng);
            req.pattern = Pattern::path(3);
            label = "disjoint_blocks";
            break;
        }
        default:
            req.hypergraph = Hypergraph(2 + below(rng, 8));
            req.pattern = Pattern::complete(2);
            label = "empty";
        }
        run("edge_sum/" + req.pattern->name() + "/" + label + "#" + std::to_string(i), std::move(req));
    }

    const int top = std::min(9, options.graph_guard);
    for (int n = 5; n <= top; ++n) {
        const Hypergraph g5 = girth5_greedy(n, split_seed(seed, 2000 + static_cast<std::uint64_t>(n)), 4, options.workers);
        for (const Pattern& f : {Pattern::complete(3), Pattern::cycle(4)}) {
            InequalityRequest req;
            req.kind = Inequality::linear_observation;
            req.hypergraph = g5;
            req.pattern = f;
            run("linear_observation/" + f.name() + "/girth5#" + std::to_string(n), std::move(req));
        }
        for (int g : {5, 6}) {
            InequalityRequest req;
            req.kind = Inequality::girth_proposition;
            req.hypergraph = g5;
            req.girth = g;
            run("girth_proposition/g" + std::to_string(g) + "/girth5#" + std::to_string(n), std::move(req));
        }
    }

    // Random linear Berge-K3-free hypergraphs with mixed hyperedge sizes.
    const Pattern k3 = Pattern::complete(3);
    for (int i = 0; i < 10; ++i) {
        Rng rng = make_rng(seed, 3000 + static_cast<std::uint64_t>(i));
        const int n = 5 + below(rng, std::max(1, top - 4));
        Hypergraph h(n);
        for (int attempt = 0; attempt < 30; ++attempt) {
            std::vector<Vertex> all(static_cast<std::size_t>(n));
            std::iota(all.begin(), all.end(), 0);
            std::shuffle(all.begin(), all.end(), rng);
            all.resize(static_cast<std::size_t>(2 + below(rng, 3)));
            Hypergraph next = h;
            next.add(all);
            ContainmentOptions co;
            co.required_hyperedge = next.size() - 1;
            if (is_linear(next) && !contains_berge(next, k3, co)) h = std::move(next);
        }
        InequalityRequest req;
        req.kind = Inequality::linear_observation;
        req.hypergraph = with_order(h, n);
        req.pattern = k3;
        run("linear_observation/K3/random#" + std::to_string(i), std::move(req));
    }
    return out;
}

namespace {

std::string verdict(const BoundReport& b) {
    if (b.leading_term_only) return "report_only";
    if (!b.satisfied) return "false";
    return *b.satisfied ? "true" : "false";
}

TableRow row(std::string statement, int n, std::optional<double> construction, std::optional<double> exact,
             const BoundReport& b) {
    return {std::move(statement), n, construction, exact, b.value, verdict(b)};
}

BoundReport report_only(BoundReport b, std::int64_t measured) {
    b.measured = measured;
    b.satisfied = static_cast<double>(measured) <= b.value;
    return b;
}

Graph cycle_graph(int m) {
    Graph g(m);
    for (int v = 0; v < m; ++v) g.add_edge(v, (v + 1) % m);
    return g;
}

/// Largest m whose K_3 blow-up fits on n vertices.
int kr_blowup_size(int n) {
    int best = 2;
    for (int m = 2; m <= n; ++m)
        if (kr_blowup_spec(m, 3).order() <= n) best = m;
    return best;
}

std::optional<int> plane_order_fitting(int n) {
    std::optional<int> best;
    for (int q = 2; 4 * (q * q + q + 1) <= n; ++q)
        if (is_prime(q)) best = q;
    return best;
}

}  // namespace

std::vector<TableRow> summary_table(const std::vector<int>& ns, std::uint64_t seed, const SearchOptions& options) {
    std::vector<TableRow> rows;
    for (int n : ns) {
        if (n < 9) fail(ErrorCode::invalid_argument, "table sizes must be at least 9");
        const auto nn = static_cast<std::int64_t>(n);

        {
            Hypergraph blocks(n);
            for (int b = 0; b < n / 4; ++b) {
                std::vector<Vertex> block{4 * b, 4 * b + 1, 4 * b + 2, 4 * b + 3};
                for (int skip = 0; skip < 4; ++skip) {
                    std::vector<Vertex> triple;
                    for (int j = 0; j < 4; ++j)
                        if (j != skip) triple.push_back(block[static_cast<std::size_t>(j)]);
                    blocks.add(std::move(triple));
                }
            }
            BoundReport b = evaluate_bound("path_bound", {{"n", nn}, {"k", 4}, {"m", 3}});
            ContainmentOptions co;
            co.vertex_guard = options.pattern_guard;
            co.workers = options.workers;
            const bool free = !contains_berge(blocks, Pattern::path(5), co);
            const auto measured = static_cast<std::int64_t>(blocks.size());
            b.measured = measured;
            if (free) b.satisfied = measured * b.exact->den <= b.exact->num;
            rows.push_back(row("path_bound", n, static_cast<double>(measured), std::nullopt, b));
        }

        {
            std::vector<int> petals(static_cast<std::size_t>((n - 1) / 26), 27);
            InequalityRequest req;
            req.kind = Inequality::edge_sum;
            req.hypergraph = with_order(sunflower(petals), n);
            req.pattern = Pattern::complete(3);
            const BoundReport b = check_inequality(req, options);
            rows.push_back(row("edge_sum", n, static_cast<double>(*b.measured), std::nullopt, b));
        }

        {
            const Hypergraph h = blowup_kr(kr_blowup_size(n), 3);
            BoundReport b = evaluate_bound("general_upper", {{"n", nn}, {"r", 3}});
            ContainmentOptions co;
            co.vertex_guard = options.pattern_guard;
            co.workers = options.workers;
            const std::int64_t measured = count_report(h).degree_sum;
            b.measured = measured;
            if (!contains_berge(h, Pattern::complete(3), co)) b.satisfied = measured * b.exact->den <= b.exact->num;
            rows.push_back(row("general_upper", n, static_cast<double>(measured), std::nullopt, b));
        }

        const Hypergraph g5 = girth5_greedy(n, split_seed(seed, static_cast<std::uint64_t>(n)), 8, options.workers);
        const auto g5_edges = static_cast<std::int64_t>(g5.size());
        const bool small = n <= options.graph_guard;

        {
            InequalityRequest req;
            req.kind = Inequality::linear_observation;
            req.hypergraph = g5;
            req.pattern = Pattern::complete(3);
            if (!small) req.ex_upper = nn * nn / 4;
            const BoundReport b = check_inequality(req, options);
            rows.push_back(row("linear_observation", n, static_cast<double>(g5_edges),
                               small ? std::optional<double>(b.value) : std::nullopt, b));
        }

        {
            InequalityRequest req;
            req.kind = Inequality::girth_proposition;
            req.hypergraph = g5;
            req.girth = 5;
            if (!small)
                req.ex_upper = static_cast<std::int64_t>(
                    std::floor(evaluate_bound("kst_graph_bound", {{"n", nn}, {"s", 2}, {"t", 2}}).value));
            const BoundReport b = check_inequality(req, options);
            rows.push_back(row(small ? "girth_proposition" : "girth_proposition_kst", n, static_cast<double>(g5_edges),
                               small ? std::optional<double>(b.value * 3.0) : std::nullopt, b));
        }

        rows.push_back(row("lv_girth5", n, static_cast<double>(g5_edges), std::nullopt,
                           report_only(evaluate_bound("lv_girth5", {{"n", nn}}), g5_edges)));

        {
            const Hypergraph base = girth5_greedy(n / 3, split_seed(seed, 10000 + static_cast<std::uint64_t>(n)), 8,
                                                  options.workers);
            const Hypergraph blown = with_order(triple_blowup(base), n);
            const std::int64_t deficiency = count_report(blown).deficiency_sum;
            for (const char* name : {"c4_free_lower", "c4_free_upper", "c4_weak_upper"})
                rows.push_back(row(name, n, static_cast<double>(deficiency), std::nullopt,
                                   report_only(evaluate_bound(name, {{"n", nn}}), deficiency)));
        }

        {
            std::optional<std::int64_t> degree_sum;
            if (auto q = plane_order_fitting(n)) {
                degree_sum = count_report(blowup_kst(c4_free_incidence_graph(*q), 2, 2)).degree_sum;
            } else {
                for (int m = n / 2; m >= 5 && !degree_sum; --m) {
                    const Hypergraph h = blowup_kst(cycle_graph(m), 2, 2);
                    if (h.order() <= n) degree_sum = count_report(h).degree_sum;
                }
            }
            BoundReport b = evaluate_bound("kst_graph_bound", {{"n", nn}, {"s", 2}, {"t", 2}});
            b.leading_term_only = true;
            if (degree_sum) b = report_only(b, *degree_sum);
            else b.note = "no C4-free base graph fits in n vertices";
            rows.push_back(row("bipar_lower", n, degree_sum ? std::optional<double>(static_cast<double>(*degree_sum)) : std::nullopt,
                               std::nullopt, b));
        }
    }
    return rows;
}

namespace {

std::string number(std::optional<double> v) {
    if (!v) return "";
    if (std::floor(*v) == *v && std::fabs(*v) < 1e15) return std::to_string(static_cast<std::int64_t>(*v));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", *v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

}  // namespace

std::string table_csv(const std::vector<TableRow>& rows) {
    std::string out = "statement,n,construction_value,exact_value,bound_value,satisfied\r\n";
    for (const TableRow& r : rows) {
        out += csv_field(r.statement) + "," + std::to_string(r.n) + "," + number(r.construction_value) + "," +
               number(r.exact_value) + "," + number(r.bound_value) + "," + csv_field(r.satisfied) + "\r\n";
    }
    return out;
}

}  // namespace berge
