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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "berge/core.hpp"

namespace berge {

/// Reduced fraction with a positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational of(std::int64_t num, std::int64_t den = 1);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
    bool operator==(const Rational&) const = default;
};

struct BoundReport {
    std::string name;
    std::map<std::string, std::int64_t> parameters;
    double value = 0.0;
    /// Present when the formula evaluates exactly.
    std::optional<Rational> exact;
    /// Only the leading term of an asymptotic statement; never asserted.
    bool leading_term_only = false;
    std::optional<std::int64_t> measured;
    /// measured <= value; present iff measured is present and hypotheses hold.
    std::optional<bool> satisfied;
    /// Present when the report comes from check_inequality.
    std::optional<bool> hypotheses_met;
    std::string note;
};

/// Names: path_bound (n,k,m), edge_sum_bound (n,r,edges), general_upper (n,r),
/// kst_graph_bound (n,s,t), c4_free_upper (n), c4_free_lower (n),
/// c4_weak_upper (n), lv_girth5 (n).
BoundReport evaluate_bound(const std::string& name, const std::map<std::string, std::int64_t>& parameters);

std::vector<std::string> bound_names();

/// Union of the three pairs of every triple.
Graph shadow_expand(const Hypergraph& h3);

enum class Objective { edge_count, degree_sum, deficiency_sum };

struct SearchProblem {
    int n = 0;
    std::vector<Pattern> forbidden;
    /// Allowed hyperedge sizes.
    std::vector<int> sizes;
    bool simple_only = true;
    Objective objective = Objective::edge_count;
};

struct SearchOptions {
    /// Largest n accepted by exact_search.
    int search_guard = 7;
    /// Largest n accepted by graph_ex_search.
    int graph_guard = 9;
    int pattern_guard = 8;
    int workers = 1;
};

struct SearchResult {
    std::int64_t optimum = 0;
    Hypergraph witness;
    std::uint64_t nodes = 0;
};

/// Branch and bound over candidate hyperedges in (size, lexicographic) order,
/// include branch first.
SearchResult exact_search(const SearchProblem& problem, const SearchOptions& options = {});

std::int64_t objective_value(const Hypergraph& h, Objective objective);

struct GraphSearchResult {
    std::int64_t ex = 0;
    Graph witness;
    std::uint64_t nodes = 0;
};

/// ex(n, forbidden) by branch and bound over the C(n,2) possible edges.
GraphSearchResult graph_ex_search(int n, const std::vector<Graph>& forbidden, const SearchOptions& options = {});

enum class Inequality {
    /// sum |h| <= 2 C(n,2) + r^3 |H| for F-free H with all |h| >= r^3, r = |V(F)|.
    edge_sum,
    /// |H| <= ex(n, F) for linear F-free H.
    linear_observation,
    /// |H| <= ex(n, C_4..C_{g-1}) / 3 for 3-uniform H of Berge girth >= g.
    girth_proposition,
};

struct InequalityRequest {
    Inequality kind = Inequality::edge_sum;
    Hypergraph hypergraph;
    std::optional<Pattern> pattern;
    int girth = 5;
    /// Upper bound on the ex(n, ...) side, used instead of graph_ex_search
    /// (e.g. above the graph guard).
    std::optional<std::int64_t> ex_upper;
};

/// Verifies the hypotheses, then compares the measured side with the bound.
BoundReport check_inequality(const InequalityRequest& request, const SearchOptions& options = {});

}  // namespace berge
