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
#include <optional>
#include <string>
#include <vector>

#include "berge/core.hpp"
#include "berge/extremal.hpp"

namespace berge {

struct CorpusOptions {
    std::uint64_t seed = 1;
    int count = 100;
    int min_n = 5;
    int max_n = 15;
    /// Greedy restarts per instance.
    int trials = 4;
    int workers = 1;
};

/// Girth-5 triple systems; instance i has n = min_n + i mod (max_n - min_n + 1)
/// and seed split_seed(seed, i).
std::vector<Hypergraph> girth5_corpus(const CorpusOptions& options);

struct InequalityCase {
    std::string label;
    BoundReport report;
};

/// Runs the edge-sum, linear-observation and girth-proposition checks over
/// seeded instances that fit the search guards.
std::vector<InequalityCase> inequality_corpus(std::uint64_t seed, const SearchOptions& options);

struct TableRow {
    std::string statement;
    int n = 0;
    std::optional<double> construction_value;
    std::optional<double> exact_value;
    double bound_value = 0.0;
    /// "true", "false" or "report_only".
    std::string satisfied;
};

std::vector<TableRow> summary_table(const std::vector<int>& ns, std::uint64_t seed, const SearchOptions& options);

/// RFC 4180 with CRLF line ends and a header row.
std::string table_csv(const std::vector<TableRow>& rows);

}  // namespace berge
