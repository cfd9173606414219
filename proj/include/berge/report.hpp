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

#include <json.hpp>

#include "berge/constructions.hpp"
#include "berge/containment.hpp"
#include "berge/embeddings.hpp"
#include "berge/extremal.hpp"
#include "berge/ramsey.hpp"

namespace berge::report {

using Json = nlohmann::json;
using Labels = std::vector<std::int64_t>;

inline constexpr int kSchemaVersion = 1;

/// Vertex ids are printed through `labels` when it is non-empty.
Json witness(const BergeWitness& w, const Labels& labels = {});
Json check(const Pattern& p, const std::optional<BergeWitness>& w, const Labels& labels = {});
Json girth(const GirthReport& r, bool linear, const Labels& labels = {});
Json embedding(const EmbeddingOutcome& out, const std::string& procedure, const std::optional<LiftedWitness>& lifted,
               const Labels& labels = {});
Json ramsey(const RamseyVerdict& v, const std::string& lemma);
Json rainbow(const RainbowTrials& t, const std::string& lemma, const std::map<std::string, std::int64_t>& parameters);
Json construction(const std::string& kind, int order, std::size_t size, const std::vector<Certificate>& certificates);
Json bound(const BoundReport& b);
Json search(const SearchProblem& p, const SearchResult& r);
Json graph_search(int n, const std::vector<std::string>& forbidden, const GraphSearchResult& r);
Json counts(const CountReport& c, int order);
Json validation(const std::vector<Violation>& violations);

/// Two-space indented, sorted keys, trailing newline.
std::string dump(const Json& j);

}  // namespace berge::report
