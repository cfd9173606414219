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
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "berge/core.hpp"

namespace berge::io {

/// A loaded object together with the original label of each dense vertex id.
/// With an `n=` header (or a JSON `n` field) labels are taken verbatim and the
/// map is the identity; otherwise labels are compacted in ascending order.
template <typename T>
struct Labeled {
    T value;
    std::vector<std::int64_t> labels;

    bool identity() const {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] != static_cast<std::int64_t>(i)) return false;
        return true;
    }
    std::int64_t label(Vertex v) const { return labels[static_cast<std::size_t>(v)]; }
};

using LabeledHypergraph = Labeled<Hypergraph>;
using LabeledGraph = Labeled<Graph>;

LabeledHypergraph parse_hypergraph_text(std::string_view text);
LabeledHypergraph parse_hypergraph_json(std::string_view text);
/// Dispatches on the first non-blank character (`{` means JSON).
LabeledHypergraph parse_hypergraph(std::string_view text);
LabeledHypergraph read_hypergraph(const std::filesystem::path& path);

LabeledGraph parse_graph(std::string_view text);
LabeledGraph read_graph(const std::filesystem::path& path);

/// Canonical text: `n=<n>` header, one hyperedge per line, vertices ascending.
/// A non-identity label map is recorded as a `# labels:` comment.
std::string write_hypergraph_text(const Hypergraph& h, const std::vector<std::int64_t>& labels = {});
std::string write_hypergraph_json(const Hypergraph& h, const std::vector<std::int64_t>& labels = {});
std::string write_graph_text(const Graph& g, const std::vector<std::int64_t>& labels = {});

std::string read_file(const std::filesystem::path& path);

}  // namespace berge::io
