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
#include <string>
#include <vector>

#include "berge/core.hpp"

namespace berge {

/// A bipartite subgraph G' of some graph, kept in the original labels.
struct Bipartition {
    std::vector<Vertex> a_side;
    std::vector<Vertex> b_side;
    /// Edges of G', each with one endpoint on either side, sorted.
    std::vector<Edge> cross;
};

/// Blow-up of the A-side of a bipartition: every a in A' becomes a block of
/// `copies` new vertices and every cross edge {a,b} becomes block(a) + {b}.
/// Blocks are numbered first (in A' order), then B' vertices.
struct BlowupSpec {
    Bipartition base;
    int copies = 1;

    int uniformity() const { return copies + 1; }
    int order() const;
    /// First vertex of the block replacing the i-th A' vertex.
    Vertex block_start(std::size_t i) const { return static_cast<Vertex>(i) * copies; }
};

/// Complete p-partite graph on consecutive, balanced parts.
Graph turan_graph(int n, int p);

/// Cut with at least half of the edges. Bipartite graphs keep all their
/// edges; otherwise local switching from the split {0..n/2-1} | {n/2..n-1}.
Bipartition bipartite_half(const Graph& g);

Hypergraph blow_up(const BlowupSpec& spec);

BlowupSpec kr_blowup_spec(int n, int r);
/// Throws Error(precondition) naming a K_{s,t} copy if `g` contains one.
BlowupSpec kst_blowup_spec(const Graph& g, int s, int t);

Hypergraph blowup_kr(int n, int r);
Hypergraph blowup_kst(const Graph& g, int s, int t);

/// Blocks of 1+t vertices, each repeated t-1 times.
Hypergraph star_free_construction(int n, int t);

bool is_prime(int q);

/// Point-line incidence graph of PG(2,q): points 0..N-1, lines N..2N-1,
/// N = q^2+q+1.
Graph c4_free_incidence_graph(int q);

/// Best of `trials` shuffled greedy runs over all triples of [n], keeping a
/// triple only if it closes no Berge-C2, C3 or C4. Hyperedges come out sorted.
Hypergraph girth5_greedy(int n, std::uint64_t seed, int trials, int workers = 1);

/// v -> {3v, 3v+1, 3v+2}. Requires a 3-uniform input of Berge girth >= 5.
Hypergraph triple_blowup(const Hypergraph& g3);

struct Certificate {
    std::string claimed_property;
    std::string check_performed;
    bool passed = false;
};

struct CertifyOptions {
    /// Hosts with more vertices get structural checks only.
    int host_limit = 256;
    int pattern_guard = 8;
    int workers = 1;
};

Certificate certify_berge_free(const Hypergraph& h, const Pattern& p, const CertifyOptions& options = {});

/// Every hyperedge is one full A-block plus one B vertex, matching the cross edges.
Certificate certify_blowup_structure(const Hypergraph& h, const BlowupSpec& spec);

Certificate certify_berge_girth(const Hypergraph& h, int g, const CertifyOptions& options = {});

Certificate certify_subgraph_free(const Graph& g, const Pattern& p);

}  // namespace berge
