// Copyright 2026 The gql Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GQL_GRAPH_H
#define GQL_GRAPH_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gql/f2.h"
#include "gql/rng.h"

namespace gql {

using VertexSet = std::vector<uint32_t>;
/// Unordered pair stored with first < second.
using Edge = std::pair<uint32_t, uint32_t>;

/// Simple undirected graph on vertices 0..n-1. Immutable once built; edges are
/// kept in lexicographic order and mirrored in a symmetric adjacency matrix.
class Graph {
   public:
    Graph() = default;
    explicit Graph(uint32_t n);
    /// Throws on self-loops, out-of-range endpoints, or repeated edges.
    Graph(uint32_t n, std::vector<Edge> edges);

    static Graph from_adjacency(const BitMatrix &adjacency);
    static Graph complete(uint32_t n);

    uint32_t n() const {
        return n_;
    }
    size_t m() const {
        return edges_.size();
    }
    const std::vector<Edge> &edges() const {
        return edges_;
    }
    const BitMatrix &adjacency() const {
        return adjacency_;
    }
    const BitVector &neighbors(uint32_t v) const {
        return adjacency_.row(v);
    }
    bool has_edge(uint32_t u, uint32_t v) const {
        return adjacency_.get(u, v);
    }
    size_t degree(uint32_t v) const {
        return adjacency_.row(v).popcount();
    }
    size_t max_degree() const;
    VertexSet non_isolated() const;

    /// True iff some edge has both endpoints in `subset`.
    bool induces_edge(const BitVector &subset) const;
    /// Number of edges inside `subset`, mod 2.
    bool induced_parity(const BitVector &subset) const;

    bool operator==(const Graph &other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

   private:
    uint32_t n_ = 0;
    std::vector<Edge> edges_;
    BitMatrix adjacency_;
};

inline const BitMatrix &adjacency(const Graph &g) {
    return g.adjacency();
}

Edge make_edge(uint32_t u, uint32_t v);
BitVector vertex_mask(uint32_t n, const VertexSet &vertices);

/// Text edge-list: "n m" then one "i j" line per edge, 0-indexed, i < j.
std::string to_edge_list(const Graph &g);
Graph parse_edge_list(std::string_view text);

enum class FamilyKind {
    matching,
    hamiltonian_cycle,
    star,
    clique,
    bounded_degree,
    fixed_edge_count,
    subgraph_of,
    two_clique_adversary,
};

std::string_view family_kind_name(FamilyKind kind);
FamilyKind parse_family_kind(std::string_view name);

/// A structured graph family. Which fields matter depends on `kind`:
///   matching            support = number of matched vertices (even)
///   hamiltonian_cycle   support = cycle length (>= 3)
///   star                m = number of leaves
///   clique              support = clique size
///   bounded_degree      d = degree cap, m = edge target (0 = greedy maximal)
///   fixed_edge_count    m = edge count
///   subgraph_of         base = host graph, each edge kept with probability 1/2
///   two_clique_adversary n = 2 * clique size; cross = optional fixed block
struct FamilySpec {
    FamilyKind kind = FamilyKind::fixed_edge_count;
    uint32_t n = 0;
    uint32_t support = 0;
    uint32_t d = 0;
    size_t m = 0;
    std::optional<Graph> base;
    std::optional<BitMatrix> cross;

    /// Throws std::invalid_argument describing the first inconsistency.
    void validate() const;
};

/// A random member of the family, placed on a uniformly random vertex subset.
Graph generate(const FamilySpec &spec, Rng &rng);

/// Two n-cliques on {0..n-1} and {n..2n-1}; (i, n+j) is an edge iff cross[i][j].
Graph adversary_instance(uint32_t n, const BitMatrix &cross);

/// Every subgraph (same vertex set) of `g`; g.m() must be at most 20.
std::vector<Graph> all_subgraphs(const Graph &g);
/// Every graph on n labelled vertices; n must be at most 6.
std::vector<Graph> all_graphs(uint32_t n);

}  // namespace gql

#endif
