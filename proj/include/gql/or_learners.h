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

#ifndef GQL_OR_LEARNERS_H
#define GQL_OR_LEARNERS_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gql/cgt.h"
#include "gql/graph.h"
#include "gql/oracle.h"
#include "gql/rng.h"

namespace gql {

/// A learner could not finish: a promise about the hidden graph does not
/// hold, or a randomized step ran out of attempts.
class LearningFailure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Disjoint vertex parts with the edges already known inside each part.
struct Decomposition {
    std::vector<VertexSet> parts;
    std::vector<std::vector<Edge>> part_edges;

    size_t size() const {
        return parts.size();
    }
    /// Throws if parts overlap or a recorded edge leaves its part.
    void validate(uint32_t n) const;
};

/// Colour classes over a vertex list.
struct Coloring {
    std::vector<VertexSet> classes;

    size_t count() const {
        return classes.size();
    }
};

/// Greedy colouring in smallest-last order. Uses at most
/// floor(sqrt(2t) + 1) colours for t edges.
Coloring greedy_coloring(const VertexSet &vertices, const std::vector<Edge> &edges);

/// Vertices of A, and of B, that have a neighbour across the cut.
std::pair<VertexSet, VertexSet> find_nonisolated(OracleHandle &h, const VertexSet &a,
                                                 const VertexSet &b, const CgtBackend &backend);

/// All A-B edges for independent, disjoint A and B.
std::vector<Edge> learn_bipartite_edges(OracleHandle &h, const VertexSet &a, const VertexSet &b,
                                        const CgtBackend &backend);

/// All A-B edges when every vertex has at most d neighbours across the cut,
/// via a nonadaptive design over B's non-isolated vertices.
std::vector<Edge> learn_bipartite_bounded_degree(OracleHandle &h, const VertexSet &a,
                                                 const VertexSet &b, uint32_t d,
                                                 const CgtBackend &backend, Rng &rng,
                                                 double design_c = 8.0);

/// Optional bounded-degree mode for the cross-edge learners.
struct DegreeBound {
    uint32_t d = 1;
    double design_c = 8.0;
};

/// All A-B edges given the edges inside A and inside B. Each side is split
/// into colour classes and every class pair is learned as a bipartite
/// instance.
std::vector<Edge> learn_cross_edges_colored(OracleHandle &h, const VertexSet &a,
                                            const VertexSet &b, const std::vector<Edge> &known_a,
                                            const std::vector<Edge> &known_b,
                                            const CgtBackend &backend,
                                            const std::optional<DegreeBound> &bound = std::nullopt,
                                            Rng *rng = nullptr);

/// Pads to a power of two with empty parts, then merges neighbouring parts
/// level by level. Returns every edge of the graph induced on the parts.
std::vector<Edge> learn_merge_tree(OracleHandle &h, const Decomposition &decomposition,
                                   const CgtBackend &backend,
                                   const std::optional<DegreeBound> &bound = std::nullopt,
                                   Rng *rng = nullptr);

/// Failed independence tests allowed before peeling gives up:
/// ceil(100 ln n), at least 100.
uint64_t peel_failure_budget(uint32_t n);

/// Split V into independent parts by drawing p-random subsets of the
/// remaining vertices. Throws LearningFailure when the failure budget runs out.
Decomposition peel_independent_sets(OracleHandle &h, double p, Rng &rng);

struct GraphOrOptions {
    /// Known edge count; p = 1 / (p_scale sqrt(m)).
    std::optional<uint64_t> m_hint;
    double p_scale = 10.0;
    /// Use the bounded-degree bipartite learner inside the merge tree.
    std::optional<DegreeBound> degree_bound;
};

/// Peeling followed by the merge tree. With unknown m the edge estimate
/// starts at 0 (p = 1) and doubles whenever too many draws fail.
Graph learn_graph_or(OracleHandle &h, const CgtBackend &backend, Rng &rng,
                     const GraphOrOptions &options = {});

/// Vertex set of a hidden k-clique.
VertexSet learn_clique_or(OracleHandle &h, uint32_t k, const CgtBackend &backend, Rng &rng);

struct StarResult {
    /// Absent for the empty graph and when m = 1 (either endpoint fits).
    std::optional<uint32_t> center;
    VertexSet leaves;

    Graph graph(uint32_t n) const;
};

/// Centre by Fourier sampling, then leaves by group testing from the centre.
StarResult learn_star_or(OracleHandle &h, const CgtBackend &backend);

}  // namespace gql

#endif
