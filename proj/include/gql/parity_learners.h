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

#ifndef GQL_PARITY_LEARNERS_H
#define GQL_PARITY_LEARNERS_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gql/f2.h"
#include "gql/graph.h"
#include "gql/or_learners.h"
#include "gql/oracle.h"

namespace gql {

/// The requested search is too large to run.
class ScaleError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// k Bell samples. Column i of `b` is the i-th random vector s_i and column
/// i of `y` is A s_i; both matrices are n x k.
struct SampleBatch {
    BitMatrix b;
    BitMatrix y;

    size_t count() const {
        return b.cols();
    }
};

SampleBatch collect_samples(OracleHandle &h, size_t k,
                            BellCharge charge = BellCharge::graph_state_copies);

struct FamilyOptions {
    /// Added to ceil(2 log2 |family|).
    uint32_t slack = 7;
    /// Overrides the sample count when set.
    std::optional<size_t> samples;
    BellCharge charge = BellCharge::graph_state_copies;
};

/// Sample count used for a family of the given size.
size_t family_sample_count(size_t family_size, uint32_t slack);

/// The unique family member consistent with the Bell samples. Throws
/// LearningFailure when none or several members fit.
Graph learn_from_family(OracleHandle &h, const std::vector<Graph> &family,
                        const FamilyOptions &options = {});

enum class RowStatus {
    exact,
    over_degree,
    ambiguous,
};

struct RowResult {
    RowStatus status = RowStatus::exact;
    VertexSet neighbors;
};

struct BoundedDegreeOptions {
    /// Edge count estimate for phase 1; n(n-1)/2 when absent.
    std::optional<uint64_t> m_hint;
    uint32_t slack = 8;
    uint32_t phase2_slack = 8;
    BellCharge charge = BellCharge::graph_state_copies;
    /// Refuse when the half-weight subset table would exceed this size.
    uint64_t max_table = 4000000;
};

struct BoundedDegreeResult {
    std::vector<RowResult> rows;
    VertexSet non_isolated;
    size_t phase1_samples = 0;
    size_t phase2_samples = 0;

    bool ambiguous() const;
    VertexSet over_degree() const;
    /// Graph formed by the exact rows. Throws LearningFailure when they disagree.
    Graph graph() const;
};

/// Phase-2 sample count: ceil(log2(n' * sum_{l<=d} C(n', l))) + slack.
size_t bounded_degree_sample_count(size_t non_isolated, uint32_t d, uint32_t slack);

/// Every row of A with at most d ones, and "degree larger than d" for the rest.
BoundedDegreeResult learn_bounded_degree(OracleHandle &h, uint32_t d,
                                         const BoundedDegreeOptions &options = {});

/// Finds every subset of at most d columns whose XOR equals a target.
/// Meet-in-the-middle: syndromes of all subsets of at most ceil(d/2)
/// columns are tabulated once, then each query walks the subsets of at most
/// floor(d/2) columns and looks up the complement.
class LowWeightSolver {
   public:
    /// Throws ScaleError when the table would exceed `max_table` entries.
    LowWeightSolver(std::vector<BitVector> columns, uint32_t d, uint64_t max_table = 4000000);

    /// Distinct solutions as sorted column indices, at most `limit` of them.
    std::vector<VertexSet> solve(const BitVector &target, size_t limit) const;

    size_t table_size() const {
        return order_.size();
    }

   private:
    template <typename Visit>
    void for_each_subset(uint32_t max_size, Visit &&visit) const;

    std::vector<BitVector> columns_;
    uint32_t d_;
    uint32_t half_;
    size_t words_;
    // Table entries grouped by bucket of their mixed leading syndrome word.
    std::vector<uint32_t> order_;
    std::vector<uint64_t> syndromes_;
    std::vector<uint32_t> members_;
    std::vector<uint32_t> bucket_start_;
    uint32_t bucket_bits_ = 0;
};

struct SubgraphOptions {
    uint32_t slack = 7;
    BellCharge charge = BellCharge::graph_state_copies;
};

/// Hidden G inside a known G' of maximum degree d, one linear system per vertex.
Graph learn_subgraph_of(OracleHandle &h, const Graph &g_prime, uint32_t d,
                        const SubgraphOptions &options = {});

/// Every row read with two parity queries.
Graph learn_arbitrary_parity(OracleHandle &h);

struct BoundedEdgesOptions {
    uint32_t slack = 8;
    uint32_t phase2_slack = 8;
};

/// Degree threshold used for a given edge bound.
uint32_t bounded_edges_degree(uint64_t m);

/// Graphs with at most m edges from parity queries: low-degree rows from
/// Bell samples billed as parity queries, the rest read one by one.
Graph learn_bounded_edges_parity(OracleHandle &h, uint64_t m,
                                 const BoundedEdgesOptions &options = {});

/// Star from Hadamard-basis samples of |G>; needs m >= 2.
StarResult learn_star_graphstate(OracleHandle &h);

/// Clique vertex set from Bell samples.
VertexSet learn_clique_graphstate(OracleHandle &h);

}  // namespace gql

#endif
