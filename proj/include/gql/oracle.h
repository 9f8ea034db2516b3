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

#ifndef GQL_ORACLE_H
#define GQL_ORACLE_H

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gql/boolean_function.h"
#include "gql/f2.h"
#include "gql/graph.h"
#include "gql/rng.h"

namespace gql {

/// Per-kind query counters. Counters only ever increase.
struct QueryLedger {
    uint64_t or_query = 0;
    uint64_t parity_query = 0;
    uint64_t graph_state_copy = 0;
    uint64_t charged_quantum = 0;
    uint64_t junta_query = 0;
    uint64_t classical_bit_ops = 0;
    uint64_t reveal_used = 0;

    QueryLedger &operator+=(const QueryLedger &other);
    bool operator==(const QueryLedger &other) const = default;
};

std::string ledger_to_json(const QueryLedger &ledger);
QueryLedger ledger_from_json(std::string_view text);

/// f(x) = g(x[vars[0]], ..., x[vars[k-1]]) on n input bits.
struct Junta {
    uint32_t n = 0;
    TruthTable g;
    std::vector<uint32_t> vars;

    void validate() const;
    bool evaluate(const BitVector &x) const;
    VertexSet support() const;
};

struct BellSample {
    BitVector s;
    BitVector y;
};

/// Which counter a Bell sample is billed to. Each sample costs two units.
enum class BellCharge {
    graph_state_copies,
    parity_queries,
};

/// Raised when an operation is asked of an oracle that does not support it.
class UnsupportedOracleError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Sealed access to a hidden graph or junta. Every query operation bills the
/// ledger; the reveal accessors are audited through `reveal_used`.
class OracleHandle {
   public:
    OracleHandle(Graph hidden, uint64_t seed);
    OracleHandle(Junta hidden, uint64_t seed);

    uint32_t n() const {
        return n_;
    }
    bool holds_graph() const {
        return std::holds_alternative<Graph>(hidden_);
    }
    bool holds_junta() const {
        return std::holds_alternative<Junta>(hidden_);
    }
    const QueryLedger &ledger() const {
        return ledger_;
    }

    // Graph oracle.
    bool or_query(const BitVector &subset);
    bool or_query(const VertexSet &subset);
    bool parity_query(const BitVector &subset);
    BellSample bell_sample(BellCharge charge = BellCharge::graph_state_copies);
    /// A v; two parity queries.
    BitVector parity_vector_query(const BitVector &v);
    /// Computational-basis measurement of H^n |G>. Closed form for stars,
    /// exact enumeration when at most 16 vertices are non-isolated.
    BitVector graphstate_hadamard_sample();
    /// Fourier sample of x -> OR-query(x) for x ranging over subsets of
    /// `domain`. Exact when the edges inside `domain` touch at most 16
    /// vertices; for larger stars returns the centre indicator with its exact
    /// probability and otherwise nullopt. One OR query.
    std::optional<BitVector> fourier_sample_or(const BitVector &domain);

    // Junta oracle.
    bool junta_query(const BitVector &x);
    /// T with probability ghat(T)^2 in the +-1 convention, as a subset of the
    /// n inputs. One junta query.
    BitVector junta_fourier_sample();
    /// One amplitude-amplified round of Fourier sampling conditioned on
    /// |T| >= level. Charges ceil(1 / sqrt(W_{>=level})) junta queries and
    /// succeeds with probability max(W, 1 - W), W = W_{>=level}.
    std::optional<BitVector> junta_amplified_sample(uint32_t level);

    // Cost-model charges.
    void charge_quantum(uint64_t units) {
        ledger_.charged_quantum += units;
    }
    void charge_bit_ops(uint64_t units) {
        ledger_.classical_bit_ops += units;
    }

    // Audited privileged access.
    const Graph &reveal_graph();
    const Junta &reveal_junta();

   private:
    const Graph &graph() const;
    const Junta &junta() const;
    BitVector sample_dense(const std::vector<double> &cumulative, const VertexSet &vars);
    const std::vector<double> &junta_cumulative(uint32_t level);

    std::variant<Graph, Junta> hidden_;
    uint32_t n_ = 0;
    QueryLedger ledger_;
    Rng rng_;
    std::optional<std::vector<double>> hadamard_cumulative_;
    VertexSet hadamard_vars_;
    std::map<uint32_t, std::vector<double>> junta_cumulative_;
};

/// Weight W_{>=level} of the +-1 Fourier spectrum of g.
double upper_fourier_weight(const TruthTable &g, uint32_t level);

}  // namespace gql

#endif
