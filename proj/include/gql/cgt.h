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

#ifndef GQL_CGT_H
#define GQL_CGT_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gql/f2.h"
#include "gql/graph.h"
#include "gql/oracle.h"
#include "gql/rng.h"

namespace gql {

/// Reported when the hidden positive set breaks a stated size bound, or an
/// OR oracle is not monotone over the item set.
class CgtViolation : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A set of items 0..size()-1 with a hidden positive subset P.
/// query(T) returns whether T intersects P.
class GroupTestOracle {
   public:
    virtual ~GroupTestOracle() = default;
    virtual size_t size() const = 0;
    /// Billed group test. `items` are local indices.
    virtual bool query(const std::vector<uint32_t> &items) = 0;
    /// P itself, unbilled; implementations route this through an audited path.
    virtual std::vector<uint32_t> peek_positives() = 0;
    virtual void charge_quantum(uint64_t units) = 0;
};

/// Items are `candidates`; a test of T asks the OR oracle about
/// `base` union T. Item c is positive iff c has a neighbour in `base`.
class GraphGroupTest final : public GroupTestOracle {
   public:
    GraphGroupTest(OracleHandle &oracle, VertexSet candidates, BitVector base);
    size_t size() const override {
        return candidates_.size();
    }
    bool query(const std::vector<uint32_t> &items) override;
    std::vector<uint32_t> peek_positives() override;
    void charge_quantum(uint64_t units) override {
        oracle_.charge_quantum(units);
    }
    const VertexSet &candidates() const {
        return candidates_;
    }

   private:
    OracleHandle &oracle_;
    VertexSet candidates_;
    BitVector base_;
};

/// Items are the n junta inputs; a test of T evaluates the junta on the
/// indicator of T. Exact for g = OR.
class JuntaGroupTest final : public GroupTestOracle {
   public:
    explicit JuntaGroupTest(OracleHandle &oracle) : oracle_(oracle) {
    }
    size_t size() const override {
        return oracle_.n();
    }
    bool query(const std::vector<uint32_t> &items) override;
    std::vector<uint32_t> peek_positives() override;
    void charge_quantum(uint64_t units) override {
        oracle_.charge_quantum(units);
    }

   private:
    OracleHandle &oracle_;
};

/// Plain hidden set with its own counters.
class SetGroupTest final : public GroupTestOracle {
   public:
    SetGroupTest(size_t size, std::vector<uint32_t> positives);
    size_t size() const override {
        return size_;
    }
    bool query(const std::vector<uint32_t> &items) override;
    std::vector<uint32_t> peek_positives() override;
    void charge_quantum(uint64_t units) override {
        charged_ += units;
    }
    uint64_t queries() const {
        return queries_;
    }
    uint64_t charged() const {
        return charged_;
    }
    uint64_t peeks() const {
        return peeks_;
    }

   private:
    size_t size_;
    std::vector<uint32_t> positives_;
    std::vector<bool> is_positive_;
    uint64_t queries_ = 0;
    uint64_t charged_ = 0;
    uint64_t peeks_ = 0;
};

enum class CgtKind {
    classical_adaptive,
    quantum_ideal,
    quantum_time_efficient,
};

std::string_view cgt_kind_name(CgtKind kind);
CgtKind parse_cgt_kind(std::string_view name);

struct CgtBackend {
    CgtKind kind = CgtKind::classical_adaptive;
    double c = 1.0;
};

/// Charge of one quantum call for a set of (bound) size k.
uint64_t quantum_cgt_charge(const CgtBackend &backend, uint64_t k);

struct CgtOptions {
    /// Upper bound on the number of positives, if known.
    std::optional<uint32_t> k;
    /// Spend one extra test on the unexplored items once k positives are found.
    bool verify = false;
    /// The caller already knows some item is positive.
    bool known_nonempty = false;
};

/// Exact positive set, sorted. With a bound k the classical backend uses
/// generalized binary splitting and the quantum charge is computed from k;
/// without one it uses recursive halving and the charge is computed from
/// the size of the answer. Throws CgtViolation when P exceeds k.
std::vector<uint32_t> cgt_solve(const CgtBackend &backend, GroupTestOracle &oracle,
                                const CgtOptions &options = {});

/// Fixed family of tests over n items.
struct NonadaptiveDesign {
    uint32_t n = 0;
    uint32_t d = 0;
    std::string kind;
    std::vector<std::vector<uint32_t>> tests;
    bool verified = false;

    /// Outcome vector for a positive set.
    BitVector outcomes(const std::vector<uint32_t> &positives) const;
};

/// Number of random tests, ceil(c d^2 ln(n+1)).
size_t random_design_test_count(uint32_t n, uint32_t d, double c);

/// d = 1 gives the binary-index family (item i is in test j iff bit j of
/// i+1 is set). Otherwise random tests with inclusion probability 1/(d+1),
/// redrawn until every support of size <= d decodes exactly (exhaustively for
/// n <= 20, on 10^4 random supports otherwise).
NonadaptiveDesign build_nonadaptive_design(uint32_t n, uint32_t d, Rng &rng, double c = 8.0);

/// Cover decoding: the items whose every test is positive, then the unique
/// subset of at most d of them that reproduces `outcomes`. nullopt when no
/// such subset exists or it is not unique.
std::optional<std::vector<uint32_t>> decode_nonadaptive(const NonadaptiveDesign &design,
                                                        const BitVector &outcomes);

std::string design_to_json(const NonadaptiveDesign &design);
NonadaptiveDesign design_from_json(std::string_view text);

}  // namespace gql

#endif
