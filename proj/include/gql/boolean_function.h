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

#ifndef GQL_BOOLEAN_FUNCTION_H
#define GQL_BOOLEAN_FUNCTION_H

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gql/f2.h"
#include "gql/rng.h"

namespace gql {

/// Truth table of g: {0,1}^k -> {0,1}. Input x is read as an integer whose
/// bit i is the i-th argument.
class TruthTable {
   public:
    static constexpr uint32_t kMaxArity = 24;

    TruthTable() = default;
    explicit TruthTable(uint32_t arity);

    static TruthTable from_function(uint32_t arity, const std::function<bool(uint64_t)> &g);
    static TruthTable random(uint32_t arity, Rng &rng);
    /// Hex digit j packs entries 4j..4j+3, entry 4j in the most significant bit.
    static TruthTable from_hex(uint32_t arity, std::string_view hex);
    std::string to_hex() const;

    uint32_t arity() const {
        return arity_;
    }
    uint64_t size() const {
        return uint64_t{1} << arity_;
    }
    bool operator()(uint64_t x) const {
        return bits_.get(x);
    }
    void set(uint64_t x, bool value) {
        bits_.set(x, value);
    }
    const BitVector &bits() const {
        return bits_;
    }
    bool operator==(const TruthTable &other) const = default;

   private:
    uint32_t arity_ = 0;
    BitVector bits_{1};
};

TruthTable or_function(uint32_t k);
TruthTable and_function(uint32_t k);
TruthTable parity_function(uint32_t k);
/// 1 iff more than half of the k (odd) inputs are 1.
TruthTable majority_function(uint32_t k);
/// 1 iff exactly k/2 of the k (even) inputs are 1.
TruthTable exact_half_function(uint32_t k);
/// Symmetric function from its value at each Hamming weight 0..k.
TruthTable symmetric_function(uint32_t k, const std::vector<bool> &by_weight);

bool is_symmetric(const TruthTable &g);
bool is_monotone(const TruthTable &g);
/// Variables g actually depends on.
std::vector<uint32_t> relevant_variables(const TruthTable &g);

/// In-place unnormalized Walsh-Hadamard transform; size must be a power of two.
void walsh_hadamard(std::vector<int64_t> &values);
void walsh_hadamard(std::vector<double> &values);

/// Sum_x (-1)^(g(x) + s.x) for every s. Dividing by 2^k gives the Fourier
/// coefficients of the +-1 valued function (-1)^g.
std::vector<int64_t> signed_spectrum(const TruthTable &g);

/// The same mask with bits rearranged: bit i of `local` goes to bit vars[i].
uint64_t scatter_bits(uint64_t local, const std::vector<uint32_t> &vars);

}  // namespace gql

#endif
