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

#ifndef GQL_FOURIER_LEARNERS_H
#define GQL_FOURIER_LEARNERS_H

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gql/boolean_function.h"
#include "gql/graph.h"
#include "gql/oracle.h"
#include "gql/or_learners.h"

namespace gql {

class PreconditionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

// Fourier data of g in the (-1)^g convention.
struct FourierTable {
    uint32_t k = 0;
    std::vector<double> coefficients;  // indexed by subset mask
    std::vector<double> level_weights;  // W_l, l = 0..k
    std::vector<double> upper_weights;  // W_{>=l}, l = 0..k+1

    double coefficient(uint64_t subset) const {
        return coefficients.at(subset);
    }
    double weight_at_least(uint32_t level) const {
        return level > k ? 0.0 : upper_weights[level];
    }
};

static constexpr uint32_t kMaxFourierArity = 20;

FourierTable fourier_table(const TruthTable &g);

struct InfluenceProfile {
    std::vector<double> influence;

    double min() const;
};

InfluenceProfile influence_profile(const TruthTable &g);
InfluenceProfile influence_profile(const FourierTable &table);

/// Coefficient of MAJ_k on any set of the given size.
double maj_coefficient(uint32_t k, uint32_t set_size);
/// W_l(MAJ_k) for l = 0..k.
std::vector<double> maj_level_weights(uint32_t k);

/// EXACT-HALF_k coefficients in the 0/1 convention, 2^-k * sum_x g(x) (-1)^{s.x},
/// indexed by |s|. For s != 0 the (-1)^g coefficient is -2 times this value.
std::vector<double> exact_half_coefficients01(uint32_t k);
/// W_l(EXACT-HALF_k) in the (-1)^g convention for l = 0..k.
std::vector<double> exact_half_level_weights(uint32_t k);

/// Tail sum W_{>=level} of a per-level weight vector.
double tail_weight(const std::vector<double> &level_weights, uint32_t level);

uint64_t symmetric_junta_rounds(uint32_t k, uint32_t level, double delta);

/// Identifies the hidden variable set of f = g(x_S) for symmetric g by
/// amplified Fourier sampling above `level`.
VertexSet learn_symmetric_junta(OracleHandle &h, const TruthTable &g, uint32_t level,
                                double delta = 0.01);

uint64_t high_influence_samples(uint32_t k, double epsilon, double delta);

/// Identifies S from plain Fourier samples when every variable has influence >= epsilon.
VertexSet learn_high_influence_junta(OracleHandle &h, const TruthTable &g, double epsilon,
                                     double delta = 0.01);

}  // namespace gql

#endif  // GQL_FOURIER_LEARNERS_H
