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

#ifndef GQL_QUANTUM_SIM_H
#define GQL_QUANTUM_SIM_H

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gql/boolean_function.h"
#include "gql/f2.h"
#include "gql/graph.h"
#include "gql/rng.h"

namespace gql {

constexpr uint32_t kMaxStatevectorQubits = 16;
constexpr uint32_t kMaxBellQubits = 8;

/// Real-amplitude n-qubit state. Basis index bit q is the value of qubit q.
class Statevector {
   public:
    /// |0...0>.
    explicit Statevector(uint32_t num_qubits);
    /// Normalized copy of the given amplitudes; size must be a power of two.
    static Statevector from_amplitudes(std::vector<double> amplitudes);

    uint32_t num_qubits() const {
        return n_;
    }
    const std::vector<double> &amplitudes() const {
        return amps_;
    }
    double amplitude(uint64_t basis) const {
        return amps_[basis];
    }

    void apply_h(uint32_t q);
    void apply_x(uint32_t q);
    void apply_z(uint32_t q);
    void apply_cz(uint32_t a, uint32_t b);
    void apply_h_all();

    double norm_squared() const;
    /// Born-rule probabilities in the computational basis.
    std::vector<double> probabilities() const;
    uint64_t measure(Rng &rng) const;

   private:
    Statevector() = default;
    void check_qubit(uint32_t q) const;

    uint32_t n_ = 0;
    std::vector<double> amps_;
};

/// H on every qubit, then CZ on every edge.
Statevector build_graph_state(const Graph &g);

/// Pauli string over {I, X, Y, Z}; character q acts on qubit q.
struct PauliOutcome {
    std::string pauli;
    double probability = 0;
};

/// Every Pauli string with its Bell-sampling probability
/// |<psi| sigma |psi*>|^2 / 2^n, in lexicographic order of (x, z) bit masks.
std::vector<PauliOutcome> bell_distribution(const Statevector &psi);

/// Pauli string with X part `x` and Z part `z`: (1,0)=X, (0,1)=Z, (1,1)=Y.
std::string pauli_from_bits(const BitVector &x, const BitVector &z);
std::pair<BitVector, BitVector> bits_from_pauli(const std::string &pauli);

/// Distribution of measuring H^n sum_x (-1)^f(x) |x> / 2^(n/2), computed by
/// gate-level evolution. Entry s is fhat(s)^2.
std::vector<double> fourier_sampling_distribution(const TruthTable &f);

/// Bernstein-Vazirani over the size oracle T -> |S cap T| of a monotone
/// junta f. `delta(T)` is the error amplitude of the size subroutine at T;
/// with no `delta` the sub-oracle is exact. Returns nullopt when the flag
/// register reports failure.
std::optional<BitVector> bv_with_size_oracle(const TruthTable &f, Rng &rng,
                                             const std::function<double(uint64_t)> &delta = {});

/// Upper bound on the failure probability of bv_with_size_oracle: flag
/// failure 1 - 2^-n sum (1-delta_T)^2 plus 1 - (2^-n sum (1-delta_T))^2.
double bv_failure_bound(uint32_t n, const std::function<double(uint64_t)> &delta);

}  // namespace gql

#endif
