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

#include "gql/quantum_sim.h"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace gql {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

Statevector::Statevector(uint32_t num_qubits) : n_(num_qubits) {
    if (num_qubits > kMaxStatevectorQubits) {
        throw std::invalid_argument("Statevector: too many qubits");
    }
    amps_.assign(size_t{1} << num_qubits, 0.0);
    amps_[0] = 1.0;
}

Statevector Statevector::from_amplitudes(std::vector<double> amplitudes) {
    size_t size = amplitudes.size();
    if (size == 0 || (size & (size - 1)) != 0) {
        throw std::invalid_argument("Statevector::from_amplitudes: size must be a power of two");
    }
    Statevector out;
    out.n_ = static_cast<uint32_t>(std::countr_zero(size));
    if (out.n_ > kMaxStatevectorQubits) {
        throw std::invalid_argument("Statevector: too many qubits");
    }
    double norm = 0;
    for (double a : amplitudes) {
        norm += a * a;
    }
    if (norm <= 0) {
        throw std::invalid_argument("Statevector::from_amplitudes: zero vector");
    }
    double scale = 1.0 / std::sqrt(norm);
    for (double &a : amplitudes) {
        a *= scale;
    }
    out.amps_ = std::move(amplitudes);
    return out;
}

void Statevector::check_qubit(uint32_t q) const {
    if (q >= n_) {
        throw std::out_of_range("Statevector: qubit index out of range");
    }
}

void Statevector::apply_h(uint32_t q) {
    check_qubit(q);
    size_t bit = size_t{1} << q;
    for (size_t i = 0; i < amps_.size(); i++) {
        if (!(i & bit)) {
            double a = amps_[i];
            double b = amps_[i | bit];
            amps_[i] = (a + b) * kInvSqrt2;
            amps_[i | bit] = (a - b) * kInvSqrt2;
        }
    }
}

void Statevector::apply_x(uint32_t q) {
    check_qubit(q);
    size_t bit = size_t{1} << q;
    for (size_t i = 0; i < amps_.size(); i++) {
        if (!(i & bit)) {
            std::swap(amps_[i], amps_[i | bit]);
        }
    }
}

void Statevector::apply_z(uint32_t q) {
    check_qubit(q);
    size_t bit = size_t{1} << q;
    for (size_t i = 0; i < amps_.size(); i++) {
        if (i & bit) {
            amps_[i] = -amps_[i];
        }
    }
}

void Statevector::apply_cz(uint32_t a, uint32_t b) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) {
        throw std::invalid_argument("Statevector::apply_cz: control equals target");
    }
    size_t mask = (size_t{1} << a) | (size_t{1} << b);
    for (size_t i = 0; i < amps_.size(); i++) {
        if ((i & mask) == mask) {
            amps_[i] = -amps_[i];
        }
    }
}

void Statevector::apply_h_all() {
    for (uint32_t q = 0; q < n_; q++) {
        apply_h(q);
    }
}

double Statevector::norm_squared() const {
    double total = 0;
    for (double a : amps_) {
        total += a * a;
    }
    return total;
}

std::vector<double> Statevector::probabilities() const {
    std::vector<double> p(amps_.size());
    for (size_t i = 0; i < amps_.size(); i++) {
        p[i] = amps_[i] * amps_[i];
    }
    return p;
}

uint64_t Statevector::measure(Rng &rng) const {
    std::vector<double> cumulative(amps_.size());
    double total = 0;
    for (size_t i = 0; i < amps_.size(); i++) {
        total += amps_[i] * amps_[i];
        cumulative[i] = total;
    }
    return sample_cumulative(cumulative, rng);
}

Statevector build_graph_state(const Graph &g) {
    if (g.n() > kMaxStatevectorQubits) {
        throw std::invalid_argument("build_graph_state: too many vertices");
    }
    Statevector psi(g.n());
    psi.apply_h_all();
    for (const auto &[u, v] : g.edges()) {
        psi.apply_cz(u, v);
    }
    return psi;
}

std::vector<PauliOutcome> bell_distribution(const Statevector &psi) {
    uint32_t n = psi.num_qubits();
    if (n > kMaxBellQubits) {
        throw std::invalid_argument("bell_distribution: too many qubits");
    }
    // For real psi, <psi| X^x Z^z |psi> = sum_v psi(v + x) psi(v) (-1)^(z.v) up
    // to a phase, so each fixed x is one Walsh-Hadamard transform over z.
    size_t dim = size_t{1} << n;
    const auto &a = psi.amplitudes();
    std::vector<PauliOutcome> out;
    out.reserve(dim * dim);
    std::vector<double> row(dim);
    for (size_t x = 0; x < dim; x++) {
        for (size_t v = 0; v < dim; v++) {
            row[v] = a[v ^ x] * a[v];
        }
        walsh_hadamard(row);
        BitVector xb(n);
        for (uint32_t q = 0; q < n; q++) {
            xb.set(q, (x >> q) & 1);
        }
        for (size_t z = 0; z < dim; z++) {
            BitVector zb(n);
            for (uint32_t q = 0; q < n; q++) {
                zb.set(q, (z >> q) & 1);
            }
            out.push_back({pauli_from_bits(xb, zb), row[z] * row[z] / static_cast<double>(dim)});
        }
    }
    return out;
}

std::string pauli_from_bits(const BitVector &x, const BitVector &z) {
    if (x.size() != z.size()) {
        throw std::invalid_argument("pauli_from_bits: length mismatch");
    }
    static constexpr char kLetters[] = {'I', 'X', 'Z', 'Y'};
    std::string out(x.size(), 'I');
    for (size_t q = 0; q < x.size(); q++) {
        out[q] = kLetters[(x.get(q) ? 1 : 0) | (z.get(q) ? 2 : 0)];
    }
    return out;
}

std::pair<BitVector, BitVector> bits_from_pauli(const std::string &pauli) {
    BitVector x(pauli.size()), z(pauli.size());
    for (size_t q = 0; q < pauli.size(); q++) {
        switch (pauli[q]) {
            case 'I':
                break;
            case 'X':
                x.set(q);
                break;
            case 'Z':
                z.set(q);
                break;
            case 'Y':
                x.set(q);
                z.set(q);
                break;
            default:
                throw std::invalid_argument("bits_from_pauli: expected I, X, Y or Z");
        }
    }
    return {x, z};
}

std::vector<double> fourier_sampling_distribution(const TruthTable &f) {
    if (f.arity() > kMaxStatevectorQubits) {
        throw std::invalid_argument("fourier_sampling_distribution: too many inputs");
    }
    std::vector<double> amps(f.size());
    for (uint64_t x = 0; x < f.size(); x++) {
        amps[x] = f(x) ? -1.0 : 1.0;
    }
    auto psi = Statevector::from_amplitudes(std::move(amps));
    psi.apply_h_all();
    return psi.probabilities();
}

std::optional<BitVector> bv_with_size_oracle(const TruthTable &f, Rng &rng,
                                             const std::function<double(uint64_t)> &delta) {
    uint32_t n = f.arity();
    if (n > kMaxStatevectorQubits) {
        throw std::invalid_argument("bv_with_size_oracle: too many inputs");
    }
    if (!is_monotone(f)) {
        throw std::invalid_argument("bv_with_size_oracle: f is not monotone");
    }
    uint64_t s = 0;
    for (uint32_t v : relevant_variables(f)) {
        s |= uint64_t{1} << v;
    }
    std::vector<double> amps(f.size());
    double kept = 0;
    for (uint64_t t = 0; t < f.size(); t++) {
        double keep = delta ? 1.0 - delta(t) : 1.0;
        amps[t] = (std::popcount(s & t) & 1) ? -keep : keep;
        kept += keep * keep;
    }
    if (delta) {
        // Flag register reads nonzero with probability 1 - 2^-n sum (1-delta_T)^2.
        if (!bernoulli(rng, kept / static_cast<double>(f.size()))) {
            return std::nullopt;
        }
        if (kept <= 0) {
            return std::nullopt;
        }
    }
    auto psi = Statevector::from_amplitudes(std::move(amps));
    psi.apply_h_all();
    uint64_t outcome = psi.measure(rng);
    BitVector out(n);
    for (uint32_t q = 0; q < n; q++) {
        out.set(q, (outcome >> q) & 1);
    }
    return out;
}

double bv_failure_bound(uint32_t n, const std::function<double(uint64_t)> &delta) {
    uint64_t size = uint64_t{1} << n;
    double sum_sq = 0, sum = 0;
    for (uint64_t t = 0; t < size; t++) {
        double keep = 1.0 - delta(t);
        sum_sq += keep * keep;
        sum += keep;
    }
    double flag = 1.0 - sum_sq / static_cast<double>(size);
    double mean = sum / static_cast<double>(size);
    return flag + (1.0 - mean * mean);
}

}  // namespace gql
