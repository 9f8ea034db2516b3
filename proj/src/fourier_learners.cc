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

#include "gql/fourier_learners.h"

#include <algorithm>
#include <bit>
#include <cmath>

namespace gql {

namespace {

double binomial(uint32_t n, uint32_t r) {
    if (r > n) {
        return 0;
    }
    r = std::min(r, n - r);
    double out = 1;
    for (uint32_t i = 1; i <= r; i++) {
        out = out * static_cast<double>(n - r + i) / static_cast<double>(i);
    }
    return std::round(out);
}

void require_arity(uint32_t k) {
    if (k > kMaxFourierArity) {
        throw std::invalid_argument("fourier: arity above 20");
    }
}

}  // namespace

FourierTable fourier_table(const TruthTable &g) {
    require_arity(g.arity());
    FourierTable t;
    t.k = g.arity();
    auto spectrum = signed_spectrum(g);
    double scale = static_cast<double>(g.size());
    t.coefficients.resize(spectrum.size());
    t.level_weights.assign(t.k + 1, 0.0);
    for (uint64_t s = 0; s < spectrum.size(); s++) {
        t.coefficients[s] = static_cast<double>(spectrum[s]) / scale;
        t.level_weights[std::popcount(s)] += t.coefficients[s] * t.coefficients[s];
    }
    t.upper_weights.assign(t.k + 2, 0.0);
    for (uint32_t l = t.k + 1; l-- > 0;) {
        t.upper_weights[l] = t.upper_weights[l + 1] + t.level_weights[l];
    }
    return t;
}

double InfluenceProfile::min() const {
    return influence.empty() ? 0.0 : *std::min_element(influence.begin(), influence.end());
}

InfluenceProfile influence_profile(const FourierTable &table) {
    InfluenceProfile p;
    p.influence.assign(table.k, 0.0);
    for (uint64_t s = 0; s < table.coefficients.size(); s++) {
        double w = table.coefficients[s] * table.coefficients[s];
        for (uint64_t rest = s; rest; rest &= rest - 1) {
            p.influence[std::countr_zero(rest)] += w;
        }
    }
    return p;
}

InfluenceProfile influence_profile(const TruthTable &g) {
    return influence_profile(fourier_table(g));
}

double maj_coefficient(uint32_t k, uint32_t set_size) {
    if (k % 2 == 0) {
        throw std::invalid_argument("maj_coefficient: k must be odd");
    }
    if (set_size > k) {
        throw std::invalid_argument("maj_coefficient: set larger than k");
    }
    if (set_size % 2 == 0) {
        return 0.0;
    }
    uint32_t h = (k - 1) / 2;
    uint32_t j = (set_size - 1) / 2;
    double sign = j % 2 == 0 ? 1.0 : -1.0;
    // Ratio and central binomial combined in log space to stay finite for large k.
    double log_mag = std::log(binomial(h, j)) - std::log(binomial(k - 1, set_size - 1)) +
                     std::log(2.0) - k * std::log(2.0) + std::lgamma(k) - 2 * std::lgamma(h + 1);
    return sign * std::exp(log_mag);
}

std::vector<double> maj_level_weights(uint32_t k) {
    std::vector<double> w(k + 1, 0.0);
    for (uint32_t l = 0; l <= k; l++) {
        double c = maj_coefficient(k, l);
        w[l] = binomial(k, l) * c * c;
    }
    return w;
}

std::vector<double> exact_half_coefficients01(uint32_t k) {
    if (k % 2 != 0) {
        throw std::invalid_argument("exact_half_coefficients01: k must be even");
    }
    std::vector<double> out(k + 1, 0.0);
    double scale = std::ldexp(1.0, -static_cast<int>(k));
    for (uint32_t w = 0; w <= k; w++) {
        double sum = 0;
        for (uint32_t i = 0; i <= std::min(w, k / 2); i++) {
            double term = binomial(w, i) * binomial(k - w, k / 2 - i);
            sum += i % 2 == 0 ? term : -term;
        }
        out[w] = sum * scale;
    }
    return out;
}

std::vector<double> exact_half_level_weights(uint32_t k) {
    auto g01 = exact_half_coefficients01(k);
    std::vector<double> w(k + 1, 0.0);
    // (-1)^g = 1 - 2g, so the constant term shifts and the rest scale by -2.
    double c0 = 1.0 - 2.0 * g01[0];
    w[0] = c0 * c0;
    for (uint32_t l = 1; l <= k; l++) {
        w[l] = binomial(k, l) * 4.0 * g01[l] * g01[l];
    }
    return w;
}

double tail_weight(const std::vector<double> &level_weights, uint32_t level) {
    double total = 0;
    for (size_t l = level; l < level_weights.size(); l++) {
        total += level_weights[l];
    }
    return total;
}

uint64_t symmetric_junta_rounds(uint32_t k, uint32_t level, double delta) {
    if (level == 0 || level > k) {
        throw PreconditionError("symmetric_junta_rounds: level outside 1..k");
    }
    double ratio = static_cast<double>(k) / level;
    return static_cast<uint64_t>(std::ceil(ratio * std::log(k / delta) - 1e-9)) +
           static_cast<uint64_t>(std::ceil(ratio - 1e-9));
}

VertexSet learn_symmetric_junta(OracleHandle &h, const TruthTable &g, uint32_t level,
                                double delta) {
    const uint32_t k = g.arity();
    if (!is_symmetric(g)) {
        throw PreconditionError("learn_symmetric_junta: g is not symmetric");
    }
    if (level == 0 || level > k) {
        throw PreconditionError("learn_symmetric_junta: level outside 1..k");
    }
    if (upper_fourier_weight(g, level) <= 0) {
        throw PreconditionError("learn_symmetric_junta: no Fourier weight at or above level");
    }
    BitVector found(h.n());
    if (level == k) {
        constexpr int kRepetitions = 8;
        for (int i = 0; i < kRepetitions; i++) {
            if (auto sample = h.junta_amplified_sample(level)) {
                return sample->indices();
            }
        }
        throw LearningFailure("learn_symmetric_junta: no success within the repetition cap");
    }
    uint64_t r = symmetric_junta_rounds(k, level, delta);
    uint64_t successes = 0;
    for (uint64_t attempt = 0; attempt < 4 * r && successes < r; attempt++) {
        if (auto sample = h.junta_amplified_sample(level)) {
            found |= *sample;
            successes++;
        }
    }
    if (successes < r) {
        throw LearningFailure("learn_symmetric_junta: too few successful rounds");
    }
    return found.indices();
}

uint64_t high_influence_samples(uint32_t k, double epsilon, double delta) {
    if (epsilon <= 0 || epsilon > 1) {
        throw PreconditionError("high_influence_samples: epsilon outside (0, 1]");
    }
    return static_cast<uint64_t>(std::ceil(std::log(k / delta) / epsilon - 1e-9)) +
           static_cast<uint64_t>(std::ceil(1.0 / epsilon - 1e-9));
}

VertexSet learn_high_influence_junta(OracleHandle &h, const TruthTable &g, double epsilon,
                                     double delta) {
    if (g.arity() == 0) {
        return {};
    }
    double weakest = influence_profile(g).min();
    if (weakest < epsilon - 1e-12) {
        throw PreconditionError("learn_high_influence_junta: a variable has influence below epsilon");
    }
    uint64_t q = high_influence_samples(g.arity(), epsilon, delta);
    BitVector found(h.n());
    for (uint64_t i = 0; i < q; i++) {
        found |= h.junta_fourier_sample();
    }
    return found.indices();
}

}  // namespace gql
