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

#ifndef GQL_RNG_H
#define GQL_RNG_H

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace gql {

/// The one engine used everywhere. Every helper below consumes raw 64-bit
/// draws directly, so results do not depend on the standard library's
/// distribution implementations.
using Rng = std::mt19937_64;

/// Advances a splitmix64 state and returns the next output.
uint64_t splitmix64(uint64_t &state);

/// Seed of child stream `stream` under `master`. Distinct (stream, index)
/// pairs give statistically independent streams.
uint64_t derive_seed(uint64_t master, uint64_t stream, uint64_t index = 0);

inline Rng make_rng(uint64_t seed) {
    return Rng(seed);
}

/// Uniform integer in [0, bound). `bound` must be nonzero.
uint64_t uniform_below(Rng &rng, uint64_t bound);

/// Uniform double in [0, 1) with 53 bits of precision.
double uniform01(Rng &rng);

inline bool coin(Rng &rng) {
    return (rng() >> 63) != 0;
}

inline bool bernoulli(Rng &rng, double p) {
    return uniform01(rng) < p;
}

template <typename T>
void shuffle(std::span<T> items, Rng &rng) {
    for (size_t i = items.size(); i > 1; i--) {
        size_t j = uniform_below(rng, i);
        std::swap(items[i - 1], items[j]);
    }
}

template <typename T>
void shuffle(std::vector<T> &items, Rng &rng) {
    shuffle(std::span<T>(items), rng);
}

/// Uniformly random `count`-subset of {0, ..., n-1}, sorted ascending.
std::vector<uint32_t> random_subset(uint32_t n, uint32_t count, Rng &rng);

/// Draws an index from a discrete distribution given by its cumulative sums.
/// The last entry of `cumulative` is the total mass (need not be 1).
size_t sample_cumulative(std::span<const double> cumulative, Rng &rng);

}  // namespace gql

#endif
