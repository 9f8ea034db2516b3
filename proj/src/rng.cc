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

#include "gql/rng.h"

#include <algorithm>
#include <stdexcept>

namespace gql {

uint64_t splitmix64(uint64_t &state) {
    state += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

uint64_t derive_seed(uint64_t master, uint64_t stream, uint64_t index) {
    uint64_t s = master;
    uint64_t a = splitmix64(s);
    s ^= stream * 0xD1B54A32D192ED03ULL;
    uint64_t b = splitmix64(s);
    s ^= index * 0x8CB92BA72F3D8DD7ULL;
    uint64_t c = splitmix64(s);
    return a ^ (b << 1) ^ (c << 2) ^ c;
}

uint64_t uniform_below(Rng &rng, uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("uniform_below: bound must be nonzero");
    }
    // Rejection sampling on the largest multiple of bound.
    uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
    while (true) {
        uint64_t r = rng();
        if (r <= limit) {
            return r % bound;
        }
    }
}

double uniform01(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<uint32_t> random_subset(uint32_t n, uint32_t count, Rng &rng) {
    if (count > n) {
        throw std::invalid_argument("random_subset: count exceeds n");
    }
    std::vector<uint32_t> all(n);
    for (uint32_t i = 0; i < n; i++) {
        all[i] = i;
    }
    // Partial Fisher-Yates: the first `count` slots end up uniform.
    for (uint32_t i = 0; i < count; i++) {
        uint32_t j = i + static_cast<uint32_t>(uniform_below(rng, n - i));
        std::swap(all[i], all[j]);
    }
    all.resize(count);
    std::sort(all.begin(), all.end());
    return all;
}

size_t sample_cumulative(std::span<const double> cumulative, Rng &rng) {
    if (cumulative.empty()) {
        throw std::invalid_argument("sample_cumulative: empty distribution");
    }
    double u = uniform01(rng) * cumulative.back();
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) {
        --it;
    }
    return static_cast<size_t>(it - cumulative.begin());
}

}  // namespace gql
