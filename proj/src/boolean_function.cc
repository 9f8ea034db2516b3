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

#include "gql/boolean_function.h"

#include <bit>
#include <stdexcept>

namespace gql {

TruthTable::TruthTable(uint32_t arity) : arity_(arity) {
    if (arity > kMaxArity) {
        throw std::invalid_argument("TruthTable: arity too large");
    }
    bits_ = BitVector(size_t{1} << arity);
}

TruthTable TruthTable::from_function(uint32_t arity, const std::function<bool(uint64_t)> &g) {
    TruthTable t(arity);
    for (uint64_t x = 0; x < t.size(); x++) {
        t.set(x, g(x));
    }
    return t;
}

TruthTable TruthTable::random(uint32_t arity, Rng &rng) {
    TruthTable t(arity);
    t.bits_ = BitVector::random(t.size(), rng);
    return t;
}

TruthTable TruthTable::from_hex(uint32_t arity, std::string_view hex) {
    TruthTable t(arity);
    size_t digits = (t.size() + 3) / 4;
    if (hex.size() != digits) {
        throw std::invalid_argument("TruthTable::from_hex: expected " + std::to_string(digits) +
                                    " hex digits");
    }
    for (size_t j = 0; j < digits; j++) {
        char c = hex[j];
        int v;
        if (c >= '0' && c <= '9') {
            v = c - '0';
        } else if (c >= 'a' && c <= 'f') {
            v = c - 'a' + 10;
        } else if (c >= 'A' && c <= 'F') {
            v = c - 'A' + 10;
        } else {
            throw std::invalid_argument("TruthTable::from_hex: bad hex digit");
        }
        for (int b = 0; b < 4; b++) {
            bool bit = (v >> (3 - b)) & 1;
            size_t index = 4 * j + b;
            if (index < t.size()) {
                t.set(index, bit);
            } else if (bit) {
                throw std::invalid_argument("TruthTable::from_hex: nonzero padding");
            }
        }
    }
    return t;
}

std::string TruthTable::to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    size_t digits = (size() + 3) / 4;
    std::string out(digits, '0');
    for (size_t j = 0; j < digits; j++) {
        int v = 0;
        for (int b = 0; b < 4; b++) {
            size_t index = 4 * j + b;
            if (index < size() && bits_.get(index)) {
                v |= 1 << (3 - b);
            }
        }
        out[j] = kDigits[v];
    }
    return out;
}

TruthTable or_function(uint32_t k) {
    return TruthTable::from_function(k, [](uint64_t x) { return x != 0; });
}

TruthTable and_function(uint32_t k) {
    uint64_t all = (uint64_t{1} << k) - 1;
    return TruthTable::from_function(k, [all](uint64_t x) { return x == all; });
}

TruthTable parity_function(uint32_t k) {
    return TruthTable::from_function(k, [](uint64_t x) { return (std::popcount(x) & 1) != 0; });
}

TruthTable majority_function(uint32_t k) {
    if (k % 2 == 0) {
        throw std::invalid_argument("majority_function: k must be odd");
    }
    return TruthTable::from_function(
        k, [k](uint64_t x) { return 2 * static_cast<uint32_t>(std::popcount(x)) > k; });
}

TruthTable exact_half_function(uint32_t k) {
    if (k % 2 != 0) {
        throw std::invalid_argument("exact_half_function: k must be even");
    }
    return TruthTable::from_function(
        k, [k](uint64_t x) { return 2 * static_cast<uint32_t>(std::popcount(x)) == k; });
}

TruthTable symmetric_function(uint32_t k, const std::vector<bool> &by_weight) {
    if (by_weight.size() != k + 1) {
        throw std::invalid_argument("symmetric_function: need k + 1 weight values");
    }
    return TruthTable::from_function(k, [&](uint64_t x) { return by_weight[std::popcount(x)]; });
}

bool is_symmetric(const TruthTable &g) {
    std::vector<int> seen(g.arity() + 1, -1);
    for (uint64_t x = 0; x < g.size(); x++) {
        int w = std::popcount(x);
        int v = g(x) ? 1 : 0;
        if (seen[w] == -1) {
            seen[w] = v;
        } else if (seen[w] != v) {
            return false;
        }
    }
    return true;
}

bool is_monotone(const TruthTable &g) {
    for (uint64_t x = 0; x < g.size(); x++) {
        if (!g(x)) {
            continue;
        }
        for (uint32_t i = 0; i < g.arity(); i++) {
            if (!g(x | (uint64_t{1} << i))) {
                return false;
            }
        }
    }
    return true;
}

std::vector<uint32_t> relevant_variables(const TruthTable &g) {
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < g.arity(); i++) {
        uint64_t bit = uint64_t{1} << i;
        for (uint64_t x = 0; x < g.size(); x++) {
            if (!(x & bit) && g(x) != g(x | bit)) {
                out.push_back(i);
                break;
            }
        }
    }
    return out;
}

namespace {

template <typename T>
void wht_impl(std::vector<T> &a) {
    size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0) {
        throw std::invalid_argument("walsh_hadamard: size must be a power of two");
    }
    for (size_t len = 1; len < n; len <<= 1) {
        for (size_t i = 0; i < n; i += len << 1) {
            for (size_t j = i; j < i + len; j++) {
                T u = a[j];
                T v = a[j + len];
                a[j] = u + v;
                a[j + len] = u - v;
            }
        }
    }
}

}  // namespace

void walsh_hadamard(std::vector<int64_t> &values) {
    wht_impl(values);
}

void walsh_hadamard(std::vector<double> &values) {
    wht_impl(values);
}

std::vector<int64_t> signed_spectrum(const TruthTable &g) {
    std::vector<int64_t> a(g.size());
    for (uint64_t x = 0; x < g.size(); x++) {
        a[x] = g(x) ? -1 : 1;
    }
    walsh_hadamard(a);
    return a;
}

uint64_t scatter_bits(uint64_t local, const std::vector<uint32_t> &vars) {
    uint64_t out = 0;
    for (size_t i = 0; i < vars.size(); i++) {
        if ((local >> i) & 1) {
            out |= uint64_t{1} << vars[i];
        }
    }
    return out;
}

}  // namespace gql
