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

#ifndef GQL_F2_H
#define GQL_F2_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gql/rng.h"

namespace gql {

/// Dense bit-packed vector over GF(2). Bits past size() are always zero.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t num_bits);

    /// Parses '0'/'1' characters; character i becomes bit i.
    static BitVector from_string(std::string_view bits);
    static BitVector from_indices(size_t num_bits, std::span<const uint32_t> indices);
    static BitVector unit(size_t num_bits, size_t index);
    static BitVector ones(size_t num_bits);
    static BitVector random(size_t num_bits, Rng &rng);

    size_t size() const {
        return size_;
    }
    bool get(size_t index) const {
        return (words_[index >> 6] >> (index & 63)) & 1;
    }
    bool operator[](size_t index) const {
        return get(index);
    }
    void set(size_t index, bool value = true) {
        uint64_t mask = uint64_t{1} << (index & 63);
        if (value) {
            words_[index >> 6] |= mask;
        } else {
            words_[index >> 6] &= ~mask;
        }
    }
    void flip(size_t index) {
        words_[index >> 6] ^= uint64_t{1} << (index & 63);
    }

    size_t popcount() const;
    bool any() const;
    bool none() const {
        return !any();
    }
    /// Inner product mod 2.
    bool dot(const BitVector &other) const;
    bool intersects(const BitVector &other) const;
    /// Indices of set bits, ascending.
    std::vector<uint32_t> indices() const;
    std::string str() const;

    std::span<const uint64_t> words() const {
        return words_;
    }

    BitVector &operator^=(const BitVector &other);
    BitVector &operator&=(const BitVector &other);
    BitVector &operator|=(const BitVector &other);
    friend BitVector operator^(BitVector a, const BitVector &b) {
        return a ^= b;
    }
    friend BitVector operator&(BitVector a, const BitVector &b) {
        return a &= b;
    }
    friend BitVector operator|(BitVector a, const BitVector &b) {
        return a |= b;
    }
    bool operator==(const BitVector &other) const = default;
    bool operator<(const BitVector &other) const;

   private:
    void require_same_size(const BitVector &other, const char *op) const;
    size_t size_ = 0;
    std::vector<uint64_t> words_;
};

struct BitVectorHash {
    size_t operator()(const BitVector &v) const noexcept;
};

/// Row-major dense matrix over GF(2).
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t num_rows, size_t num_cols);

    static BitMatrix identity(size_t n);
    /// Independent uniform bits, drawn row by row.
    static BitMatrix random(size_t num_rows, size_t num_cols, Rng &rng);
    static BitMatrix from_rows(std::vector<BitVector> rows, size_t num_cols);
    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);

    size_t rows() const {
        return rows_.size();
    }
    size_t cols() const {
        return cols_;
    }
    const BitVector &row(size_t i) const {
        return rows_[i];
    }
    void set_row(size_t i, BitVector value);
    bool get(size_t i, size_t j) const {
        return rows_[i].get(j);
    }
    void set(size_t i, size_t j, bool value = true) {
        rows_[i].set(j, value);
    }
    BitVector column(size_t j) const;

    BitMatrix transposed() const;
    bool is_symmetric() const;
    bool is_zero() const;
    std::string str() const;

    bool operator==(const BitMatrix &other) const = default;

   private:
    size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

/// M v over GF(2).
BitVector matvec(const BitMatrix &m, const BitVector &v);
/// A B over GF(2).
BitMatrix multiply(const BitMatrix &a, const BitMatrix &b);
size_t rank(const BitMatrix &m);

struct LinearSolution {
    BitVector particular;
    std::vector<BitVector> nullspace;
};

/// Solves M x = b by Gaussian elimination. Returns nullopt when the system is
/// inconsistent; otherwise one solution (free variables set to zero) and a
/// basis of the kernel of M.
std::optional<LinearSolution> solve(const BitMatrix &m, const BitVector &b);

}  // namespace gql

#endif
