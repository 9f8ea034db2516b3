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

#include "gql/f2.h"

#include <bit>
#include <stdexcept>

namespace gql {

namespace {

size_t words_for(size_t bits) {
    return (bits + 63) >> 6;
}

}  // namespace

BitVector::BitVector(size_t num_bits) : size_(num_bits), words_(words_for(num_bits), 0) {
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("BitVector::from_string: expected '0' or '1'");
        }
    }
    return v;
}

BitVector BitVector::from_indices(size_t num_bits, std::span<const uint32_t> indices) {
    BitVector v(num_bits);
    for (uint32_t i : indices) {
        if (i >= num_bits) {
            throw std::out_of_range("BitVector::from_indices: index out of range");
        }
        v.set(i);
    }
    return v;
}

BitVector BitVector::unit(size_t num_bits, size_t index) {
    if (index >= num_bits) {
        throw std::out_of_range("BitVector::unit: index out of range");
    }
    BitVector v(num_bits);
    v.set(index);
    return v;
}

BitVector BitVector::ones(size_t num_bits) {
    BitVector v(num_bits);
    for (auto &w : v.words_) {
        w = ~uint64_t{0};
    }
    if (num_bits & 63) {
        v.words_.back() &= (uint64_t{1} << (num_bits & 63)) - 1;
    }
    return v;
}

BitVector BitVector::random(size_t num_bits, Rng &rng) {
    BitVector v(num_bits);
    for (auto &w : v.words_) {
        w = rng();
    }
    if (num_bits & 63) {
        v.words_.back() &= (uint64_t{1} << (num_bits & 63)) - 1;
    }
    return v;
}

size_t BitVector::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += static_cast<size_t>(std::popcount(w));
    }
    return total;
}

bool BitVector::any() const {
    for (uint64_t w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

void BitVector::require_same_size(const BitVector &other, const char *op) const {
    if (size_ != other.size_) {
        throw std::invalid_argument(std::string("BitVector::") + op + ": length mismatch (" +
                                    std::to_string(size_) + " vs " + std::to_string(other.size_) + ")");
    }
}

bool BitVector::dot(const BitVector &other) const {
    require_same_size(other, "dot");
    uint64_t acc = 0;
    for (size_t i = 0; i < words_.size(); i++) {
        acc ^= words_[i] & other.words_[i];
    }
    return std::popcount(acc) & 1;
}

bool BitVector::intersects(const BitVector &other) const {
    require_same_size(other, "intersects");
    for (size_t i = 0; i < words_.size(); i++) {
        if (words_[i] & other.words_[i]) {
            return true;
        }
    }
    return false;
}

std::vector<uint32_t> BitVector::indices() const {
    std::vector<uint32_t> out;
    for (size_t k = 0; k < words_.size(); k++) {
        uint64_t w = words_[k];
        while (w) {
            out.push_back(static_cast<uint32_t>((k << 6) + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

std::string BitVector::str() const {
    std::string s(size_, '0');
    for (size_t i = 0; i < size_; i++) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    require_same_size(other, "xor");
    for (size_t i = 0; i < words_.size(); i++) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    require_same_size(other, "and");
    for (size_t i = 0; i < words_.size(); i++) {
        words_[i] &= other.words_[i];
    }
    return *this;
}

BitVector &BitVector::operator|=(const BitVector &other) {
    require_same_size(other, "or");
    for (size_t i = 0; i < words_.size(); i++) {
        words_[i] |= other.words_[i];
    }
    return *this;
}

bool BitVector::operator<(const BitVector &other) const {
    if (size_ != other.size_) {
        return size_ < other.size_;
    }
    for (size_t i = 0; i < words_.size(); i++) {
        if (words_[i] != other.words_[i]) {
            return words_[i] < other.words_[i];
        }
    }
    return false;
}

size_t BitVectorHash::operator()(const BitVector &v) const noexcept {
    uint64_t h = 0x9E3779B97F4A7C15ULL ^ v.size();
    for (uint64_t w : v.words()) {
        h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        h *= 0xBF58476D1CE4E5B9ULL;
    }
    return static_cast<size_t>(h ^ (h >> 31));
}

BitMatrix::BitMatrix(size_t num_rows, size_t num_cols) : cols_(num_cols), rows_(num_rows, BitVector(num_cols)) {
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i);
    }
    return m;
}

BitMatrix BitMatrix::random(size_t num_rows, size_t num_cols, Rng &rng) {
    BitMatrix m(num_rows, num_cols);
    for (auto &r : m.rows_) {
        r = BitVector::random(num_cols, rng);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows, size_t num_cols) {
    BitMatrix m;
    m.cols_ = num_cols;
    for (const auto &r : rows) {
        if (r.size() != num_cols) {
            throw std::invalid_argument("BitMatrix::from_rows: row length differs from column count");
        }
    }
    m.rows_ = std::move(rows);
    return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    std::vector<BitVector> parsed;
    size_t cols = rows.size() ? rows.begin()->size() : 0;
    for (auto r : rows) {
        parsed.push_back(BitVector::from_string(r));
    }
    return from_rows(std::move(parsed), cols);
}

void BitMatrix::set_row(size_t i, BitVector value) {
    if (value.size() != cols_) {
        throw std::invalid_argument("BitMatrix::set_row: row length differs from column count");
    }
    rows_[i] = std::move(value);
}

BitVector BitMatrix::column(size_t j) const {
    BitVector c(rows());
    for (size_t i = 0; i < rows(); i++) {
        if (rows_[i].get(j)) {
            c.set(i);
        }
    }
    return c;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows());
    for (size_t i = 0; i < rows(); i++) {
        for (uint32_t j : rows_[i].indices()) {
            t.set(j, i);
        }
    }
    return t;
}

bool BitMatrix::is_symmetric() const {
    return rows() == cols_ && *this == transposed();
}

bool BitMatrix::is_zero() const {
    for (const auto &r : rows_) {
        if (r.any()) {
            return false;
        }
    }
    return true;
}

std::string BitMatrix::str() const {
    std::string s;
    for (const auto &r : rows_) {
        s += r.str();
        s += '\n';
    }
    return s;
}

BitVector matvec(const BitMatrix &m, const BitVector &v) {
    if (v.size() != m.cols()) {
        throw std::invalid_argument("matvec: vector length " + std::to_string(v.size()) + " != matrix columns " +
                                    std::to_string(m.cols()));
    }
    BitVector out(m.rows());
    for (size_t i = 0; i < m.rows(); i++) {
        if (m.row(i).dot(v)) {
            out.set(i);
        }
    }
    return out;
}

BitMatrix multiply(const BitMatrix &a, const BitMatrix &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("multiply: inner dimensions differ");
    }
    BitMatrix out(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        BitVector acc(b.cols());
        for (uint32_t k : a.row(i).indices()) {
            acc ^= b.row(k);
        }
        out.set_row(i, std::move(acc));
    }
    return out;
}

namespace {

// Reduces `rows` in place to reduced row echelon form over the first
// `pivot_limit` columns. Returns the pivot column of each of the leading rows.
std::vector<size_t> eliminate(std::vector<BitVector> &rows, size_t pivot_limit) {
    std::vector<size_t> pivots;
    size_t next = 0;
    for (size_t col = 0; col < pivot_limit && next < rows.size(); col++) {
        size_t found = next;
        while (found < rows.size() && !rows[found].get(col)) {
            found++;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[found]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != next && rows[r].get(col)) {
                rows[r] ^= rows[next];
            }
        }
        pivots.push_back(col);
        next++;
    }
    return pivots;
}

}  // namespace

size_t rank(const BitMatrix &m) {
    std::vector<BitVector> rows;
    rows.reserve(m.rows());
    for (size_t i = 0; i < m.rows(); i++) {
        rows.push_back(m.row(i));
    }
    return eliminate(rows, m.cols()).size();
}

std::optional<LinearSolution> solve(const BitMatrix &m, const BitVector &b) {
    if (b.size() != m.rows()) {
        throw std::invalid_argument("solve: right-hand side length differs from row count");
    }
    size_t n = m.cols();
    std::vector<BitVector> aug;
    aug.reserve(m.rows());
    for (size_t i = 0; i < m.rows(); i++) {
        BitVector r(n + 1);
        for (uint32_t j : m.row(i).indices()) {
            r.set(j);
        }
        r.set(n, b.get(i));
        aug.push_back(std::move(r));
    }
    auto pivots = eliminate(aug, n);
    for (size_t r = pivots.size(); r < aug.size(); r++) {
        if (aug[r].get(n)) {
            return std::nullopt;
        }
    }

    LinearSolution sol{BitVector(n), {}};
    std::vector<bool> is_pivot(n, false);
    for (size_t r = 0; r < pivots.size(); r++) {
        is_pivot[pivots[r]] = true;
        sol.particular.set(pivots[r], aug[r].get(n));
    }
    for (size_t free = 0; free < n; free++) {
        if (is_pivot[free]) {
            continue;
        }
        BitVector z(n);
        z.set(free);
        for (size_t r = 0; r < pivots.size(); r++) {
            if (aug[r].get(free)) {
                z.set(pivots[r]);
            }
        }
        sol.nullspace.push_back(std::move(z));
    }
    return sol;
}

}  // namespace gql
