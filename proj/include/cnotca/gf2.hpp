// Copyright 2026 The cnotca Authors
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

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cnotca {

/// Dense bit vector over GF(2), packed 64 sites per word.
///
/// Padding bits past `size()` are always zero, so word-level popcount and
/// equality need no masking.
class BitVec {
   public:
    using word_t = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitVec() = default;
    explicit BitVec(std::size_t length) : length_(length), words_(num_words(length), 0) {}

    /// Builds from explicit 0/1 entries, site 0 first.
    static BitVec from_bits(std::initializer_list<int> bits) {
        BitVec v(bits.size());
        std::size_t i = 0;
        for (int b : bits) {
            v.set(i++, b != 0);
        }
        return v;
    }

    static BitVec unit(std::size_t length, std::size_t index) {
        BitVec v(length);
        v.set(index, true);
        return v;
    }

    std::size_t size() const { return length_; }
    std::size_t num_words() const { return words_.size(); }

    bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
    bool operator[](std::size_t i) const { return get(i); }

    void set(std::size_t i, bool value) {
        word_t mask = word_t{1} << (i % kWordBits);
        if (value) {
            words_[i / kWordBits] |= mask;
        } else {
            words_[i / kWordBits] &= ~mask;
        }
    }
    void flip(std::size_t i) { words_[i / kWordBits] ^= word_t{1} << (i % kWordBits); }

    std::size_t popcount() const {
        std::size_t total = 0;
        for (word_t w : words_) {
            total += static_cast<std::size_t>(std::popcount(w));
        }
        return total;
    }
    bool none() const {
        for (word_t w : words_) {
            if (w != 0) {
                return false;
            }
        }
        return true;
    }
    bool any() const { return !none(); }

    /// Parity of the AND of two vectors, i.e. their GF(2) dot product.
    bool dot(const BitVec& other) const {
        require_same_size(other);
        word_t acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            acc ^= words_[w] & other.words_[w];
        }
        return std::popcount(acc) & 1;
    }

    BitVec& operator^=(const BitVec& other) {
        require_same_size(other);
        for (std::size_t w = 0; w < words_.size(); ++w) {
            words_[w] ^= other.words_[w];
        }
        return *this;
    }
    BitVec& operator&=(const BitVec& other) {
        require_same_size(other);
        for (std::size_t w = 0; w < words_.size(); ++w) {
            words_[w] &= other.words_[w];
        }
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }

    bool operator==(const BitVec& other) const = default;

    /// Arbitrary strict total order, for use as an ordered-map key.
    friend bool operator<(const BitVec& a, const BitVec& b) {
        if (a.length_ != b.length_) {
            return a.length_ < b.length_;
        }
        return a.words_ < b.words_;
    }

    /// Sorted indices of the set bits.
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            word_t bits = words_[w];
            while (bits != 0) {
                out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
        return out;
    }

    /// Lowest and highest set index; nullopt for the zero vector.
    std::optional<std::pair<std::size_t, std::size_t>> extent() const {
        std::optional<std::size_t> lo;
        std::size_t hi = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w] == 0) {
                continue;
            }
            if (!lo) {
                lo = w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
            }
            hi = w * kWordBits + (kWordBits - 1) - static_cast<std::size_t>(std::countl_zero(words_[w]));
        }
        if (!lo) {
            return std::nullopt;
        }
        return std::make_pair(*lo, hi);
    }

    /// "1101..." with site 0 first.
    std::string str() const {
        std::string s(length_, '0');
        for (std::size_t i = 0; i < length_; ++i) {
            if (get(i)) {
                s[i] = '1';
            }
        }
        return s;
    }

    const std::vector<word_t>& words() const { return words_; }

   private:
    static std::size_t num_words(std::size_t length) { return (length + kWordBits - 1) / kWordBits; }

    void require_same_size(const BitVec& other) const {
        if (other.length_ != length_) {
            throw std::invalid_argument(
                "BitVec length mismatch: " + std::to_string(length_) + " vs " + std::to_string(other.length_));
        }
    }

    std::size_t length_ = 0;
    std::vector<word_t> words_;
};

/// Square matrix over GF(2), stored as packed rows.
class BitMatrix {
   public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n) : rows_(n, BitVec(n)) {}

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) {
            m.set(i, i, true);
        }
        return m;
    }

    /// Rows given as 0/1 lists; all rows must have the same length as the row count.
    static BitMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
        BitMatrix m(rows.size());
        std::size_t r = 0;
        for (const auto& row : rows) {
            if (row.size() != rows.size()) {
                throw std::invalid_argument("BitMatrix::from_rows: matrix must be square");
            }
            m.rows_[r++] = BitVec::from_bits(row);
        }
        return m;
    }

    std::size_t size() const { return rows_.size(); }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }

    const BitVec& row(std::size_t r) const { return rows_[r]; }
    BitVec& row(std::size_t r) { return rows_[r]; }

    BitVec column(std::size_t c) const {
        BitVec out(size());
        for (std::size_t r = 0; r < size(); ++r) {
            out.set(r, get(r, c));
        }
        return out;
    }

    bool is_identity() const { return *this == identity(size()); }

    bool operator==(const BitMatrix& other) const = default;

    std::string str() const {
        std::ostringstream out;
        for (std::size_t r = 0; r < size(); ++r) {
            out << rows_[r].str() << '\n';
        }
        return out.str();
    }

   private:
    std::vector<BitVec> rows_;
};

namespace detail {
inline void require_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw std::invalid_argument(
            std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}
}  // namespace detail

inline BitVec mat_vec_mul(const BitMatrix& m, const BitVec& v) {
    detail::require_dim(m.size(), v.size(), "mat_vec_mul");
    BitVec out(m.size());
    for (std::size_t r = 0; r < m.size(); ++r) {
        if (m.row(r).dot(v)) {
            out.set(r, true);
        }
    }
    return out;
}

/// Row i of A·B is the XOR of the rows of B selected by row i of A.
inline BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
    detail::require_dim(a.size(), b.size(), "mat_mul");
    BitMatrix out(a.size());
    for (std::size_t r = 0; r < a.size(); ++r) {
        BitVec& acc = out.row(r);
        for (std::size_t k : a.row(r).support()) {
            acc ^= b.row(k);
        }
    }
    return out;
}

inline BitMatrix transpose(const BitMatrix& m) {
    BitMatrix out(m.size());
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c : m.row(r).support()) {
            out.set(c, r, true);
        }
    }
    return out;
}

inline BitMatrix mat_pow(const BitMatrix& m, std::uint64_t t) {
    BitMatrix result = BitMatrix::identity(m.size());
    BitMatrix base = m;
    while (t != 0) {
        if (t & 1u) {
            result = mat_mul(result, base);
        }
        t >>= 1;
        if (t != 0) {
            base = mat_mul(base, base);
        }
    }
    return result;
}

/// Rank by Gaussian elimination.
inline std::size_t rank(const BitMatrix& m) {
    std::vector<BitVec> rows;
    rows.reserve(m.size());
    for (std::size_t r = 0; r < m.size(); ++r) {
        rows.push_back(m.row(r));
    }
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < m.size() && pivot_row < rows.size(); ++c) {
        std::size_t p = pivot_row;
        while (p < rows.size() && !rows[p].get(c)) {
            ++p;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[p], rows[pivot_row]);
        for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
            if (rows[r].get(c)) {
                rows[r] ^= rows[pivot_row];
            }
        }
        ++pivot_row;
    }
    return pivot_row;
}

inline bool is_invertible(const BitMatrix& m) { return rank(m) == m.size(); }

/// Gauss-Jordan inverse. Throws std::domain_error for singular input.
inline BitMatrix inverse(const BitMatrix& m) {
    const std::size_t n = m.size();
    BitMatrix work = m;
    BitMatrix inv = BitMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && !work.get(p, c)) {
            ++p;
        }
        if (p == n) {
            throw std::domain_error("inverse: matrix is singular over GF(2)");
        }
        std::swap(work.row(p), work.row(c));
        std::swap(inv.row(p), inv.row(c));
        for (std::size_t r = 0; r < n; ++r) {
            if (r != c && work.get(r, c)) {
                work.row(r) ^= work.row(c);
                inv.row(r) ^= inv.row(c);
            }
        }
    }
    return inv;
}

inline constexpr std::uint64_t kDefaultOrderCap = std::uint64_t{1} << 20;

/// Least t >= 1 with M^t = I, or nullopt when no such t <= cap exists.
/// Throws std::domain_error when M is singular (it then has no order).
inline std::optional<std::uint64_t> multiplicative_order(const BitMatrix& m, std::uint64_t cap = kDefaultOrderCap) {
    if (!is_invertible(m)) {
        throw std::domain_error("multiplicative_order: matrix is singular over GF(2)");
    }
    BitMatrix power = m;
    for (std::uint64_t t = 1; t <= cap; ++t) {
        if (power.is_identity()) {
            return t;
        }
        power = mat_mul(power, m);
    }
    return std::nullopt;
}

}  // namespace cnotca
