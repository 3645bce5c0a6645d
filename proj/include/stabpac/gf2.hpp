// Copyright 2026 The stabpac Authors
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

#ifndef STABPAC_GF2_HPP
#define STABPAC_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace stabpac {

/// Packed bit string over GF(2). Bit i lives in word i/64 at position i%64;
/// bits at or beyond width() are always zero.
class Gf2Vector {
   public:
    Gf2Vector() = default;
    explicit Gf2Vector(std::size_t width);

    /// Parses a string of '0'/'1' characters, first character is bit 0.
    static Gf2Vector from_string(std::string_view bits);
    /// Bits of `a` followed by bits of `b`.
    static Gf2Vector concat(const Gf2Vector& a, const Gf2Vector& b);

    std::size_t width() const {
        return width_;
    }
    std::size_t num_words() const {
        return words_.size();
    }
    std::span<const std::uint64_t> words() const {
        return words_;
    }
    std::span<std::uint64_t> words() {
        return words_;
    }

    bool get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(std::size_t i, bool value);
    void flip(std::size_t i) {
        words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
    }

    bool is_zero() const;
    std::size_t popcount() const;
    std::optional<std::size_t> lowest_set_bit() const;

    /// Copy truncated or zero-extended to `width` bits.
    Gf2Vector resized(std::size_t width) const;
    /// Bits [start, start + count).
    Gf2Vector slice(std::size_t start, std::size_t count) const;

    /// Throws WidthMismatch when widths differ.
    Gf2Vector& operator^=(const Gf2Vector& other);
    friend Gf2Vector operator^(Gf2Vector a, const Gf2Vector& b) {
        a ^= b;
        return a;
    }
    friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;

    std::string str() const;

   private:
    std::size_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Echelon form maintained one row at a time. Each echelon row remembers
/// which added vectors XOR to it, so membership answers come with a
/// coefficient certificate.
class IncrementalBasis {
   public:
    struct Added {
        std::size_t index;  // position among added vectors
    };
    struct Dependent {
        Gf2Vector coefficients;  // width = rank() at the time of the call
    };
    using InsertResult = std::variant<Added, Dependent>;

    IncrementalBasis() = default;
    explicit IncrementalBasis(std::size_t width);

    /// Adds `v` if it is outside the current span, otherwise returns the
    /// coefficients over the added vectors that reproduce it.
    InsertResult insert(const Gf2Vector& v);

    /// Same certificate as insert() without modifying the basis.
    std::optional<Gf2Vector> coefficients_of(const Gf2Vector& v) const;
    bool contains(const Gf2Vector& v) const;

    std::size_t width() const {
        return width_;
    }
    std::size_t rank() const {
        return rows_.size();
    }
    std::size_t inserted_count() const {
        return inserted_count_;
    }
    std::span<const Gf2Vector> added() const {
        return added_;
    }
    /// Pivot column of each echelon row, in insertion order.
    std::vector<std::size_t> pivots() const;

   private:
    struct Row {
        Gf2Vector echelon;
        std::size_t pivot;
        Gf2Vector combination;
    };

    // Reduces v against every row; returns the residual, accumulating the
    // combination of added vectors that was XORed out into `combination`.
    Gf2Vector reduce(const Gf2Vector& v, Gf2Vector& combination) const;
    Gf2Vector checked_certificate(const Gf2Vector& v, Gf2Vector combination) const;

    std::size_t width_ = 0;
    std::size_t inserted_count_ = 0;
    std::vector<Row> rows_;
    std::vector<Gf2Vector> added_;
};

/// Coefficients c with XOR of c[i]*rows[i] equal to target, or nullopt when
/// target is not in the span. Throws WidthMismatch on unequal widths.
std::optional<Gf2Vector> solve(std::span<const Gf2Vector> rows, const Gf2Vector& target);

/// GF(2) rank. Throws WidthMismatch on unequal widths.
std::size_t rank(std::span<const Gf2Vector> rows);

}  // namespace stabpac

#endif
