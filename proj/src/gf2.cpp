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

#include "stabpac/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "stabpac/error.hpp"
#include "stabpac/simd/kernels.hpp"

namespace stabpac {

namespace {

std::size_t words_for(std::size_t bits) {
    return (bits + 63) / 64;
}

void require_width(const Gf2Vector& v, std::size_t width) {
    if (v.width() != width) {
        throw WidthMismatch(
            "vector width " + std::to_string(v.width()) + " does not match " + std::to_string(width));
    }
}

}  // namespace

Gf2Vector::Gf2Vector(std::size_t width) : width_(width), words_(words_for(width), 0) {
}

Gf2Vector Gf2Vector::from_string(std::string_view bits) {
    Gf2Vector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            v.flip(i);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("not a bit string: " + std::string(bits));
        }
    }
    return v;
}

Gf2Vector Gf2Vector::concat(const Gf2Vector& a, const Gf2Vector& b) {
    Gf2Vector out = a.resized(a.width_ + b.width_);
    std::size_t shift = a.width_ & 63;
    std::size_t base = a.width_ >> 6;
    for (std::size_t k = 0; k < b.words_.size(); k++) {
        std::uint64_t w = b.words_[k];
        out.words_[base + k] |= w << shift;
        if (shift != 0 && base + k + 1 < out.words_.size()) {
            out.words_[base + k + 1] |= w >> (64 - shift);
        }
    }
    return out;
}

void Gf2Vector::set(std::size_t i, bool value) {
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

bool Gf2Vector::is_zero() const {
    return simd::active_kernels().is_zero(words_.data(), words_.size());
}

std::size_t Gf2Vector::popcount() const {
    std::size_t total = 0;
    for (auto w : words_) {
        total += std::popcount(w);
    }
    return total;
}

std::optional<std::size_t> Gf2Vector::lowest_set_bit() const {
    for (std::size_t k = 0; k < words_.size(); k++) {
        if (words_[k] != 0) {
            return k * 64 + std::countr_zero(words_[k]);
        }
    }
    return std::nullopt;
}

Gf2Vector Gf2Vector::resized(std::size_t width) const {
    Gf2Vector out(width);
    std::size_t n = std::min(out.words_.size(), words_.size());
    std::copy_n(words_.begin(), n, out.words_.begin());
    if (width & 63) {
        out.words_.back() &= (std::uint64_t{1} << (width & 63)) - 1;
    }
    return out;
}

Gf2Vector Gf2Vector::slice(std::size_t start, std::size_t count) const {
    if (start + count > width_) {
        throw std::out_of_range("slice beyond vector width");
    }
    Gf2Vector out(count);
    std::size_t shift = start & 63;
    std::size_t base = start >> 6;
    for (std::size_t k = 0; k < out.words_.size(); k++) {
        std::uint64_t w = words_[base + k] >> shift;
        if (shift != 0 && base + k + 1 < words_.size()) {
            w |= words_[base + k + 1] << (64 - shift);
        }
        out.words_[k] = w;
    }
    if (count & 63) {
        out.words_.back() &= (std::uint64_t{1} << (count & 63)) - 1;
    }
    return out;
}

Gf2Vector& Gf2Vector::operator^=(const Gf2Vector& other) {
    require_width(other, width_);
    simd::active_kernels().xor_into(words_.data(), other.words_.data(), words_.size());
    return *this;
}

std::string Gf2Vector::str() const {
    std::string out(width_, '0');
    for (std::size_t i = 0; i < width_; i++) {
        if (get(i)) {
            out[i] = '1';
        }
    }
    return out;
}

IncrementalBasis::IncrementalBasis(std::size_t width) : width_(width) {
}

Gf2Vector IncrementalBasis::reduce(const Gf2Vector& v, Gf2Vector& combination) const {
    const auto& k = simd::active_kernels();
    Gf2Vector residual = v;
    auto res = residual.words();
    auto comb = combination.words();
    // Row j is zero at the pivots of rows 0..j-1, so one sweep in insertion
    // order clears every pivot column.
    for (const Row& row : rows_) {
        if (residual.get(row.pivot)) {
            k.xor_into(res.data(), row.echelon.words().data(), res.size());
            k.xor_into(comb.data(), row.combination.words().data(), comb.size());
        }
    }
    return residual;
}

Gf2Vector IncrementalBasis::checked_certificate(const Gf2Vector& v, Gf2Vector combination) const {
    Gf2Vector coefficients = combination.resized(added_.size());
    Gf2Vector check(width_);
    for (std::size_t i = 0; i < added_.size(); i++) {
        if (coefficients.get(i)) {
            check ^= added_[i];
        }
    }
    if (check != v) {
        throw std::logic_error("GF(2) certificate failed re-substitution");
    }
    return coefficients;
}

IncrementalBasis::InsertResult IncrementalBasis::insert(const Gf2Vector& v) {
    require_width(v, width_);
    inserted_count_++;
    Gf2Vector combination(width_);
    Gf2Vector residual = reduce(v, combination);
    std::optional<std::size_t> pivot = residual.lowest_set_bit();
    if (!pivot) {
        return Dependent{checked_certificate(v, std::move(combination))};
    }
    std::size_t index = added_.size();
    combination.flip(index);
    rows_.push_back(Row{std::move(residual), *pivot, std::move(combination)});
    added_.push_back(v);
    return Added{index};
}

std::optional<Gf2Vector> IncrementalBasis::coefficients_of(const Gf2Vector& v) const {
    require_width(v, width_);
    Gf2Vector combination(width_);
    Gf2Vector residual = reduce(v, combination);
    if (!residual.is_zero()) {
        return std::nullopt;
    }
    return checked_certificate(v, std::move(combination));
}

bool IncrementalBasis::contains(const Gf2Vector& v) const {
    require_width(v, width_);
    Gf2Vector combination(width_);
    return reduce(v, combination).is_zero();
}

std::vector<std::size_t> IncrementalBasis::pivots() const {
    std::vector<std::size_t> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) {
        out.push_back(row.pivot);
    }
    return out;
}

std::optional<Gf2Vector> solve(std::span<const Gf2Vector> rows, const Gf2Vector& target) {
    IncrementalBasis basis(target.width());
    std::vector<std::size_t> source;
    for (std::size_t i = 0; i < rows.size(); i++) {
        if (std::holds_alternative<IncrementalBasis::Added>(basis.insert(rows[i]))) {
            source.push_back(i);
        }
    }
    auto reduced = basis.coefficients_of(target);
    if (!reduced) {
        return std::nullopt;
    }
    Gf2Vector c(rows.size());
    for (std::size_t j = 0; j < source.size(); j++) {
        if (reduced->get(j)) {
            c.flip(source[j]);
        }
    }
    Gf2Vector check(target.width());
    for (std::size_t i = 0; i < rows.size(); i++) {
        if (c.get(i)) {
            check ^= rows[i];
        }
    }
    if (check != target) {
        throw std::logic_error("solve produced coefficients that fail back-substitution");
    }
    return c;
}

std::size_t rank(std::span<const Gf2Vector> rows) {
    if (rows.empty()) {
        return 0;
    }
    IncrementalBasis basis(rows.front().width());
    for (const auto& row : rows) {
        basis.insert(row);
    }
    return basis.rank();
}

}  // namespace stabpac
