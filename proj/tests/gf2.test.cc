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

#include <set>

#include "gtest/gtest.h"
#include "stabpac/error.hpp"
#include "stabpac/pauli.hpp"
#include "stabpac/rng.hpp"

using namespace stabpac;

namespace {

Gf2Vector random_vector(std::size_t width, Rng& rng) {
    Gf2Vector v(width);
    for (std::size_t i = 0; i < width; i++) {
        v.set(i, rng.coin());
    }
    return v;
}

// Independent oracle: size of the set of all XOR-subset sums.
std::size_t span_size(const std::vector<Gf2Vector>& rows) {
    std::set<std::string> seen;
    std::size_t width = rows.empty() ? 0 : rows[0].width();
    for (std::size_t mask = 0; mask < (std::size_t{1} << rows.size()); mask++) {
        Gf2Vector acc(width);
        for (std::size_t i = 0; i < rows.size(); i++) {
            if ((mask >> i) & 1) {
                acc ^= rows[i];
            }
        }
        seen.insert(acc.str());
    }
    return seen.size();
}

Gf2Vector xor_of(std::span<const Gf2Vector> rows, const Gf2Vector& c, std::size_t width) {
    Gf2Vector acc(width);
    for (std::size_t i = 0; i < rows.size(); i++) {
        if (c.get(i)) {
            acc ^= rows[i];
        }
    }
    return acc;
}

}  // namespace

TEST(gf2_vector, basics) {
    Gf2Vector v = Gf2Vector::from_string("0110");
    EXPECT_EQ(v.width(), 4u);
    EXPECT_FALSE(v.get(0));
    EXPECT_TRUE(v.get(1));
    EXPECT_EQ(v.lowest_set_bit(), 1u);
    EXPECT_EQ(v.popcount(), 2u);
    EXPECT_EQ(v.str(), "0110");
    EXPECT_TRUE(Gf2Vector(130).is_zero());
    EXPECT_EQ(Gf2Vector(130).lowest_set_bit(), std::nullopt);
    EXPECT_THROW(v ^= Gf2Vector(5), WidthMismatch);
}

TEST(gf2_vector, concat_and_slice_across_word_boundaries) {
    Rng rng(5);
    for (std::size_t wa : {0, 1, 63, 64, 65, 100, 128}) {
        for (std::size_t wb : {1, 7, 64, 70}) {
            Gf2Vector a = random_vector(wa, rng);
            Gf2Vector b = random_vector(wb, rng);
            Gf2Vector c = Gf2Vector::concat(a, b);
            ASSERT_EQ(c.str(), a.str() + b.str());
            EXPECT_EQ(c.slice(0, wa), a);
            EXPECT_EQ(c.slice(wa, wb), b);
        }
    }
}

TEST(gf2_vector, resized_clears_high_bits) {
    Gf2Vector v = Gf2Vector::from_string("1111111");
    EXPECT_EQ(v.resized(3).str(), "111");
    EXPECT_EQ(v.resized(3).resized(7).str(), "1110000");
}

TEST(incremental_basis, zero_vector_is_dependent_with_empty_certificate) {
    IncrementalBasis b(4);
    auto r = b.insert(Gf2Vector(4));
    ASSERT_TRUE(std::holds_alternative<IncrementalBasis::Dependent>(r));
    EXPECT_TRUE(std::get<IncrementalBasis::Dependent>(r).coefficients.is_zero());
    b.insert(Gf2Vector::from_string("1000"));
    r = b.insert(Gf2Vector(4));
    ASSERT_TRUE(std::holds_alternative<IncrementalBasis::Dependent>(r));
    EXPECT_EQ(std::get<IncrementalBasis::Dependent>(r).coefficients.str(), "0");
}

TEST(incremental_basis, xor_of_two_rows) {
    IncrementalBasis b(4);
    EXPECT_EQ(std::get<IncrementalBasis::Added>(b.insert(Gf2Vector::from_string("1000"))).index, 0u);
    EXPECT_EQ(std::get<IncrementalBasis::Added>(b.insert(Gf2Vector::from_string("0100"))).index, 1u);
    auto r = b.insert(Gf2Vector::from_string("1100"));
    ASSERT_TRUE(std::holds_alternative<IncrementalBasis::Dependent>(r));
    EXPECT_EQ(std::get<IncrementalBasis::Dependent>(r).coefficients.str(), "11");
    EXPECT_EQ(b.rank(), 2u);
    EXPECT_EQ(b.inserted_count(), 3u);
    EXPECT_EQ(b.pivots(), (std::vector<std::size_t>{0, 1}));
}

TEST(incremental_basis, check_vectors_of_zi_iz_span_zz) {
    // Span of {ZI, IZ} enumerated: {II, ZI, IZ, ZZ}; ZZ = ZI + IZ.
    IncrementalBasis b(4);
    b.insert(PauliOperator::parse("+ZI").symplectic_bits());
    b.insert(PauliOperator::parse("+IZ").symplectic_bits());
    auto r = b.insert(PauliOperator::parse("+ZZ").symplectic_bits());
    ASSERT_TRUE(std::holds_alternative<IncrementalBasis::Dependent>(r));
    EXPECT_EQ(std::get<IncrementalBasis::Dependent>(r).coefficients.str(), "11");
}

TEST(incremental_basis, width_mismatch) {
    IncrementalBasis b(4);
    EXPECT_THROW(b.insert(Gf2Vector(5)), WidthMismatch);
    EXPECT_THROW(b.coefficients_of(Gf2Vector(3)), WidthMismatch);
}

TEST(incremental_basis, span_size_matches_enumeration) {
    Rng rng(11);
    for (int rep = 0; rep < 200; rep++) {
        std::size_t width = 1 + rng.below(10);
        std::size_t count = rng.below(12);
        IncrementalBasis b(width);
        std::vector<Gf2Vector> inserted;
        for (std::size_t i = 0; i < count; i++) {
            Gf2Vector v = random_vector(width, rng);
            // Sparse rows make dependencies common.
            if (rng.coin()) {
                for (std::size_t j = 0; j < width; j++) {
                    if (rng.coin()) {
                        v.set(j, false);
                    }
                }
            }
            inserted.push_back(v);
            auto r = b.insert(v);
            if (auto* dep = std::get_if<IncrementalBasis::Dependent>(&r)) {
                EXPECT_EQ(xor_of(b.added(), dep->coefficients, width), v);
            }
        }
        ASSERT_LE(b.rank(), std::min(width, count));
        EXPECT_EQ(std::size_t{1} << b.rank(), span_size(inserted));
    }
}

TEST(incremental_basis, reinserting_an_added_vector_is_dependent) {
    Rng rng(3);
    IncrementalBasis b(40);
    for (int i = 0; i < 60; i++) {
        Gf2Vector v = random_vector(40, rng);
        auto r = b.insert(v);
        if (std::holds_alternative<IncrementalBasis::Added>(r)) {
            auto again = b.insert(v);
            ASSERT_TRUE(std::holds_alternative<IncrementalBasis::Dependent>(again));
            const auto& c = std::get<IncrementalBasis::Dependent>(again).coefficients;
            EXPECT_EQ(xor_of(b.added(), c, 40), v);
        }
    }
    EXPECT_EQ(b.rank(), 40u);
}

TEST(solve, standard_basis) {
    std::vector<Gf2Vector> rows;
    for (std::size_t i = 0; i < 5; i++) {
        Gf2Vector e(5);
        e.set(i, true);
        rows.push_back(e);
    }
    auto c = solve(rows, Gf2Vector::from_string("10100"));
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->str(), "10100");
}

TEST(solve, empty_rows) {
    auto c = solve({}, Gf2Vector(6));
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->width(), 0u);
    EXPECT_FALSE(solve({}, Gf2Vector::from_string("010000")).has_value());
}

TEST(solve, not_in_span) {
    std::vector<Gf2Vector> rows{Gf2Vector::from_string("110"), Gf2Vector::from_string("011")};
    EXPECT_FALSE(solve(rows, Gf2Vector::from_string("100")).has_value());
    auto c = solve(rows, Gf2Vector::from_string("101"));
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->str(), "11");
}

TEST(solve, planted_solutions_in_random_systems) {
    Rng rng(99);
    for (int rep = 0; rep < 100; rep++) {
        std::vector<Gf2Vector> rows;
        for (int i = 0; i < 20; i++) {
            rows.push_back(random_vector(40, rng));
        }
        // Duplicate some rows so coefficients are not unique.
        rows[7] = rows[3];
        Gf2Vector planted = random_vector(20, rng);
        Gf2Vector target = xor_of(rows, planted, 40);
        auto c = solve(rows, target);
        ASSERT_TRUE(c.has_value());
        EXPECT_EQ(xor_of(rows, *c, 40), target);
    }
}

TEST(solve, width_mismatch) {
    std::vector<Gf2Vector> rows{Gf2Vector(3), Gf2Vector(4)};
    EXPECT_THROW(solve(rows, Gf2Vector(3)), WidthMismatch);
    EXPECT_THROW(rank(rows), WidthMismatch);
}

TEST(rank, identity_duplicates_and_enumeration) {
    std::vector<Gf2Vector> rows;
    for (std::size_t i = 0; i < 6; i++) {
        Gf2Vector e(9);
        e.set(i + 2, true);
        rows.push_back(e);
    }
    EXPECT_EQ(rank(rows), 6u);
    auto doubled = rows;
    doubled.insert(doubled.end(), rows.begin(), rows.end());
    EXPECT_EQ(rank(doubled), 6u);
    EXPECT_EQ(rank({}), 0u);

    Rng rng(17);
    for (int rep = 0; rep < 100; rep++) {
        std::size_t n = 1 + rng.below(8);
        std::vector<Gf2Vector> m;
        for (std::size_t i = 0; i < n; i++) {
            m.push_back(random_vector(n, rng));
        }
        std::size_t r = rank(m);
        EXPECT_EQ(std::size_t{1} << r, span_size(m));
    }
}

TEST(rank, invariant_under_permutation_and_row_addition) {
    Rng rng(23);
    for (int rep = 0; rep < 100; rep++) {
        std::vector<Gf2Vector> m;
        for (int i = 0; i < 10; i++) {
            m.push_back(random_vector(12, rng));
        }
        std::size_t r = rank(m);
        auto permuted = m;
        for (std::size_t i = permuted.size() - 1; i > 0; i--) {
            std::swap(permuted[i], permuted[rng.below(i + 1)]);
        }
        EXPECT_EQ(rank(permuted), r);
        auto added = m;
        std::size_t a = rng.below(10);
        std::size_t b = (a + 1 + rng.below(9)) % 10;
        added[a] ^= added[b];
        EXPECT_EQ(rank(added), r);
    }
}
