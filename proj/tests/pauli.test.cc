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

#include "stabpac/pauli.hpp"

#include <complex>

#include "gtest/gtest.h"
#include "stabpac/dense.hpp"
#include "stabpac/error.hpp"
#include "test_util.hpp"

using namespace stabpac;
using stabpac::testing::all_paulis;
using stabpac::testing::random_pauli;

namespace {

std::complex<double> i_power(unsigned k) {
    static const std::complex<double> table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[k & 3];
}

DenseMatrix dense_phased(const PhasedPauli& p) {
    return pauli_to_dense(p.base) * i_power(p.phase_exponent);
}

}  // namespace

TEST(parse_pauli, signed_four_qubit) {
    PauliOperator p = parse_pauli("-XYZY");
    EXPECT_EQ(p.num_qubits(), 4u);
    EXPECT_EQ(p.sign(), -1);
    EXPECT_EQ(p.factor(0), PauliFactor::X);
    EXPECT_EQ(p.factor(1), PauliFactor::Y);
    EXPECT_EQ(p.factor(2), PauliFactor::Z);
    EXPECT_EQ(p.factor(3), PauliFactor::Y);
}

TEST(parse_pauli, identity_and_explicit_plus) {
    PauliOperator id = parse_pauli("IIII");
    EXPECT_EQ(id.num_qubits(), 4u);
    EXPECT_EQ(id.sign(), 1);
    EXPECT_TRUE(id.is_identity_up_to_sign());

    PauliOperator zi = parse_pauli("+ZI");
    EXPECT_EQ(zi.sign(), 1);
    EXPECT_EQ(zi.factor(0), PauliFactor::Z);
    EXPECT_EQ(zi.factor(1), PauliFactor::I);
}

TEST(parse_pauli, malformed) {
    for (const char* bad : {"", "+", "-", "XQ", "x", "+-X", "X Y", "X+"}) {
        EXPECT_THROW(parse_pauli(bad), MalformedPauli) << bad;
    }
}

TEST(parse_pauli, format_round_trip) {
    Rng rng(1);
    for (int rep = 0; rep < 200; rep++) {
        PauliOperator p = random_pauli(1 + rng.below(150), rng);
        EXPECT_EQ(parse_pauli(format_pauli(p)), p);
    }
    EXPECT_EQ(format_pauli(parse_pauli("XZ")), "+XZ");
}

TEST(multiply, single_qubit_algebra) {
    PhasedPauli xy = multiply(parse_pauli("X"), parse_pauli("Y"));
    EXPECT_EQ(xy.phase_exponent, 1u);
    EXPECT_EQ(xy.base, parse_pauli("+Z"));
    EXPECT_FALSE(xy.hermitian());
    EXPECT_THROW(xy.to_signed(), NonHermitianProduct);
}

TEST(multiply, xx_times_zz_is_minus_yy) {
    PhasedPauli r = multiply(parse_pauli("XX"), parse_pauli("ZZ"));
    EXPECT_EQ(r.phase_exponent, 2u);
    EXPECT_EQ(r.base, parse_pauli("+YY"));
    EXPECT_EQ(r.to_signed(), parse_pauli("-YY"));
    // Dense oracle for the same product.
    DenseMatrix dense = pauli_to_dense(parse_pauli("XX")) * pauli_to_dense(parse_pauli("ZZ"));
    EXPECT_LT(dense.max_abs_diff(pauli_to_dense(parse_pauli("-YY"))), 1e-12);
}

TEST(multiply, square_is_identity) {
    Rng rng(8);
    for (int rep = 0; rep < 100; rep++) {
        PauliOperator p = random_pauli(1 + rng.below(100), rng);
        EXPECT_EQ(multiply(p, p).to_signed(), PauliOperator(p.num_qubits()));
    }
}

TEST(multiply, dimension_mismatch) {
    EXPECT_THROW(multiply(parse_pauli("X"), parse_pauli("XX")), DimensionMismatch);
    EXPECT_THROW(commutes(parse_pauli("X"), parse_pauli("XX")), DimensionMismatch);
}

TEST(multiply, matches_dense_products_exhaustively) {
    for (std::size_t n = 1; n <= 3; n++) {
        auto paulis = all_paulis(n, true);
        std::vector<DenseMatrix> dense;
        for (const auto& p : paulis) {
            dense.push_back(pauli_to_dense(p));
        }
        for (std::size_t a = 0; a < paulis.size(); a++) {
            for (std::size_t b = 0; b < paulis.size(); b++) {
                PhasedPauli r = multiply(paulis[a], paulis[b]);
                ASSERT_LT((dense[a] * dense[b]).max_abs_diff(dense_phased(r)), 1e-12)
                    << paulis[a].str() << " * " << paulis[b].str();
            }
        }
    }
}

TEST(commutes, examples) {
    EXPECT_TRUE(commutes(parse_pauli("XI"), parse_pauli("IZ")));
    EXPECT_FALSE(commutes(parse_pauli("X"), parse_pauli("Z")));
    EXPECT_TRUE(commutes(parse_pauli("XX"), parse_pauli("ZZ")));
    EXPECT_TRUE(commutes(parse_pauli("-XX"), parse_pauli("ZZ")));
}

TEST(commutes, matches_dense_commutator_exhaustively) {
    for (std::size_t n = 1; n <= 3; n++) {
        auto paulis = all_paulis(n, false);
        std::vector<DenseMatrix> dense;
        for (const auto& p : paulis) {
            dense.push_back(pauli_to_dense(p));
        }
        for (std::size_t a = 0; a < paulis.size(); a++) {
            for (std::size_t b = 0; b < paulis.size(); b++) {
                bool dense_commute = (dense[a] * dense[b]).max_abs_diff(dense[b] * dense[a]) < 1e-12;
                ASSERT_EQ(commutes(paulis[a], paulis[b]), dense_commute) << paulis[a].str() << " " << paulis[b].str();
            }
        }
    }
}

TEST(multiply, associative_with_phases) {
    Rng rng(31);
    for (int rep = 0; rep < 300; rep++) {
        std::size_t n = 1 + rng.below(140);
        PauliOperator p = random_pauli(n, rng);
        PauliOperator q = random_pauli(n, rng);
        PauliOperator r = random_pauli(n, rng);
        PhasedPauli left = multiply(p, q);
        left *= r;
        PhasedPauli qr = multiply(q, r);
        PhasedPauli right = to_phased(p);
        right *= qr.base;
        right.phase_exponent = (right.phase_exponent + qr.phase_exponent) & 3;
        EXPECT_EQ(left, right);
    }
}

TEST(check_vector, worked_example) {
    CheckVector v = to_check_vector(parse_pauli("-XYZY"));
    EXPECT_EQ(v.str(), "[1 | 1 1 0 1 | 0 1 1 1]");
    EXPECT_TRUE(v.sign_bit);
    EXPECT_EQ(v.x_block.str(), "1101");
    EXPECT_EQ(v.z_block.str(), "0111");
    EXPECT_EQ(v.unsigned_bits().str(), "11010111");
}

TEST(check_vector, simple_cases) {
    EXPECT_EQ(to_check_vector(parse_pauli("+ZZ")).str(), "[0 | 0 0 | 1 1]");
    EXPECT_EQ(to_check_vector(parse_pauli("+IXYZ")).str(), "[0 | 0 1 1 0 | 0 0 1 1]");
}

TEST(check_vector, round_trip) {
    Rng rng(77);
    for (int rep = 0; rep < 500; rep++) {
        PauliOperator p = random_pauli(1 + rng.below(64), rng);
        CheckVector v = to_check_vector(p);
        EXPECT_EQ(from_check_vector(v), p);
        EXPECT_EQ(v.unsigned_bits(), p.symplectic_bits());
        for (std::size_t q = 0; q < p.num_qubits(); q++) {
            PauliFactor f = p.factor(q);
            EXPECT_EQ(v.x_block.get(q), f == PauliFactor::X || f == PauliFactor::Y);
            EXPECT_EQ(v.z_block.get(q), f == PauliFactor::Y || f == PauliFactor::Z);
        }
    }
    EXPECT_THROW(from_check_vector(CheckVector{false, Gf2Vector(2), Gf2Vector(3)}), DimensionMismatch);
}

TEST(product_sign, examples) {
    std::vector<PauliOperator> zs{parse_pauli("+ZI"), parse_pauli("+IZ")};
    EXPECT_EQ(product_sign(zs, Gf2Vector::from_string("11")), 1);
    EXPECT_EQ(signed_product(zs, Gf2Vector::from_string("11"), 2), parse_pauli("+ZZ"));

    std::vector<PauliOperator> bell{parse_pauli("+XX"), parse_pauli("+ZZ")};
    EXPECT_EQ(product_sign(bell, Gf2Vector::from_string("11")), -1);
    EXPECT_EQ(product_sign(bell, Gf2Vector::from_string("00")), 1);
    EXPECT_EQ(signed_product(bell, Gf2Vector::from_string("00"), 2), parse_pauli("+II"));
}

TEST(product_sign, non_hermitian_product_rejected) {
    std::vector<PauliOperator> gens{parse_pauli("+X"), parse_pauli("+Z")};
    EXPECT_THROW(product_sign(gens, Gf2Vector::from_string("11")), NonHermitianProduct);
    EXPECT_THROW(product_sign(gens, Gf2Vector::from_string("1")), DimensionMismatch);
}

TEST(product_sign, invariant_under_reordering_of_commuting_generators) {
    Rng rng(4);
    for (int rep = 0; rep < 50; rep++) {
        std::size_t n = 2 + rng.below(30);
        StabiliserTableau t = random_state(n, n, rng.next());
        std::vector<PauliOperator> gens(t.generators().begin(), t.generators().end());
        Gf2Vector c(n);
        for (std::size_t i = 0; i < n; i++) {
            c.set(i, rng.coin());
        }
        int s = product_sign(gens, c);
        for (int shuffle = 0; shuffle < 5; shuffle++) {
            std::vector<std::size_t> order(n);
            for (std::size_t i = 0; i < n; i++) {
                order[i] = i;
            }
            for (std::size_t i = n - 1; i > 0; i--) {
                std::swap(order[i], order[rng.below(i + 1)]);
            }
            std::vector<PauliOperator> g2;
            Gf2Vector c2(n);
            for (std::size_t i = 0; i < n; i++) {
                g2.push_back(gens[order[i]]);
                c2.set(i, c.get(order[i]));
            }
            EXPECT_EQ(product_sign(g2, c2), s);
        }
    }
}
