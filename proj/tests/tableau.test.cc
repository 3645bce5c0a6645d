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

#include "stabpac/tableau.hpp"

#include <map>
#include <set>

#include "gtest/gtest.h"
#include "stabpac/dense.hpp"
#include "stabpac/error.hpp"
#include "test_util.hpp"

using namespace stabpac;
using stabpac::testing::all_paulis;
using stabpac::testing::gate_unitary;
using stabpac::testing::random_pauli;

namespace {

StabiliserTableau tableau(std::initializer_list<const char*> gens) {
    std::vector<PauliOperator> ps;
    for (const char* g : gens) {
        ps.push_back(PauliOperator::parse(g));
    }
    std::size_t n = ps.front().num_qubits();
    return StabiliserTableau(n, std::move(ps));
}

std::vector<Gate> all_gates(std::size_t n) {
    std::vector<Gate> out;
    for (std::size_t q = 0; q < n; q++) {
        out.push_back(Gate::h(q));
        out.push_back(Gate::s(q));
        for (std::size_t t = 0; t < n; t++) {
            if (t != q) {
                out.push_back(Gate::cnot(q, t));
            }
        }
    }
    return out;
}

// Same signed group iff the oracle agrees on every signed Pauli.
bool same_group(const StabiliserTableau& a, const StabiliserTableau& b) {
    for (const auto& p : all_paulis(a.num_qubits(), true)) {
        if (a.expectation(p) != b.expectation(p)) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST(computational_basis_state, examples) {
    EXPECT_EQ(StabiliserTableau::computational_basis_state(1, 1), tableau({"+Z"}));
    EXPECT_EQ(StabiliserTableau::computational_basis_state(3, 3), tableau({"+ZII", "+IZI", "+IIZ"}));
    auto mixed = StabiliserTableau::computational_basis_state(3, 1);
    EXPECT_EQ(mixed.num_generators(), 1u);
    EXPECT_FALSE(mixed.is_pure());
    EXPECT_EQ(mixed.generators()[0], PauliOperator::parse("+ZII"));
    EXPECT_THROW(StabiliserTableau::computational_basis_state(3, 0), BadDimensions);
    EXPECT_THROW(StabiliserTableau::computational_basis_state(3, 4), BadDimensions);
}

TEST(stabiliser_tableau, rejects_invalid_generators) {
    EXPECT_THROW(tableau({"+X", "+Z"}), InvalidGenerators);          // anticommute
    EXPECT_THROW(tableau({"+ZI", "+IZ", "+ZZ"}), InvalidGenerators); // too many / dependent
    EXPECT_THROW(tableau({"+ZZI", "+ZZI"}), InvalidGenerators);      // dependent
    EXPECT_THROW(tableau({"+ZII", "-ZII"}), InvalidGenerators);      // would contain -I
    EXPECT_THROW(tableau({"-II"}), InvalidGenerators);               // +-identity
    EXPECT_THROW(StabiliserTableau(2, {}), InvalidGenerators);
    EXPECT_THROW(StabiliserTableau(2, {PauliOperator::parse("Z")}), InvalidGenerators);
}

TEST(apply_gate, single_gate_examples) {
    EXPECT_EQ(tableau({"+Z"}).apply_gate(Gate::h(0)), tableau({"+X"}));
    EXPECT_EQ(tableau({"+X"}).apply_gate(Gate::s(0)), tableau({"+Y"}));
    EXPECT_EQ(tableau({"+Y"}).apply_gate(Gate::s(0)), tableau({"-X"}));
    EXPECT_EQ(tableau({"+Y"}).apply_gate(Gate::h(0)), tableau({"-Y"}));
}

TEST(apply_gate, bell_state_preparation) {
    auto bell = tableau({"+ZI", "+IZ"}).apply_gate(Gate::h(0)).apply_gate(Gate::cnot(0, 1));
    EXPECT_TRUE(same_group(bell, tableau({"+XX", "+ZZ"})));
    // Applied in the other order the CNOT acts on |00> and does nothing.
    auto plus_zero = tableau({"+ZI", "+IZ"}).apply_gate(Gate::cnot(0, 1)).apply_gate(Gate::h(0));
    EXPECT_TRUE(same_group(plus_zero, tableau({"+XI", "+IZ"})));
}

TEST(apply_gate, bad_indices) {
    auto t = StabiliserTableau::computational_basis_state(2, 2);
    EXPECT_THROW(t.apply_gate(Gate::h(2)), BadQubitIndex);
    EXPECT_THROW(t.apply_gate(Gate::cnot(1, 1)), BadQubitIndex);
    EXPECT_THROW(t.apply_gate(Gate::cnot(5, 0)), BadQubitIndex);
}

TEST(apply_gate, conjugation_matches_dense_unitaries) {
    for (std::size_t n = 1; n <= 3; n++) {
        for (const Gate& g : all_gates(n)) {
            DenseMatrix u = gate_unitary(g, n);
            DenseMatrix ud = u.adjoint();
            for (const auto& p : all_paulis(n, true)) {
                DenseMatrix expected = u * pauli_to_dense(p) * ud;
                ASSERT_LT(pauli_to_dense(conjugate(p, g)).max_abs_diff(expected), 1e-12)
                    << g.str() << " on " << p.str();
            }
        }
    }
}

TEST(apply_circuit, matches_gate_by_gate_application) {
    Rng rng(12);
    for (int rep = 0; rep < 40; rep++) {
        std::size_t n = 1 + rng.below(70);
        std::size_t l = 1 + rng.below(n);
        auto start = StabiliserTableau::computational_basis_state(n, l);
        auto circuit = random_circuit(n, rng.next());
        auto step = start;
        for (const auto& g : circuit) {
            step = step.apply_gate(g);
        }
        EXPECT_EQ(apply_circuit(start, circuit), step);
    }
}

TEST(random_circuit, shape) {
    auto c = random_circuit(5, 3);
    EXPECT_EQ(c.size(), 50u);
    std::map<Gate::Kind, int> kinds;
    for (const auto& g : c) {
        kinds[g.kind]++;
        EXPECT_LT(g.target, 5u);
        if (g.kind == Gate::Kind::CNOT) {
            EXPECT_NE(g.control, g.target);
        }
    }
    EXPECT_EQ(kinds.size(), 3u);
    for (const auto& g : random_circuit(1, 3)) {
        EXPECT_NE(g.kind, Gate::Kind::CNOT);
    }
}

TEST(random_state, deterministic_and_valid) {
    EXPECT_EQ(random_state(6, 4, 99), random_state(6, 4, 99));
    EXPECT_NE(random_state(6, 6, 1), random_state(6, 6, 2));
    for (std::uint64_t seed = 0; seed < 20; seed++) {
        auto t = random_state(4, 4, seed);
        EXPECT_EQ(t.num_generators(), 4u);
        for (std::size_t i = 0; i < 4; i++) {
            for (std::size_t j = 0; j < 4; j++) {
                EXPECT_TRUE(commutes(t.generators()[i], t.generators()[j]));
            }
        }
        EXPECT_EQ(t.basis().rank(), 4u);
    }
    EXPECT_THROW(random_state(3, 0, 1), BadDimensions);
    EXPECT_THROW(random_state(3, 4, 1), BadDimensions);
}

TEST(random_state, two_qubit_sweep_gives_valid_dense_states) {
    for (std::uint64_t seed = 0; seed < 10000; seed++) {
        auto t = random_state(2, 2, seed);
        DenseMatrix rho = state_from_generators(t.generators(), 2);
        ASSERT_TRUE(validate_state(rho, 2, 2).ok()) << seed;
    }
}

TEST(expectation, three_values_on_zero_state) {
    auto t = tableau({"+Z"});
    EXPECT_EQ(t.expectation(PauliOperator::parse("+Z")), Expectation::One);
    EXPECT_EQ(t.expectation(PauliOperator::parse("-Z")), Expectation::Zero);
    EXPECT_EQ(t.expectation(PauliOperator::parse("+X")), Expectation::Half);
    EXPECT_EQ(t.expectation(PauliOperator::parse("+I")), Expectation::One);
    EXPECT_EQ(t.expectation(PauliOperator::parse("-I")), Expectation::Zero);
    EXPECT_THROW(t.expectation(PauliOperator::parse("ZZ")), DimensionMismatch);
}

TEST(expectation, bell_state) {
    auto bell = tableau({"+XX", "+ZZ"});
    EXPECT_EQ(bell.expectation(PauliOperator::parse("+YY")), Expectation::Zero);
    EXPECT_EQ(bell.expectation(PauliOperator::parse("-YY")), Expectation::One);
    EXPECT_EQ(bell.expectation(PauliOperator::parse("+II")), Expectation::One);
    EXPECT_EQ(bell.expectation(PauliOperator::parse("+XY")), Expectation::Half);
    DenseMatrix rho = state_from_generators(bell.generators(), 2);
    EXPECT_NEAR(expectation_dense(rho, PauliOperator::parse("+YY")), 0.0, 1e-12);
}

TEST(expectation, matches_dense_for_random_states) {
    Rng rng(5);
    for (int rep = 0; rep < 60; rep++) {
        std::size_t n = 1 + rng.below(8);
        std::size_t l = 1 + rng.below(n);
        auto t = random_state(n, l, rng.next());
        DenseMatrix rho = state_from_generators(t.generators(), n);
        for (int k = 0; k < 20; k++) {
            // Half the probes are group elements so all three values occur.
            PauliOperator p = rng.coin() ? t.sample_group_element(rng) : random_pauli(n, rng);
            if (rng.coin()) {
                p.set_negative(!p.negative());
            }
            ASSERT_NEAR(to_double(t.expectation(p)), expectation_dense(rho, p), 1e-9) << p.str();
        }
    }
}

TEST(expectation, purity_dichotomy) {
    Rng rng(6);
    for (int rep = 0; rep < 30; rep++) {
        std::size_t n = 1 + rng.below(3);
        std::size_t l = 1 + rng.below(n);
        auto t = random_state(n, l, rng.next());
        for (const auto& p : all_paulis(n, true)) {
            bool commuting = true;
            for (const auto& g : t.generators()) {
                commuting = commuting && commutes(g, p);
            }
            if (!commuting) {
                EXPECT_EQ(t.expectation(p), Expectation::Half);
            } else if (t.is_pure()) {
                EXPECT_NE(t.expectation(p), Expectation::Half) << p.str();
            } else if (!t.basis().contains(p.symplectic_bits())) {
                EXPECT_EQ(t.expectation(p), Expectation::Half) << p.str();
            }
        }
    }
}

TEST(expectation, trichotomy_large_n) {
    Rng rng(7);
    for (int rep = 0; rep < 20; rep++) {
        std::size_t n = 9 + rng.below(56);
        auto t = random_state(n, 1 + rng.below(n), rng.next());
        for (int k = 0; k < 20; k++) {
            PauliOperator g = t.sample_group_element(rng);
            EXPECT_EQ(t.expectation(g), Expectation::One);
            EXPECT_EQ(t.expectation(g.negated()), Expectation::Zero);
            // A random Pauli almost surely anticommutes with something.
            Expectation e = t.expectation(random_pauli(n, rng));
            EXPECT_TRUE(e == Expectation::Zero || e == Expectation::Half || e == Expectation::One);
        }
    }
}

TEST(sample_group_element, two_element_group_is_uniform) {
    auto t = tableau({"+Z"});
    Rng rng(42);
    int z = 0;
    const int draws = 10000;
    for (int i = 0; i < draws; i++) {
        PauliOperator e = t.sample_group_element(rng);
        EXPECT_EQ(t.expectation(e), Expectation::One);
        if (e == PauliOperator::parse("+Z")) {
            z++;
        } else {
            EXPECT_EQ(e, PauliOperator::parse("+I"));
        }
    }
    EXPECT_NEAR(static_cast<double>(z) / draws, 0.5, 0.02);
}

TEST(sample_group_element, bell_support) {
    auto t = tableau({"+XX", "+ZZ"});
    Rng rng(1);
    std::set<std::string> seen;
    for (int i = 0; i < 1000; i++) {
        seen.insert(t.sample_group_element(rng).str());
    }
    EXPECT_EQ(seen, (std::set<std::string>{"+II", "+XX", "+ZZ", "-YY"}));
}

TEST(enumerate_group, examples) {
    auto z = tableau({"+Z"}).enumerate_group();
    EXPECT_EQ(z, (std::vector<PauliOperator>{PauliOperator::parse("+I"), PauliOperator::parse("+Z")}));
    std::vector<std::string> bell;
    for (const auto& p : tableau({"+XX", "+ZZ"}).enumerate_group()) {
        bell.push_back(p.str());
    }
    EXPECT_EQ(bell, (std::vector<std::string>{"+II", "+XX", "+ZZ", "-YY"}));
    EXPECT_THROW(StabiliserTableau::computational_basis_state(21, 21).enumerate_group(), GroupTooLarge);
}

TEST(enumerate_group, size_distinct_and_closed) {
    Rng rng(9);
    for (int rep = 0; rep < 20; rep++) {
        std::size_t n = 1 + rng.below(6);
        std::size_t l = 1 + rng.below(n);
        auto t = random_state(n, l, rng.next());
        auto group = t.enumerate_group();
        ASSERT_EQ(group.size(), std::size_t{1} << l);
        std::set<std::string> members;
        for (const auto& g : group) {
            members.insert(g.unsigned_part().str());
        }
        // Distinct even ignoring signs, so -I never appears.
        EXPECT_EQ(members.size(), std::size_t{1} << l);
        std::set<std::string> signed_members;
        for (const auto& g : group) {
            signed_members.insert(g.str());
        }
        for (std::size_t i = 0; i < group.size(); i++) {
            for (std::size_t j = 0; j < group.size(); j++) {
                PhasedPauli prod = multiply(group[i], group[j]);
                ASSERT_TRUE(prod.hermitian());
                EXPECT_TRUE(signed_members.count(prod.to_signed().str()));
            }
        }
    }
}
