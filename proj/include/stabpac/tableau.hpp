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

#ifndef STABPAC_TABLEAU_HPP
#define STABPAC_TABLEAU_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stabpac/gf2.hpp"
#include "stabpac/pauli.hpp"
#include "stabpac/rng.hpp"

namespace stabpac {

/// Tr(E rho) for E = (I + P)/2 on a stabiliser state only takes these values.
enum class Expectation : std::uint8_t { Zero, Half, One };

double to_double(Expectation e);
/// "0", "0.5" or "1".
std::string format_expectation(Expectation e);
/// Snaps a real to the nearest of {0, 1/2, 1} if within `tolerance`.
std::optional<Expectation> snap_expectation(double value, double tolerance = 1e-9);

struct Gate {
    enum class Kind : std::uint8_t { H, S, CNOT };
    Kind kind;
    std::size_t target;
    std::size_t control = 0;  // CNOT only

    static Gate h(std::size_t q) {
        return {Kind::H, q, 0};
    }
    static Gate s(std::size_t q) {
        return {Kind::S, q, 0};
    }
    static Gate cnot(std::size_t control, std::size_t target) {
        return {Kind::CNOT, target, control};
    }

    std::string str() const;
    friend bool operator==(const Gate&, const Gate&) = default;
};

/// Conjugates a single Pauli by a gate: returns G P G^dagger.
PauliOperator conjugate(const PauliOperator& p, const Gate& gate);

/// Value for `p` on the group generated by `generators`, where `basis` holds
/// their symplectic bits in the same order. 1 if p is in the group, 0 if -p
/// is, 1/2 otherwise.
Expectation group_expectation(
    std::span<const PauliOperator> generators, const IncrementalBasis& basis, const PauliOperator& p);

/// All 2^l products in binary-counter order (bit i of the counter selects
/// generator i). Throws GroupTooLarge when l > 20.
std::vector<PauliOperator> enumerate_group(std::span<const PauliOperator> generators, std::size_t num_qubits);

/// Stabiliser state given by l independent, commuting, signed generators.
/// l == n is a pure state, l < n the normalised projector onto the joint
/// +1 eigenspace.
class StabiliserTableau {
   public:
    /// Throws InvalidGenerators unless the generators are non-empty, act on
    /// `num_qubits` qubits, pairwise commute and are independent.
    StabiliserTableau(std::size_t num_qubits, std::vector<PauliOperator> generators);

    /// <Z_0, ..., Z_{l-1}>. Throws BadDimensions unless 1 <= l <= n.
    static StabiliserTableau computational_basis_state(std::size_t num_qubits, std::size_t num_generators);

    std::size_t num_qubits() const {
        return n_;
    }
    std::size_t num_generators() const {
        return generators_.size();
    }
    bool is_pure() const {
        return generators_.size() == n_;
    }
    std::span<const PauliOperator> generators() const {
        return generators_;
    }
    const IncrementalBasis& basis() const {
        return basis_;
    }

    /// Throws BadQubitIndex.
    StabiliserTableau apply_gate(const Gate& gate) const;

    /// Throws DimensionMismatch.
    Expectation expectation(const PauliOperator& p) const;

    /// Uniformly random group element.
    PauliOperator sample_group_element(Rng& rng) const;

    std::vector<PauliOperator> enumerate_group() const;

    friend bool operator==(const StabiliserTableau& a, const StabiliserTableau& b) {
        return a.n_ == b.n_ && a.generators_ == b.generators_;
    }

   private:
    std::size_t n_;
    std::vector<PauliOperator> generators_;
    IncrementalBasis basis_;
};

/// Applies a whole circuit at once. Generators are held column-wise so each
/// gate is a handful of word-parallel updates across all generators.
StabiliserTableau apply_circuit(const StabiliserTableau& t, std::span<const Gate> circuit);

/// 2n^2 gates uniform over {H, S, CNOT} (only {H, S} when n == 1) with
/// uniformly chosen qubits.
std::vector<Gate> random_circuit(std::size_t num_qubits, std::uint64_t seed);

/// computational_basis_state(n, l) evolved by random_circuit(n, seed).
StabiliserTableau random_state(std::size_t num_qubits, std::size_t num_generators, std::uint64_t seed);

}  // namespace stabpac

#endif
