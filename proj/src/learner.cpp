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

#include "stabpac/learner.hpp"

#include <cmath>
#include <string>

#include "stabpac/error.hpp"

namespace stabpac {

namespace {

void require_qubits(const PauliOperator& p, std::size_t n) {
    if (p.num_qubits() != n) {
        throw DimensionMismatch(
            "Pauli " + p.str() + " does not act on " + std::to_string(n) + " qubits");
    }
}

}  // namespace

LearnedHypothesis::LearnedHypothesis(std::size_t num_qubits) : n_(num_qubits), basis_(2 * num_qubits) {
}

LearnedHypothesis::LearnedHypothesis(std::size_t num_qubits, std::vector<PauliOperator> generators)
    : LearnedHypothesis(num_qubits) {
    for (auto& g : generators) {
        if (g.num_qubits() != n_) {
            throw InvalidGenerators("generator " + g.str() + " does not act on " + std::to_string(n_) + " qubits");
        }
        for (const auto& prev : generators_) {
            if (!commutes(prev, g)) {
                throw InvalidGenerators("generators " + prev.str() + " and " + g.str() + " anticommute");
            }
        }
        if (!std::holds_alternative<IncrementalBasis::Added>(basis_.insert(g.symplectic_bits()))) {
            throw InvalidGenerators("generator " + g.str() + " depends on the earlier generators");
        }
        generators_.push_back(std::move(g));
    }
}

Expectation LearnedHypothesis::predict(const PauliOperator& p) const {
    require_qubits(p, n_);
    return group_expectation(generators_, basis_, p);
}

Learner::Learner(std::size_t num_qubits) : hypothesis_(num_qubits) {
}

void Learner::observe(const TrainingExample& example) {
    std::size_t index = seen_++;
    const PauliOperator& p = example.pauli;
    require_qubits(p, hypothesis_.n_);
    std::optional<Expectation> label = snap_expectation(example.label);
    if (!label) {
        throw BadLabel(
            "example " + std::to_string(index) + " (" + p.str() + ") has label " + std::to_string(example.label) +
            ", expected 0, 1/2 or 1");
    }
    auto& gens = hypothesis_.generators_;
    auto& basis = hypothesis_.basis_;

    if (*label == Expectation::Half) {
        // Consistent unless +-P is already in the group; a commuting
        // non-member is fine for mixed states.
        for (const auto& g : gens) {
            if (!commutes(g, p)) {
                return;
            }
        }
        if (basis.contains(p.symplectic_bits())) {
            throw InconsistentTrainingSet(
                "example " + std::to_string(index) + " labels " + p.str() +
                " as 1/2 but the learned generators already fix its value");
        }
        undetermined_.push_back(p);
        return;
    }

    // Tr(P rho) = 2 Tr(E rho) - 1 is +-1 here; the candidate stabiliser is Tr(P rho) P.
    PauliOperator candidate = *label == Expectation::One ? p : p.negated();
    for (const auto& g : gens) {
        if (!commutes(g, candidate)) {
            throw InconsistentTrainingSet(
                "example " + std::to_string(index) + " claims " + candidate.str() +
                " stabilises the state but it anticommutes with " + g.str());
        }
    }
    auto result = basis.insert(candidate.symplectic_bits());
    if (std::holds_alternative<IncrementalBasis::Added>(result)) {
        gens.push_back(std::move(candidate));
        return;
    }
    const auto& c = std::get<IncrementalBasis::Dependent>(result).coefficients;
    int implied = signed_product(gens, c, hypothesis_.n_).sign();
    if (implied != candidate.sign()) {
        throw InconsistentTrainingSet(
            "example " + std::to_string(index) + " claims " + candidate.str() +
            " stabilises the state but the learned generators give the opposite sign");
    }
}

LearnedHypothesis Learner::finish() const {
    for (const auto& p : undetermined_) {
        if (hypothesis_.predict(p) != Expectation::Half) {
            throw InconsistentTrainingSet(
                "a label-1/2 example (" + p.str() + ") is determined by the final generator list");
        }
    }
    return hypothesis_;
}

LearnedHypothesis learn(std::span<const TrainingExample> examples, std::size_t num_qubits) {
    Learner learner(num_qubits);
    for (const auto& e : examples) {
        learner.observe(e);
    }
    return learner.finish();
}

DenseMatrix dense_hypothesis(const LearnedHypothesis& h) {
    std::size_t n = h.num_qubits();
    if (n > kMaxDenseQubits) {
        throw TooLarge("hypothesis on " + std::to_string(n) + " qubits is too large to densify");
    }
    DenseMatrix sigma(n);
    for (const auto& s : enumerate_group(h.generators(), n)) {
        sigma += pauli_to_dense(s);
    }
    sigma *= DenseMatrix::Scalar{std::ldexp(1.0, -static_cast<int>(n)), 0};
    return sigma;
}

}  // namespace stabpac
