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

#ifndef STABPAC_LEARNER_HPP
#define STABPAC_LEARNER_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "stabpac/dense.hpp"
#include "stabpac/gf2.hpp"
#include "stabpac/pauli.hpp"
#include "stabpac/tableau.hpp"

namespace stabpac {

/// Measurement E = (I + pauli)/2 together with its observed Tr(E rho).
struct TrainingExample {
    PauliOperator pauli;
    double label = 0;
};

/// The generator list harvested from a training set. Predictions treat the
/// state as the normalised projector onto the group these generate.
class LearnedHypothesis {
   public:
    /// Empty hypothesis (no generators) on `num_qubits` qubits.
    explicit LearnedHypothesis(std::size_t num_qubits);
    /// Throws InvalidGenerators if the list is not independent and commuting.
    LearnedHypothesis(std::size_t num_qubits, std::vector<PauliOperator> generators);

    std::size_t num_qubits() const {
        return n_;
    }
    std::size_t rank() const {
        return generators_.size();
    }
    std::span<const PauliOperator> generators() const {
        return generators_;
    }
    const IncrementalBasis& basis() const {
        return basis_;
    }

    /// 1 if p is generated by the list, 0 if -p is, 1/2 otherwise.
    /// Throws DimensionMismatch.
    Expectation predict(const PauliOperator& p) const;

   private:
    friend class Learner;

    std::size_t n_;
    IncrementalBasis basis_;
    std::vector<PauliOperator> generators_;
};

/// Single-pass generator harvesting. Each example with label 1 (or 0)
/// contributes +P (or -P) as a new generator when its symplectic bits are
/// independent of those seen so far; dependent ones must agree in sign with
/// the group already spanned.
class Learner {
   public:
    explicit Learner(std::size_t num_qubits);

    /// Throws BadLabel, DimensionMismatch or InconsistentTrainingSet.
    void observe(const TrainingExample& example);

    /// Rechecks every label-1/2 example against the final group (one seen
    /// early could have become a group member later) and returns the result.
    /// Throws InconsistentTrainingSet.
    LearnedHypothesis finish() const;

    const LearnedHypothesis& current() const {
        return hypothesis_;
    }

   private:
    LearnedHypothesis hypothesis_;
    std::vector<PauliOperator> undetermined_;
    std::size_t seen_ = 0;
};

/// Learner over the whole sequence, in order.
LearnedHypothesis learn(std::span<const TrainingExample> examples, std::size_t num_qubits);

/// (1/2^n) * sum of every element of the generated group. Throws TooLarge
/// above kMaxDenseQubits.
DenseMatrix dense_hypothesis(const LearnedHypothesis& h);

}  // namespace stabpac

#endif
