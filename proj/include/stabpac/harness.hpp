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

#ifndef STABPAC_HARNESS_HPP
#define STABPAC_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "stabpac/learner.hpp"
#include "stabpac/rng.hpp"
#include "stabpac/tableau.hpp"

namespace stabpac {

/// Each qubit factor uniform over {I, X, Y, Z}.
struct UniformPauli {
    bool include_identity = false;  // otherwise the all-I string is redrawn
    bool random_sign = false;       // sign -1 with probability 1/2
    friend bool operator==(const UniformPauli&, const UniformPauli&) = default;
};

/// Uniform element of the target's stabiliser group, negated with the given
/// probability.
struct GroupUniform {
    double negate_probability = 0;
    friend bool operator==(const GroupUniform&, const GroupUniform&) = default;
};

struct MeasurementDistribution;

struct Mixture {
    std::vector<double> weights;
    std::vector<MeasurementDistribution> components;
    friend bool operator==(const Mixture&, const Mixture&);
};

/// Distribution D over two-outcome Pauli measurements.
///
/// Text form (used by config files and the CLI):
///   uniform(include_identity=0,random_sign=1)
///   group(negate_probability=0.25)
///   mixture(0.5*uniform(...),0.5*group(...))
///   default   -- the 50/50 mixture of the two lines above
struct MeasurementDistribution {
    std::variant<UniformPauli, GroupUniform, Mixture> kind;

    static MeasurementDistribution uniform(bool include_identity, bool random_sign);
    /// Throws BadParameters unless 0 <= p <= 1.
    static MeasurementDistribution group(double negate_probability);
    /// Throws BadParameters unless weights are positive and sum to 1 +- 1e-12.
    static MeasurementDistribution mixture(std::vector<double> weights, std::vector<MeasurementDistribution> parts);
    static MeasurementDistribution default_mix();

    /// Throws FormatError / BadParameters.
    static MeasurementDistribution parse(std::string_view text);
    std::string str() const;

    friend bool operator==(const MeasurementDistribution&, const MeasurementDistribution&) = default;
};

PauliOperator sample_measurement(const MeasurementDistribution& d, const StabiliserTableau& t, Rng& rng);

/// m independent draws from d, labelled by the tableau oracle. Draws come
/// sequentially from Rng(seed), so a shorter set is a prefix of a longer one.
std::vector<TrainingExample> generate_training_set(
    const StabiliserTableau& t, const MeasurementDistribution& d, std::size_t m, std::uint64_t seed);

/// Training-set size from the PAC bound for quantum states:
///   ceil( K/(g^2 e^2) * ( n/(g^2 e^2) * ln^2(1/(g e)) + ln(1/delta) ) ).
/// Throws BadParameters for gamma, epsilon, delta outside (0, 1), K <= 0,
/// n == 0, or a result that does not fit in 63 bits.
std::uint64_t sample_complexity(std::size_t n, double gamma, double epsilon, double delta, double k = 1.0);

struct ExperimentConfig {
    std::size_t num_qubits = 8;
    std::size_t num_generators = 8;
    MeasurementDistribution distribution = MeasurementDistribution::default_mix();
    /// Explicit training size; when empty it comes from sample_complexity().
    std::optional<std::size_t> m;
    std::size_t trials = 10;
    std::size_t test_set_size = 1000;
    double gamma = 0.25;
    double epsilon = 0.1;
    double delta = 0.05;
    double k = 1.0;
    std::uint64_t master_seed = 1;
    std::size_t threads = 1;

    /// Throws BadParameters.
    void validate() const;
    std::size_t training_size() const;
};

/// Seeds of trial i are pure functions of (master_seed, i).
struct TrialSeeds {
    std::uint64_t state;
    std::uint64_t train;
    std::uint64_t test;
};
TrialSeeds trial_seeds(std::uint64_t master_seed, std::size_t trial);

struct TrialResult {
    std::size_t index = 0;
    TrialSeeds seeds{};
    std::size_t learned_rank = 0;
    std::size_t errors = 0;  // test draws with |prediction - truth| > gamma
    /// Errors not of the form truth in {0,1}, prediction 1/2. Always zero
    /// unless the learner is broken.
    std::size_t uncharacterised_errors = 0;
    double empirical_error = 0;
    double learn_seconds = 0;
    double predict_seconds = 0;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::size_t m = 0;
    std::vector<TrialResult> trials;
    double mean_error = 0;
    double median_error = 0;
    double max_error = 0;
    double zero_error_fraction = 0;
};

/// Runs config.trials independent trials on config.threads worker threads.
/// Everything except the timing fields is independent of the thread count.
/// Throws BadParameters; InconsistentTrainingSet would indicate a bug.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// One trial, exposed for tests.
TrialResult run_trial(const ExperimentConfig& config, std::size_t m, std::size_t trial);

}  // namespace stabpac

#endif
