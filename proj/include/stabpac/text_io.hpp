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

#ifndef STABPAC_TEXT_IO_HPP
#define STABPAC_TEXT_IO_HPP

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "stabpac/harness.hpp"
#include "stabpac/learner.hpp"
#include "stabpac/tableau.hpp"

namespace stabpac {

/// Schema version stamped into every file this module writes.
inline constexpr int kSchemaVersion = 1;

/// Tableau and hypothesis files share one layout:
///
///     n=<qubits> l=<generator count>
///     <signed Pauli>      (l lines, e.g. "+XXI")
///
/// Blank lines and lines starting with '#' are ignored.
struct GeneratorFile {
    std::size_t num_qubits = 0;
    std::vector<PauliOperator> generators;
};

void write_generator_file(std::ostream& out, std::size_t num_qubits, std::span<const PauliOperator> generators);
/// Throws FormatError or MalformedPauli.
GeneratorFile read_generator_file(std::istream& in);

void write_tableau(std::ostream& out, const StabiliserTableau& t);
StabiliserTableau read_tableau(std::istream& in);
void write_hypothesis(std::ostream& out, const LearnedHypothesis& h);
LearnedHypothesis read_hypothesis(std::istream& in);

/// Training sets are JSON lines. The first line is a header
///     {"format":"stabpac-training","schema":1,"n":4}
/// followed by one record per example
///     {"pauli":"-XZIY","label":0.5}
struct TrainingFile {
    std::size_t num_qubits = 0;
    std::vector<TrainingExample> examples;
};

void write_training_set(std::ostream& out, std::size_t num_qubits, std::span<const TrainingExample> examples);
/// Throws FormatError.
TrainingFile read_training_set(std::istream& in);

/// Experiment configs are `key = value` lines; '#' starts a comment.
///
///     schema        = 1
///     n             = 16
///     l             = 16
///     distribution  = group(negate_probability=0.25)
///     m             = 46          # or "auto" to use the sample-complexity bound
///     trials        = 100
///     test_set_size = 1000
///     gamma         = 0.25
///     epsilon       = 0.1         # only used when m = auto
///     delta         = 0.05        # only used when m = auto
///     K             = 1           # only used when m = auto
///     master_seed   = 7
///     threads       = 4
///
/// Omitted keys keep the ExperimentConfig defaults. Throws FormatError.
ExperimentConfig parse_config(std::istream& in);
std::string format_config(const ExperimentConfig& c);

/// Machine-readable report (JSON). Per-trial "timing" and the config's
/// thread count are dropped when include_timing is false; what remains is a
/// pure function of the config.
std::string report_to_json(const ExperimentReport& r, bool include_timing = true);
/// Fixed-width table for humans.
std::string report_summary(const ExperimentReport& r);

}  // namespace stabpac

#endif
