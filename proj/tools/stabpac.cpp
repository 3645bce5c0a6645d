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

// Command-line front end: state generation, labelling, learning, prediction,
// experiments, sample-complexity queries and dense verification.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or input error,
// 3 inconsistent training data.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stabpac/dense.hpp"
#include "stabpac/error.hpp"
#include "stabpac/harness.hpp"
#include "stabpac/learner.hpp"
#include "stabpac/tableau.hpp"
#include "stabpac/text_io.hpp"

using namespace stabpac;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconsistent = 3;

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open '" + path + "' for reading");
    }
    return in;
}

// Writes through `body` to `path`, or to stdout when path is empty or "-".
template <typename F>
void write_out(const std::string& path, F&& body) {
    if (path.empty() || path == "-") {
        body(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw FormatError("cannot open '" + path + "' for writing");
    }
    body(out);
    if (!out) {
        throw FormatError("failed writing '" + path + "'");
    }
}

bool to_stdout(const std::string& path) {
    return path.empty() || path == "-";
}

// Human-facing notes go to stderr whenever stdout carries the data.
std::ostream& note_stream(const std::string& out_path) {
    return to_stdout(out_path) ? std::cerr : std::cout;
}

int cmd_verify(const std::string& path, const std::string& train_path) {
    auto in = open_in(path);
    GeneratorFile f = read_generator_file(in);
    std::size_t n = f.num_qubits;
    std::size_t l = f.generators.size();
    if (n > kMaxDenseQubits) {
        throw TooLarge("verify supports at most " + std::to_string(kMaxDenseQubits) + " qubits");
    }
    LearnedHypothesis h(n, f.generators);
    DenseMatrix product_form = state_from_generators(f.generators, n);
    DenseMatrix sum_form = dense_hypothesis(h);
    StateReport report = validate_state(product_form, l, n);
    double form_gap = product_form.max_abs_diff(sum_form);

    std::printf("n=%zu l=%zu\n", n, l);
    std::printf("hermitian          %-4s residual %.3e\n", report.hermitian() ? "ok" : "FAIL", report.hermitian_residual);
    std::printf("trace              %-4s residual %.3e\n", report.unit_trace() ? "ok" : "FAIL", report.trace_residual);
    std::printf(
        "projector_identity %-4s residual %.3e\n", report.projector_identity() ? "ok" : "FAIL",
        report.projector_residual);
    std::printf("purity             %.12g (expected %.12g)\n", report.purity, std::ldexp(1.0, static_cast<int>(l) - static_cast<int>(n)));
    bool forms_agree = form_gap <= 1e-12;
    std::printf("product_vs_sum     %-4s residual %.3e\n", forms_agree ? "ok" : "FAIL", form_gap);
    bool ok = report.ok() && forms_agree;

    if (!train_path.empty()) {
        auto tin = open_in(train_path);
        TrainingFile t = read_training_set(tin);
        if (t.num_qubits != n) {
            throw DimensionMismatch("training set is on " + std::to_string(t.num_qubits) + " qubits, state on " + std::to_string(n));
        }
        double worst = 0;
        for (const auto& e : t.examples) {
            worst = std::max(worst, std::abs(expectation_dense(product_form, e.pauli) - e.label));
        }
        bool fits = worst <= 1e-9;
        std::printf(
            "training_labels    %-4s max residual %.3e over %zu examples\n", fits ? "ok" : "FAIL", worst,
            t.examples.size());
        ok = ok && fits;
    }
    std::printf("%s\n", ok ? "VERIFIED" : "VERIFICATION FAILED");
    return ok ? 0 : kExitVerifyFailed;
}

// "-XZ" would otherwise be read as a cluster of short flags. None of our
// short flags are I, X, Y or Z, so a "--" is slipped in before the first
// such token to make it positional.
std::vector<std::string> escape_negative_paulis(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    for (std::size_t i = 0; i < args.size(); i++) {
        const std::string& a = args[i];
        if (a == "--") {
            break;
        }
        if (a.size() >= 2 && a[0] == '-' && a.find_first_not_of("IXYZ", 1) == std::string::npos) {
            args.insert(args.begin() + static_cast<std::ptrdiff_t>(i), "--");
            break;
        }
    }
    std::reverse(args.begin(), args.end());
    return args;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Learn stabiliser states from two-outcome Pauli measurements", "stabpac"};
    app.require_subcommand(1);

    std::size_t n = 0;
    std::size_t l = 0;
    std::uint64_t seed = 0;
    std::string out_path;
    auto* gen_state = app.add_subcommand("gen-state", "Write a random stabiliser state (tableau file)");
    gen_state->add_option("-n,--qubits", n, "Qubit count")->required()->check(CLI::PositiveNumber);
    gen_state->add_option("-l,--generators", l, "Generator count (1..n)")->required();
    gen_state->add_option("--seed", seed, "Random seed");
    gen_state->add_option("-o,--out", out_path, "Output file (default stdout)");

    std::string state_path;
    std::string pauli_text;
    auto* expect = app.add_subcommand("expect", "Print Tr(E rho) for E = (I + P)/2");
    expect->add_option("state", state_path, "Tableau file")->required();
    expect->add_option("pauli", pauli_text, "Signed Pauli string, e.g. -XZ")->required();

    std::size_t m = 0;
    std::string dist_text = "default";
    auto* gen_train = app.add_subcommand("gen-train", "Sample a labelled training set from a state");
    gen_train->add_option("state", state_path, "Tableau file")->required();
    gen_train->add_option("-m,--examples", m, "Number of examples")->required();
    gen_train->add_option("--seed", seed, "Random seed");
    gen_train->add_option("--dist", dist_text, "Measurement distribution (see README)");
    gen_train->add_option("-o,--out", out_path, "Output file (default stdout)");

    std::string train_path;
    auto* learn_cmd = app.add_subcommand("learn", "Harvest generators from a training set");
    learn_cmd->add_option("train", train_path, "Training file")->required();
    learn_cmd->add_option("-o,--out", out_path, "Hypothesis file (default stdout)");

    std::string hyp_path;
    auto* predict = app.add_subcommand("predict", "Predict Tr(E rho) from a hypothesis");
    predict->add_option("hypothesis", hyp_path, "Hypothesis file")->required();
    predict->add_option("pauli", pauli_text, "Signed Pauli string")->required();

    std::string config_path;
    std::optional<std::size_t> threads;
    auto* experiment = app.add_subcommand("experiment", "Run a PAC experiment described by a config file");
    experiment->add_option("config", config_path, "Config file")->required();
    experiment->add_option("-o,--out", out_path, "Report file (default stdout)");
    experiment->add_option("--threads", threads, "Override the config's worker count")->check(CLI::PositiveNumber);

    double gamma = 0.25;
    double epsilon = 0.1;
    double delta = 0.05;
    double k = 1.0;
    auto* sc = app.add_subcommand("sample-complexity", "Training size from the PAC bound");
    sc->add_option("-n,--qubits", n, "Qubit count")->required();
    sc->add_option("--gamma", gamma, "Accuracy gamma in (0,1)");
    sc->add_option("--epsilon", epsilon, "Error fraction epsilon in (0,1)");
    sc->add_option("--delta", delta, "Failure probability delta in (0,1)");
    sc->add_option("-K,--constant", k, "Constant K > 0");

    std::string verify_path;
    auto* verify = app.add_subcommand("verify", "Dense check of a state or hypothesis file (n <= 12)");
    verify->add_option("file", verify_path, "Tableau or hypothesis file")->required();
    verify->add_option("--train", train_path, "Also check every label of this training file");

    try {
        auto args = escape_negative_paulis(argc, argv);
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*gen_state) {
            if (l < 1 || l > n) {
                throw BadDimensions("need 1 <= l <= n");
            }
            StabiliserTableau t = random_state(n, l, seed);
            write_out(out_path, [&](std::ostream& o) { write_tableau(o, t); });
            note_stream(out_path) << "generators: " << t.num_generators() << "\n";
        } else if (*expect) {
            auto in = open_in(state_path);
            StabiliserTableau t = read_tableau(in);
            std::cout << format_expectation(t.expectation(PauliOperator::parse(pauli_text))) << "\n";
        } else if (*gen_train) {
            auto in = open_in(state_path);
            StabiliserTableau t = read_tableau(in);
            auto dist = MeasurementDistribution::parse(dist_text);
            auto examples = generate_training_set(t, dist, m, seed);
            write_out(out_path, [&](std::ostream& o) { write_training_set(o, t.num_qubits(), examples); });
            note_stream(out_path) << "examples: " << examples.size() << "\n";
        } else if (*learn_cmd) {
            auto in = open_in(train_path);
            TrainingFile t = read_training_set(in);
            LearnedHypothesis h = learn(t.examples, t.num_qubits);
            write_out(out_path, [&](std::ostream& o) { write_hypothesis(o, h); });
            note_stream(out_path) << "generators: " << h.rank() << "\n";
        } else if (*predict) {
            auto in = open_in(hyp_path);
            LearnedHypothesis h = read_hypothesis(in);
            std::cout << format_expectation(h.predict(PauliOperator::parse(pauli_text))) << "\n";
        } else if (*experiment) {
            auto in = open_in(config_path);
            ExperimentConfig c = parse_config(in);
            if (threads) {
                c.threads = *threads;
            }
            ExperimentReport r = run_experiment(c);
            write_out(out_path, [&](std::ostream& o) { o << report_to_json(r); });
            note_stream(out_path) << report_summary(r);
        } else if (*sc) {
            std::cout << sample_complexity(n, gamma, epsilon, delta, k) << "\n";
        } else if (*verify) {
            return cmd_verify(verify_path, train_path);
        }
    } catch (const InconsistentTrainingSet& e) {
        std::cerr << "inconsistent training set: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const BadLabel& e) {
        std::cerr << "bad label: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
