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

#include "stabpac/text_io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "stabpac/error.hpp"

namespace stabpac {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

template <typename T>
T parse_number(std::string_view text, const std::string& what) {
    text = trim(text);
    T v{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw FormatError("bad value for " + what + ": '" + std::string(text) + "'");
    }
    return v;
}

bool content_line(std::string_view line) {
    line = trim(line);
    return !line.empty() && line.front() != '#';
}

}  // namespace

void write_generator_file(std::ostream& out, std::size_t num_qubits, std::span<const PauliOperator> generators) {
    out << "n=" << num_qubits << " l=" << generators.size() << "\n";
    for (const auto& g : generators) {
        out << g.str() << "\n";
    }
}

GeneratorFile read_generator_file(std::istream& in) {
    std::string line;
    GeneratorFile f;
    std::size_t declared = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (!content_line(line)) {
            continue;
        }
        std::string_view body = trim(line);
        if (!have_header) {
            unsigned long long n = 0;
            unsigned long long l = 0;
            char tail = 0;
            if (std::sscanf(std::string(body).c_str(), "n=%llu l=%llu %c", &n, &l, &tail) != 2 || n == 0) {
                throw FormatError("expected header 'n=<n> l=<l>', got '" + std::string(body) + "'");
            }
            f.num_qubits = n;
            declared = l;
            have_header = true;
            continue;
        }
        PauliOperator p = PauliOperator::parse(body);
        if (p.num_qubits() != f.num_qubits) {
            throw FormatError("generator '" + std::string(body) + "' does not have " + std::to_string(f.num_qubits) + " factors");
        }
        f.generators.push_back(std::move(p));
    }
    if (!have_header) {
        throw FormatError("missing 'n=<n> l=<l>' header");
    }
    if (f.generators.size() != declared) {
        throw FormatError(
            "header declares " + std::to_string(declared) + " generators, found " + std::to_string(f.generators.size()));
    }
    return f;
}

void write_tableau(std::ostream& out, const StabiliserTableau& t) {
    write_generator_file(out, t.num_qubits(), t.generators());
}

StabiliserTableau read_tableau(std::istream& in) {
    GeneratorFile f = read_generator_file(in);
    return StabiliserTableau(f.num_qubits, std::move(f.generators));
}

void write_hypothesis(std::ostream& out, const LearnedHypothesis& h) {
    write_generator_file(out, h.num_qubits(), h.generators());
}

LearnedHypothesis read_hypothesis(std::istream& in) {
    GeneratorFile f = read_generator_file(in);
    return LearnedHypothesis(f.num_qubits, std::move(f.generators));
}

void write_training_set(std::ostream& out, std::size_t num_qubits, std::span<const TrainingExample> examples) {
    out << json{{"format", "stabpac-training"}, {"schema", kSchemaVersion}, {"n", num_qubits}}.dump() << "\n";
    for (const auto& e : examples) {
        out << json{{"pauli", e.pauli.str()}, {"label", e.label}}.dump() << "\n";
    }
}

TrainingFile read_training_set(std::istream& in) {
    TrainingFile f;
    std::string line;
    bool have_header = false;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (trim(line).empty()) {
            continue;
        }
        json record;
        try {
            record = json::parse(line);
        } catch (const json::exception& e) {
            throw FormatError("training file line " + std::to_string(line_no) + ": " + e.what());
        }
        try {
            if (!have_header) {
                if (record.value("format", "") != "stabpac-training") {
                    throw FormatError("training file must start with a stabpac-training header");
                }
                if (record.at("schema").get<int>() != kSchemaVersion) {
                    throw FormatError("unsupported training schema " + record.at("schema").dump());
                }
                f.num_qubits = record.at("n").get<std::size_t>();
                have_header = true;
                continue;
            }
            TrainingExample e{PauliOperator::parse(record.at("pauli").get<std::string>()), record.at("label").get<double>()};
            if (e.pauli.num_qubits() != f.num_qubits) {
                throw FormatError("record " + e.pauli.str() + " does not have " + std::to_string(f.num_qubits) + " factors");
            }
            f.examples.push_back(std::move(e));
        } catch (const json::exception& e) {
            throw FormatError("training file line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!have_header) {
        throw FormatError("empty training file");
    }
    return f;
}

ExperimentConfig parse_config(std::istream& in) {
    ExperimentConfig c;
    std::string line;
    while (std::getline(in, line)) {
        std::string_view body = line;
        if (auto hash = body.find('#'); hash != std::string_view::npos) {
            body = body.substr(0, hash);
        }
        body = trim(body);
        if (body.empty()) {
            continue;
        }
        auto eq = body.find('=');
        if (eq == std::string_view::npos) {
            throw FormatError("config line without '=': '" + std::string(body) + "'");
        }
        std::string key(trim(body.substr(0, eq)));
        std::string_view value = trim(body.substr(eq + 1));
        if (key == "schema") {
            if (parse_number<int>(value, key) != kSchemaVersion) {
                throw FormatError("unsupported config schema " + std::string(value));
            }
        } else if (key == "n") {
            c.num_qubits = parse_number<std::size_t>(value, key);
        } else if (key == "l") {
            c.num_generators = parse_number<std::size_t>(value, key);
        } else if (key == "distribution") {
            c.distribution = MeasurementDistribution::parse(value);
        } else if (key == "m") {
            if (value == "auto") {
                c.m.reset();
            } else {
                c.m = parse_number<std::size_t>(value, key);
            }
        } else if (key == "trials") {
            c.trials = parse_number<std::size_t>(value, key);
        } else if (key == "test_set_size") {
            c.test_set_size = parse_number<std::size_t>(value, key);
        } else if (key == "gamma") {
            c.gamma = parse_number<double>(value, key);
        } else if (key == "epsilon") {
            c.epsilon = parse_number<double>(value, key);
        } else if (key == "delta") {
            c.delta = parse_number<double>(value, key);
        } else if (key == "K") {
            c.k = parse_number<double>(value, key);
        } else if (key == "master_seed") {
            c.master_seed = parse_number<std::uint64_t>(value, key);
        } else if (key == "threads") {
            c.threads = parse_number<std::size_t>(value, key);
        } else {
            throw FormatError("unknown config key '" + key + "'");
        }
    }
    return c;
}

std::string format_config(const ExperimentConfig& c) {
    std::ostringstream out;
    out << "schema = " << kSchemaVersion << "\n";
    out << "n = " << c.num_qubits << "\n";
    out << "l = " << c.num_generators << "\n";
    out << "distribution = " << c.distribution.str() << "\n";
    out << "m = " << (c.m ? std::to_string(*c.m) : std::string("auto")) << "\n";
    out << "trials = " << c.trials << "\n";
    out << "test_set_size = " << c.test_set_size << "\n";
    out << "gamma = " << json(c.gamma).dump() << "\n";
    out << "epsilon = " << json(c.epsilon).dump() << "\n";
    out << "delta = " << json(c.delta).dump() << "\n";
    out << "K = " << json(c.k).dump() << "\n";
    out << "master_seed = " << c.master_seed << "\n";
    out << "threads = " << c.threads << "\n";
    return out.str();
}

std::string report_to_json(const ExperimentReport& r, bool include_timing) {
    const auto& c = r.config;
    json config = {
        {"n", c.num_qubits},
        {"l", c.num_generators},
        {"distribution", c.distribution.str()},
        {"m", c.m ? json(*c.m) : json("auto")},
        {"trials", c.trials},
        {"test_set_size", c.test_set_size},
        {"gamma", c.gamma},
        {"epsilon", c.epsilon},
        {"delta", c.delta},
        {"K", c.k},
        {"master_seed", c.master_seed},
        {"state_sampler", "random Clifford circuit, 2n^2 gates from {H, S, CNOT}"},
    };
    if (include_timing) {
        config["threads"] = c.threads;
    }
    json trials = json::array();
    for (const auto& t : r.trials) {
        json row = {
            {"index", t.index},
            {"state_seed", t.seeds.state},
            {"train_seed", t.seeds.train},
            {"test_seed", t.seeds.test},
            {"learned_rank", t.learned_rank},
            {"errors", t.errors},
            {"uncharacterised_errors", t.uncharacterised_errors},
            {"empirical_error", t.empirical_error},
        };
        if (include_timing) {
            row["timing"] = {{"learn_seconds", t.learn_seconds}, {"predict_seconds", t.predict_seconds}};
        }
        trials.push_back(std::move(row));
    }
    json doc = {
        {"format", "stabpac-report"},
        {"schema", kSchemaVersion},
        {"config", std::move(config)},
        {"m", r.m},
        {"aggregates",
         {{"mean_error", r.mean_error},
          {"median_error", r.median_error},
          {"max_error", r.max_error},
          {"zero_error_fraction", r.zero_error_fraction}}},
        {"trials", std::move(trials)},
    };
    return doc.dump(2) + "\n";
}

std::string report_summary(const ExperimentReport& r) {
    const auto& c = r.config;
    std::ostringstream out;
    char buf[160];
    out << "n=" << c.num_qubits << " l=" << c.num_generators << " m=" << r.m << " trials=" << c.trials
        << " test_set_size=" << c.test_set_size << " gamma=" << c.gamma << " K=" << c.k
        << " master_seed=" << c.master_seed << "\n";
    out << "distribution: " << c.distribution.str() << "\n";
    std::snprintf(buf, sizeof(buf), "%8s %6s %8s %10s %10s\n", "trial", "rank", "errors", "error", "learn_ms");
    out << buf;
    for (const auto& t : r.trials) {
        std::snprintf(
            buf, sizeof(buf), "%8zu %6zu %8zu %10.4f %10.3f\n", t.index, t.learned_rank, t.errors, t.empirical_error,
            t.learn_seconds * 1e3);
        out << buf;
    }
    std::snprintf(
        buf, sizeof(buf), "mean %.4f  median %.4f  max %.4f  zero-error trials %.1f%%\n", r.mean_error, r.median_error,
        r.max_error, 100 * r.zero_error_fraction);
    out << buf;
    return out.str();
}

}  // namespace stabpac
