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

#include "stabpac/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "stabpac/error.hpp"

namespace stabpac {

bool operator==(const Mixture& a, const Mixture& b) {
    return a.weights == b.weights && a.components == b.components;
}

MeasurementDistribution MeasurementDistribution::uniform(bool include_identity, bool random_sign) {
    return {UniformPauli{include_identity, random_sign}};
}

MeasurementDistribution MeasurementDistribution::group(double negate_probability) {
    if (!(negate_probability >= 0 && negate_probability <= 1)) {
        throw BadParameters("negate_probability must lie in [0, 1]");
    }
    return {GroupUniform{negate_probability}};
}

MeasurementDistribution MeasurementDistribution::mixture(
    std::vector<double> weights, std::vector<MeasurementDistribution> parts) {
    if (weights.empty() || weights.size() != parts.size()) {
        throw BadParameters("mixture needs one positive weight per component");
    }
    double total = 0;
    for (double w : weights) {
        if (!(w > 0)) {
            throw BadParameters("mixture weights must be positive");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw BadParameters("mixture weights sum to " + std::to_string(total) + ", expected 1");
    }
    return {Mixture{std::move(weights), std::move(parts)}};
}

MeasurementDistribution MeasurementDistribution::default_mix() {
    return mixture({0.5, 0.5}, {uniform(false, true), group(0.25)});
}

namespace {

class DistributionParser {
   public:
    explicit DistributionParser(std::string_view text) : text_(text) {
    }

    MeasurementDistribution parse_all() {
        auto d = parse_dist();
        skip_space();
        if (pos_ != text_.size()) {
            fail("trailing characters");
        }
        return d;
    }

   private:
    [[noreturn]] void fail(const std::string& what) const {
        throw FormatError(
            "bad distribution '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            pos_++;
        }
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            pos_++;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    std::string_view word() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            pos_++;
        }
        return text_.substr(start, pos_ - start);
    }

    double number() {
        skip_space();
        double v = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
        if (ec != std::errc()) {
            fail("expected a number");
        }
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return v;
    }

    bool flag(double v) {
        if (v != 0 && v != 1) {
            fail("flags must be 0 or 1");
        }
        return v == 1;
    }

    MeasurementDistribution parse_dist() {
        std::string_view name = word();
        if (name == "default") {
            return MeasurementDistribution::default_mix();
        }
        if (name == "uniform") {
            UniformPauli u;
            expect('(');
            if (!accept(')')) {
                do {
                    std::string_view key = word();
                    expect('=');
                    double v = number();
                    if (key == "include_identity") {
                        u.include_identity = flag(v);
                    } else if (key == "random_sign") {
                        u.random_sign = flag(v);
                    } else {
                        fail("unknown uniform option '" + std::string(key) + "'");
                    }
                } while (accept(','));
                expect(')');
            }
            return MeasurementDistribution::uniform(u.include_identity, u.random_sign);
        }
        if (name == "group") {
            double p = 0;
            expect('(');
            if (!accept(')')) {
                std::string_view key = word();
                if (key != "negate_probability") {
                    fail("unknown group option '" + std::string(key) + "'");
                }
                expect('=');
                p = number();
                expect(')');
            }
            return MeasurementDistribution::group(p);
        }
        if (name == "mixture") {
            std::vector<double> weights;
            std::vector<MeasurementDistribution> parts;
            expect('(');
            do {
                weights.push_back(number());
                expect('*');
                parts.push_back(parse_dist());
            } while (accept(','));
            expect(')');
            return MeasurementDistribution::mixture(std::move(weights), std::move(parts));
        }
        fail("unknown distribution '" + std::string(name) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string shortest(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

}  // namespace

MeasurementDistribution MeasurementDistribution::parse(std::string_view text) {
    return DistributionParser(text).parse_all();
}

std::string MeasurementDistribution::str() const {
    if (const auto* u = std::get_if<UniformPauli>(&kind)) {
        return std::string("uniform(include_identity=") + (u->include_identity ? "1" : "0") +
               ",random_sign=" + (u->random_sign ? "1" : "0") + ")";
    }
    if (const auto* g = std::get_if<GroupUniform>(&kind)) {
        return "group(negate_probability=" + shortest(g->negate_probability) + ")";
    }
    const auto& m = std::get<Mixture>(kind);
    std::string out = "mixture(";
    for (std::size_t i = 0; i < m.weights.size(); i++) {
        if (i) {
            out += ",";
        }
        out += shortest(m.weights[i]) + "*" + m.components[i].str();
    }
    return out + ")";
}

PauliOperator sample_measurement(const MeasurementDistribution& d, const StabiliserTableau& t, Rng& rng) {
    if (const auto* u = std::get_if<UniformPauli>(&d.kind)) {
        std::size_t n = t.num_qubits();
        PauliOperator p(n);
        do {
            for (std::size_t q = 0; q < n; q++) {
                p.set_factor(q, static_cast<PauliFactor>(rng.below(4)));
            }
        } while (!u->include_identity && p.is_identity_up_to_sign());
        if (u->random_sign) {
            p.set_negative(rng.coin());
        }
        return p;
    }
    if (const auto* g = std::get_if<GroupUniform>(&d.kind)) {
        PauliOperator p = t.sample_group_element(rng);
        if (rng.bernoulli(g->negate_probability)) {
            p.set_negative(!p.negative());
        }
        return p;
    }
    const auto& m = std::get<Mixture>(d.kind);
    double u = rng.uniform01();
    double acc = 0;
    for (std::size_t i = 0; i + 1 < m.weights.size(); i++) {
        acc += m.weights[i];
        if (u < acc) {
            return sample_measurement(m.components[i], t, rng);
        }
    }
    return sample_measurement(m.components.back(), t, rng);
}

std::vector<TrainingExample> generate_training_set(
    const StabiliserTableau& t, const MeasurementDistribution& d, std::size_t m, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<TrainingExample> out;
    out.reserve(m);
    for (std::size_t i = 0; i < m; i++) {
        PauliOperator p = sample_measurement(d, t, rng);
        double label = to_double(t.expectation(p));
        out.push_back({std::move(p), label});
    }
    return out;
}

std::uint64_t sample_complexity(std::size_t n, double gamma, double epsilon, double delta, double k) {
    auto open_unit = [](double v) { return v > 0 && v < 1; };
    if (n == 0 || !open_unit(gamma) || !open_unit(epsilon) || !open_unit(delta) || !(k > 0) || !std::isfinite(k)) {
        throw BadParameters("sample complexity needs n >= 1, gamma, epsilon, delta in (0, 1) and K > 0");
    }
    double ge2 = gamma * gamma * epsilon * epsilon;
    double log_ge = std::log(1.0 / (gamma * epsilon));
    double bound = k / ge2 * (static_cast<double>(n) / ge2 * log_ge * log_ge + std::log(1.0 / delta));
    double m = std::ceil(bound);
    if (!(m < 0x1.0p63)) {
        throw BadParameters("sample complexity bound overflows: " + std::to_string(bound));
    }
    return static_cast<std::uint64_t>(m);
}

void ExperimentConfig::validate() const {
    if (num_qubits == 0 || num_generators == 0 || num_generators > num_qubits) {
        throw BadParameters(
            "need 1 <= l <= n, got n=" + std::to_string(num_qubits) + " l=" + std::to_string(num_generators));
    }
    if (!(gamma > 0 && gamma <= 0.5)) {
        throw BadParameters("gamma must lie in (0, 1/2]");
    }
    if (trials == 0) {
        throw BadParameters("trials must be at least 1");
    }
    if (test_set_size == 0) {
        throw BadParameters("test_set_size must be at least 1");
    }
    if (threads == 0) {
        throw BadParameters("threads must be at least 1");
    }
    if (!m) {
        sample_complexity(num_qubits, gamma, epsilon, delta, k);
    }
}

std::size_t ExperimentConfig::training_size() const {
    if (m) {
        return *m;
    }
    return static_cast<std::size_t>(sample_complexity(num_qubits, gamma, epsilon, delta, k));
}

TrialSeeds trial_seeds(std::uint64_t master_seed, std::size_t trial) {
    return {
        derive_seed(master_seed, trial, 0),
        derive_seed(master_seed, trial, 1),
        derive_seed(master_seed, trial, 2),
    };
}

TrialResult run_trial(const ExperimentConfig& config, std::size_t m, std::size_t trial) {
    using Clock = std::chrono::steady_clock;
    TrialResult r;
    r.index = trial;
    r.seeds = trial_seeds(config.master_seed, trial);

    StabiliserTableau state = random_state(config.num_qubits, config.num_generators, r.seeds.state);
    auto training = generate_training_set(state, config.distribution, m, r.seeds.train);

    auto t0 = Clock::now();
    LearnedHypothesis h = learn(training, config.num_qubits);
    auto t1 = Clock::now();
    r.learned_rank = h.rank();

    Rng rng(r.seeds.test);
    for (std::size_t i = 0; i < config.test_set_size; i++) {
        PauliOperator p = sample_measurement(config.distribution, state, rng);
        Expectation truth = state.expectation(p);
        Expectation guess = h.predict(p);
        if (std::abs(to_double(guess) - to_double(truth)) > config.gamma) {
            r.errors++;
            if (truth == Expectation::Half || guess != Expectation::Half) {
                r.uncharacterised_errors++;
            }
        }
    }
    auto t2 = Clock::now();
    r.empirical_error = static_cast<double>(r.errors) / static_cast<double>(config.test_set_size);
    r.learn_seconds = std::chrono::duration<double>(t1 - t0).count();
    r.predict_seconds = std::chrono::duration<double>(t2 - t1).count();
    return r;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
    config.validate();
    ExperimentReport report;
    report.config = config;
    report.m = config.training_size();
    report.trials.resize(config.trials);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= config.trials) {
                return;
            }
            try {
                report.trials[i] = run_trial(config, report.m, i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = config.trials;
                return;
            }
        }
    };
    std::size_t workers = std::min(config.threads, config.trials);
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; w++) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    std::vector<double> errors;
    errors.reserve(report.trials.size());
    std::size_t zero = 0;
    for (const auto& t : report.trials) {
        errors.push_back(t.empirical_error);
        zero += t.errors == 0;
    }
    std::sort(errors.begin(), errors.end());
    std::size_t count = errors.size();
    report.mean_error = std::accumulate(errors.begin(), errors.end(), 0.0) / static_cast<double>(count);
    report.median_error = count % 2 ? errors[count / 2] : 0.5 * (errors[count / 2 - 1] + errors[count / 2]);
    report.max_error = errors.back();
    report.zero_error_fraction = static_cast<double>(zero) / static_cast<double>(count);
    return report;
}

}  // namespace stabpac
