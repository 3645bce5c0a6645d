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

#include <cmath>
#include <utility>

#include "stabpac/error.hpp"
#include "stabpac/simd/kernels.hpp"

namespace stabpac {

constexpr std::size_t kMaxEnumeratedGenerators = 20;

double to_double(Expectation e) {
    switch (e) {
        case Expectation::Zero:
            return 0.0;
        case Expectation::Half:
            return 0.5;
        case Expectation::One:
            return 1.0;
    }
    return 0.5;
}

std::string format_expectation(Expectation e) {
    switch (e) {
        case Expectation::Zero:
            return "0";
        case Expectation::Half:
            return "0.5";
        case Expectation::One:
            return "1";
    }
    return "0.5";
}

std::optional<Expectation> snap_expectation(double value, double tolerance) {
    if (std::abs(value) <= tolerance) {
        return Expectation::Zero;
    }
    if (std::abs(value - 0.5) <= tolerance) {
        return Expectation::Half;
    }
    if (std::abs(value - 1.0) <= tolerance) {
        return Expectation::One;
    }
    return std::nullopt;
}

std::string Gate::str() const {
    switch (kind) {
        case Kind::H:
            return "H " + std::to_string(target);
        case Kind::S:
            return "S " + std::to_string(target);
        case Kind::CNOT:
            return "CNOT " + std::to_string(control) + " " + std::to_string(target);
    }
    return "?";
}

namespace {

void check_gate(const Gate& gate, std::size_t n) {
    if (gate.target >= n || (gate.kind == Gate::Kind::CNOT && gate.control >= n)) {
        throw BadQubitIndex("gate " + gate.str() + " is outside " + std::to_string(n) + " qubits");
    }
    if (gate.kind == Gate::Kind::CNOT && gate.control == gate.target) {
        throw BadQubitIndex("CNOT control and target coincide: " + gate.str());
    }
}

void set_bit(std::span<std::uint64_t> words, std::size_t i, bool v) {
    std::uint64_t m = std::uint64_t{1} << (i & 63);
    words[i >> 6] = v ? (words[i >> 6] | m) : (words[i >> 6] & ~m);
}

bool get_bit(std::span<const std::uint64_t> words, std::size_t i) {
    return (words[i >> 6] >> (i & 63)) & 1;
}

}  // namespace

PauliOperator conjugate(const PauliOperator& p, const Gate& gate) {
    check_gate(gate, p.num_qubits());
    PauliOperator out = p;
    auto xs = out.xs();
    auto zs = out.zs();
    std::size_t t = gate.target;
    switch (gate.kind) {
        case Gate::Kind::H: {
            bool x = get_bit(xs, t);
            bool z = get_bit(zs, t);
            if (x && z) {
                out.set_negative(!out.negative());
            }
            set_bit(xs, t, z);
            set_bit(zs, t, x);
            break;
        }
        case Gate::Kind::S: {
            bool x = get_bit(xs, t);
            bool z = get_bit(zs, t);
            if (x && z) {
                out.set_negative(!out.negative());
            }
            set_bit(zs, t, z ^ x);
            break;
        }
        case Gate::Kind::CNOT: {
            std::size_t c = gate.control;
            bool xc = get_bit(xs, c);
            bool zc = get_bit(zs, c);
            bool xt = get_bit(xs, t);
            bool zt = get_bit(zs, t);
            if (xc && zt && !(xt ^ zc)) {
                out.set_negative(!out.negative());
            }
            set_bit(xs, t, xt ^ xc);
            set_bit(zs, c, zc ^ zt);
            break;
        }
    }
    return out;
}

Expectation group_expectation(
    std::span<const PauliOperator> generators, const IncrementalBasis& basis, const PauliOperator& p) {
    for (const auto& g : generators) {
        if (!commutes(g, p)) {
            return Expectation::Half;
        }
    }
    std::optional<Gf2Vector> c = basis.coefficients_of(p.symplectic_bits());
    if (!c) {
        return Expectation::Half;
    }
    int s = signed_product(generators, *c, p.num_qubits()).sign();
    return s == p.sign() ? Expectation::One : Expectation::Zero;
}

std::vector<PauliOperator> enumerate_group(std::span<const PauliOperator> generators, std::size_t num_qubits) {
    if (generators.size() > kMaxEnumeratedGenerators) {
        throw GroupTooLarge(
            "refusing to enumerate 2^" + std::to_string(generators.size()) + " group elements");
    }
    std::size_t count = std::size_t{1} << generators.size();
    std::vector<PauliOperator> out;
    out.reserve(count);
    for (std::size_t mask = 0; mask < count; mask++) {
        Gf2Vector c(generators.size());
        if (!generators.empty()) {
            c.words()[0] = mask;
        }
        out.push_back(signed_product(generators, c, num_qubits));
    }
    return out;
}

StabiliserTableau::StabiliserTableau(std::size_t num_qubits, std::vector<PauliOperator> generators)
    : n_(num_qubits), generators_(std::move(generators)), basis_(2 * num_qubits) {
    if (n_ == 0 || generators_.empty() || generators_.size() > n_) {
        throw InvalidGenerators(
            "need between 1 and " + std::to_string(n_) + " generators, got " + std::to_string(generators_.size()));
    }
    for (std::size_t i = 0; i < generators_.size(); i++) {
        const auto& g = generators_[i];
        if (g.num_qubits() != n_) {
            throw InvalidGenerators("generator " + g.str() + " does not act on " + std::to_string(n_) + " qubits");
        }
        for (std::size_t j = 0; j < i; j++) {
            if (!commutes(g, generators_[j])) {
                throw InvalidGenerators("generators " + generators_[j].str() + " and " + g.str() + " anticommute");
            }
        }
        if (!std::holds_alternative<IncrementalBasis::Added>(basis_.insert(g.symplectic_bits()))) {
            throw InvalidGenerators("generator " + g.str() + " depends on the earlier generators");
        }
    }
}

StabiliserTableau StabiliserTableau::computational_basis_state(std::size_t num_qubits, std::size_t num_generators) {
    if (num_generators < 1 || num_generators > num_qubits) {
        throw BadDimensions(
            "need 1 <= l <= n, got n=" + std::to_string(num_qubits) + " l=" + std::to_string(num_generators));
    }
    std::vector<PauliOperator> gens;
    gens.reserve(num_generators);
    for (std::size_t q = 0; q < num_generators; q++) {
        gens.push_back(PauliOperator::single(num_qubits, q, PauliFactor::Z));
    }
    return StabiliserTableau(num_qubits, std::move(gens));
}

StabiliserTableau StabiliserTableau::apply_gate(const Gate& gate) const {
    check_gate(gate, n_);
    std::vector<PauliOperator> gens;
    gens.reserve(generators_.size());
    for (const auto& g : generators_) {
        gens.push_back(conjugate(g, gate));
    }
    return StabiliserTableau(n_, std::move(gens));
}

Expectation StabiliserTableau::expectation(const PauliOperator& p) const {
    if (p.num_qubits() != n_) {
        throw DimensionMismatch(
            "Pauli on " + std::to_string(p.num_qubits()) + " qubits measured on a " + std::to_string(n_) +
            "-qubit state");
    }
    return group_expectation(generators_, basis_, p);
}

PauliOperator StabiliserTableau::sample_group_element(Rng& rng) const {
    PhasedPauli acc{PauliOperator(n_), 0};
    for (const auto& g : generators_) {
        if (rng.coin()) {
            acc *= g;
        }
    }
    return acc.to_signed();
}

std::vector<PauliOperator> StabiliserTableau::enumerate_group() const {
    return stabpac::enumerate_group(generators_, n_);
}

StabiliserTableau apply_circuit(const StabiliserTableau& t, std::span<const Gate> circuit) {
    std::size_t n = t.num_qubits();
    std::size_t l = t.num_generators();
    std::size_t words = (l + 63) / 64;
    std::vector<std::uint64_t> xcols(n * words, 0);
    std::vector<std::uint64_t> zcols(n * words, 0);
    std::vector<std::uint64_t> signs(words, 0);
    auto xcol = [&](std::size_t q) { return xcols.data() + q * words; };
    auto zcol = [&](std::size_t q) { return zcols.data() + q * words; };

    for (std::size_t g = 0; g < l; g++) {
        const auto& p = t.generators()[g];
        std::uint64_t bit = std::uint64_t{1} << (g & 63);
        for (std::size_t q = 0; q < n; q++) {
            if (p.x(q)) {
                xcol(q)[g >> 6] |= bit;
            }
            if (p.z(q)) {
                zcol(q)[g >> 6] |= bit;
            }
        }
        if (p.negative()) {
            signs[g >> 6] |= bit;
        }
    }

    const auto& k = simd::active_kernels();
    for (const Gate& gate : circuit) {
        check_gate(gate, n);
        switch (gate.kind) {
            case Gate::Kind::H:
                k.h_columns(xcol(gate.target), zcol(gate.target), signs.data(), words);
                break;
            case Gate::Kind::S:
                k.s_columns(xcol(gate.target), zcol(gate.target), signs.data(), words);
                break;
            case Gate::Kind::CNOT:
                k.cnot_columns(
                    xcol(gate.control), zcol(gate.control), xcol(gate.target), zcol(gate.target), signs.data(),
                    words);
                break;
        }
    }

    std::vector<PauliOperator> gens(l, PauliOperator(n));
    for (std::size_t g = 0; g < l; g++) {
        auto xs = gens[g].xs();
        auto zs = gens[g].zs();
        for (std::size_t q = 0; q < n; q++) {
            if ((xcol(q)[g >> 6] >> (g & 63)) & 1) {
                xs[q >> 6] |= std::uint64_t{1} << (q & 63);
            }
            if ((zcol(q)[g >> 6] >> (g & 63)) & 1) {
                zs[q >> 6] |= std::uint64_t{1} << (q & 63);
            }
        }
        gens[g].set_negative((signs[g >> 6] >> (g & 63)) & 1);
    }
    return StabiliserTableau(n, std::move(gens));
}

std::vector<Gate> random_circuit(std::size_t num_qubits, std::uint64_t seed) {
    if (num_qubits == 0) {
        throw BadDimensions("random circuit needs at least one qubit");
    }
    Rng rng(seed);
    std::size_t length = 2 * num_qubits * num_qubits;
    std::uint64_t kinds = num_qubits == 1 ? 2 : 3;
    std::vector<Gate> circuit;
    circuit.reserve(length);
    for (std::size_t i = 0; i < length; i++) {
        switch (rng.below(kinds)) {
            case 0:
                circuit.push_back(Gate::h(rng.below(num_qubits)));
                break;
            case 1:
                circuit.push_back(Gate::s(rng.below(num_qubits)));
                break;
            default: {
                std::size_t c = rng.below(num_qubits);
                std::size_t t = rng.below(num_qubits - 1);
                if (t >= c) {
                    t++;
                }
                circuit.push_back(Gate::cnot(c, t));
                break;
            }
        }
    }
    return circuit;
}

StabiliserTableau random_state(std::size_t num_qubits, std::size_t num_generators, std::uint64_t seed) {
    auto start = StabiliserTableau::computational_basis_state(num_qubits, num_generators);
    auto circuit = random_circuit(num_qubits, seed);
    return apply_circuit(start, circuit);
}

}  // namespace stabpac
