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

#include "stabpac/pauli.hpp"

#include <algorithm>

#include "stabpac/error.hpp"
#include "stabpac/simd/kernels.hpp"

namespace stabpac {

namespace {

void require_same_size(const PauliOperator& p, const PauliOperator& q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw DimensionMismatch(
            "Pauli operators act on " + std::to_string(p.num_qubits()) + " and " +
            std::to_string(q.num_qubits()) + " qubits");
    }
}

}  // namespace

char factor_char(PauliFactor f) {
    return "IXYZ"[static_cast<int>(f)];
}

PauliOperator::PauliOperator(std::size_t num_qubits)
    : n_(num_qubits), xs_((num_qubits + 63) / 64, 0), zs_((num_qubits + 63) / 64, 0) {
}

PauliOperator PauliOperator::parse(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) {
        throw MalformedPauli("Pauli string has no factors");
    }
    PauliOperator p(text.size());
    p.negative_ = negative;
    for (std::size_t q = 0; q < text.size(); q++) {
        switch (text[q]) {
            case 'I':
                break;
            case 'X':
                p.set_factor(q, PauliFactor::X);
                break;
            case 'Y':
                p.set_factor(q, PauliFactor::Y);
                break;
            case 'Z':
                p.set_factor(q, PauliFactor::Z);
                break;
            default:
                throw MalformedPauli("unexpected character '" + std::string(1, text[q]) + "' in Pauli string");
        }
    }
    return p;
}

PauliOperator PauliOperator::single(std::size_t num_qubits, std::size_t qubit, PauliFactor f) {
    PauliOperator p(num_qubits);
    p.set_factor(qubit, f);
    return p;
}

PauliFactor PauliOperator::factor(std::size_t q) const {
    static constexpr PauliFactor decode[4] = {PauliFactor::I, PauliFactor::X, PauliFactor::Z, PauliFactor::Y};
    return decode[x(q) | (z(q) << 1)];
}

void PauliOperator::set_factor(std::size_t q, PauliFactor f) {
    std::uint64_t bit = std::uint64_t{1} << (q & 63);
    bool xb = f == PauliFactor::X || f == PauliFactor::Y;
    bool zb = f == PauliFactor::Z || f == PauliFactor::Y;
    xs_[q >> 6] = xb ? (xs_[q >> 6] | bit) : (xs_[q >> 6] & ~bit);
    zs_[q >> 6] = zb ? (zs_[q >> 6] | bit) : (zs_[q >> 6] & ~bit);
}

bool PauliOperator::is_identity_up_to_sign() const {
    const auto& k = simd::active_kernels();
    return k.is_zero(xs_.data(), xs_.size()) && k.is_zero(zs_.data(), zs_.size());
}

PauliOperator PauliOperator::negated() const {
    PauliOperator out = *this;
    out.negative_ = !negative_;
    return out;
}

PauliOperator PauliOperator::unsigned_part() const {
    PauliOperator out = *this;
    out.negative_ = false;
    return out;
}

Gf2Vector PauliOperator::symplectic_bits() const {
    Gf2Vector xv(n_);
    Gf2Vector zv(n_);
    std::copy(xs_.begin(), xs_.end(), xv.words().begin());
    std::copy(zs_.begin(), zs_.end(), zv.words().begin());
    return Gf2Vector::concat(xv, zv);
}

std::string PauliOperator::str() const {
    std::string out;
    out.reserve(n_ + 1);
    out.push_back(negative_ ? '-' : '+');
    for (std::size_t q = 0; q < n_; q++) {
        out.push_back(factor_char(factor(q)));
    }
    return out;
}

PauliOperator PhasedPauli::to_signed() const {
    if (!hermitian()) {
        throw NonHermitianProduct("product " + base.str() + " carries a phase of +-i");
    }
    PauliOperator out = base;
    out.set_negative((phase_exponent & 3) == 2);
    return out;
}

PhasedPauli& PhasedPauli::operator*=(const PauliOperator& rhs) {
    require_same_size(base, rhs);
    unsigned log_i = simd::active_kernels().mul_into(
        base.xs().data(), base.zs().data(), rhs.xs().data(), rhs.zs().data(), base.num_words());
    phase_exponent = (phase_exponent + log_i + (rhs.negative() ? 2 : 0)) & 3;
    return *this;
}

PhasedPauli to_phased(const PauliOperator& p) {
    return PhasedPauli{p.unsigned_part(), p.negative() ? 2u : 0u};
}

std::string CheckVector::str() const {
    std::string out = "[";
    out.push_back(sign_bit ? '1' : '0');
    out += " |";
    for (std::size_t i = 0; i < x_block.width(); i++) {
        out.push_back(' ');
        out.push_back(x_block.get(i) ? '1' : '0');
    }
    out += " |";
    for (std::size_t i = 0; i < z_block.width(); i++) {
        out.push_back(' ');
        out.push_back(z_block.get(i) ? '1' : '0');
    }
    out.push_back(']');
    return out;
}

PauliOperator parse_pauli(std::string_view text) {
    return PauliOperator::parse(text);
}

std::string format_pauli(const PauliOperator& p) {
    return p.str();
}

PhasedPauli multiply(const PauliOperator& p, const PauliOperator& q) {
    require_same_size(p, q);
    PhasedPauli out = to_phased(p);
    out *= q;
    return out;
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
    require_same_size(p, q);
    return !simd::active_kernels().symplectic_parity(
        p.xs().data(), p.zs().data(), q.xs().data(), q.zs().data(), p.num_words());
}

CheckVector to_check_vector(const PauliOperator& p) {
    CheckVector v{p.negative(), Gf2Vector(p.num_qubits()), Gf2Vector(p.num_qubits())};
    std::copy(p.xs().begin(), p.xs().end(), v.x_block.words().begin());
    std::copy(p.zs().begin(), p.zs().end(), v.z_block.words().begin());
    return v;
}

PauliOperator from_check_vector(const CheckVector& v) {
    if (v.x_block.width() != v.z_block.width()) {
        throw DimensionMismatch("check vector blocks have different widths");
    }
    PauliOperator p(v.x_block.width());
    std::copy(v.x_block.words().begin(), v.x_block.words().end(), p.xs().begin());
    std::copy(v.z_block.words().begin(), v.z_block.words().end(), p.zs().begin());
    p.set_negative(v.sign_bit);
    return p;
}

PauliOperator signed_product(
    std::span<const PauliOperator> generators, const Gf2Vector& c, std::size_t num_qubits) {
    if (c.width() != generators.size()) {
        throw DimensionMismatch(
            "coefficient vector has " + std::to_string(c.width()) + " bits for " +
            std::to_string(generators.size()) + " generators");
    }
    PhasedPauli acc{PauliOperator(num_qubits), 0};
    for (std::size_t i = 0; i < generators.size(); i++) {
        if (c.get(i)) {
            acc *= generators[i];
        }
    }
    return acc.to_signed();
}

int product_sign(std::span<const PauliOperator> generators, const Gf2Vector& c) {
    std::size_t n = generators.empty() ? 0 : generators.front().num_qubits();
    return signed_product(generators, c, n).sign();
}

}  // namespace stabpac
