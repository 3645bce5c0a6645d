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

#include "stabpac/dense.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "stabpac/error.hpp"

namespace stabpac {

namespace {

using C = std::complex<double>;

void require_dims(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch(
            "matrix dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()) + " differ");
    }
}

std::array<C, 4> single_qubit(PauliFactor f) {
    const C i{0, 1};
    switch (f) {
        case PauliFactor::I:
            return {1, 0, 0, 1};
        case PauliFactor::X:
            return {0, 1, 1, 0};
        case PauliFactor::Y:
            return {0, -i, i, 0};
        case PauliFactor::Z:
            return {1, 0, 0, -1};
    }
    return {};
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t num_qubits) : n_(num_qubits), dim_(std::size_t{1} << std::min<std::size_t>(num_qubits, 63)) {
    if (num_qubits > kMaxDenseQubits) {
        throw TooLarge(
            "dense matrices are limited to " + std::to_string(kMaxDenseQubits) + " qubits, got " +
            std::to_string(num_qubits));
    }
    data_.assign(dim_ * dim_, C{0, 0});
}

DenseMatrix DenseMatrix::identity(std::size_t num_qubits) {
    DenseMatrix m(num_qubits);
    for (std::size_t k = 0; k < m.dim_; k++) {
        m(k, k) = 1;
    }
    return m;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& other) {
    require_dims(*this, other);
    for (std::size_t k = 0; k < data_.size(); k++) {
        data_[k] += other.data_[k];
    }
    return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& other) {
    require_dims(*this, other);
    for (std::size_t k = 0; k < data_.size(); k++) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

DenseMatrix& DenseMatrix::operator*=(Scalar s) {
    for (auto& v : data_) {
        v *= s;
    }
    return *this;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    require_dims(a, b);
    DenseMatrix out(a.n_);
    std::size_t d = a.dim_;
    for (std::size_t r = 0; r < d; r++) {
        C* out_row = &out.data_[r * d];
        for (std::size_t k = 0; k < d; k++) {
            C v = a.data_[r * d + k];
            if (v == C{0, 0}) {
                continue;
            }
            const C* b_row = &b.data_[k * d];
            for (std::size_t c = 0; c < d; c++) {
                out_row[c] += v * b_row[c];
            }
        }
    }
    return out;
}

DenseMatrix::Scalar DenseMatrix::trace() const {
    C t{0, 0};
    for (std::size_t k = 0; k < dim_; k++) {
        t += (*this)(k, k);
    }
    return t;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix out(n_);
    for (std::size_t r = 0; r < dim_; r++) {
        for (std::size_t c = 0; c < dim_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

double DenseMatrix::max_abs_diff(const DenseMatrix& other) const {
    require_dims(*this, other);
    double worst = 0;
    for (std::size_t k = 0; k < data_.size(); k++) {
        worst = std::max(worst, std::abs(data_[k] - other.data_[k]));
    }
    return worst;
}

DenseMatrix pauli_to_dense(const PauliOperator& p) {
    std::size_t n = p.num_qubits();
    if (n > kMaxDenseQubits) {
        throw TooLarge("Pauli on " + std::to_string(n) + " qubits is too large to densify");
    }
    // Kronecker product built left to right: qubit 0 ends up most significant.
    std::vector<C> acc{C{static_cast<double>(p.sign()), 0}};
    std::size_t d = 1;
    for (std::size_t q = 0; q < n; q++) {
        auto f = single_qubit(p.factor(q));
        std::size_t nd = 2 * d;
        std::vector<C> next(nd * nd);
        for (std::size_t r = 0; r < d; r++) {
            for (std::size_t c = 0; c < d; c++) {
                C v = acc[r * d + c];
                for (std::size_t fr = 0; fr < 2; fr++) {
                    for (std::size_t fc = 0; fc < 2; fc++) {
                        next[(2 * r + fr) * nd + (2 * c + fc)] = v * f[fr * 2 + fc];
                    }
                }
            }
        }
        acc = std::move(next);
        d = nd;
    }
    DenseMatrix out(n);
    for (std::size_t r = 0; r < d; r++) {
        for (std::size_t c = 0; c < d; c++) {
            out(r, c) = acc[r * d + c];
        }
    }
    return out;
}

DenseMatrix state_from_generators(std::span<const PauliOperator> generators, std::size_t num_qubits) {
    std::vector<DenseMatrix> dense;
    dense.reserve(generators.size());
    for (const auto& g : generators) {
        if (g.num_qubits() != num_qubits) {
            throw DimensionMismatch("generator " + g.str() + " does not act on " + std::to_string(num_qubits) + " qubits");
        }
        dense.push_back(pauli_to_dense(g));
    }
    for (std::size_t i = 0; i < dense.size(); i++) {
        for (std::size_t j = 0; j < i; j++) {
            if ((dense[i] * dense[j]).max_abs_diff(dense[j] * dense[i]) > 1e-12) {
                throw InvalidGenerators("generators " + generators[j].str() + " and " + generators[i].str() + " do not commute");
            }
        }
    }
    DenseMatrix id = DenseMatrix::identity(num_qubits);
    DenseMatrix rho = id;
    for (const auto& s : dense) {
        rho = (id + s) * rho;
    }
    rho *= C{std::ldexp(1.0, -static_cast<int>(num_qubits)), 0};
    if (std::abs(rho.trace() - C{1, 0}) > 1e-9) {
        throw InvalidGenerators("generators are not independent (state trace is not 1)");
    }
    return rho;
}

double expectation_dense(const DenseMatrix& rho, const PauliOperator& p) {
    DenseMatrix e = DenseMatrix::identity(p.num_qubits()) + pauli_to_dense(p);
    e *= C{0.5, 0};
    require_dims(e, rho);
    C t{0, 0};
    for (std::size_t r = 0; r < rho.dim(); r++) {
        for (std::size_t k = 0; k < rho.dim(); k++) {
            t += e(r, k) * rho(k, r);
        }
    }
    if (std::abs(t.imag()) > 1e-9) {
        throw NonHermitianResult("Tr(E rho) has imaginary part " + std::to_string(t.imag()));
    }
    return t.real();
}

StateReport validate_state(const DenseMatrix& rho, std::size_t num_generators, std::size_t num_qubits) {
    if (rho.num_qubits() != num_qubits || num_generators > num_qubits) {
        throw DimensionMismatch(
            "state on " + std::to_string(rho.num_qubits()) + " qubits checked as n=" + std::to_string(num_qubits) +
            " l=" + std::to_string(num_generators));
    }
    StateReport report;
    report.hermitian_residual = rho.max_abs_diff(rho.adjoint());
    report.trace_residual = std::abs(rho.trace() - C{1, 0});
    DenseMatrix square = rho * rho;
    report.purity = square.trace().real();
    DenseMatrix scaled = rho;
    scaled *= C{std::ldexp(1.0, -static_cast<int>(num_qubits - num_generators)), 0};
    report.projector_residual = square.max_abs_diff(scaled);
    return report;
}

}  // namespace stabpac
