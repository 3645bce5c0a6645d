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

#ifndef STABPAC_DENSE_HPP
#define STABPAC_DENSE_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "stabpac/pauli.hpp"

namespace stabpac {

/// Largest qubit count the dense reference will materialise (4096 x 4096).
inline constexpr std::size_t kMaxDenseQubits = 12;

/// Square complex matrix of dimension 2^n, row-major. Qubit 0 is the leftmost
/// tensor factor, i.e. the most significant bit of the basis index.
class DenseMatrix {
   public:
    using Scalar = std::complex<double>;

    /// Zero matrix on `num_qubits` qubits. Throws TooLarge above kMaxDenseQubits.
    explicit DenseMatrix(std::size_t num_qubits);
    static DenseMatrix identity(std::size_t num_qubits);

    std::size_t num_qubits() const {
        return n_;
    }
    std::size_t dim() const {
        return dim_;
    }
    Scalar& operator()(std::size_t r, std::size_t c) {
        return data_[r * dim_ + c];
    }
    const Scalar& operator()(std::size_t r, std::size_t c) const {
        return data_[r * dim_ + c];
    }

    DenseMatrix& operator+=(const DenseMatrix& other);
    DenseMatrix& operator-=(const DenseMatrix& other);
    DenseMatrix& operator*=(Scalar s);
    friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) {
        return a += b;
    }
    friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) {
        return a -= b;
    }
    friend DenseMatrix operator*(DenseMatrix a, Scalar s) {
        return a *= s;
    }
    /// Plain triple loop; zero entries of the left factor are skipped, which
    /// makes products with Pauli-like (monomial) matrices cheap.
    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);

    Scalar trace() const;
    DenseMatrix adjoint() const;
    /// Largest entrywise |a - b|.
    double max_abs_diff(const DenseMatrix& other) const;

   private:
    std::size_t n_;
    std::size_t dim_;
    std::vector<Scalar> data_;
};

/// sign * (f_0 kron f_1 kron ... kron f_{n-1}). Throws TooLarge.
DenseMatrix pauli_to_dense(const PauliOperator& p);

/// (1/2^n) prod_i (I + S_i). Throws TooLarge, DimensionMismatch, or
/// InvalidGenerators when the generators fail to commute or the result is
/// not unit-trace (dependent generators, -I in the group).
DenseMatrix state_from_generators(std::span<const PauliOperator> generators, std::size_t num_qubits);

/// Re Tr((I + P)/2 * rho). Throws DimensionMismatch, or NonHermitianResult if
/// the imaginary part exceeds 1e-9.
double expectation_dense(const DenseMatrix& rho, const PauliOperator& p);

struct StateReport {
    double hermitian_residual = 0;   // max |rho - rho^dagger|
    double trace_residual = 0;       // |Tr rho - 1|
    double projector_residual = 0;   // max |rho^2 - rho / 2^(n-l)|
    double purity = 0;               // Re Tr(rho^2)
    double tolerance = 1e-9;

    bool hermitian() const {
        return hermitian_residual <= tolerance;
    }
    bool unit_trace() const {
        return trace_residual <= tolerance;
    }
    bool projector_identity() const {
        return projector_residual <= tolerance;
    }
    /// Hermitian + projector identity + unit trace certifies a PSD state.
    bool ok() const {
        return hermitian() && unit_trace() && projector_identity();
    }
};

/// Checks rho against the stabiliser-state shape for l generators on n qubits.
StateReport validate_state(const DenseMatrix& rho, std::size_t num_generators, std::size_t num_qubits);

}  // namespace stabpac

#endif
