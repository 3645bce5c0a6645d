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

#ifndef STABPAC_PAULI_HPP
#define STABPAC_PAULI_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stabpac/gf2.hpp"

namespace stabpac {

enum class PauliFactor : std::uint8_t { I, X, Y, Z };

char factor_char(PauliFactor f);

/// Signed n-qubit Pauli operator: sign times a tensor product of I, X, Y, Z.
///
/// Stored as x and z bit masks (qubit q at bit q%64 of word q/64) with
/// I=(0,0), X=(1,0), Y=(1,1), Z=(0,1). Phases +-i are not representable here;
/// see PhasedPauli.
class PauliOperator {
   public:
    PauliOperator() = default;
    /// The identity on `num_qubits` qubits with sign +1.
    explicit PauliOperator(std::size_t num_qubits);

    static PauliOperator parse(std::string_view text);
    static PauliOperator single(std::size_t num_qubits, std::size_t qubit, PauliFactor f);

    std::size_t num_qubits() const {
        return n_;
    }
    std::size_t num_words() const {
        return xs_.size();
    }
    bool negative() const {
        return negative_;
    }
    int sign() const {
        return negative_ ? -1 : 1;
    }
    void set_negative(bool negative) {
        negative_ = negative;
    }

    bool x(std::size_t q) const {
        return (xs_[q >> 6] >> (q & 63)) & 1;
    }
    bool z(std::size_t q) const {
        return (zs_[q >> 6] >> (q & 63)) & 1;
    }
    PauliFactor factor(std::size_t q) const;
    void set_factor(std::size_t q, PauliFactor f);

    std::span<const std::uint64_t> xs() const {
        return xs_;
    }
    std::span<const std::uint64_t> zs() const {
        return zs_;
    }
    std::span<std::uint64_t> xs() {
        return xs_;
    }
    std::span<std::uint64_t> zs() {
        return zs_;
    }

    /// True when every factor is I, regardless of sign.
    bool is_identity_up_to_sign() const;
    PauliOperator negated() const;
    /// Same factors with sign +1.
    PauliOperator unsigned_part() const;

    /// The 2n symplectic bits [x_0..x_{n-1} | z_0..z_{n-1}], sign dropped.
    Gf2Vector symplectic_bits() const;

    std::string str() const;

    friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

   private:
    std::size_t n_ = 0;
    bool negative_ = false;
    std::vector<std::uint64_t> xs_;
    std::vector<std::uint64_t> zs_;
};

/// i^phase_exponent * base, with base carrying sign +1.
struct PhasedPauli {
    PauliOperator base;
    unsigned phase_exponent = 0;

    bool hermitian() const {
        return (phase_exponent & 1) == 0;
    }
    /// The signed operator; throws NonHermitianProduct for odd exponents.
    PauliOperator to_signed() const;

    /// Multiplies `rhs` on the right, in place.
    PhasedPauli& operator*=(const PauliOperator& rhs);

    friend bool operator==(const PhasedPauli&, const PhasedPauli&) = default;
};

PhasedPauli to_phased(const PauliOperator& p);

/// Sign bit followed by the x and z blocks, as in [s | x1..xn | z1..zn].
struct CheckVector {
    bool sign_bit = false;
    Gf2Vector x_block;
    Gf2Vector z_block;

    Gf2Vector unsigned_bits() const {
        return Gf2Vector::concat(x_block, z_block);
    }
    /// "[s | x1 x2 .. | z1 z2 ..]" with 0/1 digits.
    std::string str() const;

    friend bool operator==(const CheckVector&, const CheckVector&) = default;
};

/// Optional '+'/'-' then at least one of I, X, Y, Z. Throws MalformedPauli.
PauliOperator parse_pauli(std::string_view text);
/// Always prints an explicit sign, e.g. "-XYZY".
std::string format_pauli(const PauliOperator& p);

/// Exact product p*q. Throws DimensionMismatch.
PhasedPauli multiply(const PauliOperator& p, const PauliOperator& q);

/// Throws DimensionMismatch.
bool commutes(const PauliOperator& p, const PauliOperator& q);

CheckVector to_check_vector(const PauliOperator& p);
/// Throws DimensionMismatch when the blocks differ in width.
PauliOperator from_check_vector(const CheckVector& v);

/// Sign of generators[0]^c[0] * generators[1]^c[1] * ..., multiplied left to
/// right. Throws NonHermitianProduct when the product picks up a factor of
/// +-i, which only happens if the selected generators do not commute.
int product_sign(std::span<const PauliOperator> generators, const Gf2Vector& c);

/// The signed product itself (same contract as product_sign).
PauliOperator signed_product(std::span<const PauliOperator> generators, const Gf2Vector& c, std::size_t num_qubits);

}  // namespace stabpac

#endif
