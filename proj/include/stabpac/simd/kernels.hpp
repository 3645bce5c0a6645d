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

#ifndef STABPAC_SIMD_KERNELS_HPP
#define STABPAC_SIMD_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace stabpac::simd {

/// Word-parallel primitives over bit-packed rows (64 bits per word, bit k of
/// word w is element 64*w+k). Every table computes bit-identical results; the
/// scalar table is the reference the vector tables are tested against.
///
/// Pauli masks use the symplectic convention I=(0,0) X=(1,0) Y=(1,1) Z=(0,1).
struct KernelTable {
    std::string_view name;

    /// dst ^= src
    void (*xor_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);

    bool (*is_zero)(const std::uint64_t* src, std::size_t words);

    /// Parity of popcount((x1 & z2) ^ (z1 & x2)); true iff the two Paulis anticommute.
    bool (*symplectic_parity)(
        const std::uint64_t* x1,
        const std::uint64_t* z1,
        const std::uint64_t* x2,
        const std::uint64_t* z2,
        std::size_t words);

    /// Overwrites (x1, z1) with the unsigned product (x1, z1) * (x2, z2) and
    /// returns k in [0, 4) such that the exact product equals i^k times it.
    unsigned (*mul_into)(
        std::uint64_t* x1, std::uint64_t* z1, const std::uint64_t* x2, const std::uint64_t* z2, std::size_t words);

    // Column updates for conjugating many generators at once. `x`, `z` hold
    // one qubit's bits across generators and `r` the generator sign bits.

    /// Hadamard: r ^= x & z, then swap x and z.
    void (*h_columns)(std::uint64_t* x, std::uint64_t* z, std::uint64_t* r, std::size_t words);
    /// Phase: r ^= x & z, then z ^= x.
    void (*s_columns)(std::uint64_t* x, std::uint64_t* z, std::uint64_t* r, std::size_t words);
    /// CNOT: r ^= xc & zt & ~(xt ^ zc), then xt ^= xc and zc ^= zt.
    void (*cnot_columns)(
        std::uint64_t* xc,
        std::uint64_t* zc,
        std::uint64_t* xt,
        std::uint64_t* zt,
        std::uint64_t* r,
        std::size_t words);
};

const KernelTable& scalar_kernels();

/// Null when the build has no AVX2 variant or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

/// Kernels used by the library. Chosen once on first use: the widest table the
/// CPU supports, unless STABPAC_SIMD=scalar is set in the environment.
const KernelTable& active_kernels();

}  // namespace stabpac::simd

#endif
