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

#include <array>
#include <bit>
#include <utility>

#include "stabpac/simd/kernels.hpp"

namespace stabpac::simd {
namespace {

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    for (std::size_t k = 0; k < words; k++) {
        dst[k] ^= src[k];
    }
}

bool is_zero(const std::uint64_t* src, std::size_t words) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < words; k++) {
        acc |= src[k];
    }
    return acc == 0;
}

bool symplectic_parity(
    const std::uint64_t* x1, const std::uint64_t* z1, const std::uint64_t* x2, const std::uint64_t* z2,
    std::size_t words) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < words; k++) {
        acc ^= (x1[k] & z2[k]) ^ (z1[k] & x2[k]);
    }
    return std::popcount(acc) & 1;
}

// Single-qubit phase table indexed by (x + 2z): I=0, X=1, Z=2, Y=3.
// Entry [a][b] is k with a*b = i^k * (a xor b).
constexpr std::array<std::array<unsigned, 4>, 4> kQubitPhase{{
    {0, 0, 0, 0},
    {0, 0, 3, 1},  // X*Z = -iY, X*Y = iZ
    {0, 1, 0, 3},  // Z*X = iY, Z*Y = -iX
    {0, 3, 1, 0},  // Y*X = -iZ, Y*Z = iX
}};

// Reference: one qubit at a time through the lookup table.
unsigned mul_into(
    std::uint64_t* x1, std::uint64_t* z1, const std::uint64_t* x2, const std::uint64_t* z2, std::size_t words) {
    unsigned log_i = 0;
    for (std::size_t k = 0; k < words; k++) {
        std::uint64_t touched = x1[k] | z1[k] | x2[k] | z2[k];
        while (touched) {
            int b = std::countr_zero(touched);
            touched &= touched - 1;
            unsigned a = ((x1[k] >> b) & 1) | (((z1[k] >> b) & 1) << 1);
            unsigned c = ((x2[k] >> b) & 1) | (((z2[k] >> b) & 1) << 1);
            log_i += kQubitPhase[a][c];
        }
        x1[k] ^= x2[k];
        z1[k] ^= z2[k];
    }
    return log_i & 3;
}

void h_columns(std::uint64_t* x, std::uint64_t* z, std::uint64_t* r, std::size_t words) {
    for (std::size_t k = 0; k < words; k++) {
        r[k] ^= x[k] & z[k];
        std::swap(x[k], z[k]);
    }
}

void s_columns(std::uint64_t* x, std::uint64_t* z, std::uint64_t* r, std::size_t words) {
    for (std::size_t k = 0; k < words; k++) {
        r[k] ^= x[k] & z[k];
        z[k] ^= x[k];
    }
}

void cnot_columns(
    std::uint64_t* xc, std::uint64_t* zc, std::uint64_t* xt, std::uint64_t* zt, std::uint64_t* r,
    std::size_t words) {
    for (std::size_t k = 0; k < words; k++) {
        r[k] ^= xc[k] & zt[k] & ~(xt[k] ^ zc[k]);
        xt[k] ^= xc[k];
        zc[k] ^= zt[k];
    }
}

constexpr KernelTable kScalar{
    "scalar", &xor_into, &is_zero, &symplectic_parity, &mul_into, &h_columns, &s_columns, &cnot_columns,
};

}  // namespace

const KernelTable& scalar_kernels() {
    return kScalar;
}

}  // namespace stabpac::simd
