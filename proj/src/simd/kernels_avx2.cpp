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

#include <immintrin.h>

#include <bit>

#include "stabpac/simd/kernels.hpp"

namespace stabpac::simd {
namespace {

constexpr std::size_t kLane = 4;

inline __m256i load(const std::uint64_t* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(std::uint64_t* p, __m256i v) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

inline int popcount256(__m256i v) {
    return std::popcount(static_cast<std::uint64_t>(_mm256_extract_epi64(v, 0))) +
           std::popcount(static_cast<std::uint64_t>(_mm256_extract_epi64(v, 1))) +
           std::popcount(static_cast<std::uint64_t>(_mm256_extract_epi64(v, 2))) +
           std::popcount(static_cast<std::uint64_t>(_mm256_extract_epi64(v, 3)));
}

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    std::size_t k = 0;
    for (; k + kLane <= words; k += kLane) {
        store(dst + k, _mm256_xor_si256(load(dst + k), load(src + k)));
    }
    for (; k < words; k++) {
        dst[k] ^= src[k];
    }
}

bool is_zero(const std::uint64_t* src, std::size_t words) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t k = 0;
    for (; k + kLane <= words; k += kLane) {
        acc = _mm256_or_si256(acc, load(src + k));
    }
    std::uint64_t tail = 0;
    for (; k < words; k++) {
        tail |= src[k];
    }
    return tail == 0 && _mm256_testz_si256(acc, acc);
}

bool symplectic_parity(
    const std::uint64_t* x1, const std::uint64_t* z1, const std::uint64_t* x2, const std::uint64_t* z2,
    std::size_t words) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t k = 0;
    for (; k + kLane <= words; k += kLane) {
        __m256i t = _mm256_xor_si256(
            _mm256_and_si256(load(x1 + k), load(z2 + k)), _mm256_and_si256(load(z1 + k), load(x2 + k)));
        acc = _mm256_xor_si256(acc, t);
    }
    std::uint64_t tail = 0;
    for (; k < words; k++) {
        tail ^= (x1[k] & z2[k]) ^ (z1[k] & x2[k]);
    }
    return (popcount256(acc) + std::popcount(tail)) & 1;
}

// Per bit position, (cnt2:cnt1) is a two-bit counter of the powers of i
// collected at anticommuting qubits: +1 for products in cyclic order
// (XY, YZ, ZX), +3 otherwise.
unsigned mul_into(
    std::uint64_t* x1, std::uint64_t* z1, const std::uint64_t* x2, const std::uint64_t* z2, std::size_t words) {
    __m256i cnt1 = _mm256_setzero_si256();
    __m256i cnt2 = _mm256_setzero_si256();
    std::size_t k = 0;
    for (; k + kLane <= words; k += kLane) {
        __m256i ox = load(x1 + k);
        __m256i oz = load(z1 + k);
        __m256i bx = load(x2 + k);
        __m256i bz = load(z2 + k);
        __m256i nx = _mm256_xor_si256(ox, bx);
        __m256i nz = _mm256_xor_si256(oz, bz);
        __m256i x1z2 = _mm256_and_si256(ox, bz);
        __m256i anti = _mm256_xor_si256(_mm256_and_si256(bx, oz), x1z2);
        __m256i carry = _mm256_xor_si256(_mm256_xor_si256(cnt1, nx), _mm256_xor_si256(nz, x1z2));
        cnt2 = _mm256_xor_si256(cnt2, _mm256_and_si256(carry, anti));
        cnt1 = _mm256_xor_si256(cnt1, anti);
        store(x1 + k, nx);
        store(z1 + k, nz);
    }
    unsigned log_i = static_cast<unsigned>(popcount256(cnt1) + 2 * popcount256(cnt2));
    std::uint64_t c1 = 0;
    std::uint64_t c2 = 0;
    for (; k < words; k++) {
        std::uint64_t ox = x1[k];
        std::uint64_t oz = z1[k];
        std::uint64_t nx = ox ^ x2[k];
        std::uint64_t nz = oz ^ z2[k];
        std::uint64_t x1z2 = ox & z2[k];
        std::uint64_t anti = (x2[k] & oz) ^ x1z2;
        c2 ^= (c1 ^ nx ^ nz ^ x1z2) & anti;
        c1 ^= anti;
        x1[k] = nx;
        z1[k] = nz;
    }
    log_i += static_cast<unsigned>(std::popcount(c1) + 2 * std::popcount(c2));
    return log_i & 3;
}

void h_columns(std::uint64_t* x, std::uint64_t* z, std::uint64_t* r, std::size_t words) {
    std::size_t k = 0;
    for (; k + kLane <= words; k += kLane) {
        __m256i vx = load(x + k);
        __m256i vz = load(z + k);
        store(r + k, _mm256_xor_si256(load(r + k), _mm256_and_si256(vx, vz)));
        store(x + k, vz);
        store(z + k, vx);
    }
    for (; k < words; k++) {
        r[k] ^= x[k] & z[k];
        std::uint64_t t = x[k];
        x[k] = z[k];
        z[k] = t;
    }
}

void s_columns(std::uint64_t* x, std::uint64_t* z, std::uint64_t* r, std::size_t words) {
    std::size_t k = 0;
    for (; k + kLane <= words; k += kLane) {
        __m256i vx = load(x + k);
        __m256i vz = load(z + k);
        store(r + k, _mm256_xor_si256(load(r + k), _mm256_and_si256(vx, vz)));
        store(z + k, _mm256_xor_si256(vz, vx));
    }
    for (; k < words; k++) {
        r[k] ^= x[k] & z[k];
        z[k] ^= x[k];
    }
}

void cnot_columns(
    std::uint64_t* xc, std::uint64_t* zc, std::uint64_t* xt, std::uint64_t* zt, std::uint64_t* r,
    std::size_t words) {
    std::size_t k = 0;
    for (; k + kLane <= words; k += kLane) {
        __m256i vxc = load(xc + k);
        __m256i vzc = load(zc + k);
        __m256i vxt = load(xt + k);
        __m256i vzt = load(zt + k);
        // andnot(a, b) = ~a & b
        __m256i flip = _mm256_andnot_si256(_mm256_xor_si256(vxt, vzc), _mm256_and_si256(vxc, vzt));
        store(r + k, _mm256_xor_si256(load(r + k), flip));
        store(xt + k, _mm256_xor_si256(vxt, vxc));
        store(zc + k, _mm256_xor_si256(vzc, vzt));
    }
    for (; k < words; k++) {
        r[k] ^= xc[k] & zt[k] & ~(xt[k] ^ zc[k]);
        xt[k] ^= xc[k];
        zc[k] ^= zt[k];
    }
}

constexpr KernelTable kAvx2{
    "avx2", &xor_into, &is_zero, &symplectic_parity, &mul_into, &h_columns, &s_columns, &cnot_columns,
};

}  // namespace

namespace detail {
const KernelTable& avx2_kernel_table() {
    return kAvx2;
}
}  // namespace detail

}  // namespace stabpac::simd
