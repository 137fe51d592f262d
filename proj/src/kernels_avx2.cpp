// Copyright 2026 The qcpart developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcpart/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <limits>

namespace qcpart::kern {
namespace {

#define QCPART_AVX2 __attribute__((target("avx2")))

// Widens 8 bytes at p to 8 int32 lanes.
QCPART_AVX2 inline __m256i load_bytes32(const uint8_t* p) {
  return _mm256_cvtepu8_epi32(_mm_loadl_epi64(reinterpret_cast<const __m128i*>(p)));
}

QCPART_AVX2 inline int32_t hsum32(__m256i v) {
  __m128i lo = _mm256_castsi256_si128(v);
  __m128i hi = _mm256_extracti128_si256(v, 1);
  __m128i s = _mm_add_epi32(lo, hi);
  s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(1, 0, 3, 2)));
  s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(2, 3, 0, 1)));
  return _mm_cvtsi128_si32(s);
}

QCPART_AVX2 inline int32_t hmax32(__m256i v) {
  __m128i lo = _mm256_castsi256_si128(v);
  __m128i hi = _mm256_extracti128_si256(v, 1);
  __m128i m = _mm_max_epi32(lo, hi);
  m = _mm_max_epi32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(1, 0, 3, 2)));
  m = _mm_max_epi32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(2, 3, 0, 1)));
  return _mm_cvtsi128_si32(m);
}

QCPART_AVX2 int64_t cut_weight_avx2(const int32_t* w, int n, int stride,
                                    const int32_t* part) {
  const int padded = padded_stride(n);
  int64_t crossing_twice = 0;
  for (int i = 0; i < n; ++i) {
    const int32_t* row = w + static_cast<int64_t>(i) * stride;
    const __m256i mine = _mm256_set1_epi32(part[i]);
    __m256i acc = _mm256_setzero_si256();
    for (int j = 0; j < padded; j += kLane) {
      const __m256i weights =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + j));
      const __m256i theirs =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(part + j));
      // Same-part lanes get an all-ones mask; andnot keeps the crossing ones.
      const __m256i same = _mm256_cmpeq_epi32(theirs, mine);
      acc = _mm256_add_epi32(acc, _mm256_andnot_si256(same, weights));
    }
    crossing_twice += hsum32(acc);
  }
  return crossing_twice / 2;
}

QCPART_AVX2 void d_values_avx2(const int32_t* w, int n, int stride,
                               const uint8_t* side, int32_t* d) {
  const int padded = padded_stride(n);
  for (int v = 0; v < n; ++v) {
    const int32_t* row = w + static_cast<int64_t>(v) * stride;
    const __m256i mine = _mm256_set1_epi32(side[v]);
    __m256i acc = _mm256_setzero_si256();
    for (int u = 0; u < padded; u += kLane) {
      const __m256i weights =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + u));
      const __m256i same = _mm256_cmpeq_epi32(load_bytes32(side + u), mine);
      // Conditional negate: (x ^ m) - m flips the sign exactly on the
      // all-ones lanes, turning same-side weights into -w[v][u].
      const __m256i signed_w =
          _mm256_sub_epi32(_mm256_xor_si256(weights, same), same);
      acc = _mm256_add_epi32(acc, signed_w);
    }
    d[v] = hsum32(acc);
  }
}

QCPART_AVX2 void d_update_avx2(int32_t* d, const int32_t* row_a, const int32_t* row_b,
                               const uint8_t* side, int n) {
  const int padded = padded_stride(n);
  const __m256i zero = _mm256_setzero_si256();
  for (int x = 0; x < padded; x += kLane) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row_a + x));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row_b + x));
    const __m256i delta = _mm256_slli_epi32(_mm256_sub_epi32(a, b), 1);
    const __m256i on_side_a = _mm256_cmpeq_epi32(load_bytes32(side + x), zero);
    const __m256i value =
        _mm256_blendv_epi8(_mm256_sub_epi32(zero, delta), delta, on_side_a);
    __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(d + x));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(d + x),
                        _mm256_add_epi32(cur, value));
  }
}

QCPART_AVX2 int best_partner_avx2(const int32_t* row_a, const int32_t* d,
                                  const uint8_t* eligible, int n,
                                  int64_t* best_score) {
  const int padded = padded_stride(n);
  const __m256i one = _mm256_set1_epi32(1);
  const __m256i floor = _mm256_set1_epi32(std::numeric_limits<int32_t>::min());
  __m256i best = floor;
  for (int b = 0; b < padded; b += kLane) {
    const __m256i row = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row_a + b));
    const __m256i dv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(d + b));
    const __m256i score = _mm256_sub_epi32(dv, _mm256_slli_epi32(row, 1));
    const __m256i ok = _mm256_cmpeq_epi32(load_bytes32(eligible + b), one);
    best = _mm256_max_epi32(best, _mm256_blendv_epi8(floor, score, ok));
  }
  const int32_t top = hmax32(best);
  // One scalar pass recovers the smallest index attaining the maximum.
  for (int b = 0; b < n; ++b) {
    if (eligible[b] == 1 && d[b] - 2 * row_a[b] == top) {
      *best_score = top;
      return b;
    }
  }
  return -1;
}

constexpr Kernels kAvx2{"avx2", cut_weight_avx2, d_values_avx2, d_update_avx2,
                        best_partner_avx2};

}  // namespace

const Kernels* avx2() {
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &kAvx2 : nullptr;
}

}  // namespace qcpart::kern

#else  // non-x86 builds fall back to the scalar kernels

namespace qcpart::kern {
const Kernels* avx2() { return nullptr; }
}  // namespace qcpart::kern

#endif
