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

#pragma once

#include <cstdint>

namespace qcpart::kern {

// Integer kernels over dense symmetric weight matrices, row-major with rows
// padded to `stride` (a multiple of 8); pad weights are zero. All per-vertex
// arrays (part/side/eligible/d) must be allocated stride-long so vector loads
// stay in bounds; `eligible` pad entries must be 0, the rest may hold
// anything. Weights are gate counts: callers guarantee the total interaction
// weight fits in int32, so per-lane sums cannot overflow.
//
// Every kernel has a scalar reference implementation and may have SIMD
// variants; variants are bit-equivalent (these are exact integer results, not
// approximations) and the equivalence suite enforces that on random inputs.
struct Kernels {
  const char* name;

  // Sum of w[i][j] over unordered pairs with part[i] != part[j].
  int64_t (*cut_weight)(const int32_t* w, int n, int stride, const int32_t* part);

  // d[v] = sum_{u != v} w[v][u] * (side[u] == side[v] ? -1 : +1), side in {0,1}.
  void (*d_values)(const int32_t* w, int n, int stride, const uint8_t* side, int32_t* d);

  // After locking the candidate swap (a, b): d[x] += 2*(w[a][x] - w[b][x]) for
  // side-0 vertices and the negation for side-1. row_a/row_b are the matrix
  // rows of a and b. Locked entries are updated too; callers never read them.
  void (*d_update)(int32_t* d, const int32_t* row_a, const int32_t* row_b,
                   const uint8_t* side, int n);

  // argmax_b of d[b] - 2*row_a[b] over b with eligible[b] == 1; ties go to the
  // smallest b. Returns -1 when nothing is eligible, else writes the score.
  int (*best_partner)(const int32_t* row_a, const int32_t* d, const uint8_t* eligible,
                      int n, int64_t* best_score);
};

constexpr int kLane = 8;

/// Row stride for an n-vertex matrix.
constexpr int padded_stride(int n) { return (n + kLane - 1) & ~(kLane - 1); }

/// Scalar reference kernels (always available).
const Kernels& scalar();

/// AVX2 kernels, or nullptr when this build/CPU lacks them.
const Kernels* avx2();

// Kernels used by the library. Picks the widest supported variant; the
// QCPART_KERNEL environment variable ("scalar" or "avx2") pins a choice at
// startup, and set_override() swaps the table at runtime (tests).
const Kernels& active();
void set_override(const Kernels* kernels);  // nullptr restores auto-detection

}  // namespace qcpart::kern
