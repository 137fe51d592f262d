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

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <limits>

namespace qcpart::kern {
namespace {

int64_t cut_weight_scalar(const int32_t* w, int n, int stride, const int32_t* part) {
  int64_t crossing_twice = 0;
  for (int i = 0; i < n; ++i) {
    const int32_t* row = w + static_cast<int64_t>(i) * stride;
    int32_t acc = 0;
    for (int j = 0; j < n; ++j) {
      if (part[j] != part[i]) acc += row[j];
    }
    crossing_twice += acc;
  }
  return crossing_twice / 2;
}

void d_values_scalar(const int32_t* w, int n, int stride, const uint8_t* side,
                     int32_t* d) {
  for (int v = 0; v < n; ++v) {
    const int32_t* row = w + static_cast<int64_t>(v) * stride;
    int32_t external = 0;
    int32_t internal = 0;
    for (int u = 0; u < n; ++u) {
      if (side[u] == side[v]) {
        internal += row[u];
      } else {
        external += row[u];
      }
    }
    // w[v][v] == 0, so including u == v in the internal sum is harmless.
    d[v] = external - internal;
  }
}

void d_update_scalar(int32_t* d, const int32_t* row_a, const int32_t* row_b,
                     const uint8_t* side, int n) {
  for (int x = 0; x < n; ++x) {
    const int32_t delta = 2 * (row_a[x] - row_b[x]);
    d[x] += side[x] == 0 ? delta : -delta;
  }
}

int best_partner_scalar(const int32_t* row_a, const int32_t* d,
                        const uint8_t* eligible, int n, int64_t* best_score) {
  int best = -1;
  int64_t score = std::numeric_limits<int64_t>::min();
  for (int b = 0; b < n; ++b) {
    if (!eligible[b]) continue;
    const int64_t candidate = static_cast<int64_t>(d[b]) - 2 * static_cast<int64_t>(row_a[b]);
    if (candidate > score) {
      score = candidate;
      best = b;
    }
  }
  if (best >= 0) *best_score = score;
  return best;
}

constexpr Kernels kScalar{"scalar", cut_weight_scalar, d_values_scalar,
                          d_update_scalar, best_partner_scalar};

const Kernels* detect() {
  if (const char* pick = std::getenv("QCPART_KERNEL")) {
    if (std::strcmp(pick, "scalar") == 0) return &kScalar;
    if (std::strcmp(pick, "avx2") == 0 && avx2() != nullptr) return avx2();
  }
  if (const Kernels* wide = avx2()) return wide;
  return &kScalar;
}

std::atomic<const Kernels*> g_override{nullptr};

}  // namespace

const Kernels& scalar() { return kScalar; }

const Kernels& active() {
  if (const Kernels* forced = g_override.load(std::memory_order_acquire)) {
    return *forced;
  }
  static const Kernels* detected = detect();
  return *detected;
}

void set_override(const Kernels* kernels) {
  g_override.store(kernels, std::memory_order_release);
}

}  // namespace qcpart::kern
