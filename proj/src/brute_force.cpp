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

#include "qcpart/partitioner.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace qcpart {
namespace {

struct Enumerator {
  const InteractionGraph& graph;
  const std::span<const int> sizes;
  int n;
  std::vector<int32_t> assignment;
  std::vector<int> remaining;
  std::vector<int32_t> best_assignment;
  int64_t best_cut;

  // Depth-first over assignment vectors in lexicographic order; `partial` is
  // the cut among the first v vertices. Only strictly better completions
  // replace the incumbent, so the first optimum found (the lexicographically
  // smallest) is the one returned, and pruning on >= cannot discard it.
  void place(int v, int64_t partial) {
    if (partial >= best_cut) return;
    if (v == n) {
      best_cut = partial;
      best_assignment = assignment;
      return;
    }
    for (int p = 0; p < static_cast<int>(sizes.size()); ++p) {
      if (remaining[p] == 0) continue;
      int64_t crossing = 0;
      for (int u = 0; u < v; ++u) {
        if (assignment[u] != p) crossing += graph.weight(u, v);
      }
      remaining[p]--;
      assignment[v] = p;
      place(v + 1, partial + crossing);
      remaining[p]++;
    }
  }
};

}  // namespace

std::pair<Partitioning, int64_t> brute_force_optimum(const InteractionGraph& graph,
                                                     std::span<const int> size_profile) {
  const int n = graph.num_vertices();
  if (n > 16) {
    throw std::invalid_argument("exhaustive search is limited to 16 vertices");
  }
  if (size_profile.empty()) {
    throw std::invalid_argument("size profile must name at least one part");
  }
  for (const int s : size_profile) {
    if (s < 1) throw std::invalid_argument("every part must have at least one vertex");
  }
  if (std::accumulate(size_profile.begin(), size_profile.end(), 0) != n) {
    throw std::invalid_argument("size profile must sum to the vertex count");
  }

  Enumerator en{graph,
                size_profile,
                n,
                std::vector<int32_t>(static_cast<size_t>(n), -1),
                std::vector<int>(size_profile.begin(), size_profile.end()),
                {},
                std::numeric_limits<int64_t>::max()};
  en.place(0, 0);
  return {Partitioning(std::move(en.best_assignment),
                       static_cast<int>(size_profile.size())),
          en.best_cut};
}

}  // namespace qcpart
