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

#include <stdexcept>

namespace qcpart {
namespace {

// Seed streams for one recursion node: children get their own nodes, each
// restart its own initial shuffle.
constexpr uint64_t kLeftChildStream = 1;
constexpr uint64_t kRightChildStream = 2;
constexpr uint64_t restart_stream(int r) { return 3 + static_cast<uint64_t>(r); }

struct KwaySolver {
  const InteractionGraph& graph;
  int restarts;
  std::vector<int32_t> assignment;
  int next_part = 0;

  void solve(const std::vector<int>& vertices, int k, uint64_t node_seed) {
    if (k == 1) {
      for (const int v : vertices) assignment[v] = next_part;
      ++next_part;
      return;
    }
    Bisection best;
    bool have = false;
    for (int r = 0; r < restarts; ++r) {
      Bisection run = kl_bipartition(graph, vertices, std::nullopt,
                                     Rng::derive(node_seed, restart_stream(r)));
      if (!have || run.cut < best.cut ||
          (run.cut == best.cut && run.side_a < best.side_a)) {
        best = std::move(run);
        have = true;
      }
    }
    solve(best.side_a, (k + 1) / 2, Rng::derive(node_seed, kLeftChildStream));
    solve(best.side_b, k / 2, Rng::derive(node_seed, kRightChildStream));
  }
};

}  // namespace

Partitioning recursive_kway(const InteractionGraph& graph, int k, int restarts,
                            uint64_t seed) {
  const int n = graph.num_vertices();
  if (k < 1 || k > n) {
    throw std::invalid_argument("k must be between 1 and the vertex count");
  }
  if (restarts < 1) throw std::invalid_argument("restarts must be at least 1");

  KwaySolver solver{graph, restarts,
                    std::vector<int32_t>(static_cast<size_t>(n), -1), 0};
  std::vector<int> all(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) all[v] = v;
  solver.solve(all, k, seed);
  return Partitioning(std::move(solver.assignment), k);
}

Partitioning random_partition(int n, int k, Rng& rng) {
  if (k < 1 || k > n) {
    throw std::invalid_argument("k must be between 1 and the vertex count");
  }
  std::vector<int> perm(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) perm[v] = v;
  rng.shuffle(perm);

  std::vector<int32_t> assignment(static_cast<size_t>(n), -1);
  const int small = n / k;
  const int leftovers = n % k;
  int pos = 0;
  for (int part = 0; part < k; ++part) {
    const int size = small + (part < leftovers ? 1 : 0);
    for (int i = 0; i < size; ++i) assignment[perm[pos++]] = part;
  }
  return Partitioning(std::move(assignment), k);
}

double random_baseline(const InteractionGraph& graph, int k, int reps, uint64_t seed) {
  if (reps < 1) throw std::invalid_argument("reps must be at least 1");
  Rng rng(seed);
  int64_t sum = 0;
  for (int r = 0; r < reps; ++r) {
    sum += graph.cut_weight(random_partition(graph.num_vertices(), k, rng));
  }
  return static_cast<double>(sum) / static_cast<double>(reps);
}

}  // namespace qcpart
