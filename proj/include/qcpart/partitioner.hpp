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
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qcpart/interaction_graph.hpp"
#include "qcpart/partitioning.hpp"
#include "qcpart/rng.hpp"

namespace qcpart {

/// A 2-way split of some vertex subset; both sides ascending.
struct Bisection {
  std::vector<int> side_a, side_b;
  int64_t cut = 0;
};

// Per-pass trace of the bipartitioner, for diagnostics and the identity
// tests: the recorded candidate swaps with their gains, the committed prefix
// length t (0 for the terminating pass), and the cut before/after. The
// committed prefix satisfies cut_before - cut_after == sum of the first t
// gains.
struct SwapStep {
  int a, b;
  int64_t gain;
};
struct KlPass {
  std::vector<SwapStep> steps;
  int committed = 0;
  int64_t cut_before = 0, cut_after = 0;
};
using KlTrace = std::vector<KlPass>;

// Kernighan-Lin 2-way partitioning of `vertices` (a subset of the graph's
// vertex set) into sides of size ceil/floor of half. Starts from `initial`
// when given (must be a balanced split of `vertices`), else from a seeded
// random shuffle cut at the midpoint. Each pass greedily records
// min(|A|,|B|) tentative exchanges by maximal gain D_a + D_b - 2 c(a,b)
// (ties: smallest (a, b)), then commits the best positive prefix; passes
// repeat until no positive prefix exists. The result cut never exceeds the
// initial cut. Throws std::invalid_argument for fewer than 2 vertices.
Bisection kl_bipartition(const InteractionGraph& graph, std::span<const int> vertices,
                         const std::optional<Bisection>& initial, uint64_t seed,
                         KlTrace* trace = nullptr);

/// Adapts a whole-graph bisection (sides covering 0..n-1) to a Partitioning.
Partitioning bisection_to_partitioning(const Bisection& bisection);

// Recursive k-way partitioning: bipartition (best of `restarts` seeded runs,
// ties by lexicographically smallest A side), then recurse with ceil(k/2)
// parts on the first half and floor(k/2) on the second; part ids in
// depth-first order. Part sizes follow the bisection profile n / 2^depth.
// Throws std::invalid_argument unless 1 <= k <= n and restarts >= 1.
Partitioning recursive_kway(const InteractionGraph& graph, int k, int restarts,
                            uint64_t seed);

/// Uniformly random balanced partitioning: sizes ceil(n/k)/floor(n/k) with
/// the larger parts first, filled by shuffling the vertices and chunking.
Partitioning random_partition(int n, int k, Rng& rng);

/// Mean cut weight over `reps` independent random_partition draws.
/// Deterministic for a fixed seed. Throws std::invalid_argument if reps < 1.
double random_baseline(const InteractionGraph& graph, int k, int reps, uint64_t seed);

// Exact minimum cut over all vertex partitions with the given size profile
// (exhaustive; refuses n > 16). Ties resolved to the lexicographically
// smallest assignment vector. Returns the optimal partitioning and its cut.
std::pair<Partitioning, int64_t> brute_force_optimum(const InteractionGraph& graph,
                                                     std::span<const int> size_profile);

}  // namespace qcpart
