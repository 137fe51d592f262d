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

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "qcpart/kernels.hpp"

namespace qcpart {
namespace {

// Compact view of a vertex subset: vertices sorted ascending and relabeled
// 0..m-1 so the kernels run on a small dense matrix. All tie-breaking is done
// on compact indices, which preserves graph-id order.
struct Subproblem {
  std::vector<int> order;       // compact index -> graph vertex id
  int m = 0;
  int stride = 0;
  std::vector<int32_t> w;       // m x stride, zero-padded
  std::vector<uint8_t> side;    // 0 = side A, 1 = side B; stride-long
  std::vector<uint8_t> unlocked;
  std::vector<uint8_t> eligible;
  std::vector<int32_t> d;

  Subproblem(const InteractionGraph& graph, std::span<const int> vertices) {
    order.assign(vertices.begin(), vertices.end());
    std::sort(order.begin(), order.end());
    if (std::adjacent_find(order.begin(), order.end()) != order.end()) {
      throw std::invalid_argument("duplicate vertex in subset");
    }
    if (!order.empty() &&
        (order.front() < 0 || order.back() >= graph.num_vertices())) {
      throw std::invalid_argument("vertex out of range for graph");
    }
    m = static_cast<int>(order.size());
    stride = kern::padded_stride(m);
    w.assign(static_cast<size_t>(m) * stride, 0);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (i != j) w[static_cast<size_t>(i) * stride + j] = graph.weight(order[i], order[j]);
      }
    }
    side.assign(static_cast<size_t>(stride), 0);
    unlocked.assign(static_cast<size_t>(stride), 0);
    eligible.assign(static_cast<size_t>(stride), 0);
    d.assign(static_cast<size_t>(stride), 0);
  }

  const int32_t* row(int i) const { return w.data() + static_cast<size_t>(i) * stride; }

  int compact_of(int vertex) const {
    const auto it = std::lower_bound(order.begin(), order.end(), vertex);
    if (it == order.end() || *it != vertex) {
      throw std::invalid_argument("initial bisection names vertex " +
                                  std::to_string(vertex) + " outside the subset");
    }
    return static_cast<int>(it - order.begin());
  }

  int64_t current_cut() const {
    std::vector<int32_t> part(static_cast<size_t>(stride), -1);
    for (int i = 0; i < m; ++i) part[i] = side[i];
    return kern::active().cut_weight(w.data(), m, stride, part.data());
  }
};

}  // namespace

Bisection kl_bipartition(const InteractionGraph& graph, std::span<const int> vertices,
                         const std::optional<Bisection>& initial, uint64_t seed,
                         KlTrace* trace) {
  if (vertices.size() < 2) {
    throw std::invalid_argument("bipartitioning needs at least 2 vertices");
  }
  Subproblem sub(graph, vertices);
  const int m = sub.m;
  const int size_a = (m + 1) / 2;

  if (initial.has_value()) {
    const size_t na = initial->side_a.size();
    const size_t nb = initial->side_b.size();
    if (na + nb != static_cast<size_t>(m) ||
        (na > nb ? na - nb : nb - na) > 1) {
      throw std::invalid_argument("initial bisection is not a balanced split");
    }
    std::vector<uint8_t> seen(static_cast<size_t>(m), 0);
    for (const int v : initial->side_a) {
      const int i = sub.compact_of(v);
      if (seen[i]++) throw std::invalid_argument("initial bisection repeats a vertex");
      sub.side[i] = 0;
    }
    for (const int v : initial->side_b) {
      const int i = sub.compact_of(v);
      if (seen[i]++) throw std::invalid_argument("initial bisection repeats a vertex");
      sub.side[i] = 1;
    }
  } else {
    std::vector<int> perm(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) perm[i] = i;
    Rng rng(seed);
    rng.shuffle(perm);
    for (int pos = 0; pos < m; ++pos) {
      sub.side[perm[pos]] = pos < size_a ? 0 : 1;
    }
  }

  const kern::Kernels& kernels = kern::active();
  int64_t cut = sub.current_cut();

  for (;;) {
    const int64_t cut_before = cut;
    kernels.d_values(sub.w.data(), m, sub.stride, sub.side.data(), sub.d.data());
    int unlocked_a = 0, unlocked_b = 0;
    for (int i = 0; i < m; ++i) {
      sub.unlocked[i] = 1;
      sub.eligible[i] = sub.side[i];  // side B starts eligible as a partner
      (sub.side[i] == 0 ? unlocked_a : unlocked_b)++;
    }
    const int rounds = std::min(unlocked_a, unlocked_b);

    std::vector<SwapStep> steps;
    std::vector<std::pair<int, int>> compact_pairs;
    steps.reserve(rounds);
    compact_pairs.reserve(rounds);

    for (int t = 0; t < rounds; ++t) {
      int best_a = -1, best_b = -1;
      int64_t best_gain = 0;
      for (int a = 0; a < m; ++a) {
        if (sub.side[a] != 0 || !sub.unlocked[a]) continue;
        int64_t partner_score = 0;
        const int b = kernels.best_partner(sub.row(a), sub.d.data(),
                                           sub.eligible.data(), m, &partner_score);
        if (b < 0) continue;
        const int64_t gain = static_cast<int64_t>(sub.d[a]) + partner_score;
        if (best_a < 0 || gain > best_gain) {
          best_a = a;
          best_b = b;
          best_gain = gain;
        }
      }
      assert(best_a >= 0 && best_b >= 0);
      sub.unlocked[best_a] = 0;
      sub.unlocked[best_b] = 0;
      sub.eligible[best_b] = 0;
      kernels.d_update(sub.d.data(), sub.row(best_a), sub.row(best_b),
                       sub.side.data(), m);
      steps.push_back(SwapStep{sub.order[best_a], sub.order[best_b], best_gain});
      compact_pairs.emplace_back(best_a, best_b);
    }

    int64_t running = 0, best_prefix_gain = 0;
    int best_prefix = 0;
    for (int t = 0; t < static_cast<int>(steps.size()); ++t) {
      running += steps[t].gain;
      if (running > best_prefix_gain) {
        best_prefix_gain = running;
        best_prefix = t + 1;
      }
    }

    if (best_prefix > 0) {
      for (int t = 0; t < best_prefix; ++t) {
        sub.side[compact_pairs[t].first] = 1;
        sub.side[compact_pairs[t].second] = 0;
      }
      cut -= best_prefix_gain;
    }
    if (trace) {
      trace->push_back(KlPass{std::move(steps), best_prefix, cut_before, cut});
    }
    if (best_prefix == 0) break;
  }

  assert(cut == sub.current_cut());

  Bisection result;
  result.cut = cut;
  for (int i = 0; i < m; ++i) {
    (sub.side[i] == 0 ? result.side_a : result.side_b).push_back(sub.order[i]);
  }
  return result;
}

Partitioning bisection_to_partitioning(const Bisection& bisection) {
  const int n = static_cast<int>(bisection.side_a.size() + bisection.side_b.size());
  return Partitioning::from_parts({bisection.side_a, bisection.side_b}, n);
}

}  // namespace qcpart
