// Copyright 2026 The LLR Bandits Authors. All rights reserved.
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

#include <limits>
#include <string>
#include <vector>

#include "llr/errors.hpp"
#include "llr/oracles.hpp"

namespace llr::oracle_detail {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Min-cost perfect matching on an n x n cost matrix (Kuhn-Munkres with
// potentials). Keeps the final duals so the optimal face can be inspected.
struct Hungarian {
  std::size_t n;
  std::vector<double> cost;  // row-major n x n
  std::vector<double> row_pot;
  std::vector<double> col_pot;
  std::vector<std::size_t> row_col;
  std::vector<std::size_t> col_row;

  explicit Hungarian(std::size_t size)
      : n(size), cost(size * size, 0.0), row_pot(size, 0.0), col_pot(size, 0.0),
        row_col(size, kNone), col_row(size, kNone) {}

  double reduced(std::size_t r, std::size_t c) const {
    return cost[r * n + c] - row_pot[r] - col_pot[c];
  }

  void solve() {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    // Column slot n is the virtual root of each alternating tree.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
    std::vector<std::size_t> p(n + 1, kNone), way(n + 1, n);
    std::vector<char> used(n + 1);
    const std::size_t root = n;
    for (std::size_t i = 0; i < n; ++i) {
      p[root] = i;
      std::size_t j0 = root;
      std::fill(minv.begin(), minv.end(), kInf);
      std::fill(used.begin(), used.end(), 0);
      do {
        used[j0] = 1;
        const std::size_t i0 = p[j0];
        double delta = kInf;
        std::size_t j1 = kNone;
        for (std::size_t j = 0; j < n; ++j) {
          if (used[j]) continue;
          const double cur = cost[i0 * n + j] - u[i0] - v[j];
          if (cur < minv[j]) {
            minv[j] = cur;
            way[j] = j0;
          }
          if (minv[j] < delta) {
            delta = minv[j];
            j1 = j;
          }
        }
        for (std::size_t j = 0; j <= n; ++j) {
          if (used[j]) {
            u[p[j]] += delta;
            v[j] -= delta;
          } else {
            minv[j] -= delta;
          }
        }
        j0 = j1;
      } while (p[j0] != kNone);
      do {
        const std::size_t j1 = way[j0];
        p[j0] = p[j1];
        j0 = j1;
      } while (j0 != root);
    }
    for (std::size_t j = 0; j < n; ++j) {
      col_row[j] = p[j];
      row_col[p[j]] = j;
      col_pot[j] = v[j];
    }
    for (std::size_t i = 0; i < n; ++i) row_pot[i] = u[i];
  }

  bool tight(std::size_t r, std::size_t c) const {
    return reduced(r, c) <= kTieTolerance;
  }

  bool augment(std::size_t row, const std::vector<char>& col_locked,
               std::vector<char>& visited) {
    for (std::size_t c = 0; c < n; ++c) {
      if (col_locked[c] || visited[c] || !tight(row, c)) continue;
      visited[c] = 1;
      if (col_row[c] == kNone || augment(col_row[c], col_locked, visited)) {
        col_row[c] = row;
        row_col[row] = c;
        return true;
      }
    }
    return false;
  }

  // Among perfect matchings on the optimal face (all edges tight), pick the
  // one whose first `real_rows` rows take the lexicographically smallest
  // column sequence.
  void lexicographic_refine(std::size_t real_rows) {
    std::vector<char> col_locked(n, 0);
    std::vector<char> visited(n);
    for (std::size_t r = 0; r < real_rows; ++r) {
      const std::size_t current = row_col[r];
      for (std::size_t c = 0; c < current; ++c) {
        if (col_locked[c] || !tight(r, c)) continue;
        const std::vector<std::size_t> saved_rc = row_col;
        const std::vector<std::size_t> saved_cr = col_row;
        const std::size_t displaced = col_row[c];
        col_row[current] = kNone;
        col_row[c] = r;
        row_col[r] = c;
        row_col[displaced] = kNone;
        col_locked[c] = 1;
        std::fill(visited.begin(), visited.end(), 0);
        if (augment(displaced, col_locked, visited)) break;
        col_locked[c] = 0;
        row_col = saved_rc;
        col_row = saved_cr;
      }
      col_locked[row_col[r]] = 1;
    }
  }
};

}  // namespace

MatchingResult solve_assignment(std::size_t users, std::size_t channels,
                                std::span<const double> weights, bool maximize) {
  if (users > channels) {
    throw ConfigurationError("bipartite matching with " + std::to_string(users) +
                             " users and " + std::to_string(channels) +
                             " channels is infeasible (needs users <= channels)");
  }
  if (weights.size() != users * channels) {
    throw ContractViolation("weight vector has length " + std::to_string(weights.size()) +
                            ", expected " + std::to_string(users * channels));
  }
  // Rows beyond `users` are zero-cost dummies absorbing unused channels.
  Hungarian h(channels);
  for (std::size_t u = 0; u < users; ++u) {
    for (std::size_t c = 0; c < channels; ++c) {
      const double w = weights[u * channels + c];
      h.cost[u * channels + c] = maximize ? -w : w;
    }
  }
  h.solve();
  h.lexicographic_refine(users);

  MatchingResult result;
  result.assignment.resize(users);
  for (std::size_t u = 0; u < users; ++u) {
    result.assignment[u] = h.row_col[u];
    result.objective += weights[u * channels + h.row_col[u]];
  }
  return result;
}

}  // namespace llr::oracle_detail
