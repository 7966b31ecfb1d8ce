// Copyright 2026 The hypermdim Authors
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

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace hypermdim {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

inline constexpr std::uint64_t kDefaultNodeBudget = 200'000'000;

class ConflictGraph {
 public:
  explicit ConflictGraph(std::size_t n) : adj_(n, Bitset(n)) {}

  std::size_t size() const { return adj_.size(); }
  void add_edge(std::size_t i, std::size_t j) {
    if (i == j) return;
    adj_[i].set(j);
    adj_[j].set(i);
  }
  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i].test(j); }
  const Bitset& neighbors(std::size_t i) const { return adj_[i]; }
  // Rows may be filled independently (e.g. in parallel) and symmetrized after.
  Bitset& row(std::size_t i) { return adj_[i]; }
  void symmetrize();

 private:
  std::vector<Bitset> adj_;
};

struct SearchResult {
  std::vector<std::size_t> members;  // ascending indices
  std::uint64_t nodes = 0;
};

// First-fit in index order; the result is maximal.
std::vector<std::size_t> greedy_independent_set(const ConflictGraph& graph);

// Maximum independent set by branch-and-bound (maximum clique of the
// complement with greedy-coloring bounds), warm-started from the greedy set.
// Throws budget_exhausted when the search exceeds node_budget.
SearchResult maximum_independent_set(const ConflictGraph& graph,
                                     std::uint64_t node_budget = kDefaultNodeBudget);

// covers[c] is the set of targets covered by candidate c. Largest gain first,
// lowest index on ties. Throws infeasible naming an uncoverable target.
std::vector<std::size_t> greedy_set_cover(const std::vector<Bitset>& covers,
                                          std::size_t n_targets);

SearchResult minimum_set_cover(const std::vector<Bitset>& covers, std::size_t n_targets,
                               std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace hypermdim
