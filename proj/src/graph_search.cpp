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

#include "hypermdim/graph_search.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hypermdim/error.hpp"

namespace hypermdim {

void ConflictGraph::symmetrize() {
  const std::size_t n = adj_.size();
  for (std::size_t i = 0; i < n; ++i) {
    adj_[i].reset(i);
    for (std::size_t j = adj_[i].find_first(); j != Bitset::npos; j = adj_[i].find_next(j))
      adj_[j].set(i);
  }
}

std::vector<std::size_t> greedy_independent_set(const ConflictGraph& graph) {
  std::vector<std::size_t> chosen;
  Bitset blocked(graph.size());
  for (std::size_t v = 0; v < graph.size(); ++v) {
    if (blocked.test(v)) continue;
    chosen.push_back(v);
    blocked |= graph.neighbors(v);
  }
  return chosen;
}

namespace {

class CliqueSearch {
 public:
  CliqueSearch(std::vector<Bitset> compl_adj, std::uint64_t budget)
      : adj_(std::move(compl_adj)), budget_(budget) {}

  void run(std::vector<std::size_t> warm) {
    best_ = std::move(warm);
    Bitset all(adj_.size());
    all.set();
    std::vector<std::size_t> current;
    expand(current, all);
  }

  const std::vector<std::size_t>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void expand(std::vector<std::size_t>& current, Bitset candidates) {
    if (++nodes_ > budget_)
      detail::fail(ErrorKind::budget_exhausted,
                   "exact independent-set search exceeded its node budget of " +
                       std::to_string(budget_) + "; use the greedy method");
    std::vector<std::size_t> order;
    std::vector<std::size_t> color;
    order.reserve(candidates.count());
    color.reserve(candidates.count());
    Bitset uncolored = candidates;
    std::size_t c = 0;
    while (uncolored.any()) {
      ++c;
      Bitset open = uncolored;
      for (std::size_t v = open.find_first(); v != Bitset::npos; v = open.find_next(v)) {
        order.push_back(v);
        color.push_back(c);
        uncolored.reset(v);
        open -= adj_[v];
      }
    }
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (current.size() + color[idx] <= best_.size()) return;
      std::size_t v = order[idx];
      current.push_back(v);
      Bitset next = candidates & adj_[v];
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
      candidates.reset(v);
    }
  }

  std::vector<Bitset> adj_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> best_;
};

}  // namespace

SearchResult maximum_independent_set(const ConflictGraph& graph, std::uint64_t node_budget) {
  const std::size_t n = graph.size();
  SearchResult result;
  if (n == 0) return result;
  // Relabel by descending complement degree (ascending conflict degree).
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return graph.neighbors(a).count() < graph.neighbors(b).count();
  });
  std::vector<std::size_t> label(n);
  for (std::size_t i = 0; i < n; ++i) label[order[i]] = i;
  std::vector<Bitset> compl_adj(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    Bitset& row = compl_adj[label[i]];
    row.set();
    row.reset(label[i]);
    const Bitset& nb = graph.neighbors(i);
    for (std::size_t j = nb.find_first(); j != Bitset::npos; j = nb.find_next(j)) row.reset(label[j]);
  }
  std::vector<std::size_t> warm;
  for (std::size_t v : greedy_independent_set(graph)) warm.push_back(label[v]);
  CliqueSearch search(std::move(compl_adj), node_budget);
  search.run(std::move(warm));
  for (std::size_t v : search.best()) result.members.push_back(order[v]);
  std::sort(result.members.begin(), result.members.end());
  result.nodes = search.nodes();
  return result;
}

namespace {

void check_coverable(const std::vector<Bitset>& covers, std::size_t n_targets) {
  Bitset reach(n_targets);
  for (const Bitset& c : covers) reach |= c;
  if (reach.count() != n_targets) {
    reach.flip();
    detail::fail(ErrorKind::infeasible, "target " + std::to_string(reach.find_first()) +
                                            " is not covered by any pool member");
  }
}

class CoverSearch {
 public:
  CoverSearch(const std::vector<Bitset>& covers, std::size_t n_targets, std::uint64_t budget)
      : covers_(covers), budget_(budget), covered_by_(n_targets, Bitset(covers.size())) {
    for (std::size_t c = 0; c < covers.size(); ++c)
      for (std::size_t t = covers[c].find_first(); t != Bitset::npos; t = covers[c].find_next(t))
        covered_by_[t].set(c);
  }

  void run(std::vector<std::size_t> warm, std::size_t n_targets) {
    best_ = std::move(warm);
    Bitset uncovered(n_targets);
    uncovered.set();
    std::vector<std::size_t> chosen;
    solve(uncovered, chosen);
  }

  const std::vector<std::size_t>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void solve(const Bitset& uncovered, std::vector<std::size_t>& chosen) {
    if (++nodes_ > budget_)
      detail::fail(ErrorKind::budget_exhausted,
                   "exact set-cover search exceeded its node budget of " +
                       std::to_string(budget_) + "; use the greedy method");
    if (uncovered.none()) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + 1 >= best_.size()) return;
    std::size_t max_gain = 0;
    for (const Bitset& c : covers_) max_gain = std::max(max_gain, (c & uncovered).count());
    std::size_t need = (uncovered.count() + max_gain - 1) / max_gain;
    if (chosen.size() + need >= best_.size()) return;
    std::size_t pivot = Bitset::npos;
    std::size_t fewest = covers_.size() + 1;
    for (std::size_t t = uncovered.find_first(); t != Bitset::npos; t = uncovered.find_next(t)) {
      std::size_t m = covered_by_[t].count();
      if (m < fewest) {
        fewest = m;
        pivot = t;
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> options;  // (gain, candidate)
    const Bitset& cand = covered_by_[pivot];
    for (std::size_t c = cand.find_first(); c != Bitset::npos; c = cand.find_next(c))
      options.emplace_back((covers_[c] & uncovered).count(), c);
    std::stable_sort(options.begin(), options.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [gain, c] : options) {
      chosen.push_back(c);
      solve(uncovered - covers_[c], chosen);
      chosen.pop_back();
    }
  }

  const std::vector<Bitset>& covers_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Bitset> covered_by_;
  std::vector<std::size_t> best_;
};

}  // namespace

std::vector<std::size_t> greedy_set_cover(const std::vector<Bitset>& covers,
                                          std::size_t n_targets) {
  check_coverable(covers, n_targets);
  Bitset uncovered(n_targets);
  uncovered.set();
  std::vector<std::size_t> chosen;
  while (uncovered.any()) {
    std::size_t best = 0, gain = 0;
    for (std::size_t c = 0; c < covers.size(); ++c) {
      std::size_t g = (covers[c] & uncovered).count();
      if (g > gain) {
        gain = g;
        best = c;
      }
    }
    chosen.push_back(best);
    uncovered -= covers[best];
  }
  return chosen;
}

SearchResult minimum_set_cover(const std::vector<Bitset>& covers, std::size_t n_targets,
                               std::uint64_t node_budget) {
  std::vector<std::size_t> warm = greedy_set_cover(covers, n_targets);
  CoverSearch search(covers, n_targets, node_budget);
  search.run(warm, n_targets);
  SearchResult result;
  result.members = search.best();
  std::sort(result.members.begin(), result.members.end());
  result.nodes = search.nodes();
  return result;
}

}  // namespace hypermdim
