// Brute-force reference implementations used by the property tests. They
// share no code with the library beyond the input containers.
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "hammock/dataset.hpp"

namespace oracle {

// Random bipartite ratings, each pair present with probability `density`.
inline hammock::BipartiteRatings random_bipartite(std::size_t people,
                                                  std::size_t movies,
                                                  double density,
                                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  std::vector<hammock::RatingTriple> triples;
  for (std::size_t p = 0; p < people; ++p) {
    for (std::size_t m = 0; m < movies; ++m) {
      if (coin(rng)) {
        triples.push_back({static_cast<std::int64_t>(p + 1),
                           static_cast<std::int64_t>(m + 1), 1.0, 0});
      }
    }
  }
  std::vector<hammock::PersonId> ps(people);
  std::vector<hammock::MovieId> ms(movies);
  std::iota(ps.begin(), ps.end(), 1);
  std::iota(ms.begin(), ms.end(), 1);
  return hammock::BipartiteRatings(ps, ms, triples);
}

// Movies rated by each person as plain sets, rebuilt from the triples.
inline std::vector<std::set<std::int64_t>> rated_sets(
    const hammock::BipartiteRatings& g) {
  std::vector<std::set<std::int64_t>> sets(g.person_count());
  auto people = g.people();
  for (const auto& t : g.ratings()) {
    auto it = std::lower_bound(people.begin(), people.end(), t.person);
    sets[static_cast<std::size_t>(it - people.begin())].insert(t.movie);
  }
  return sets;
}

// Pairs (i<j) of person indices sharing at least w movies.
inline std::set<std::pair<std::uint32_t, std::uint32_t>> hammock_pairs(
    const hammock::BipartiteRatings& g, std::size_t w) {
  auto sets = rated_sets(g);
  std::set<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t i = 0; i < sets.size(); ++i) {
    for (std::uint32_t j = i + 1; j < sets.size(); ++j) {
      std::size_t common = 0;
      for (auto m : sets[i]) common += sets[j].count(m);
      if (common >= w) out.insert({i, j});
    }
  }
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max() / 4;

// All-pairs hop distances of a directed adjacency matrix.
inline std::vector<std::vector<std::uint32_t>> floyd_warshall(
    const std::vector<std::vector<bool>>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (adj[i][j]) d[i][j] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i][k] == kInf) continue;
      for (std::size_t j = 0; j < n; ++j) {
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  return d;
}

inline double scan_max(const std::vector<std::optional<double>>& a,
                       const std::vector<std::optional<double>>& b) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && b[i]) {
      double d = *a[i] - *b[i];
      if (d < 0) d = -d;
      if (d > best) best = d;
    }
  }
  return best;
}

}  // namespace oracle
