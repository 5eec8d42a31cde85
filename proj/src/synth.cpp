#include "hammock/synth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "hammock/error.hpp"

namespace hammock {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                          std::uint64_t b) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(master) ^ a) ^ (b * 0xd1b54a32d192ed03ULL));
}

void SynthConfig::validate() const {
  if (n_people < 1 || n_movies < 1) {
    throw ConfigError("synthetic dataset needs at least one person and movie");
  }
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw ConfigError("epsilon must be a finite non-negative number");
  }
  if (rewire_outcomes < 1 || rewire_threshold > rewire_outcomes - 1) {
    throw ConfigError("rewire threshold must lie in [0, outcomes - 1]");
  }
}

std::size_t rated_prefix_length(std::size_t buff_index, double epsilon,
                                std::size_t n_movies) {
  const double raw = static_cast<double>(n_movies) *
                     std::pow(static_cast<double>(buff_index), -epsilon);
  const double count = std::ceil(raw);
  if (count <= 1.0) return 1;
  return std::min(n_movies, static_cast<std::size_t>(count));
}

SynthDataset generate_power_law_bipartite(const SynthConfig& config) {
  config.validate();
  SynthDataset out;
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<unsigned> variate(0, config.rewire_outcomes - 1);

  std::vector<RatingTriple> triples;
  std::vector<char> rated(config.n_movies);
  std::vector<std::size_t> free;
  for (std::size_t b = 1; b <= config.n_people; ++b) {
    const std::size_t degree =
        rated_prefix_length(b, config.epsilon, config.n_movies);
    std::fill(rated.begin(), rated.end(), 0);
    std::fill(rated.begin(), rated.begin() + static_cast<std::ptrdiff_t>(degree),
              1);
    for (std::size_t m = 0; m < degree; ++m) {
      if (variate(rng) >= config.rewire_threshold) continue;
      free.clear();
      for (std::size_t t = 0; t < config.n_movies; ++t) {
        if (!rated[t]) free.push_back(t);
      }
      if (free.empty()) {
        ++out.diagnostics.impossible_rewires;
        continue;
      }
      std::uniform_int_distribution<std::size_t> pick(0, free.size() - 1);
      rated[m] = 0;
      rated[free[pick(rng)]] = 1;
      ++out.diagnostics.rewired;
    }
    for (std::size_t m = 0; m < config.n_movies; ++m) {
      if (rated[m]) {
        triples.push_back({static_cast<PersonId>(b),
                           static_cast<MovieId>(m + 1), 1.0, 0});
      }
    }
  }

  std::vector<PersonId> people(config.n_people);
  std::vector<MovieId> movies(config.n_movies);
  for (std::size_t i = 0; i < people.size(); ++i) people[i] = i + 1;
  for (std::size_t i = 0; i < movies.size(); ++i) movies[i] = i + 1;
  out.ratings = BipartiteRatings(std::move(people), std::move(movies), triples);
  if (config.repair_connectivity && !is_connected_bipartite(out.ratings)) {
    out.diagnostics.repair_edges = repair_connectivity(out.ratings);
  }
  return out;
}

std::size_t repair_connectivity(BipartiteRatings& g) {
  const std::size_t np = g.person_count();
  const std::size_t n = np + g.movie_count();
  if (n == 0) return 0;

  // Undirected labels over people [0, np) and movies [np, n).
  std::vector<std::uint32_t> label(n, std::numeric_limits<std::uint32_t>::max());
  std::vector<std::size_t> size;
  std::vector<std::size_t> people_in;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] != std::numeric_limits<std::uint32_t>::max()) continue;
    auto id = static_cast<std::uint32_t>(size.size());
    size.push_back(0);
    people_in.push_back(0);
    label[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      ++size[id];
      auto visit = [&](std::size_t u) {
        if (label[u] == std::numeric_limits<std::uint32_t>::max()) {
          label[u] = id;
          stack.push_back(u);
        }
      };
      if (v < np) {
        ++people_in[id];
        for (VertexIndex m : g.movies_of(static_cast<VertexIndex>(v))) {
          visit(np + m);
        }
      } else {
        for (VertexIndex p : g.raters_of(static_cast<VertexIndex>(v - np))) {
          visit(p);
        }
      }
    }
  }
  if (size.size() <= 1) return 0;

  // Labels follow the smallest member, so the first maximum wins ties on
  // total size; people count breaks the remaining ties.
  std::uint32_t giant = 0;
  for (std::uint32_t c = 1; c < size.size(); ++c) {
    if (size[c] > size[giant] ||
        (size[c] == size[giant] && people_in[c] > people_in[giant])) {
      giant = c;
    }
  }

  auto best_person = [&](std::uint32_t c) {
    std::optional<VertexIndex> best;
    for (VertexIndex p = 0; p < np; ++p) {
      if (label[p] == c &&
          (!best || g.person_degree(p) > g.person_degree(*best))) {
        best = p;
      }
    }
    return best;
  };
  std::optional<VertexIndex> hub_movie;
  for (VertexIndex m = 0; m < g.movie_count(); ++m) {
    if (label[np + m] == giant &&
        (!hub_movie || g.movie_degree(m) > g.movie_degree(*hub_movie))) {
      hub_movie = m;
    }
  }
  auto hub_person = best_person(giant);

  std::vector<RatingTriple> ratings(g.ratings().begin(), g.ratings().end());
  std::size_t added = 0;
  for (std::uint32_t c = 0; c < size.size(); ++c) {
    if (c == giant) continue;
    if (auto p = best_person(c); p && hub_movie) {
      ratings.push_back({g.people()[*p], g.movies()[*hub_movie], 1.0, 0});
      ++added;
    } else if (!p && hub_person) {
      for (VertexIndex m = 0; m < g.movie_count(); ++m) {
        if (label[np + m] == c) {
          ratings.push_back({g.people()[*hub_person], g.movies()[m], 1.0, 0});
          ++added;
          break;
        }
      }
    }
  }
  std::vector<PersonId> people(g.people().begin(), g.people().end());
  std::vector<MovieId> movies(g.movies().begin(), g.movies().end());
  g = BipartiteRatings(std::move(people), std::move(movies), ratings);
  return added;
}

double calibrate_epsilon(std::size_t kappa, std::size_t n_people,
                         std::size_t n_movies) {
  if (n_people < 1 || n_movies < 1) {
    throw ConfigError("calibration needs at least one person and movie");
  }
  if (kappa < 1 || kappa > n_movies) {
    throw ConfigError("kappa " + std::to_string(kappa) +
                      " outside [1, " + std::to_string(n_movies) + "]");
  }
  auto least = [&](double eps) {
    return rated_prefix_length(n_people, eps, n_movies);
  };
  if (n_people == 1) {
    if (kappa != n_movies) {
      throw ConfigError("a single person always rates every movie");
    }
    return 0.0;
  }
  // Upper bracket where the least-rated person is down to one movie.
  const double top = std::log(static_cast<double>(n_movies)) /
                         std::log(static_cast<double>(n_people)) +
                     1.0;
  // Smallest epsilon with least(eps) <= target.
  auto boundary = [&](std::size_t target) {
    double lo = 0.0, hi = top;
    if (least(lo) <= target) return 0.0;
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
      double mid = 0.5 * (lo + hi);
      if (least(mid) <= target) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    return hi;
  };
  const double begin = boundary(kappa);
  double end = 0.0;
  if (kappa >= 2) {
    end = boundary(kappa - 1);
  } else {
    end = begin + (begin - (n_movies >= 2 ? boundary(2) : 0.0));
    if (!(end > begin)) end = top;
  }
  double eps = 0.5 * (begin + end);
  if (least(eps) != kappa) {
    throw ConfigError("no epsilon yields a minimum rating of " +
                      std::to_string(kappa));
  }
  return eps;
}

void WreathConfig::validate() const {
  if (k < 2 || k % 2 != 0 || k >= n) {
    throw ConfigError("wreath degree k must be even with 2 <= k < n");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ConfigError("rewiring probability must lie in [0, 1]");
  }
}

UndirectedGraph generate_wreath(const WreathConfig& config) {
  config.validate();
  UndirectedGraph g(config.n);
  for (std::size_t i = 0; i < config.n; ++i) {
    for (std::size_t j = 1; j <= config.k / 2; ++j) {
      g.add_edge(static_cast<VertexIndex>(i),
                 static_cast<VertexIndex>((i + j) % config.n));
    }
  }
  return g;
}

RewireResult rewire(const UndirectedGraph& g, double p, RewireMode mode,
                    std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ConfigError("rewiring probability must lie in [0, 1]");
  }
  RewireResult out{g, 0, 0};
  auto& h = out.graph;
  const std::size_t n = h.vertex_count();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<VertexIndex> candidates;

  for (auto [u, v] : g.edges()) {
    if (!(coin(rng) < p)) continue;
    candidates.clear();
    std::size_t weight = 0;
    for (VertexIndex w = 0; w < n; ++w) {
      if (w == u || h.has_edge(u, w)) continue;
      candidates.push_back(w);
      weight += h.degree(w);
    }
    if (candidates.empty()) {
      ++out.stuck;
      continue;
    }
    VertexIndex target = candidates.front();
    if (mode == RewireMode::preferential && weight > 0) {
      std::uniform_int_distribution<std::size_t> ticket(0, weight - 1);
      std::size_t t = ticket(rng);
      for (VertexIndex w : candidates) {
        if (t < h.degree(w)) {
          target = w;
          break;
        }
        t -= h.degree(w);
      }
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
      target = candidates[pick(rng)];
    }
    h.remove_edge(u, v);
    h.add_edge(u, target);
    ++out.rewired;
  }
  return out;
}

UndirectedGraph giant_subgraph(const UndirectedGraph& g) {
  auto report = connected_components(g);
  std::vector<VertexIndex> index(g.vertex_count());
  std::size_t kept = 0;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (report.membership[v] == 0) index[v] = static_cast<VertexIndex>(kept++);
  }
  UndirectedGraph sub(kept);
  for (auto [u, v] : g.edges()) {
    if (report.membership[u] == 0 && report.membership[v] == 0) {
      sub.add_edge(index[u], index[v]);
    }
  }
  return sub;
}

std::vector<SmallWorldPoint> small_world_curve(const WreathConfig& config,
                                               std::span<const double> p_values,
                                               std::size_t trials,
                                               PathOptions options) {
  config.validate();
  if (trials < 1) throw ConfigError("trials must be at least 1");
  const UndirectedGraph wreath = generate_wreath(config);
  const double base_length = average_path_length(wreath, options);
  const double base_clustering = clustering_coefficient(wreath);

  std::vector<SmallWorldPoint> curve;
  curve.reserve(p_values.size());
  for (std::size_t i = 0; i < p_values.size(); ++i) {
    SmallWorldPoint point;
    point.p = p_values[i];
    for (std::size_t t = 0; t < trials; ++t) {
      auto rewired =
          rewire(wreath, point.p, config.mode, derive_seed(config.seed, t, i));
      UndirectedGraph giant = giant_subgraph(rewired.graph);
      point.length += average_path_length(giant, options);
      point.clustering += clustering_coefficient(giant);
    }
    point.length /= static_cast<double>(trials);
    point.clustering /= static_cast<double>(trials);
    point.length_ratio = point.length / base_length;
    point.clustering_ratio = point.clustering / base_clustering;
    curve.push_back(point);
  }
  return curve;
}

}  // namespace hammock
