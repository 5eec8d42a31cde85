#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hammock/dataset.hpp"
#include "hammock/graph.hpp"
#include "hammock/metrics.hpp"

namespace hammock {

/// Deterministic per-trial seed derived from a master seed (splitmix64).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                          std::uint64_t b = 0);

// ---------------------------------------------------------------------------
// Power-law rating datasets

/// Person b (buff index, 1-based) first rates the hit-ordered movies
/// 1..ceil(n_movies * b^-epsilon). Each of those edges then has its movie
/// endpoint moved when a variate drawn uniformly from {0..rewire_outcomes-1}
/// is below rewire_threshold; the new movie is uniform over the movies the
/// person does not rate yet.
struct SynthConfig {
  std::size_t n_people = 500;
  std::size_t n_movies = 75;
  double epsilon = 0.7;
  unsigned rewire_threshold = 2;
  unsigned rewire_outcomes = 11;
  std::uint64_t seed = 1;
  bool repair_connectivity = true;

  void validate() const;  // throws ConfigError
};

struct SynthDiagnostics {
  std::size_t rewired = 0;
  std::size_t impossible_rewires = 0;  // person already rated every movie
  std::size_t repair_edges = 0;
};

struct SynthDataset {
  BipartiteRatings ratings;
  SynthDiagnostics diagnostics;
};

/// ceil(n_movies * b^-epsilon), clamped to [1, n_movies].
std::size_t rated_prefix_length(std::size_t buff_index, double epsilon,
                                 std::size_t n_movies);

/// People are ids 1..n_people, movies 1..n_movies (hit order). Ratings are 1
/// with timestamp 0. One RNG stream: edges in ascending (b, movie) order,
/// each draws its rewire variate and, if selected, its target.
SynthDataset generate_power_law_bipartite(const SynthConfig& config);

/// Connects every non-giant component to the giant one: the component's
/// highest-degree person (lowest id on ties) rates the giant's
/// highest-degree movie. A person-less component instead gets a rating from
/// the giant's highest-degree person. Returns the number of edges added.
std::size_t repair_connectivity(BipartiteRatings& g);

/// Epsilon for which the least-rated of n_people rates exactly kappa movies.
/// Bisection on the non-increasing map epsilon -> ceil(n_movies *
/// n_people^-epsilon); returns the midpoint of the feasible interval. For
/// kappa == 1 the interval is unbounded above and is capped one kappa == 2
/// interval width above its lower end. Throws ConfigError for kappa outside
/// [1, n_movies].
double calibrate_epsilon(std::size_t kappa, std::size_t n_people,
                         std::size_t n_movies);

// ---------------------------------------------------------------------------
// Small-world graphs

enum class RewireMode { uniform, preferential };

struct WreathConfig {
  std::size_t n = 0;
  std::size_t k = 0;  // even, 2 <= k < n
  double p = 0.0;
  RewireMode mode = RewireMode::uniform;
  std::uint64_t seed = 1;

  void validate() const;  // throws ConfigError
};

/// Ring lattice: vertex i is adjacent to i +- 1..k/2 (mod n).
UndirectedGraph generate_wreath(const WreathConfig& config);

struct RewireResult {
  UndirectedGraph graph;
  std::size_t rewired = 0;
  std::size_t stuck = 0;  // selected edges without any valid target
};

/// Visits the input edges (u, v), u < v, in ascending order. Each is selected
/// with probability p and its endpoint v is replaced by a vertex that is
/// neither u nor adjacent to u: uniformly in uniform mode, proportionally to
/// current degree in preferential mode (uniform if every candidate has
/// degree 0). Edge count is preserved.
RewireResult rewire(const UndirectedGraph& g, double p, RewireMode mode,
                    std::uint64_t seed);

struct SmallWorldPoint {
  double p = 0.0;
  double length = 0.0;      // mean over trials
  double clustering = 0.0;  // mean over trials
  double length_ratio = 0.0;
  double clustering_ratio = 0.0;
};

/// L(p)/L(0) and C(p)/C(0) averaged over `trials` rewired wreaths, measured
/// on the giant component. Trial t at p_values[i] uses
/// derive_seed(config.seed, t, i).
std::vector<SmallWorldPoint> small_world_curve(const WreathConfig& config,
                                               std::span<const double> p_values,
                                               std::size_t trials,
                                               PathOptions options = {});

/// Subgraph induced by the giant component, vertices renumbered in order.
UndirectedGraph giant_subgraph(const UndirectedGraph& g);

}  // namespace hammock
