#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hammock/graph.hpp"
#include "hammock/jumps.hpp"

namespace hammock {

struct ComponentSize {
  std::size_t people = 0;
  std::size_t movies = 0;

  std::size_t total() const noexcept { return people + movies; }
  friend bool operator==(const ComponentSize&, const ComponentSize&) = default;
};

/// Component structure of a social or recommender graph.
///
/// Components are ordered by total size (descending), then by people count
/// (descending), then by smallest vertex index. Index 0 is the giant
/// component. For a recommender graph the people are partitioned by social
/// connectivity (the strongly connected person cores) and each movie joins
/// the first core, in that order, that has an arc into it.
struct ComponentReport {
  std::vector<ComponentSize> component_sizes;
  /// Component index per vertex: people first, then movies.
  std::vector<std::uint32_t> membership;
  std::size_t giant_people = 0;
  std::size_t giant_movies = 0;
  std::size_t isolated_people = 0;  // people without any social edge
  bool shattered = false;  // every non-giant person is isolated

  std::size_t component_count() const noexcept {
    return component_sizes.size();
  }
};

ComponentReport connected_components(const UndirectedGraph& g);
ComponentReport connected_components(const SocialGraph& gs);
ComponentReport connected_components(const RecommenderGraph& gr);

/// p_k over the vertices of a graph (or of its giant component).
struct DegreeDistribution {
  std::map<std::size_t, double> probabilities;
  std::size_t n = 0;

  static DegreeDistribution from_counts(
      const std::map<std::size_t, std::size_t>& counts);
  double probability(std::size_t k) const;
};

/// p_jk over (indegree j, outdegree k).
struct JointDegreeDistribution {
  std::map<std::pair<std::size_t, std::size_t>, double> probabilities;
  std::size_t n = 0;

  static JointDegreeDistribution from_counts(
      const std::map<std::pair<std::size_t, std::size_t>, std::size_t>&
          counts);
  double probability(std::size_t j, std::size_t k) const;
};

/// Throws DomainError on an empty graph.
DegreeDistribution degree_distribution(const UndirectedGraph& g,
                                       bool largest_only);
DegreeDistribution degree_distribution(const SocialGraph& gs,
                                       bool largest_only);
/// Degrees are counted inside the selected vertex set (induced subgraph).
JointDegreeDistribution joint_degree_distribution(const RecommenderGraph& gr,
                                                  bool largest_only);

/// Source selection for all-source BFS. Giant components with more than
/// max_exact_sources people are measured from `sampled_sources` sources
/// drawn uniformly without replacement.
struct PathOptions {
  std::size_t max_exact_sources = 5000;
  std::size_t sampled_sources = 1000;
  std::uint64_t seed = 1;
};

/// Mean shortest-path hop counts inside the giant component.
/// c_pp / c_pm count the (source, target) pairs that entered each mean.
struct PathLengthStats {
  std::optional<double> l_pp;
  std::optional<double> l_r;
  std::optional<double> l_pm;
  std::uint64_t c_pp = 0;
  std::uint64_t c_pm = 0;
  std::uint64_t unreachable_pairs = 0;
  std::size_t sources = 0;
  bool sampled = false;
};

/// Throws DomainError when the giant component has fewer than 2 vertices.
PathLengthStats measure_l_pp(const SocialGraph& gs, PathOptions options = {});
/// Follows arc directions from every person of the giant component. Throws
/// DomainError when there is no person source.
PathLengthStats measure_l_r_l_pm(const RecommenderGraph& gr,
                                 PathOptions options = {});
/// Mean over ordered pairs of the giant component of an undirected graph.
double average_path_length(const UndirectedGraph& g, PathOptions options = {});

/// Mean neighbourhood edge density; vertices of degree < 2 contribute 0.
double clustering_coefficient(const UndirectedGraph& g);
double clustering_coefficient(const SocialGraph& gs);

struct CdfPoint {
  std::size_t degree = 0;
  double value = 0.0;  // count of vertices with degree >= `degree`, or log10
  friend bool operator==(const CdfPoint&, const CdfPoint&) = default;
};

/// Complementary cumulative counts in ascending degree order.
std::vector<CdfPoint> degree_cdf(const DegreeDistribution& dist,
                                 bool log_scale);

/// max |actual_i - predicted_i| over positions where both are present.
/// Throws DomainError on length mismatch, empty input or no defined pair.
double linf_discrepancy(std::span<const std::optional<double>> actual,
                        std::span<const std::optional<double>> predicted);

void write_components_csv(std::ostream& out, const ComponentReport& report);
void write_degree_cdf_csv(std::ostream& out, std::span<const CdfPoint> cdf,
                          bool log_scale);
void write_path_stats_csv(std::ostream& out, const PathLengthStats& stats);

}  // namespace hammock
