#pragma once

#include <cstddef>

#include "hammock/metrics.hpp"

namespace hammock {

// Generating-function estimates for random graphs with a prescribed degree
// distribution. The estimates carry no confidence levels: they are
// qualitative predictions, best read next to measured values.

struct UndirectedModelInput {
  DegreeDistribution p_k;
  std::size_t n_p = 0;  // vertex count of the target graph
};

struct DirectedModelInput {
  JointDegreeDistribution p_jk;
  std::size_t n_p = 0;
  std::size_t n_m = 0;
};

/// Mean first- and second-neighbour counts.
struct ModelMoments {
  double z1 = 0.0;
  double z2 = 0.0;
};

/// Tolerance on normalisation and arc balance of input distributions.
inline constexpr double kDistributionTolerance = 1e-9;

/// z1 = sum k p_k, z2 = sum k(k-1) p_k. Throws DomainError when z1 == 0 and
/// InvalidDistributionError when p_k does not sum to 1.
ModelMoments moments_undirected(const DegreeDistribution& p_k);

/// z1 = sum k p_jk, z2 = sum j k p_jk. Throws InvalidDistributionError when
/// sum (j - k) p_jk departs from 0 by more than kDistributionTolerance.
ModelMoments moments_directed(const JointDegreeDistribution& p_jk);

/// Expected number of vertices m steps away: (z2/z1)^(m-1) z1.
double neighbors_at_distance(std::size_t m, const ModelMoments& moments);

/// Typical path length reaching all n vertices:
///   log[((n-1)(z2-z1) + z1^2) / z1^2] / log[z2/z1].
/// Throws ModelDegenerateError unless z2 > z1 > 0, DomainError for n < 2.
double predict_path_length(const ModelMoments& moments, std::size_t n);

/// Person-to-person length of the social graph.
double predict_l_pp(const UndirectedModelInput& input);

/// Mean length over person and movie targets of the recommender graph, with
/// n = n_p + n_m.
double predict_l_r(const DirectedModelInput& input);

/// Person-to-movie length recovered from the mixture
///   l_r (P(P-1) + P M) = l_pp P(P-1) + l_pm P M.
/// Throws DomainError for n_m == 0 or n_p < 2.
double predict_l_pm(double l_r, double l_pp, std::size_t n_p,
                    std::size_t n_m);

}  // namespace hammock
