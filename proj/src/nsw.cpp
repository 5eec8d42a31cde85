#include "hammock/nsw.hpp"

#include <cmath>

#include "hammock/error.hpp"

namespace hammock {

namespace {

void check_normalised(double total) {
  if (std::abs(total - 1.0) > kDistributionTolerance) {
    throw InvalidDistributionError("degree probabilities sum to " +
                                   std::to_string(total));
  }
}

}  // namespace

ModelMoments moments_undirected(const DegreeDistribution& p_k) {
  double total = 0.0;
  ModelMoments m;
  for (const auto& [k, p] : p_k.probabilities) {
    const double kd = static_cast<double>(k);
    total += p;
    m.z1 += kd * p;
    m.z2 += kd * (kd - 1.0) * p;
  }
  check_normalised(total);
  if (m.z1 <= 0.0) throw DomainError("degree distribution has no edges");
  return m;
}

ModelMoments moments_directed(const JointDegreeDistribution& p_jk) {
  double total = 0.0;
  double imbalance = 0.0;
  ModelMoments m;
  for (const auto& [jk, p] : p_jk.probabilities) {
    const double j = static_cast<double>(jk.first);
    const double k = static_cast<double>(jk.second);
    total += p;
    imbalance += (j - k) * p;
    m.z1 += k * p;
    m.z2 += j * k * p;
  }
  check_normalised(total);
  if (std::abs(imbalance) > kDistributionTolerance) {
    throw InvalidDistributionError("in/out arc balance violated by " +
                                   std::to_string(imbalance));
  }
  return m;
}

double neighbors_at_distance(std::size_t m, const ModelMoments& moments) {
  if (m == 0) throw DomainError("distance must be at least 1");
  if (!(moments.z1 > 0.0)) throw DomainError("z1 must be positive");
  return std::pow(moments.z2 / moments.z1, static_cast<double>(m - 1)) *
         moments.z1;
}

double predict_path_length(const ModelMoments& moments, std::size_t n) {
  if (n < 2) throw DomainError("path length needs at least 2 vertices");
  const double z1 = moments.z1;
  const double z2 = moments.z2;
  if (!(z1 > 0.0) || !(z2 > z1)) {
    throw ModelDegenerateError("length formula is singular unless z2 > z1 > 0");
  }
  const double reach =
      (static_cast<double>(n - 1) * (z2 - z1) + z1 * z1) / (z1 * z1);
  return std::log(reach) / std::log(z2 / z1);
}

double predict_l_pp(const UndirectedModelInput& input) {
  return predict_path_length(moments_undirected(input.p_k), input.n_p);
}

double predict_l_r(const DirectedModelInput& input) {
  return predict_path_length(moments_directed(input.p_jk),
                             input.n_p + input.n_m);
}

double predict_l_pm(double l_r, double l_pp, std::size_t n_p,
                    std::size_t n_m) {
  if (n_m == 0) throw DomainError("l_pm undefined without movies");
  if (n_p < 2) throw DomainError("l_pm needs at least 2 people");
  const double pp = static_cast<double>(n_p) * static_cast<double>(n_p - 1);
  const double pm = static_cast<double>(n_p) * static_cast<double>(n_m);
  return (l_r * (pp + pm) - l_pp * pp) / pm;
}

}  // namespace hammock
