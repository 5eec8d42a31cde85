#pragma once

#include <vector>

#include "hammock/dataset.hpp"

namespace fixture {

// Four people, 71 movies. At hammock width 25 the people form the social
// edges AC, AD, BC, BD, CD and the recommender graph has the joint degree
// distribution
//   (1,0):23  (2,0):16  (3,0):13  (4,0):19
//   (2,31):1  (2,65):1  (3,37):1  (3,47):1      (all over 75).
inline hammock::BipartiteRatings table_component() {
  enum { A = 1, B = 2, C = 3, D = 4 };
  std::vector<hammock::RatingTriple> t;
  auto rate = [&](int first, int last, std::initializer_list<int> who) {
    for (int m = first; m <= last; ++m)
      for (int p : who) t.push_back({p, m, 1.0, 0});
  };
  rate(1, 19, {A, B, C, D});
  rate(20, 25, {A, C, D});
  rate(26, 32, {B, C, D});
  rate(33, 34, {C, D});
  rate(35, 44, {B, D});
  rate(45, 48, {A, B});
  rate(49, 71, {B});
  return hammock::BipartiteRatings::from_triples(t);
}

}  // namespace fixture
