#include "hammock/jumps.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "hammock/error.hpp"
#include "parallel.hpp"

namespace hammock {

JumpSpec JumpSpec::hammock(std::size_t width) {
  JumpSpec spec{JumpKind::hammock, width};
  spec.validate();
  return spec;
}

void JumpSpec::validate() const {
  if (width < 1) throw ConfigError("hammock width must be at least 1");
}

CoRatingTable::CoRatingTable(const BipartiteRatings& g)
    : rows_(g.person_count()) {
  const std::size_t np = g.person_count();
  struct Workspace {
    std::vector<std::uint32_t> counts;
    std::vector<VertexIndex> touched;
  };
  // Row p collects co-raters q > p through the rater lists of p's movies,
  // so every pair is counted once per shared movie.
  detail::parallel_states(
      np, [np] { return Workspace{std::vector<std::uint32_t>(np), {}}; },
      [&](Workspace& ws, std::size_t p) {
        for (VertexIndex m : g.movies_of(static_cast<VertexIndex>(p))) {
          auto raters = g.raters_of(m);
          auto first = std::upper_bound(raters.begin(), raters.end(),
                                        static_cast<VertexIndex>(p));
          for (auto it = first; it != raters.end(); ++it) {
            if (ws.counts[*it]++ == 0) ws.touched.push_back(*it);
          }
        }
        std::sort(ws.touched.begin(), ws.touched.end());
        auto& row = rows_[p];
        row.reserve(ws.touched.size());
        for (VertexIndex q : ws.touched) {
          row.push_back({q, ws.counts[q]});
          ws.counts[q] = 0;
        }
        ws.touched.clear();
      });
  for (const auto& row : rows_) pairs_ += row.size();
}

std::size_t common_artifacts_count(const BipartiteRatings& g, PersonId p1,
                                   PersonId p2) {
  if (p1 == p2) {
    throw DomainError("common artifacts need two distinct people");
  }
  auto a = g.movies_of(g.person_index(p1));
  auto b = g.movies_of(g.person_index(p2));
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

SocialGraph apply_jump(const BipartiteRatings& g, JumpSpec spec) {
  spec.validate();
  return apply_jump(g, CoRatingTable(g), spec);
}

SocialGraph apply_jump(const BipartiteRatings& g, const CoRatingTable& table,
                       JumpSpec spec) {
  spec.validate();
  if (table.person_count() != g.person_count()) {
    throw ConsistencyError("co-rating table built from another dataset");
  }
  const std::size_t threshold = spec.threshold();
  SocialGraph gs{{g.people().begin(), g.people().end()},
                 UndirectedGraph(g.person_count())};
  for (VertexIndex p = 0; p < table.person_count(); ++p) {
    for (const auto& e : table.row(p)) {
      if (e.count >= threshold) gs.graph.add_edge(p, e.other);
    }
  }
  return gs;
}

RecommenderGraph build_recommender_graph(const BipartiteRatings& g,
                                         const SocialGraph& gs) {
  if (gs.graph.vertex_count() != g.person_count() ||
      !std::equal(gs.people.begin(), gs.people.end(), g.people().begin(),
                  g.people().end())) {
    throw ConsistencyError(
        "social graph vertices differ from the dataset's people");
  }
  const std::size_t np = g.person_count();
  RecommenderGraph gr;
  gr.people.assign(g.people().begin(), g.people().end());
  gr.movies.assign(g.movies().begin(), g.movies().end());
  gr.out.resize(np + g.movie_count());
  for (VertexIndex p = 0; p < np; ++p) {
    auto& arcs = gr.out[p];
    auto friends = gs.graph.neighbors(p);
    auto rated = g.movies_of(p);
    arcs.reserve(friends.size() + rated.size());
    arcs.insert(arcs.end(), friends.begin(), friends.end());
    for (VertexIndex m : rated) {
      arcs.push_back(static_cast<VertexIndex>(np + m));
    }
    gr.person_arc_count += friends.size();
    gr.movie_arc_count += rated.size();
  }
  return gr;
}

void write_social_edges_csv(std::ostream& out, const SocialGraph& gs) {
  out << "p1,p2\n";
  for (auto [u, v] : gs.graph.edges()) {
    out << gs.people[u] << ',' << gs.people[v] << '\n';
  }
}

void write_recommender_arcs_csv(std::ostream& out,
                                const RecommenderGraph& gr) {
  out << "src,dst,kind\n";
  const std::size_t np = gr.person_count();
  for (VertexIndex p = 0; p < np; ++p) {
    for (VertexIndex v : gr.out[p]) {
      if (gr.is_person(v)) {
        out << gr.people[p] << ',' << gr.people[v] << ",person\n";
      } else {
        out << gr.people[p] << ',' << gr.movies[v - np] << ",movie\n";
      }
    }
  }
}

}  // namespace hammock
