#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "hammock/dataset.hpp"
#include "hammock/graph.hpp"

namespace hammock {

enum class JumpKind { skip, hammock };

/// A jump connects two people whose rating sets share at least `width`
/// movies. The skip jump is the hammock of width 1.
struct JumpSpec {
  JumpKind kind = JumpKind::skip;
  std::size_t width = 1;

  static JumpSpec skip() { return {JumpKind::skip, 1}; }
  static JumpSpec hammock(std::size_t width);  // throws ConfigError for 0

  /// Minimum number of co-rated movies required for an edge.
  std::size_t threshold() const noexcept {
    return kind == JumpKind::skip ? 1 : width;
  }
  void validate() const;
};

/// Number of co-rated movies for every pair of people sharing at least one.
/// Built once per dataset so that a sweep over hammock widths only has to
/// threshold it.
class CoRatingTable {
 public:
  struct Entry {
    VertexIndex other = 0;
    std::uint32_t count = 0;
  };

  explicit CoRatingTable(const BipartiteRatings& g);

  std::size_t person_count() const noexcept { return rows_.size(); }
  /// Partners q > p of person p, ascending by q.
  std::span<const Entry> row(VertexIndex p) const { return rows_[p]; }
  std::size_t pair_count() const noexcept { return pairs_; }

 private:
  std::vector<std::vector<Entry>> rows_;
  std::size_t pairs_ = 0;
};

/// Undirected person graph induced by a jump. Vertex i is people[i]; people
/// without any jump partner stay in the graph as isolated vertices.
struct SocialGraph {
  std::vector<PersonId> people;
  UndirectedGraph graph;
};

/// Directed graph over people [0, P) and movies [P, P + M): every social edge
/// appears as two opposite person arcs, every rating as a person -> movie
/// arc. Movies have no outgoing arcs.
struct RecommenderGraph {
  std::vector<PersonId> people;
  std::vector<MovieId> movies;
  std::vector<std::vector<VertexIndex>> out;  // sorted out-neighbours
  std::size_t person_arc_count = 0;
  std::size_t movie_arc_count = 0;

  std::size_t person_count() const noexcept { return people.size(); }
  std::size_t movie_count() const noexcept { return movies.size(); }
  std::size_t vertex_count() const noexcept { return out.size(); }
  bool is_person(VertexIndex v) const noexcept { return v < people.size(); }
};

/// |movies rated by both p1 and p2|. Throws LookupError for unknown ids and
/// DomainError when p1 == p2.
std::size_t common_artifacts_count(const BipartiteRatings& g, PersonId p1,
                                   PersonId p2);

SocialGraph apply_jump(const BipartiteRatings& g, JumpSpec spec);
SocialGraph apply_jump(const BipartiteRatings& g, const CoRatingTable& table,
                       JumpSpec spec);

/// Throws ConsistencyError when gs does not cover exactly g's people.
RecommenderGraph build_recommender_graph(const BipartiteRatings& g,
                                         const SocialGraph& gs);

/// CSV `p1,p2`, one row per social edge with p1 < p2 by index.
void write_social_edges_csv(std::ostream& out, const SocialGraph& gs);
/// CSV `src,dst,kind` where kind is `person` or `movie` (type of dst).
void write_recommender_arcs_csv(std::ostream& out, const RecommenderGraph& gr);

}  // namespace hammock
