#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace hammock {

using PersonId = std::int64_t;
using MovieId = std::int64_t;

/// Dense 0-based position of a person or movie inside a BipartiteRatings.
using VertexIndex = std::uint32_t;

struct RatingTriple {
  PersonId person = 0;
  MovieId movie = 0;
  std::optional<double> rating;
  std::optional<std::int64_t> timestamp;
};

enum class Mode { person, movie };

struct NodeRef {
  Mode mode = Mode::person;
  std::int64_t id = 0;
};

/// Person/movie rating graph. Immutable once built; ids need not be
/// contiguous and are mapped to dense indices in ascending id order.
/// Duplicate (person, movie) pairs keep the first occurrence.
class BipartiteRatings {
 public:
  BipartiteRatings() = default;

  /// People and movies are exactly the endpoints that occur in `ratings`.
  static BipartiteRatings from_triples(std::span<const RatingTriple> ratings);

  /// Explicit id sets, which may contain people or movies without ratings.
  /// Throws LookupError when a rating names an id outside the sets.
  BipartiteRatings(std::vector<PersonId> people, std::vector<MovieId> movies,
                   std::span<const RatingTriple> ratings);

  std::size_t person_count() const noexcept { return people_.size(); }
  std::size_t movie_count() const noexcept { return movies_.size(); }
  std::size_t edge_count() const noexcept { return ratings_.size(); }
  /// Number of duplicate (person, movie) pairs dropped while building.
  std::size_t duplicate_count() const noexcept { return duplicates_; }

  std::span<const PersonId> people() const noexcept { return people_; }
  std::span<const MovieId> movies() const noexcept { return movies_; }
  /// Deduplicated ratings in input order.
  std::span<const RatingTriple> ratings() const noexcept { return ratings_; }

  std::optional<VertexIndex> find_person(PersonId id) const noexcept;
  std::optional<VertexIndex> find_movie(MovieId id) const noexcept;
  VertexIndex person_index(PersonId id) const;  // throws LookupError
  VertexIndex movie_index(MovieId id) const;    // throws LookupError

  /// Movie indices rated by a person, ascending.
  std::span<const VertexIndex> movies_of(VertexIndex person) const {
    return person_adj_[person];
  }
  /// Person indices that rated a movie, ascending.
  std::span<const VertexIndex> raters_of(VertexIndex movie) const {
    return movie_adj_[movie];
  }
  std::size_t person_degree(VertexIndex person) const {
    return person_adj_[person].size();
  }
  std::size_t movie_degree(VertexIndex movie) const {
    return movie_adj_[movie].size();
  }

 private:
  void build(std::span<const RatingTriple> ratings);

  std::vector<PersonId> people_;
  std::vector<MovieId> movies_;
  std::vector<RatingTriple> ratings_;
  std::vector<std::vector<VertexIndex>> person_adj_;
  std::vector<std::vector<VertexIndex>> movie_adj_;
  std::size_t duplicates_ = 0;
};

enum class RatingFormat {
  movielens_tab,  // person<TAB>movie<TAB>rating<TAB>timestamp
  generic_csv,    // header "person,movie[,rating]"
};

/// Parses ratings from a stream. Throws ParseError naming the 1-based line,
/// EmptyDatasetError when no rating lines are present.
BipartiteRatings parse_ratings(std::istream& in, RatingFormat format);

/// Opens `path` and parses it; throws Error when the file cannot be read.
BipartiteRatings load_ratings(const std::filesystem::path& path,
                              RatingFormat format);

/// Writes ratings in MovieLens tab format. Missing ratings are written as 1
/// and missing timestamps as 0.
void write_movielens_tab(std::ostream& out, const BipartiteRatings& g);

/// Fraction of empty cells in the person x movie matrix.
double sparsity(const BipartiteRatings& g);

/// True iff people and movies form a single undirected connected component.
bool is_connected_bipartite(const BipartiteRatings& g);

/// Number of distinct nodes (start included) within `depth` undirected hops.
std::size_t bfs_reach_count(const BipartiteRatings& g, NodeRef start,
                            std::size_t depth);

/// People by descending rating count and movies by descending rater count;
/// ties go to the smaller original id.
struct HitsBuffsOrdering {
  std::vector<PersonId> buff_rank;
  std::vector<MovieId> hit_rank;
  std::vector<std::size_t> buff_degrees;  // degree of buff_rank[i]
  std::vector<std::size_t> hit_degrees;   // degree of hit_rank[i]
};

HitsBuffsOrdering reorder_hits_buffs(const BipartiteRatings& g);

/// Least-squares fit of log P(b) = intercept - alpha*log(b) - b/tau over
/// ranks b = 1..n. With the cutoff disabled the b term is dropped and tau is
/// +infinity. A non-negative fitted b coefficient also yields tau = +inf.
struct PowerLawFit {
  double alpha = 0.0;
  double tau = 0.0;
  double intercept = 0.0;
  double residual = 0.0;            // sum of squared log residuals
  double cutoff_coefficient = 0.0;  // raw coefficient of b, equals -1/tau
};

struct PowerLawOptions {
  bool cutoff = true;
};

PowerLawFit fit_power_law(std::span<const double> values,
                          PowerLawOptions options = {});
PowerLawFit fit_power_law(std::span<const std::size_t> counts,
                          PowerLawOptions options = {});

}  // namespace hammock
