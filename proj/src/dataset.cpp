#include "hammock/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <string>
#include <string_view>
#include <unordered_set>

#include "hammock/error.hpp"

namespace hammock {

namespace {

template <typename Id>
std::vector<Id> sorted_unique(std::vector<Id> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

template <typename Id>
std::optional<VertexIndex> find_sorted(const std::vector<Id>& ids, Id id) {
  auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it == ids.end() || *it != id) return std::nullopt;
  return static_cast<VertexIndex>(it - ids.begin());
}

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::int64_t parse_id(std::string_view field, std::size_t line,
                      const char* what) {
  field = trim(field);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(),
                                   value);
  if (field.empty() || ec != std::errc() ||
      ptr != field.data() + field.size()) {
    throw ParseError(line, std::string("invalid ") + what + " '" +
                               std::string(field) + "'");
  }
  if (value < 0) {
    throw ParseError(line, std::string("negative ") + what);
  }
  return value;
}

std::optional<double> parse_rating(std::string_view field, std::size_t line) {
  field = trim(field);
  if (field.empty()) return std::nullopt;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(),
                                   value);
  if (ec != std::errc() || ptr != field.data() + field.size() ||
      !std::isfinite(value)) {
    throw ParseError(line, "invalid rating '" + std::string(field) + "'");
  }
  return value;
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    if (i >= s.size()) break;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(',', start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

BipartiteRatings BipartiteRatings::from_triples(
    std::span<const RatingTriple> ratings) {
  std::vector<PersonId> people;
  std::vector<MovieId> movies;
  people.reserve(ratings.size());
  movies.reserve(ratings.size());
  for (const auto& r : ratings) {
    people.push_back(r.person);
    movies.push_back(r.movie);
  }
  return BipartiteRatings(std::move(people), std::move(movies), ratings);
}

BipartiteRatings::BipartiteRatings(std::vector<PersonId> people,
                                   std::vector<MovieId> movies,
                                   std::span<const RatingTriple> ratings)
    : people_(sorted_unique(std::move(people))),
      movies_(sorted_unique(std::move(movies))) {
  if ((!people_.empty() && people_.front() < 0) ||
      (!movies_.empty() && movies_.front() < 0)) {
    throw LookupError("person and movie ids must be non-negative");
  }
  build(ratings);
}

void BipartiteRatings::build(std::span<const RatingTriple> ratings) {
  person_adj_.assign(people_.size(), {});
  movie_adj_.assign(movies_.size(), {});
  ratings_.reserve(ratings.size());

  // Encode (person index, movie index) in one 64-bit key for deduplication.
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(ratings.size());
  for (const auto& r : ratings) {
    auto p = find_person(r.person);
    auto m = find_movie(r.movie);
    if (!p) throw LookupError("rating names unknown person " +
                              std::to_string(r.person));
    if (!m) throw LookupError("rating names unknown movie " +
                              std::to_string(r.movie));
    if (r.rating && !std::isfinite(*r.rating)) {
      throw DomainError("rating value must be finite");
    }
    std::uint64_t key = (std::uint64_t{*p} << 32) | *m;
    if (!seen.insert(key).second) {
      ++duplicates_;
      continue;
    }
    ratings_.push_back(r);
    person_adj_[*p].push_back(*m);
    movie_adj_[*m].push_back(*p);
  }
  for (auto& adj : person_adj_) std::sort(adj.begin(), adj.end());
  for (auto& adj : movie_adj_) std::sort(adj.begin(), adj.end());
}

std::optional<VertexIndex> BipartiteRatings::find_person(
    PersonId id) const noexcept {
  return find_sorted(people_, id);
}

std::optional<VertexIndex> BipartiteRatings::find_movie(
    MovieId id) const noexcept {
  return find_sorted(movies_, id);
}

VertexIndex BipartiteRatings::person_index(PersonId id) const {
  if (auto i = find_person(id)) return *i;
  throw LookupError("unknown person " + std::to_string(id));
}

VertexIndex BipartiteRatings::movie_index(MovieId id) const {
  if (auto i = find_movie(id)) return *i;
  throw LookupError("unknown movie " + std::to_string(id));
}

BipartiteRatings parse_ratings(std::istream& in, RatingFormat format) {
  std::vector<RatingTriple> triples;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  bool has_rating_column = false;

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = trim(line);
    if (text.empty()) continue;

    RatingTriple t;
    if (format == RatingFormat::movielens_tab) {
      auto fields = split_whitespace(text);
      if (fields.size() < 2 || fields.size() > 4) {
        throw ParseError(line_no, "expected 2 to 4 fields, got " +
                                      std::to_string(fields.size()));
      }
      t.person = parse_id(fields[0], line_no, "person id");
      t.movie = parse_id(fields[1], line_no, "movie id");
      if (fields.size() > 2) t.rating = parse_rating(fields[2], line_no);
      if (fields.size() > 3) {
        t.timestamp = parse_id(fields[3], line_no, "timestamp");
      }
    } else {
      auto fields = split_commas(text);
      if (!header_seen) {
        header_seen = true;
        if (fields.size() < 2 || fields.size() > 3 ||
            lower(fields[0]) != "person" || lower(fields[1]) != "movie" ||
            (fields.size() == 3 && lower(fields[2]) != "rating")) {
          throw ParseError(line_no,
                           "expected header 'person,movie[,rating]'");
        }
        has_rating_column = fields.size() == 3;
        continue;
      }
      std::size_t expected = has_rating_column ? 3 : 2;
      // A trailing empty rating field may be omitted entirely.
      if (fields.size() != expected &&
          !(has_rating_column && fields.size() == 2)) {
        throw ParseError(line_no, "expected " + std::to_string(expected) +
                                      " fields, got " +
                                      std::to_string(fields.size()));
      }
      t.person = parse_id(fields[0], line_no, "person id");
      t.movie = parse_id(fields[1], line_no, "movie id");
      if (fields.size() == 3) t.rating = parse_rating(fields[2], line_no);
    }
    triples.push_back(t);
  }
  if (triples.empty()) throw EmptyDatasetError("dataset has no ratings");
  return BipartiteRatings::from_triples(triples);
}

BipartiteRatings load_ratings(const std::filesystem::path& path,
                              RatingFormat format) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return parse_ratings(in, format);
}

void write_movielens_tab(std::ostream& out, const BipartiteRatings& g) {
  for (const auto& r : g.ratings()) {
    out << r.person << '\t' << r.movie << '\t';
    if (r.rating) {
      out << *r.rating;
    } else {
      out << 1;
    }
    out << '\t' << r.timestamp.value_or(0) << '\n';
  }
}

double sparsity(const BipartiteRatings& g) {
  if (g.person_count() == 0 || g.movie_count() == 0) {
    throw DomainError("sparsity undefined for an empty person or movie set");
  }
  const double cells = static_cast<double>(g.person_count()) *
                       static_cast<double>(g.movie_count());
  return 1.0 - static_cast<double>(g.edge_count()) / cells;
}

namespace {

// Undirected BFS over the bipartite graph; people occupy [0, P), movies
// [P, P + M). Returns the number of nodes visited within max_depth hops.
std::size_t bipartite_bfs(const BipartiteRatings& g, std::size_t source,
                          std::size_t max_depth) {
  const std::size_t np = g.person_count();
  const std::size_t n = np + g.movie_count();
  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(n, unseen);
  std::queue<std::size_t> queue;
  dist[source] = 0;
  queue.push(source);
  std::size_t visited = 1;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop();
    if (dist[v] == max_depth) continue;
    auto relax = [&](std::size_t u) {
      if (dist[u] == unseen) {
        dist[u] = dist[v] + 1;
        ++visited;
        queue.push(u);
      }
    };
    if (v < np) {
      for (VertexIndex m : g.movies_of(static_cast<VertexIndex>(v))) {
        relax(np + m);
      }
    } else {
      for (VertexIndex p : g.raters_of(static_cast<VertexIndex>(v - np))) {
        relax(p);
      }
    }
  }
  return visited;
}

}  // namespace

bool is_connected_bipartite(const BipartiteRatings& g) {
  const std::size_t n = g.person_count() + g.movie_count();
  if (n == 0) return false;
  return bipartite_bfs(g, 0, n) == n;
}

std::size_t bfs_reach_count(const BipartiteRatings& g, NodeRef start,
                            std::size_t depth) {
  std::size_t source = start.mode == Mode::person
                           ? g.person_index(start.id)
                           : g.person_count() + g.movie_index(start.id);
  return bipartite_bfs(g, source, depth);
}

HitsBuffsOrdering reorder_hits_buffs(const BipartiteRatings& g) {
  HitsBuffsOrdering out;

  std::vector<VertexIndex> people(g.person_count());
  std::iota(people.begin(), people.end(), VertexIndex{0});
  // Indices ascend with ids, so a stable sort on degree breaks ties by id.
  std::stable_sort(people.begin(), people.end(),
                   [&](VertexIndex a, VertexIndex b) {
                     return g.person_degree(a) > g.person_degree(b);
                   });
  for (VertexIndex p : people) {
    out.buff_rank.push_back(g.people()[p]);
    out.buff_degrees.push_back(g.person_degree(p));
  }

  std::vector<VertexIndex> movies(g.movie_count());
  std::iota(movies.begin(), movies.end(), VertexIndex{0});
  std::stable_sort(movies.begin(), movies.end(),
                   [&](VertexIndex a, VertexIndex b) {
                     return g.movie_degree(a) > g.movie_degree(b);
                   });
  for (VertexIndex m : movies) {
    out.hit_rank.push_back(g.movies()[m]);
    out.hit_degrees.push_back(g.movie_degree(m));
  }
  return out;
}

}  // namespace hammock
