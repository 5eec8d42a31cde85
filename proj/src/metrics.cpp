#include "hammock/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <random>

#include "hammock/csv.hpp"
#include "hammock/error.hpp"
#include "parallel.hpp"

namespace hammock {

DegreeDistribution DegreeDistribution::from_counts(
    const std::map<std::size_t, std::size_t>& counts) {
  DegreeDistribution d;
  for (const auto& [k, c] : counts) d.n += c;
  for (const auto& [k, c] : counts) {
    if (c > 0) d.probabilities[k] = static_cast<double>(c) / d.n;
  }
  return d;
}

double DegreeDistribution::probability(std::size_t k) const {
  auto it = probabilities.find(k);
  return it == probabilities.end() ? 0.0 : it->second;
}

JointDegreeDistribution JointDegreeDistribution::from_counts(
    const std::map<std::pair<std::size_t, std::size_t>, std::size_t>& counts) {
  JointDegreeDistribution d;
  for (const auto& [jk, c] : counts) d.n += c;
  for (const auto& [jk, c] : counts) {
    if (c > 0) d.probabilities[jk] = static_cast<double>(c) / d.n;
  }
  return d;
}

double JointDegreeDistribution::probability(std::size_t j,
                                            std::size_t k) const {
  auto it = probabilities.find({j, k});
  return it == probabilities.end() ? 0.0 : it->second;
}

DegreeDistribution degree_distribution(const UndirectedGraph& g,
                                       bool largest_only) {
  if (g.vertex_count() == 0) {
    throw DomainError("degree distribution of an empty graph");
  }
  std::map<std::size_t, std::size_t> counts;
  if (largest_only) {
    auto report = connected_components(g);
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      if (report.membership[v] == 0) ++counts[g.degree(v)];
    }
  } else {
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) ++counts[g.degree(v)];
  }
  return DegreeDistribution::from_counts(counts);
}

DegreeDistribution degree_distribution(const SocialGraph& gs,
                                       bool largest_only) {
  return degree_distribution(gs.graph, largest_only);
}

JointDegreeDistribution joint_degree_distribution(const RecommenderGraph& gr,
                                                  bool largest_only) {
  const std::size_t n = gr.vertex_count();
  if (n == 0) throw DomainError("degree distribution of an empty graph");

  std::vector<bool> selected(n, true);
  if (largest_only) {
    auto report = connected_components(gr);
    for (std::size_t v = 0; v < n; ++v) selected[v] = report.membership[v] == 0;
  }
  std::vector<std::size_t> in(n, 0), out(n, 0);
  for (VertexIndex v = 0; v < n; ++v) {
    if (!selected[v]) continue;
    for (VertexIndex u : gr.out[v]) {
      if (!selected[u]) continue;
      ++out[v];
      ++in[u];
    }
  }
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> counts;
  for (std::size_t v = 0; v < n; ++v) {
    if (selected[v]) ++counts[{in[v], out[v]}];
  }
  return JointDegreeDistribution::from_counts(counts);
}

namespace {

std::vector<VertexIndex> choose_sources(std::vector<VertexIndex> candidates,
                                        const PathOptions& options,
                                        bool& sampled) {
  sampled = candidates.size() > options.max_exact_sources &&
            options.sampled_sources < candidates.size();
  if (!sampled) return candidates;
  std::mt19937_64 rng(options.seed);
  const std::size_t k = options.sampled_sources;
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, candidates.size() - 1);
    std::swap(candidates[i], candidates[pick(rng)]);
  }
  candidates.resize(k);
  std::sort(candidates.begin(), candidates.end());
  return candidates;
}

struct BfsTotals {
  std::vector<std::uint32_t> dist;
  std::vector<VertexIndex> queue;
  std::uint64_t person_hops = 0;
  std::uint64_t person_pairs = 0;
  std::uint64_t movie_hops = 0;
  std::uint64_t movie_pairs = 0;
};

constexpr std::uint32_t kUnseen = static_cast<std::uint32_t>(-1);

// Single-source BFS along adjacency lists; targets outside `inside` are not
// counted. Vertices below `person_limit` count as people.
void bfs_accumulate(const std::vector<std::vector<VertexIndex>>* lists,
                    const UndirectedGraph* graph, VertexIndex source,
                    std::size_t person_limit,
                    const std::vector<std::uint32_t>& membership,
                    BfsTotals& t) {
  auto neighbours = [&](VertexIndex v) -> std::span<const VertexIndex> {
    return lists ? std::span<const VertexIndex>((*lists)[v])
                 : graph->neighbors(v);
  };
  t.queue.clear();
  t.queue.push_back(source);
  t.dist[source] = 0;
  for (std::size_t head = 0; head < t.queue.size(); ++head) {
    VertexIndex v = t.queue[head];
    for (VertexIndex u : neighbours(v)) {
      if (t.dist[u] != kUnseen) continue;
      t.dist[u] = t.dist[v] + 1;
      t.queue.push_back(u);
      if (membership[u] != 0) continue;
      if (u < person_limit) {
        t.person_hops += t.dist[u];
        ++t.person_pairs;
      } else {
        t.movie_hops += t.dist[u];
        ++t.movie_pairs;
      }
    }
  }
  for (VertexIndex v : t.queue) t.dist[v] = kUnseen;
}

PathLengthStats all_source_bfs(
    const std::vector<std::vector<VertexIndex>>* lists,
    const UndirectedGraph* graph, std::size_t vertex_count,
    std::size_t person_limit, const ComponentReport& report,
    const PathOptions& options) {
  std::vector<VertexIndex> giant_people;
  for (VertexIndex v = 0; v < person_limit; ++v) {
    if (report.membership[v] == 0) giant_people.push_back(v);
  }
  PathLengthStats stats;
  auto sources = choose_sources(giant_people, options, stats.sampled);
  stats.sources = sources.size();

  auto states = detail::parallel_states(
      sources.size(),
      [vertex_count] {
        BfsTotals t;
        t.dist.assign(vertex_count, kUnseen);
        return t;
      },
      [&](BfsTotals& t, std::size_t i) {
        bfs_accumulate(lists, graph, sources[i], person_limit,
                       report.membership, t);
      });

  std::uint64_t pp_hops = 0, pm_hops = 0;
  for (const auto& t : states) {
    pp_hops += t.person_hops;
    pm_hops += t.movie_hops;
    stats.c_pp += t.person_pairs;
    stats.c_pm += t.movie_pairs;
  }
  const std::uint64_t possible =
      static_cast<std::uint64_t>(stats.sources) *
      (report.giant_people - 1 + report.giant_movies);
  stats.unreachable_pairs = possible - stats.c_pp - stats.c_pm;
  if (stats.c_pp > 0) {
    stats.l_pp = static_cast<double>(pp_hops) / static_cast<double>(stats.c_pp);
  }
  if (stats.c_pm > 0) {
    stats.l_pm = static_cast<double>(pm_hops) / static_cast<double>(stats.c_pm);
  }
  if (stats.c_pp + stats.c_pm > 0) {
    stats.l_r = static_cast<double>(pp_hops + pm_hops) /
                static_cast<double>(stats.c_pp + stats.c_pm);
  }
  return stats;
}

}  // namespace

namespace {

PathLengthStats undirected_stats(const UndirectedGraph& g,
                                 const PathOptions& options) {
  auto report = connected_components(g);
  if (report.giant_people < 2) {
    throw DomainError("path length undefined: giant component has " +
                      std::to_string(report.giant_people) + " vertex");
  }
  auto stats = all_source_bfs(nullptr, &g, g.vertex_count(), g.vertex_count(),
                              report, options);
  stats.l_r.reset();
  stats.l_pm.reset();
  return stats;
}

}  // namespace

PathLengthStats measure_l_pp(const SocialGraph& gs, PathOptions options) {
  return undirected_stats(gs.graph, options);
}

double average_path_length(const UndirectedGraph& g, PathOptions options) {
  return *undirected_stats(g, options).l_pp;
}

PathLengthStats measure_l_r_l_pm(const RecommenderGraph& gr,
                                 PathOptions options) {
  auto report = connected_components(gr);
  if (report.giant_people == 0) {
    throw DomainError("no person sources in the giant component");
  }
  return all_source_bfs(&gr.out, nullptr, gr.vertex_count(),
                        gr.person_count(), report, options);
}

double clustering_coefficient(const UndirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw DomainError("clustering coefficient of an empty graph");
  double total = 0.0;
  for (VertexIndex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    const std::size_t d = nb.size();
    if (d < 2) continue;
    std::size_t links = 0;
    for (std::size_t i = 0; i < d; ++i) {
      // Count neighbours of nb[i] that are also neighbours of v, above nb[i].
      auto other = g.neighbors(nb[i]);
      auto a = nb.begin() + static_cast<std::ptrdiff_t>(i) + 1;
      auto b = std::upper_bound(other.begin(), other.end(), nb[i]);
      while (a != nb.end() && b != other.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          ++links;
          ++a;
          ++b;
        }
      }
    }
    total += static_cast<double>(links) /
             (static_cast<double>(d) * static_cast<double>(d - 1) / 2.0);
  }
  return total / static_cast<double>(n);
}

double clustering_coefficient(const SocialGraph& gs) {
  return clustering_coefficient(gs.graph);
}

std::vector<CdfPoint> degree_cdf(const DegreeDistribution& dist,
                                 bool log_scale) {
  std::vector<CdfPoint> out;
  double tail = 0.0;
  for (auto it = dist.probabilities.rbegin(); it != dist.probabilities.rend();
       ++it) {
    tail += it->second;
    const double count = std::round(tail * static_cast<double>(dist.n));
    if (log_scale) {
      if (count <= 0.0) continue;
      out.push_back({it->first, std::log10(count)});
    } else {
      out.push_back({it->first, count});
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

double linf_discrepancy(std::span<const std::optional<double>> actual,
                        std::span<const std::optional<double>> predicted) {
  if (actual.size() != predicted.size() || actual.empty()) {
    throw DomainError("L-infinity discrepancy needs equal, non-empty lengths");
  }
  std::optional<double> worst;
  for (std::size_t i = 0; i < actual.size(); ++i) {
    if (!actual[i] || !predicted[i]) continue;
    double d = std::abs(*actual[i] - *predicted[i]);
    if (!worst || d > *worst) worst = d;
  }
  if (!worst) throw DomainError("L-infinity discrepancy has no defined pair");
  return *worst;
}

void write_degree_cdf_csv(std::ostream& out, std::span<const CdfPoint> cdf,
                          bool log_scale) {
  out << (log_scale ? "degree,log10_count\n" : "degree,count\n");
  for (const auto& p : cdf) {
    out << p.degree << ',';
    if (log_scale) {
      out << format_length(p.value);
    } else {
      out << static_cast<std::uint64_t>(p.value);
    }
    out << '\n';
  }
}

void write_path_stats_csv(std::ostream& out, const PathLengthStats& stats) {
  out << "l_pp,l_r,l_pm,c_pp,c_pm,sampled_sources\n";
  out << format_optional(stats.l_pp) << ',' << format_optional(stats.l_r)
      << ',' << format_optional(stats.l_pm) << ',' << stats.c_pp << ','
      << stats.c_pm << ',' << format_sources(stats.sampled, stats.sources)
      << '\n';
}

}  // namespace hammock
