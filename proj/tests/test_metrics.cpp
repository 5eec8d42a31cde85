#include <cmath>
#include <map>
#include <sstream>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hammock/error.hpp"
#include "hammock/jumps.hpp"
#include "hammock/metrics.hpp"
#include "hammock/synth.hpp"
#include "oracles.hpp"

using namespace hammock;

namespace {

BipartiteRatings from(std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<RatingTriple> t;
  for (auto [p, m] : pairs) t.push_back({p, m, {}, {}});
  return BipartiteRatings::from_triples(t);
}

UndirectedGraph complete(std::size_t n) {
  UndirectedGraph g(n);
  for (VertexIndex u = 0; u < n; ++u)
    for (VertexIndex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

UndirectedGraph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  UndirectedGraph g(n);
  for (VertexIndex u = 0; u < n; ++u)
    for (VertexIndex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// Mean ordered-pair distance within the largest component (ties: smallest
// member), via Floyd-Warshall.
std::optional<double> oracle_l_pp(const UndirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  oracle::UnionFind uf(n);
  for (auto [u, v] : g.edges()) {
    adj[u][v] = adj[v][u] = true;
    uf.unite(u, v);
  }
  std::map<std::size_t, std::size_t> size;
  for (std::size_t v = 0; v < n; ++v) ++size[uf.find(v)];
  std::size_t best = uf.find(0);
  for (std::size_t v = 0; v < n; ++v) {
    if (size[uf.find(v)] > size[best]) best = uf.find(v);
  }
  auto d = oracle::floyd_warshall(adj);
  std::uint64_t hops = 0, pairs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || uf.find(i) != best || uf.find(j) != best) continue;
      hops += d[i][j];
      ++pairs;
    }
  }
  if (pairs == 0) return std::nullopt;
  return static_cast<double>(hops) / static_cast<double>(pairs);
}

}  // namespace

TEST(Components, TwoDisjointPairs) {
  auto g = from({{1, 1}, {2, 1}, {3, 2}, {4, 2}});
  auto gr = build_recommender_graph(g, apply_jump(g, JumpSpec::skip()));
  auto report = connected_components(gr);
  EXPECT_EQ(report.component_count(), 2u);
  EXPECT_EQ(report.component_sizes[0], (ComponentSize{2, 1}));
  EXPECT_TRUE(report.shattered == false);
}

TEST(Components, IsolatedPeopleShatter) {
  auto g = from({{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}});
  auto gr = build_recommender_graph(g, apply_jump(g, JumpSpec::hammock(2)));
  auto report = connected_components(gr);
  EXPECT_EQ(report.component_count(), 2u);
  EXPECT_EQ(report.giant_people, 2u);
  EXPECT_EQ(report.giant_movies, 2u);
  EXPECT_EQ(report.isolated_people, 1u);
  EXPECT_TRUE(report.shattered);
  EXPECT_EQ(report.component_sizes[1], (ComponentSize{1, 0}));
}

TEST(Components, MatchUnionFind) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = random_graph(20, 0.08, seed);
    auto report = connected_components(g);
    oracle::UnionFind uf(20);
    for (auto [u, v] : g.edges()) uf.unite(u, v);
    for (std::size_t a = 0; a < 20; ++a) {
      for (std::size_t b = 0; b < 20; ++b) {
        ASSERT_EQ(report.membership[a] == report.membership[b],
                  uf.find(a) == uf.find(b));
      }
    }
    std::size_t total = 0;
    for (auto s : report.component_sizes) total += s.total();
    ASSERT_EQ(total, 20u);
  }
}

TEST(Components, RecommenderConservationAndGiantMovies) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = oracle::random_bipartite(18, 25, 0.15, seed);
    auto gr = build_recommender_graph(g, apply_jump(g, JumpSpec::hammock(2)));
    auto report = connected_components(gr);
    std::size_t people = 0, movies = 0;
    for (auto s : report.component_sizes) {
      people += s.people;
      movies += s.movies;
    }
    ASSERT_EQ(people, g.person_count());
    ASSERT_EQ(movies, g.movie_count());
    // A movie belongs to the giant exactly when a giant person rated it.
    for (VertexIndex m = 0; m < g.movie_count(); ++m) {
      bool rated_by_giant = false;
      for (VertexIndex p : g.raters_of(m)) rated_by_giant |= report.membership[p] == 0;
      ASSERT_EQ(report.membership[g.person_count() + m] == 0, rated_by_giant);
    }
    for (std::size_t i = 1; i < report.component_sizes.size(); ++i) {
      ASSERT_GE(report.component_sizes[i - 1].total(), report.component_sizes[i].total());
    }
  }
}

TEST(Degree, CompleteAndStar) {
  auto k5 = degree_distribution(complete(5), false);
  EXPECT_DOUBLE_EQ(k5.probability(4), 1.0);
  UndirectedGraph star(5);
  for (VertexIndex v = 1; v < 5; ++v) star.add_edge(0, v);
  auto s = degree_distribution(star, false);
  EXPECT_DOUBLE_EQ(s.probability(1), 0.8);
  EXPECT_DOUBLE_EQ(s.probability(4), 0.2);
  EXPECT_THROW(degree_distribution(UndirectedGraph(0), false), DomainError);
}

TEST(Degree, Handshake) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = random_graph(30, 0.1, seed);
    auto d = degree_distribution(g, false);
    double sum = 0;
    for (auto [k, p] : d.probabilities) sum += static_cast<double>(k) * p * static_cast<double>(d.n);
    ASSERT_NEAR(sum, 2.0 * static_cast<double>(g.edge_count()), 1e-9);
  }
}

TEST(JointDegree, TwoPeopleOneMovie) {
  auto g = from({{1, 1}, {2, 1}});
  auto gr = build_recommender_graph(g, apply_jump(g, JumpSpec::skip()));
  auto d = joint_degree_distribution(gr, false);
  EXPECT_EQ(d.n, 3u);
  EXPECT_NEAR(d.probability(2, 0), 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(d.probability(1, 2), 2.0 / 3.0, 1e-12);
}

TEST(JointDegree, TableComponent) {
  auto g = fixture::table_component();
  auto gr = build_recommender_graph(g, apply_jump(g, JumpSpec::hammock(25)));
  auto d = joint_degree_distribution(gr, true);
  EXPECT_EQ(d.n, 75u);
  const std::map<std::pair<std::size_t, std::size_t>, int> expect{
      {{1, 0}, 23}, {{2, 0}, 16}, {{3, 0}, 13}, {{4, 0}, 19},
      {{2, 31}, 1}, {{2, 65}, 1}, {{3, 37}, 1}, {{3, 47}, 1}};
  EXPECT_EQ(d.probabilities.size(), expect.size());
  for (auto [jk, c] : expect) {
    EXPECT_NEAR(d.probability(jk.first, jk.second), c / 75.0, 1e-12);
  }
}

TEST(JointDegree, ArcConservationAndSinks) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = oracle::random_bipartite(15, 15, 0.25, seed);
    auto gr = build_recommender_graph(g, apply_jump(g, JumpSpec::hammock(2)));
    auto d = joint_degree_distribution(gr, false);
    double in = 0, out = 0;
    for (auto [jk, p] : d.probabilities) {
      in += static_cast<double>(jk.first) * p;
      out += static_cast<double>(jk.second) * p;
    }
    ASSERT_NEAR(in, out, 1e-9);
    for (VertexIndex v = 0; v < gr.vertex_count(); ++v) {
      if (!gr.out[v].empty()) ASSERT_TRUE(gr.is_person(v));
    }
  }
}

TEST(Paths, SmallFixtures) {
  EXPECT_DOUBLE_EQ(average_path_length(complete(5)), 1.0);
  UndirectedGraph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  EXPECT_DOUBLE_EQ(average_path_length(path), 4.0 / 3.0);
  EXPECT_THROW(average_path_length(UndirectedGraph(3)), DomainError);
  auto wreath = generate_wreath({12, 4, 0.0, RewireMode::uniform, 1});
  EXPECT_NEAR(average_path_length(wreath), 21.0 / 11.0, 1e-9);
}

TEST(Paths, RecommenderToy) {
  auto g = from({{1, 1}, {2, 1}});
  auto gr = build_recommender_graph(g, apply_jump(g, JumpSpec::skip()));
  auto s = measure_l_r_l_pm(gr);
  EXPECT_DOUBLE_EQ(*s.l_pp, 1.0);
  EXPECT_DOUBLE_EQ(*s.l_pm, 1.0);
  EXPECT_DOUBLE_EQ(*s.l_r, 1.0);
}

TEST(Paths, RecommenderChain) {
  auto g = from({{1, 1}, {2, 1}, {2, 2}, {3, 2}});
  auto gr = build_recommender_graph(g, apply_jump(g, JumpSpec::skip()));
  auto s = measure_l_r_l_pm(gr);
  EXPECT_DOUBLE_EQ(*s.l_pp, 4.0 / 3.0);
  EXPECT_DOUBLE_EQ(*s.l_pm, 4.0 / 3.0);
  EXPECT_DOUBLE_EQ(*s.l_r, 4.0 / 3.0);
  EXPECT_EQ(s.c_pp + s.c_pm, 12u);
}

TEST(Paths, MatchFloydWarshall) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::size_t n = 20 + seed % 180;
    auto g = random_graph(n, 3.0 / static_cast<double>(n), seed);
    auto expect = oracle_l_pp(g);
    if (!expect) continue;
    ASSERT_NEAR(average_path_length(g), *expect, 1e-9) << "seed " << seed;
  }
}

TEST(Paths, RecommenderMatchesFloydWarshall) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = oracle::random_bipartite(12, 20, 0.2, 500 + seed);
    auto gr = build_recommender_graph(g, apply_jump(g, JumpSpec::hammock(2)));
    auto report = connected_components(gr);
    if (report.giant_people == 0) continue;
    const std::size_t n = gr.vertex_count(), np = gr.person_count();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (std::size_t v = 0; v < n; ++v)
      for (auto u : gr.out[v]) adj[v][u] = true;
    auto d = oracle::floyd_warshall(adj);
    // Oracle giant core: social union-find, largest people+reached movies.
    oracle::UnionFind uf(np);
    for (std::size_t p = 0; p < np; ++p)
      for (auto u : gr.out[p]) if (u < np) uf.unite(p, u);
    std::map<std::size_t, std::pair<std::size_t, std::size_t>> score;
    for (std::size_t p = 0; p < np; ++p) {
      auto root = uf.find(p);
      if (score.count(root)) continue;
      std::set<std::size_t> reach;
      std::size_t people = 0;
      for (std::size_t q = 0; q < np; ++q) {
        if (uf.find(q) != root) continue;
        ++people;
        for (auto u : gr.out[q]) if (u >= np) reach.insert(u);
      }
      score[root] = {people + reach.size(), people};
    }
    std::size_t best = uf.find(0);
    for (std::size_t p = 0; p < np; ++p) {
      if (score[uf.find(p)] > score[best]) best = uf.find(p);
    }
    std::uint64_t pp = 0, cpp = 0, pm = 0, cpm = 0;
    for (std::size_t s = 0; s < np; ++s) {
      if (uf.find(s) != best) continue;
      for (std::size_t t = 0; t < n; ++t) {
        if (t == s || d[s][t] >= oracle::kInf) continue;
        if (t < np) {
          pp += d[s][t];
          ++cpp;
        } else {
          pm += d[s][t];
          ++cpm;
        }
      }
    }
    auto stats = measure_l_r_l_pm(gr);
    ASSERT_EQ(stats.c_pp, cpp) << seed;
    ASSERT_EQ(stats.c_pm, cpm) << seed;
    if (cpp) ASSERT_NEAR(*stats.l_pp, double(pp) / double(cpp), 1e-9);
    if (cpm) ASSERT_NEAR(*stats.l_pm, double(pm) / double(cpm), 1e-9);
    ASSERT_NEAR(*stats.l_r, double(pp + pm) / double(cpp + cpm), 1e-9);
    // Mixture identity.
    double lhs = *stats.l_r * double(stats.c_pp + stats.c_pm);
    double rhs = (stats.l_pp ? *stats.l_pp * double(stats.c_pp) : 0.0) +
                 (stats.l_pm ? *stats.l_pm * double(stats.c_pm) : 0.0);
    ASSERT_NEAR(lhs, rhs, 1e-9);
    ASSERT_EQ(stats.unreachable_pairs, 0u);
  }
}

TEST(Paths, SamplingIsSeededAndBounded) {
  auto g = random_graph(300, 0.03, 3);
  PathOptions opts{100, 40, 9};
  auto gs = SocialGraph{{}, g};
  for (VertexIndex v = 0; v < 300; ++v) gs.people.push_back(v + 1);
  auto a = measure_l_pp(gs, opts);
  auto b = measure_l_pp(gs, opts);
  EXPECT_TRUE(a.sampled);
  EXPECT_EQ(a.sources, 40u);
  EXPECT_EQ(*a.l_pp, *b.l_pp);
  auto exact = measure_l_pp(gs);
  EXPECT_FALSE(exact.sampled);
  EXPECT_NEAR(*a.l_pp, *exact.l_pp, 0.3);
}

TEST(Clustering, Fixtures) {
  EXPECT_DOUBLE_EQ(clustering_coefficient(complete(6)), 1.0);
  UndirectedGraph tree(5);
  tree.add_edge(0, 1);
  tree.add_edge(0, 2);
  tree.add_edge(2, 3);
  tree.add_edge(2, 4);
  EXPECT_DOUBLE_EQ(clustering_coefficient(tree), 0.0);
  auto wreath = generate_wreath({12, 4, 0.0, RewireMode::uniform, 1});
  EXPECT_NEAR(clustering_coefficient(wreath), 0.5, 1e-9);
  EXPECT_THROW(clustering_coefficient(UndirectedGraph(0)), DomainError);
}

TEST(Cdf, Fixtures) {
  auto d = DegreeDistribution::from_counts({{1, 5}, {2, 5}});
  EXPECT_EQ(degree_cdf(d, false), (std::vector<CdfPoint>{{1, 10}, {2, 5}}));
  auto single = DegreeDistribution::from_counts({{0, 1}});
  EXPECT_EQ(degree_cdf(single, false), (std::vector<CdfPoint>{{0, 1}}));
  auto logs = degree_cdf(d, true);
  EXPECT_NEAR(logs.front().value, 1.0, 1e-12);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto dist = degree_distribution(random_graph(40, 0.1, seed), false);
    auto cdf = degree_cdf(dist, false);
    ASSERT_EQ(cdf.front().value, 40.0);
    for (std::size_t i = 1; i < cdf.size(); ++i) ASSERT_LE(cdf[i].value, cdf[i - 1].value);
  }
}

TEST(Linf, Fixtures) {
  std::vector<std::optional<double>> a{1, 2, 3}, b{1, 4, 3};
  EXPECT_DOUBLE_EQ(linf_discrepancy(a, a), 0.0);
  EXPECT_DOUBLE_EQ(linf_discrepancy(a, b), 2.0);
  std::vector<std::optional<double>> none{std::nullopt, std::nullopt, std::nullopt};
  EXPECT_THROW(linf_discrepancy(a, none), DomainError);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::optional<double>> x(25), y(25);
    for (int i = 0; i < 25; ++i) {
      x[i] = u(rng);
      if (i % 7 != 3) y[i] = u(rng);
    }
    ASSERT_DOUBLE_EQ(linf_discrepancy(x, y), oracle::scan_max(x, y));
  }
}

TEST(Export, ComponentAndPathCsv) {
  auto g = from({{1, 1}, {2, 1}, {3, 2}, {4, 2}});
  auto gr = build_recommender_graph(g, apply_jump(g, JumpSpec::skip()));
  std::ostringstream c, p, d;
  write_components_csv(c, connected_components(gr));
  EXPECT_EQ(c.str(), "component_index,people,movies\n0,2,1\n1,2,1\n");
  write_path_stats_csv(p, measure_l_r_l_pm(gr));
  EXPECT_EQ(p.str().substr(0, p.str().find('\n')), "l_pp,l_r,l_pm,c_pp,c_pm,sampled_sources");
  std::vector<CdfPoint> cdf{{1, 3}};
  write_degree_cdf_csv(d, cdf, false);
  EXPECT_EQ(d.str(), "degree,count\n1,3\n");
}
