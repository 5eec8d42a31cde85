#include <sstream>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hammock/error.hpp"
#include "hammock/experiments.hpp"

using namespace hammock;

namespace {

BipartiteRatings from(std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<RatingTriple> t;
  for (auto [p, m] : pairs) t.push_back({p, m, {}, {}});
  return BipartiteRatings::from_triples(t);
}

}  // namespace

TEST(Stats, SyntheticMinimumDegree) {
  auto g = generate_power_law_bipartite({.epsilon = 0.7}).ratings;
  auto s = compute_stats(g);
  EXPECT_EQ(s.min_person_degree, 1u);
  EXPECT_EQ(s.people, 500u);
  EXPECT_TRUE(s.connected);
  EXPECT_EQ(s.top_buff_degrees.size(), 10u);
  std::ostringstream out;
  write_stats_csv(out, s);
  EXPECT_NE(out.str().find("min_person_degree,1\n"), std::string::npos);
}

TEST(Sweep, ToyTwoPeople) {
  auto g = from({{1, 1}, {2, 1}, {1, 2}});
  auto rows = run_sweep(g, {1, 2}, {});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].w, 1u);
  EXPECT_EQ(rows[0].components, 1u);
  EXPECT_EQ(rows[1].w, 2u);
  EXPECT_EQ(rows[1].components, 2u);
  EXPECT_TRUE(rows[1].shattered);
}

TEST(Sweep, RowsOrderedAndCsvShape) {
  auto g = generate_power_law_bipartite({.n_people = 60, .n_movies = 20, .epsilon = 0.4}).ratings;
  auto rows = run_sweep(g, {3, 9}, {});
  ASSERT_EQ(rows.size(), 7u);
  for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(rows[i].w, 3 + i);
  std::ostringstream out;
  write_sweep_csv(out, rows);
  std::string text = out.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 8);
  EXPECT_EQ(text.substr(0, 2), "w,");
}

TEST(Sweep, TableComponentPredictionExceedsMeasured) {
  auto g = fixture::table_component();
  CoRatingTable table(g);
  auto row = sweep_point(g, table, 25, {});
  ASSERT_TRUE(row.l_r_predicted && row.l_r_measured);
  EXPECT_NEAR(*row.l_r_predicted, 4.24, 0.01);
  EXPECT_GT(*row.l_r_predicted - *row.l_r_measured, 1.5);
}

TEST(Sweep, InvalidRange) {
  EXPECT_THROW((WidthRange{0, 3}.validate("w")), ConfigError);
  EXPECT_THROW((WidthRange{5, 3}.validate("w")), ConfigError);
}

TEST(SynthStudy, DeterministicBytes) {
  SynthStudyOptions o;
  o.kappa = {1, 3};
  o.widths = {1, 6};
  o.trials = 1;
  o.seed = 42;
  std::ostringstream a, b;
  write_synth_rows_csv(a, run_synth_study(o).rows);
  write_synth_rows_csv(b, run_synth_study(o).rows);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_FALSE(a.str().empty());
}

TEST(SynthStudy, SummaryPerKappa) {
  SynthStudyOptions o;
  o.kappa = {2, 4};
  o.widths = {1, 5};
  o.trials = 2;
  auto r = run_synth_study(o);
  ASSERT_EQ(r.summaries.size(), 3u);
  EXPECT_EQ(r.rows.size(), 15u);
  EXPECT_EQ(r.trials.size(), 30u);
  for (const auto& s : r.summaries) {
    EXPECT_EQ(s.status, "ok");
    ASSERT_TRUE(s.epsilon);
    EXPECT_EQ(rated_prefix_length(500, *s.epsilon, 75), s.kappa);
  }
}

TEST(SmallWorldRun, SinglePointAtZero) {
  std::vector<double> ps{0.0};
  std::vector<RewireMode> modes{RewireMode::uniform};
  auto rows = run_ws({40, 4, 0, RewireMode::uniform, 1}, ps, 2, modes, {});
  ASSERT_EQ(rows.size(), 1u);
  std::ostringstream out;
  write_ws_csv(out, rows);
  EXPECT_EQ(out.str(), "p,L_ratio,C_ratio,mode\n0,1,1,uniform\n");
}

TEST(SmallWorldRun, LogSpacing) {
  auto ps = log_spaced(1e-4, 1.0, 5);
  ASSERT_EQ(ps.size(), 5u);
  EXPECT_NEAR(ps[0], 1e-4, 1e-18);
  EXPECT_NEAR(ps[2], 1e-2, 1e-15);
  EXPECT_DOUBLE_EQ(ps[4], 1.0);
}

TEST(Cdf, RowsPerWidth) {
  auto g = from({{1, 1}, {2, 1}, {3, 1}, {3, 2}});
  auto rows = run_cdf(g, {1, 1}, false, false);
  std::ostringstream out;
  write_cdf_csv(out, rows, false);
  EXPECT_EQ(out.str(), "w,degree,count\n1,2,3\n");
}
