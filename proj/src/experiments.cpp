#include "hammock/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "hammock/csv.hpp"
#include "hammock/error.hpp"
#include "hammock/nsw.hpp"

namespace hammock {

void WidthRange::validate(const char* name) const {
  if (min < 1 || max < min) {
    throw ConfigError(std::string(name) + " range must satisfy 1 <= min <= max");
  }
}

const char* to_string(RewireMode mode) {
  return mode == RewireMode::uniform ? "uniform" : "preferential";
}

DatasetStats compute_stats(const BipartiteRatings& g) {
  DatasetStats s;
  s.people = g.person_count();
  s.movies = g.movie_count();
  s.ratings = g.edge_count();
  s.duplicates = g.duplicate_count();
  s.sparsity = sparsity(g);
  s.connected = is_connected_bipartite(g);
  auto order = reorder_hits_buffs(g);
  s.max_person_degree = order.buff_degrees.front();
  s.min_person_degree = order.buff_degrees.back();
  const std::size_t top = 10;
  s.top_buff_degrees.assign(
      order.buff_degrees.begin(),
      order.buff_degrees.begin() +
          static_cast<std::ptrdiff_t>(std::min(top, order.buff_degrees.size())));
  s.top_hit_degrees.assign(
      order.hit_degrees.begin(),
      order.hit_degrees.begin() +
          static_cast<std::ptrdiff_t>(std::min(top, order.hit_degrees.size())));
  // Zero-degree tails (unrated ids from explicit sets) are outside the fit.
  auto fit = [](std::vector<std::size_t> degrees) -> std::optional<PowerLawFit> {
    while (!degrees.empty() && degrees.back() == 0) degrees.pop_back();
    if (degrees.size() < 3) return std::nullopt;
    return fit_power_law(std::span<const std::size_t>(degrees));
  };
  s.buff_fit = fit(order.buff_degrees);
  s.hit_fit = fit(order.hit_degrees);
  return s;
}

namespace {

std::string join_counts(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

void write_fit(std::ostream& out, const char* prefix,
               const std::optional<PowerLawFit>& fit) {
  out << prefix << "_alpha," << (fit ? format_length(fit->alpha) : "") << '\n';
  out << prefix << "_tau,"
      << (fit && std::isfinite(fit->tau) ? format_length(fit->tau) : "")
      << '\n';
  out << prefix << "_residual," << (fit ? format_length(fit->residual) : "")
      << '\n';
}

}  // namespace

void write_stats_csv(std::ostream& out, const DatasetStats& s) {
  out << "key,value\n";
  out << "people," << s.people << '\n';
  out << "movies," << s.movies << '\n';
  out << "ratings," << s.ratings << '\n';
  out << "duplicates," << s.duplicates << '\n';
  out << "sparsity," << format_length(s.sparsity) << '\n';
  out << "connected," << (s.connected ? "yes" : "no") << '\n';
  out << "min_person_degree," << s.min_person_degree << '\n';
  out << "max_person_degree," << s.max_person_degree << '\n';
  out << "top_buff_degrees," << join_counts(s.top_buff_degrees) << '\n';
  out << "top_hit_degrees," << join_counts(s.top_hit_degrees) << '\n';
  write_fit(out, "buff_fit", s.buff_fit);
  write_fit(out, "hit_fit", s.hit_fit);
}

SweepRow sweep_point(const BipartiteRatings& g, const CoRatingTable& table,
                     std::size_t w, const PathOptions& paths) {
  SweepRow row;
  row.w = w;
  const SocialGraph gs = apply_jump(g, table, JumpSpec::hammock(w));
  const RecommenderGraph gr = build_recommender_graph(g, gs);
  const ComponentReport comps = connected_components(gr);
  row.components = comps.component_count();
  row.giant_people = comps.giant_people;
  row.giant_movies = comps.giant_movies;
  row.isolated_people = comps.isolated_people;
  row.shattered = comps.shattered;
  const std::size_t all = g.person_count() + g.movie_count();
  row.giant_below_90pct =
      10 * (row.giant_people + row.giant_movies) < 9 * all;

  if (row.giant_people >= 2) {
    auto pp = measure_l_pp(gs, paths);
    row.l_pp_measured = pp.l_pp;
    row.sampled = pp.sampled;
    row.sources = pp.sources;
  }
  if (row.giant_people >= 1) {
    auto r = measure_l_r_l_pm(gr, paths);
    row.l_r_measured = r.l_r;
    row.l_pm_measured = r.l_pm;
    row.sampled = r.sampled;
    row.sources = r.sources;
  }

  try {
    row.l_pp_predicted = predict_l_pp(
        {degree_distribution(gs, /*largest_only=*/true), row.giant_people});
  } catch (const ModelDegenerateError&) {
  } catch (const DomainError&) {
  }
  try {
    row.l_r_predicted =
        predict_l_r({joint_degree_distribution(gr, /*largest_only=*/true),
                     row.giant_people, row.giant_movies});
  } catch (const ModelDegenerateError&) {
  } catch (const DomainError&) {
  }
  if (row.l_pp_predicted && row.l_r_predicted && row.giant_people >= 2 &&
      row.giant_movies >= 1) {
    row.l_pm_predicted = predict_l_pm(*row.l_r_predicted, *row.l_pp_predicted,
                                      row.giant_people, row.giant_movies);
  }
  return row;
}

std::vector<SweepRow> run_sweep(const BipartiteRatings& g, WidthRange widths,
                                const PathOptions& paths) {
  widths.validate("w");
  const CoRatingTable table(g);
  std::vector<SweepRow> rows;
  rows.reserve(widths.size());
  for (std::size_t w = widths.min; w <= widths.max; ++w) {
    rows.push_back(sweep_point(g, table, w, paths));
  }
  return rows;
}

namespace {

void write_sweep_fields(std::ostream& out, const SweepRow& r) {
  out << r.w << ',' << r.components << ',' << r.giant_people << ','
      << r.giant_movies << ',' << r.isolated_people << ','
      << (r.shattered ? 1 : 0) << ',' << format_optional(r.l_pp_measured)
      << ',' << format_optional(r.l_r_measured) << ','
      << format_optional(r.l_pm_measured) << ','
      << format_optional(r.l_pp_predicted) << ','
      << format_optional(r.l_r_predicted) << ','
      << format_optional(r.l_pm_predicted) << ','
      << format_sources(r.sampled, r.sources) << ','
      << (r.giant_below_90pct ? 1 : 0);
}

constexpr const char* kSweepHeader =
    "w,components,giant_people,giant_movies,isolated_people,shattered,"
    "l_pp_measured,l_r_measured,l_pm_measured,l_pp_predicted,l_r_predicted,"
    "l_pm_predicted,sampled_sources,giant_below_90pct";

// Running mean of the trials in which a value is defined.
struct Mean {
  double sum = 0.0;
  std::size_t n = 0;
  void add(const std::optional<double>& v) {
    if (v) {
      sum += *v;
      ++n;
    }
  }
  std::optional<double> value() const {
    if (n == 0) return std::nullopt;
    return sum / static_cast<double>(n);
  }
};

}  // namespace

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << kSweepHeader << '\n';
  for (const auto& r : rows) {
    write_sweep_fields(out, r);
    out << '\n';
  }
}

SynthStudyResult run_synth_study(const SynthStudyOptions& options) {
  options.kappa.validate("kappa");
  options.widths.validate("w");
  if (options.trials < 1) throw ConfigError("trials must be at least 1");

  SynthStudyResult result;
  for (std::size_t kappa = options.kappa.min; kappa <= options.kappa.max;
       ++kappa) {
    SynthStudySummary summary;
    summary.kappa = kappa;
    double epsilon = 0.0;
    try {
      epsilon =
          calibrate_epsilon(kappa, options.n_people, options.n_movies);
    } catch (const ConfigError& e) {
      summary.status = std::string("calibration failed: ") + e.what();
      result.summaries.push_back(summary);
      continue;
    }
    summary.epsilon = epsilon;

    const std::size_t nw = options.widths.size();
    std::vector<Mean> comps(nw), gp(nw), gm(nw), lpp(nw), lr(nw), lpm(nw),
        ppp(nw), plr(nw), plpm(nw);
    for (std::size_t t = 0; t < options.trials; ++t) {
      SynthConfig cfg;
      cfg.n_people = options.n_people;
      cfg.n_movies = options.n_movies;
      cfg.epsilon = epsilon;
      cfg.rewire_threshold = options.rewire_threshold;
      cfg.rewire_outcomes = options.rewire_outcomes;
      cfg.seed = derive_seed(options.seed, kappa, t);
      const auto data = generate_power_law_bipartite(cfg);
      const CoRatingTable table(data.ratings);
      for (std::size_t i = 0; i < nw; ++i) {
        SweepRow row = sweep_point(data.ratings, table, options.widths.min + i,
                                   options.paths);
        comps[i].add(static_cast<double>(row.components));
        gp[i].add(static_cast<double>(row.giant_people));
        gm[i].add(static_cast<double>(row.giant_movies));
        lpp[i].add(row.l_pp_measured);
        lr[i].add(row.l_r_measured);
        lpm[i].add(row.l_pm_measured);
        ppp[i].add(row.l_pp_predicted);
        plr[i].add(row.l_r_predicted);
        plpm[i].add(row.l_pm_predicted);
        result.trials.push_back({kappa, t, cfg.seed, row});
      }
    }

    std::vector<std::optional<double>> mpp, pp, mr, pr;
    for (std::size_t i = 0; i < nw; ++i) {
      SynthStudyRow row;
      row.kappa = kappa;
      row.epsilon = epsilon;
      row.w = options.widths.min + i;
      row.components = *comps[i].value();
      row.giant_people = *gp[i].value();
      row.giant_movies = *gm[i].value();
      row.l_pp_measured = lpp[i].value();
      row.l_r_measured = lr[i].value();
      row.l_pm_measured = lpm[i].value();
      row.l_pp_predicted = ppp[i].value();
      row.l_r_predicted = plr[i].value();
      row.l_pm_predicted = plpm[i].value();
      mpp.push_back(row.l_pp_measured);
      pp.push_back(row.l_pp_predicted);
      mr.push_back(row.l_r_measured);
      pr.push_back(row.l_r_predicted);
      result.rows.push_back(row);
    }
    auto linf = [](const auto& a, const auto& b) -> std::optional<double> {
      try {
        return linf_discrepancy(a, b);
      } catch (const DomainError&) {
        return std::nullopt;
      }
    };
    summary.linf_l_pp = linf(mpp, pp);
    summary.linf_l_r = linf(mr, pr);
    summary.status = "ok";
    result.summaries.push_back(summary);
  }
  return result;
}

void write_synth_rows_csv(std::ostream& out,
                          std::span<const SynthStudyRow> rows) {
  out << "kappa,epsilon,w,components,giant_people,giant_movies,"
         "l_pp_measured,l_r_measured,l_pm_measured,l_pp_predicted,"
         "l_r_predicted,l_pm_predicted\n";
  for (const auto& r : rows) {
    out << r.kappa << ',' << format_length(r.epsilon) << ',' << r.w << ','
        << format_length(r.components) << ',' << format_length(r.giant_people)
        << ',' << format_length(r.giant_movies) << ','
        << format_optional(r.l_pp_measured) << ','
        << format_optional(r.l_r_measured) << ','
        << format_optional(r.l_pm_measured) << ','
        << format_optional(r.l_pp_predicted) << ','
        << format_optional(r.l_r_predicted) << ','
        << format_optional(r.l_pm_predicted) << '\n';
  }
}

void write_synth_summary_csv(std::ostream& out,
                             std::span<const SynthStudySummary> rows) {
  out << "kappa,epsilon,linf_l_pp,linf_l_r,status\n";
  for (const auto& r : rows) {
    std::string status = r.status;
    std::replace(status.begin(), status.end(), ',', ';');
    out << r.kappa << ',' << format_optional(r.epsilon) << ','
        << format_optional(r.linf_l_pp) << ',' << format_optional(r.linf_l_r)
        << ',' << status << '\n';
  }
}

void write_synth_trials_csv(std::ostream& out,
                            std::span<const SynthTrialRow> rows) {
  out << "kappa,trial,seed," << kSweepHeader << '\n';
  for (const auto& r : rows) {
    out << r.kappa << ',' << r.trial << ',' << r.seed << ',';
    write_sweep_fields(out, r.row);
    out << '\n';
  }
}

std::vector<WsRow> run_ws(const WreathConfig& base,
                          std::span<const double> p_values, std::size_t trials,
                          std::span<const RewireMode> modes,
                          const PathOptions& paths) {
  std::vector<WsRow> rows;
  for (RewireMode mode : modes) {
    WreathConfig cfg = base;
    cfg.mode = mode;
    for (const auto& point : small_world_curve(cfg, p_values, trials, paths)) {
      rows.push_back({mode, point});
    }
  }
  return rows;
}

void write_ws_csv(std::ostream& out, std::span<const WsRow> rows) {
  out << "p,L_ratio,C_ratio,mode\n";
  for (const auto& r : rows) {
    out << format_length(r.point.p) << ','
        << format_length(r.point.length_ratio) << ','
        << format_length(r.point.clustering_ratio) << ',' << to_string(r.mode)
        << '\n';
  }
}

std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !(hi >= lo) || n < 1) {
    throw ConfigError("log spacing needs 0 < lo <= hi and n >= 1");
  }
  std::vector<double> out;
  if (n == 1) return {lo};
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(std::pow(10.0, a + (b - a) * static_cast<double>(i) /
                                         static_cast<double>(n - 1)));
  }
  out.back() = hi;
  return out;
}

std::vector<CdfRow> run_cdf(const BipartiteRatings& g, WidthRange widths,
                            bool largest_only, bool log_scale) {
  widths.validate("w");
  const CoRatingTable table(g);
  std::vector<CdfRow> rows;
  for (std::size_t w = widths.min; w <= widths.max; ++w) {
    const SocialGraph gs = apply_jump(g, table, JumpSpec::hammock(w));
    for (const auto& point :
         degree_cdf(degree_distribution(gs, largest_only), log_scale)) {
      rows.push_back({w, point});
    }
  }
  return rows;
}

void write_cdf_csv(std::ostream& out, std::span<const CdfRow> rows,
                   bool log_scale) {
  out << (log_scale ? "w,degree,log10_count\n" : "w,degree,count\n");
  for (const auto& r : rows) {
    out << r.w << ',' << r.point.degree << ',';
    if (log_scale) {
      out << format_length(r.point.value);
    } else {
      out << static_cast<std::uint64_t>(r.point.value);
    }
    out << '\n';
  }
}

}  // namespace hammock
