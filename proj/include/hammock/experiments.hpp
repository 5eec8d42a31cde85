#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hammock/dataset.hpp"
#include "hammock/jumps.hpp"
#include "hammock/metrics.hpp"
#include "hammock/synth.hpp"

namespace hammock {

/// Integer range [min, max]. Throws ConfigError when empty or min < 1.
struct WidthRange {
  std::size_t min = 1;
  std::size_t max = 30;

  void validate(const char* name) const;
  std::size_t size() const noexcept { return max - min + 1; }
};

// ---------------------------------------------------------------------------
// stats

struct DatasetStats {
  std::size_t people = 0;
  std::size_t movies = 0;
  std::size_t ratings = 0;
  std::size_t duplicates = 0;
  double sparsity = 0.0;
  bool connected = false;
  std::size_t min_person_degree = 0;
  std::size_t max_person_degree = 0;
  std::vector<std::size_t> top_buff_degrees;  // up to 10
  std::vector<std::size_t> top_hit_degrees;   // up to 10
  std::optional<PowerLawFit> buff_fit;
  std::optional<PowerLawFit> hit_fit;
};

DatasetStats compute_stats(const BipartiteRatings& g);
/// Two-column `key,value` CSV.
void write_stats_csv(std::ostream& out, const DatasetStats& stats);

// ---------------------------------------------------------------------------
// sweep

/// Measured and predicted quantities for one hammock width. Predicted
/// columns are absent when the generating-function model is undefined.
struct SweepRow {
  std::size_t w = 0;
  std::size_t components = 0;
  std::size_t giant_people = 0;
  std::size_t giant_movies = 0;
  std::size_t isolated_people = 0;
  bool shattered = false;
  std::optional<double> l_pp_measured;
  std::optional<double> l_r_measured;
  std::optional<double> l_pm_measured;
  std::optional<double> l_pp_predicted;
  std::optional<double> l_r_predicted;
  std::optional<double> l_pm_predicted;
  bool sampled = false;
  std::size_t sources = 0;
  /// Giant component holds < 90% of all vertices: the model's single giant
  /// component assumption is weak for this row.
  bool giant_below_90pct = false;
};

SweepRow sweep_point(const BipartiteRatings& g, const CoRatingTable& table,
                     std::size_t w, const PathOptions& paths);
std::vector<SweepRow> run_sweep(const BipartiteRatings& g, WidthRange widths,
                                const PathOptions& paths);
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);

// ---------------------------------------------------------------------------
// synthetic study

struct SynthStudyOptions {
  WidthRange kappa{1, 15};
  WidthRange widths{1, 25};
  std::size_t trials = 15;
  std::uint64_t seed = 1;
  std::size_t n_people = 500;
  std::size_t n_movies = 75;
  unsigned rewire_threshold = 2;
  unsigned rewire_outcomes = 11;
  PathOptions paths;
};

struct SynthTrialRow {
  std::size_t kappa = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  SweepRow row;
};

/// Per (kappa, w) means over the trials in which each value was defined.
struct SynthStudyRow {
  std::size_t kappa = 0;
  double epsilon = 0.0;
  std::size_t w = 0;
  double components = 0.0;
  double giant_people = 0.0;
  double giant_movies = 0.0;
  std::optional<double> l_pp_measured;
  std::optional<double> l_r_measured;
  std::optional<double> l_pm_measured;
  std::optional<double> l_pp_predicted;
  std::optional<double> l_r_predicted;
  std::optional<double> l_pm_predicted;
};

struct SynthStudySummary {
  std::size_t kappa = 0;
  std::optional<double> epsilon;
  std::optional<double> linf_l_pp;
  std::optional<double> linf_l_r;
  std::string status;  // "ok" or a warning
};

struct SynthStudyResult {
  std::vector<SynthStudyRow> rows;
  std::vector<SynthStudySummary> summaries;
  std::vector<SynthTrialRow> trials;
};

SynthStudyResult run_synth_study(const SynthStudyOptions& options);
void write_synth_rows_csv(std::ostream& out,
                          std::span<const SynthStudyRow> rows);
void write_synth_summary_csv(std::ostream& out,
                             std::span<const SynthStudySummary> rows);
void write_synth_trials_csv(std::ostream& out,
                            std::span<const SynthTrialRow> rows);

// ---------------------------------------------------------------------------
// small world

struct WsRow {
  RewireMode mode = RewireMode::uniform;
  SmallWorldPoint point;
};

std::vector<WsRow> run_ws(const WreathConfig& base,
                          std::span<const double> p_values, std::size_t trials,
                          std::span<const RewireMode> modes,
                          const PathOptions& paths);
/// Columns p,L_ratio,C_ratio,mode.
void write_ws_csv(std::ostream& out, std::span<const WsRow> rows);

/// n log-spaced values from lo to hi inclusive.
std::vector<double> log_spaced(double lo, double hi, std::size_t n);

// ---------------------------------------------------------------------------
// degree CDFs

struct CdfRow {
  std::size_t w = 0;
  CdfPoint point;
};

std::vector<CdfRow> run_cdf(const BipartiteRatings& g, WidthRange widths,
                            bool largest_only, bool log_scale);
void write_cdf_csv(std::ostream& out, std::span<const CdfRow> rows,
                   bool log_scale);

const char* to_string(RewireMode mode);

}  // namespace hammock
