// hammock: experiment driver for jump-induced social and recommender graphs.
//
//   hammock stats       dataset statistics and power-law fits
//   hammock sweep       hammock-width sweep, measured vs predicted lengths
//   hammock synth-study calibrated synthetic datasets across kappa
//   hammock ws          small-world curves of rewired wreaths
//   hammock cdf         degree CDFs of the social graph per width
//   hammock generate    write a synthetic dataset in MovieLens tab format
//
// Exit codes: 0 success, 1 input error, 2 configuration error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hammock/error.hpp"
#include "hammock/experiments.hpp"

namespace {

namespace fs = std::filesystem;
using namespace hammock;

constexpr int kInputError = 1;
constexpr int kConfigError = 2;

struct Options {
  std::string input;
  std::string format = "movielens";
  std::optional<double> epsilon;
  std::size_t people = 500;
  std::size_t movies = 75;
  unsigned rewire_threshold = 2;
  unsigned rewire_outcomes = 11;
  std::size_t w_min = 1;
  std::size_t w_max = 30;
  std::size_t kappa_min = 1;
  std::size_t kappa_max = 15;
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  std::size_t max_sources = 5000;
  std::size_t sample_sources = 1000;
  std::string out;
  // ws
  std::size_t n = 1000;
  std::size_t k = 10;
  std::vector<double> p_values;
  double p_min = 1e-4;
  double p_max = 1.0;
  std::size_t p_count = 13;
  std::string mode = "uniform";
  // cdf
  bool largest_only = false;
  bool log_scale = false;
};

PathOptions path_options(const Options& o) {
  return {o.max_sources, o.sample_sources, o.seed};
}

BipartiteRatings dataset(const Options& o) {
  if (!o.input.empty()) {
    RatingFormat format;
    if (o.format == "movielens") {
      format = RatingFormat::movielens_tab;
    } else if (o.format == "csv") {
      format = RatingFormat::generic_csv;
    } else {
      throw ConfigError("unknown format '" + o.format + "'");
    }
    return load_ratings(o.input, format);
  }
  if (o.epsilon) {
    SynthConfig cfg;
    cfg.n_people = o.people;
    cfg.n_movies = o.movies;
    cfg.epsilon = *o.epsilon;
    cfg.rewire_threshold = o.rewire_threshold;
    cfg.rewire_outcomes = o.rewire_outcomes;
    cfg.seed = o.seed;
    return generate_power_law_bipartite(cfg).ratings;
  }
  throw ConfigError("either --input or --epsilon is required");
}

// Streams `write` to <out>/<name> when --out is set, else to stdout.
template <typename Write>
void emit(const Options& o, const std::string& name, Write write) {
  if (o.out.empty()) {
    write(std::cout);
    return;
  }
  fs::create_directories(o.out);
  std::ofstream file(fs::path(o.out) / name, std::ios::binary);
  if (!file) throw ConfigError("cannot write " + (fs::path(o.out) / name).string());
  write(file);
}

void add_input_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--input", o.input, "Ratings file");
  cmd->add_option("--format", o.format, "movielens | csv")
      ->check(CLI::IsMember({"movielens", "csv"}));
  cmd->add_option("--epsilon", o.epsilon,
                  "Generate a synthetic dataset instead of --input");
  cmd->add_option("--people", o.people, "Synthetic people");
  cmd->add_option("--movies", o.movies, "Synthetic movies");
  cmd->add_option("--rewire-threshold", o.rewire_threshold);
  cmd->add_option("--rewire-outcomes", o.rewire_outcomes);
  cmd->add_option("--seed", o.seed, "RNG seed");
}

void add_width_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--w-min", o.w_min, "Smallest hammock width");
  cmd->add_option("--w-max", o.w_max, "Largest hammock width");
}

void add_path_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--max-sources", o.max_sources,
                  "All-source BFS up to this many giant-component people");
  cmd->add_option("--sample-sources", o.sample_sources,
                  "Sampled BFS sources above --max-sources");
}

void add_out_option(CLI::App* cmd, Options& o) {
  cmd->add_option("--out", o.out, "Output directory (default: stdout)");
}

// Flat key=value config file, converted into flags placed ahead of the
// command-line ones so that explicit flags win.
std::vector<std::string> config_flags(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::vector<std::string> flags;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(line_no) +
                        ": expected key=value");
    }
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    flags.push_back("--" + key + "=" + value);
  }
  return flags;
}

int run(int argc, char** argv) {
  CLI::App app{"Graph analysis of recommender datasets under hammock jumps"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  Options o;
  std::string config_path;

  auto* stats = app.add_subcommand("stats", "Dataset statistics");
  add_input_options(stats, o);
  add_out_option(stats, o);

  auto* sweep = app.add_subcommand("sweep", "Hammock-width sweep");
  add_input_options(sweep, o);
  add_width_options(sweep, o);
  add_path_options(sweep, o);
  add_out_option(sweep, o);

  auto* synth = app.add_subcommand("synth-study",
                                   "Calibrated synthetic datasets across kappa");
  synth->add_option("--kappa-min", o.kappa_min);
  synth->add_option("--kappa-max", o.kappa_max);
  synth->add_option("--trials", o.trials, "Graphs per kappa");
  synth->add_option("--seed", o.seed, "Master seed");
  synth->add_option("--people", o.people);
  synth->add_option("--movies", o.movies);
  synth->add_option("--rewire-threshold", o.rewire_threshold);
  synth->add_option("--rewire-outcomes", o.rewire_outcomes);
  add_width_options(synth, o);
  add_path_options(synth, o);
  add_out_option(synth, o);

  auto* ws = app.add_subcommand("ws", "Small-world curve of a rewired wreath");
  ws->add_option("--n", o.n, "Vertices");
  ws->add_option("--k", o.k, "Neighbours per vertex (even)");
  ws->add_option("--p", o.p_values, "Rewiring probabilities")->delimiter(',');
  ws->add_option("--p-min", o.p_min, "Smallest log-spaced p");
  ws->add_option("--p-max", o.p_max, "Largest log-spaced p");
  ws->add_option("--p-count", o.p_count, "Number of log-spaced p");
  ws->add_option("--mode", o.mode, "uniform | preferential | both")
      ->check(CLI::IsMember({"uniform", "preferential", "both"}));
  ws->add_option("--trials", o.trials, "Graphs per p");
  ws->add_option("--seed", o.seed, "Master seed");
  add_path_options(ws, o);
  add_out_option(ws, o);

  auto* cdf = app.add_subcommand("cdf", "Degree CDFs of the social graph");
  add_input_options(cdf, o);
  add_width_options(cdf, o);
  cdf->add_flag("--largest-only", o.largest_only, "Giant component only");
  cdf->add_flag("--log", o.log_scale, "Emit log10 counts");
  add_out_option(cdf, o);

  auto* generate = app.add_subcommand(
      "generate", "Write a synthetic dataset in MovieLens tab format");
  add_input_options(generate, o);
  add_out_option(generate, o);

  // Splice config-file flags right after the subcommand name.
  std::vector<std::string> args(argv + 1, argv + argc);
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                 args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  if (!config_path.empty()) {
    auto flags = config_flags(config_path);
    auto sub = std::find_if(args.begin(), args.end(), [](const std::string& a) {
      return a.empty() || a[0] != '-';
    });
    if (sub == args.end()) throw ConfigError("missing subcommand");
    args.insert(sub + 1, flags.begin(), flags.end());
  }
  std::reverse(args.begin(), args.end());  // CLI11 consumes from the back

  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  if (*stats) {
    auto s = compute_stats(dataset(o));
    emit(o, "stats.csv", [&](std::ostream& out) { write_stats_csv(out, s); });
  } else if (*sweep) {
    WidthRange widths{o.w_min, o.w_max};
    widths.validate("w");
    auto g = dataset(o);
    auto rows = run_sweep(g, widths, path_options(o));
    emit(o, "sweep.csv", [&](std::ostream& out) { write_sweep_csv(out, rows); });
  } else if (*synth) {
    SynthStudyOptions so;
    so.kappa = {o.kappa_min, o.kappa_max};
    so.widths = {o.w_min, o.w_max};
    so.trials = o.trials;
    so.seed = o.seed;
    so.n_people = o.people;
    so.n_movies = o.movies;
    so.rewire_threshold = o.rewire_threshold;
    so.rewire_outcomes = o.rewire_outcomes;
    so.paths = path_options(o);
    auto result = run_synth_study(so);
    emit(o, "synth_study.csv",
         [&](std::ostream& out) { write_synth_rows_csv(out, result.rows); });
    if (!o.out.empty()) {
      emit(o, "synth_summary.csv", [&](std::ostream& out) {
        write_synth_summary_csv(out, result.summaries);
      });
      emit(o, "synth_trials.csv", [&](std::ostream& out) {
        write_synth_trials_csv(out, result.trials);
      });
    }
    for (const auto& s : result.summaries) {
      if (s.status != "ok") std::cerr << "kappa " << s.kappa << ": " << s.status << '\n';
    }
  } else if (*ws) {
    WreathConfig cfg;
    cfg.n = o.n;
    cfg.k = o.k;
    cfg.seed = o.seed;
    cfg.validate();
    std::vector<double> ps = o.p_values;
    if (ps.empty()) ps = log_spaced(o.p_min, o.p_max, o.p_count);
    for (double p : ps) {
      if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("p must lie in [0, 1]");
    }
    std::vector<RewireMode> modes;
    if (o.mode != "preferential") modes.push_back(RewireMode::uniform);
    if (o.mode != "uniform") modes.push_back(RewireMode::preferential);
    if (o.trials < 1) throw ConfigError("trials must be at least 1");
    auto rows = run_ws(cfg, ps, o.trials, modes, path_options(o));
    emit(o, "ws.csv", [&](std::ostream& out) { write_ws_csv(out, rows); });
  } else if (*cdf) {
    WidthRange widths{o.w_min, o.w_max};
    widths.validate("w");
    auto rows = run_cdf(dataset(o), widths, o.largest_only, o.log_scale);
    emit(o, "cdf.csv",
         [&](std::ostream& out) { write_cdf_csv(out, rows, o.log_scale); });
  } else if (*generate) {
    auto g = dataset(o);
    emit(o, "ratings.tsv", [&](std::ostream& out) { write_movielens_tab(out, g); });
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hammock::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const hammock::Error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
