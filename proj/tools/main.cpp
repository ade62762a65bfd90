#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "netflippa/dcsbm.hpp"
#include "netflippa/edgelist.hpp"
#include "netflippa/flippa.hpp"
#include "netflippa/normadj.hpp"
#include "netflippa/report.hpp"
#include "netflippa/theory.hpp"

namespace {

using namespace netflippa;

constexpr double kBandLow = -0.65;
constexpr double kBandHigh = -0.30;

struct SimulateOptions {
  std::string preset = "fig1";
  std::string params_file;
  int n = 2000;
  std::uint64_t seed = 0;
  std::string out;
};

struct SelectOptions {
  std::string in;
  double alpha = 0.5;
  int trials = 20;
  double quantile = 1.0;
  std::uint64_t seed = 0;
  std::string mode = "upper-edge";
  double margin = 0.0;
  std::string out;
};

struct EmbedOptions {
  std::string in;
  double alpha = 0.5;
  int k = 2;
  std::string out;
};

struct ValidateOptions {
  std::string stat = "thm4";
  std::vector<int> grid = {250, 500, 1000, 2000};
  int reps = 50;
  double alpha = 0.5;
  std::uint64_t seed = 0;
  std::string out;
};

DcsbmParams params_for(const SimulateOptions& opt, RngStream& q_rng) {
  if (!opt.params_file.empty()) return read_params_json(opt.params_file);
  if (opt.preset == "fig1") return preset_fig1(opt.n, q_rng);
  if (opt.preset == "fig2") return preset_fig2(opt.n, q_rng);
  if (opt.preset == "decay") return preset_decay(opt.n, q_rng);
  throw std::invalid_argument("unknown preset: " + opt.preset);
}

int run_simulate(const SimulateOptions& opt) {
  RngStream q_rng(opt.seed, 0);  // stream 0: q draws, stream 1: edges
  const DcsbmParams params = params_for(opt, q_rng);
  RngStream edge_rng(opt.seed, 1);
  const Matrix a = sample_adjacency(params, edge_rng);
  write_edge_list(opt.out, a);
  write_params_json(opt.out + ".params.json", params);
  std::cout << "wrote " << opt.out << " (n=" << params.n << ", edges="
            << static_cast<long>((a.sum() + a.diagonal().sum()) / 2) << ")\n";
  return 0;
}

int run_select(const SelectOptions& opt) {
  const Matrix a = read_edge_list(opt.in);
  const NormalizedAdjacency l = build_normalized_adjacency(a, opt.alpha);
  FlipConfig cfg;
  cfg.trials = opt.trials;
  cfg.quantile = opt.quantile;
  cfg.seed = opt.seed;
  cfg.mode = comparison_mode_from_name(opt.mode);
  cfg.margin = opt.margin;
  const SelectionResult result = select_dimension(l, cfg);
  write_selection_report(opt.out, make_selection_report(result, opt.alpha, cfg));
  std::cout << "k_hat=" << result.k_hat << " threshold=" << result.threshold
            << " (report: " << opt.out << ")\n";
  return 0;
}

int run_embed(const EmbedOptions& opt) {
  const Matrix a = read_edge_list(opt.in);
  const NormalizedAdjacency l = build_normalized_adjacency(a, opt.alpha);
  write_embedding_csv(opt.out, embed(l, opt.k));
  std::cout << "wrote " << opt.out << "\n";
  return 0;
}

int run_validate(const ValidateOptions& opt) {
  DecayReport report;
  report.stat = opt.stat;
  report.grid = opt.grid;
  report.reps = opt.reps;
  report.alpha = opt.alpha;
  report.seed = opt.seed;
  report.band_low = kBandLow;
  report.band_high = kBandHigh;

  std::filesystem::path csv_path(opt.out);
  csv_path.replace_extension(".csv");

  if (opt.stat == "synthetic") {
    // Self-test: exact n^(-1/2) data must come back with slope -1/2.
    if (opt.grid.size() < 3)
      throw std::invalid_argument("validate: grid must have at least 3 sizes");
    std::vector<std::vector<double>> samples;
    for (int n : opt.grid) {
      report.estimates.push_back(3.0 / std::sqrt(static_cast<double>(n)));
      samples.push_back({report.estimates.back()});
    }
    const LoglogFit fit = fit_loglog(opt.grid, report.estimates);
    report.slope = fit.slope;
    report.intercept = fit.intercept;
    write_decay_samples_csv(csv_path.string(), opt.stat, opt.grid, samples);
  } else {
    static const std::map<std::string, DecayStat> kStats = {
        {"thm1", DecayStat::kThm1}, {"thm2a", DecayStat::kThm2a},
        {"thm2b", DecayStat::kThm2b}, {"thm3", DecayStat::kThm3},
        {"thm4", DecayStat::kThm4}};
    const auto found = kStats.find(opt.stat);
    if (found == kStats.end())
      throw std::invalid_argument("unknown statistic: " + opt.stat);
    const DecayFit fit = decay_fit(
        found->second, opt.grid, opt.reps,
        [](int n, RngStream& rng) { return preset_decay(n, rng); }, opt.alpha,
        opt.seed);
    report.estimates = fit.estimates;
    report.slope = fit.slope;
    report.intercept = fit.intercept;
    write_decay_samples_csv(csv_path.string(), opt.stat, fit.grid, fit.samples);
  }

  const bool in_band =
      report.slope >= kBandLow && report.slope <= kBandHigh;
  report.verdict = in_band ? "PASS" : "FAIL";
  write_decay_report(opt.out, report);
  std::cout << "stat=" << report.stat << " slope=" << report.slope
            << " verdict=" << report.verdict << " (report: " << opt.out
            << ", samples: " << csv_path.string() << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "netflippa: embedding dimension selection for undirected networks by "
      "signflip parallel analysis on normalized adjacency matrices"};
  app.require_subcommand(1);

  SimulateOptions sim;
  auto* simulate = app.add_subcommand(
      "simulate", "Sample a DCSBM graph and write it as an edge list");
  simulate->add_option("--preset", sim.preset,
                       "Parameter preset: fig1 | fig2 | decay")
      ->check(CLI::IsMember({"fig1", "fig2", "decay"}));
  simulate->add_option("--params-file", sim.params_file,
                       "JSON file with fields n, K, q, g (1-based), M; "
                       "overrides --preset/--n");
  simulate->add_option("--n", sim.n, "Node count (preset mode)");
  simulate->add_option("--seed", sim.seed, "RNG seed");
  simulate->add_option("--out", sim.out, "Output edge list path")->required();

  SelectOptions sel;
  auto* select = app.add_subcommand(
      "select", "Select the embedding dimension of an edge-list graph");
  select->add_option("--in", sel.in, "Input edge list (0-based node ids)")
      ->required();
  select->add_option("--alpha", sel.alpha, "Degree-correction exponent");
  select->add_option("--trials", sel.trials, "Number of signflip trials");
  select->add_option("--quantile", sel.quantile,
                     "Quantile of the leading flipped eigenvalues");
  select->add_option("--seed", sel.seed, "RNG seed");
  select->add_option("--mode", sel.mode, "Comparison mode")
      ->check(CLI::IsMember({"upper-edge", "pairwise"}));
  select->add_option("--margin", sel.margin,
                     "Extra rise above the threshold required to keep an "
                     "eigenvalue");
  select->add_option("--out", sel.out, "Output report (JSON)")->required();

  EmbedOptions emb;
  auto* embed_cmd = app.add_subcommand(
      "embed", "Write the top-k eigenvector embedding as CSV");
  embed_cmd->add_option("--in", emb.in, "Input edge list")->required();
  embed_cmd->add_option("--alpha", emb.alpha, "Degree-correction exponent");
  embed_cmd->add_option("--k", emb.k, "Embedding dimension")->required();
  embed_cmd->add_option("--out", emb.out, "Output CSV path")->required();

  ValidateOptions val;
  auto* validate = app.add_subcommand(
      "validate", "Estimate the decay rate of a theorem statistic over a "
                  "grid of network sizes");
  validate->add_option("--stat", val.stat,
                       "thm1 | thm2a | thm2b | thm3 | thm4 | synthetic")
      ->check(CLI::IsMember(
          {"thm1", "thm2a", "thm2b", "thm3", "thm4", "synthetic"}));
  validate->add_option("--grid", val.grid, "Network sizes (comma separated)")
      ->delimiter(',');
  validate->add_option("--reps", val.reps, "Replicates per size");
  validate->add_option("--alpha", val.alpha, "Degree-correction exponent");
  validate->add_option("--seed", val.seed, "RNG seed");
  validate->add_option("--out", val.out, "Summary report (JSON); replicate "
                                         "CSV goes next to it")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) return run_simulate(sim);
    if (select->parsed()) return run_select(sel);
    if (embed_cmd->parsed()) return run_embed(emb);
    if (validate->parsed()) return run_validate(val);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
