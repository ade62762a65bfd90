#include "netflippa/report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace netflippa {

namespace {

using Json = nlohmann::ordered_json;

Json load_json(const std::string& path) {
  std::ifstream input(path);
  if (!input) throw std::runtime_error("cannot open file: " + path);
  Json doc;
  input >> doc;
  return doc;
}

void dump_json(const std::string& path, const Json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << doc.dump(2) << "\n";
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace

std::string comparison_mode_name(ComparisonMode mode) {
  return mode == ComparisonMode::kUpperEdge ? "upper-edge" : "pairwise";
}

ComparisonMode comparison_mode_from_name(const std::string& name) {
  if (name == "upper-edge") return ComparisonMode::kUpperEdge;
  if (name == "pairwise") return ComparisonMode::kPairwise;
  throw std::invalid_argument("unknown comparison mode: " + name);
}

SelectionReport make_selection_report(const SelectionResult& result,
                                      double alpha, const FlipConfig& cfg) {
  SelectionReport report;
  report.n = static_cast<int>(result.eigenvalues.size());
  report.alpha = alpha;
  report.trials = cfg.trials;
  report.quantile = cfg.quantile;
  report.seed = cfg.seed;
  report.eigenvalues.assign(result.eigenvalues.data(),
                            result.eigenvalues.data() + result.eigenvalues.size());
  report.flip_leading = result.flip_leading;
  report.threshold = result.threshold;
  report.k_hat = result.k_hat;
  report.comparison_mode = comparison_mode_name(result.mode);
  report.margin = result.margin;
  return report;
}

void write_selection_report(const std::string& path,
                            const SelectionReport& report) {
  Json doc;
  doc["n"] = report.n;
  doc["alpha"] = report.alpha;
  doc["trials"] = report.trials;
  doc["quantile"] = report.quantile;
  doc["seed"] = report.seed;
  doc["eigenvalues"] = report.eigenvalues;
  doc["flip_leading"] = report.flip_leading;
  doc["threshold"] = report.threshold;
  doc["k_hat"] = report.k_hat;
  doc["comparison_mode"] = report.comparison_mode;
  doc["margin"] = report.margin;
  dump_json(path, doc);
}

SelectionReport read_selection_report(const std::string& path) {
  const Json doc = load_json(path);
  SelectionReport report;
  report.n = doc.at("n").get<int>();
  report.alpha = doc.at("alpha").get<double>();
  report.trials = doc.at("trials").get<int>();
  report.quantile = doc.at("quantile").get<double>();
  report.seed = doc.at("seed").get<std::uint64_t>();
  report.eigenvalues = doc.at("eigenvalues").get<std::vector<double>>();
  report.flip_leading = doc.at("flip_leading").get<std::vector<double>>();
  report.threshold = doc.at("threshold").get<double>();
  report.k_hat = doc.at("k_hat").get<int>();
  report.comparison_mode = doc.at("comparison_mode").get<std::string>();
  report.margin = doc.at("margin").get<double>();
  return report;
}

void write_params_json(const std::string& path, const DcsbmParams& params) {
  Json doc;
  doc["n"] = params.n;
  doc["K"] = params.K;
  doc["q"] = std::vector<double>(params.q.data(), params.q.data() + params.q.size());
  doc["g"] = params.g;
  std::vector<std::vector<double>> m(static_cast<size_t>(params.K));
  for (int a = 0; a < params.K; ++a) {
    m[static_cast<size_t>(a)].resize(static_cast<size_t>(params.K));
    for (int b = 0; b < params.K; ++b)
      m[static_cast<size_t>(a)][static_cast<size_t>(b)] = params.M(a, b);
  }
  doc["M"] = m;
  if (params.q_min) doc["q_min"] = *params.q_min;
  if (params.q_max) doc["q_max"] = *params.q_max;
  if (params.m_max) doc["M_max"] = *params.m_max;
  dump_json(path, doc);
}

DcsbmParams read_params_json(const std::string& path) {
  const Json doc = load_json(path);
  DcsbmParams params;
  params.n = doc.at("n").get<int>();
  params.K = doc.at("K").get<int>();
  const auto q = doc.at("q").get<std::vector<double>>();
  params.q = Eigen::Map<const Vector>(q.data(), static_cast<Eigen::Index>(q.size()));
  params.g = doc.at("g").get<std::vector<int>>();
  const auto m = doc.at("M").get<std::vector<std::vector<double>>>();
  params.M.resize(params.K, params.K);
  if (static_cast<int>(m.size()) != params.K)
    throw std::runtime_error("params file: M row count != K");
  for (int a = 0; a < params.K; ++a) {
    if (static_cast<int>(m[static_cast<size_t>(a)].size()) != params.K)
      throw std::runtime_error("params file: M column count != K");
    for (int b = 0; b < params.K; ++b)
      params.M(a, b) = m[static_cast<size_t>(a)][static_cast<size_t>(b)];
  }
  if (doc.contains("q_min")) params.q_min = doc.at("q_min").get<double>();
  if (doc.contains("q_max")) params.q_max = doc.at("q_max").get<double>();
  if (doc.contains("M_max")) params.m_max = doc.at("M_max").get<double>();
  validate_params(params);
  return params;
}

void write_decay_report(const std::string& path, const DecayReport& report) {
  Json doc;
  doc["stat"] = report.stat;
  doc["grid"] = report.grid;
  doc["reps"] = report.reps;
  doc["alpha"] = report.alpha;
  doc["seed"] = report.seed;
  doc["estimates"] = report.estimates;
  doc["slope"] = report.slope;
  doc["intercept"] = report.intercept;
  doc["band"] = {report.band_low, report.band_high};
  doc["verdict"] = report.verdict;
  dump_json(path, doc);
}

DecayReport read_decay_report(const std::string& path) {
  const Json doc = load_json(path);
  DecayReport report;
  report.stat = doc.at("stat").get<std::string>();
  report.grid = doc.at("grid").get<std::vector<int>>();
  report.reps = doc.at("reps").get<int>();
  report.alpha = doc.at("alpha").get<double>();
  report.seed = doc.at("seed").get<std::uint64_t>();
  report.estimates = doc.at("estimates").get<std::vector<double>>();
  report.slope = doc.at("slope").get<double>();
  report.intercept = doc.at("intercept").get<double>();
  report.band_low = doc.at("band")[0].get<double>();
  report.band_high = doc.at("band")[1].get<double>();
  report.verdict = doc.at("verdict").get<std::string>();
  return report;
}

void write_decay_samples_csv(const std::string& path, const std::string& stat,
                             const std::vector<int>& grid,
                             const std::vector<std::vector<double>>& samples) {
  if (grid.size() != samples.size())
    throw std::invalid_argument("decay samples: grid/sample length mismatch");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << "stat,n,rep,value\n";
  std::ostringstream row;
  row.precision(17);
  for (size_t ni = 0; ni < grid.size(); ++ni)
    for (size_t rep = 0; rep < samples[ni].size(); ++rep) {
      row.str("");
      row << stat << "," << grid[ni] << "," << rep << "," << samples[ni][rep]
          << "\n";
      out << row.str();
    }
  if (!out) throw std::runtime_error("failed writing " + path);
}

void write_embedding_csv(const std::string& path, const Matrix& coords) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << "node";
  for (Eigen::Index j = 0; j < coords.cols(); ++j) out << ",v" << (j + 1);
  out << "\n";
  std::ostringstream row;
  row.precision(17);
  for (Eigen::Index i = 0; i < coords.rows(); ++i) {
    row.str("");
    row << i;
    for (Eigen::Index j = 0; j < coords.cols(); ++j) row << "," << coords(i, j);
    row << "\n";
    out << row.str();
  }
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace netflippa
