#include "netflippa/flippa.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "netflippa/parallel.hpp"
#include "netflippa/spectra.hpp"

namespace netflippa {

Matrix rademacher_matrix(int n, RngStream& rng) {
  Matrix r(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double s = rng.next_rademacher();
      r(i, j) = s;
      r(j, i) = s;
    }
  }
  return r;
}

Matrix apply_signflip(const Matrix& l, const Matrix& r) {
  if (l.rows() != l.cols())
    throw std::invalid_argument("apply_signflip: matrix is not square");
  if (r.rows() != l.rows() || r.cols() != l.cols())
    throw std::invalid_argument("apply_signflip: sign matrix shape mismatch");
  for (Eigen::Index j = 0; j < r.cols(); ++j)
    for (Eigen::Index i = 0; i <= j; ++i)
      if ((r(i, j) != 1.0 && r(i, j) != -1.0) || r(j, i) != r(i, j))
        throw std::invalid_argument(
            "apply_signflip: sign matrix must be symmetric with +-1 entries");
  return r.cwiseProduct(l);
}

Matrix signflip(const Matrix& l, RngStream& rng) {
  if (l.rows() != l.cols())
    throw std::invalid_argument("signflip: matrix is not square");
  return rademacher_matrix(static_cast<int>(l.rows()), rng).cwiseProduct(l);
}

double empirical_quantile(const std::vector<double>& values, double gamma) {
  if (values.empty())
    throw std::invalid_argument("empirical_quantile: empty sequence");
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw std::invalid_argument("empirical_quantile: gamma outside [0, 1]");
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  const auto t = static_cast<double>(sorted.size());
  auto index = static_cast<long>(std::ceil(gamma * t));  // 1-based
  index = std::max<long>(1, std::min<long>(index, sorted.size()));
  return sorted[static_cast<size_t>(index - 1)];
}

int first_k_rule(const Vector& lam, double threshold, double margin) {
  int k = 0;
  while (k < lam.size() && lam(k) > threshold + margin) ++k;
  return k;
}

int pairwise_k_rule(const Vector& lam, const Vector& thresholds, double margin) {
  if (thresholds.size() != lam.size())
    throw std::invalid_argument("pairwise_k_rule: threshold length mismatch");
  int k = 0;
  while (k < lam.size() && lam(k) > thresholds(k) + margin) ++k;
  return k;
}

SelectionResult select_dimension(const NormalizedAdjacency& l,
                                 const FlipConfig& cfg) {
  if (cfg.trials < 1)
    throw std::invalid_argument("select_dimension: trials must be >= 1");
  if (!(cfg.quantile >= 0.0 && cfg.quantile <= 1.0))
    throw std::invalid_argument("select_dimension: quantile outside [0, 1]");

  const int n = static_cast<int>(l.matrix.rows());
  const int trials = cfg.trials;
  const bool keep_spectra =
      cfg.keep_trial_spectra || cfg.mode == ComparisonMode::kPairwise;

  SelectionResult result;
  result.mode = cfg.mode;
  result.margin = cfg.margin;
  result.eigenvalues = eigvals_sym(l.matrix);
  result.flip_leading.assign(trials, 0.0);
  if (keep_spectra) result.trial_spectra.assign(trials, Vector());

  // Trial t draws only from RngStream(seed, t), so any schedule reproduces
  // the sequential result.
  parallel_for(0, trials, [&](int ti) {
    RngStream rng(cfg.seed, static_cast<std::uint64_t>(ti) + 1);
    const Vector spectrum = eigvals_sym(signflip(l.matrix, rng));
    result.flip_leading[static_cast<size_t>(ti)] =
        spectrum.size() > 0 ? spectrum(0) : 0.0;
    if (keep_spectra) result.trial_spectra[static_cast<size_t>(ti)] = spectrum;
  });

  result.threshold = empirical_quantile(result.flip_leading, cfg.quantile);

  if (cfg.mode == ComparisonMode::kUpperEdge) {
    result.k_hat = first_k_rule(result.eigenvalues, result.threshold, cfg.margin);
  } else {
    Vector thresholds(n);
    std::vector<double> column(static_cast<size_t>(trials));
    for (int j = 0; j < n; ++j) {
      for (int t = 0; t < trials; ++t)
        column[static_cast<size_t>(t)] = result.trial_spectra[static_cast<size_t>(t)](j);
      thresholds(j) = empirical_quantile(column, cfg.quantile);
    }
    result.k_hat = pairwise_k_rule(result.eigenvalues, thresholds, cfg.margin);
  }
  return result;
}

Matrix embed(const NormalizedAdjacency& l, int k) {
  return eigh_topk(l.matrix, k).eigenvectors;
}

}  // namespace netflippa
