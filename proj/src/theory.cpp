#include "netflippa/theory.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "netflippa/flippa.hpp"
#include "netflippa/normadj.hpp"
#include "netflippa/parallel.hpp"
#include "netflippa/spectra.hpp"

namespace netflippa {

namespace {

// Mirrors the upper triangle so derived matrices stay symmetric to the bit.
void mirror_upper(Matrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < j; ++i) m(j, i) = m(i, j);
}

Matrix membership_matrix(const DcsbmParams& params) {
  Matrix j = Matrix::Zero(params.n, params.K);
  for (int i = 0; i < params.n; ++i) j(i, params.g[i] - 1) = 1.0;
  return j;
}

double stat_value(DecayStat stat, const DcsbmParams& params, const Matrix& a,
                  const Matrix& r, double alpha) {
  switch (stat) {
    case DecayStat::kThm1:
      return thm1_stats_given(params, a, r, alpha).gap;
    case DecayStat::kThm2a:
      return thm2_stats_given(params, a, r, alpha).two_inf;
    case DecayStat::kThm2b:
      return thm2_stats_given(params, a, r, alpha).flipped_signal_opnorm;
    case DecayStat::kThm3:
      return thm3_gap_given(params, a, r, alpha);
    case DecayStat::kThm4:
      return thm4_gap_given(params, a, r, alpha);
  }
  throw std::logic_error("stat_value: unknown statistic");
}

}  // namespace

SignalNoiseParts build_parts(const DcsbmParams& params, const Matrix& a,
                             double alpha) {
  validate_params(params);
  if (a.rows() != params.n || a.cols() != params.n)
    throw std::invalid_argument("build_parts: adjacency shape mismatch");

  const int n = params.n;
  const int k = params.K;
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  const Matrix j = membership_matrix(params);

  SignalNoiseParts parts;
  parts.X = a - expected_adjacency(params);

  const double q_total = params.q.sum();
  parts.v_c = (j.transpose() * params.q) / q_total;

  Vector q_neg_alpha(n);
  for (int i = 0; i < n; ++i) q_neg_alpha(i) = std::pow(params.q(i), -alpha);

  parts.U.resize(n, k + 1);
  for (int i = 0; i < n; ++i) {
    const double q_pos = std::pow(params.q(i), 1.0 - alpha);
    for (int c = 0; c < k; ++c) parts.U(i, c) = q_pos * j(i, c) / sqrt_n;
  }
  const Vector row_sums = parts.X * Vector::Ones(n);
  for (int i = 0; i < n; ++i)
    parts.U(i, k) = q_neg_alpha(i) * row_sums(i) / q_total;

  parts.Lambda.resize(k + 1, k + 1);
  const Matrix centering =
      Matrix::Identity(k, k) - Vector::Ones(k) * parts.v_c.transpose();
  parts.Lambda.topLeftCorner(k, k) = centering * params.M * centering.transpose();
  parts.Lambda.topRightCorner(k, 1).setConstant(-1.0);
  parts.Lambda.bottomLeftCorner(1, k).setConstant(-1.0);
  parts.Lambda(k, k) = 0.0;
  mirror_upper(parts.Lambda);

  parts.S = parts.U * parts.Lambda * parts.U.transpose();
  mirror_upper(parts.S);

  parts.N.resize(n, n);
  for (int c = 0; c < n; ++c) {
    for (int i = 0; i <= c; ++i) {
      const double value =
          (q_neg_alpha(i) * parts.X(i, c) * q_neg_alpha(c)) / sqrt_n;
      parts.N(i, c) = value;
      parts.N(c, i) = value;
    }
  }

  parts.L_tilde = parts.S + parts.N;
  return parts;
}

double moment_norm(const std::vector<double>& samples, int p) {
  if (samples.empty())
    throw std::invalid_argument("moment_norm: empty sample sequence");
  if (p < 1) throw std::invalid_argument("moment_norm: p must be positive");
  double acc = 0.0;
  for (double x : samples) acc += std::pow(std::abs(x), p);
  return std::pow(acc / static_cast<double>(samples.size()), 1.0 / p);
}

Thm1Stats thm1_stats_given(const DcsbmParams& params, const Matrix& a,
                           const Matrix& r, double alpha) {
  const SignalNoiseParts parts = build_parts(params, a, alpha);
  const NormalizedAdjacency l = build_normalized_adjacency(a, alpha);
  const Matrix diff = l.matrix - parts.L_tilde;
  // R o L - R o L_tilde = R o (L - L_tilde), exactly (signs are +-1).
  return {op_norm(diff), op_norm(apply_signflip(diff, r))};
}

Thm1Stats thm1_stats(const DcsbmParams& params, double alpha, RngStream& rng) {
  const Matrix a = sample_adjacency(params, rng);
  const Matrix r = rademacher_matrix(params.n, rng);
  return thm1_stats_given(params, a, r, alpha);
}

Thm2Stats thm2_stats_given(const DcsbmParams& params, const Matrix& a,
                           const Matrix& r, double alpha) {
  const SignalNoiseParts parts = build_parts(params, a, alpha);
  return {two_inf_norm(parts.S), op_norm(apply_signflip(parts.S, r))};
}

Thm2Stats thm2_stats(const DcsbmParams& params, double alpha, RngStream& rng) {
  const Matrix a = sample_adjacency(params, rng);
  const Matrix r = rademacher_matrix(params.n, rng);
  return thm2_stats_given(params, a, r, alpha);
}

double thm3_gap_given(const DcsbmParams& params, const Matrix& a,
                      const Matrix& r, double alpha) {
  const SignalNoiseParts parts = build_parts(params, a, alpha);
  return std::abs(op_norm(apply_signflip(parts.N, r)) - op_norm(parts.N));
}

double thm3_gap(const DcsbmParams& params, double alpha, RngStream& rng) {
  const Matrix a = sample_adjacency(params, rng);
  const Matrix r = rademacher_matrix(params.n, rng);
  return thm3_gap_given(params, a, r, alpha);
}

double thm4_gap_given(const DcsbmParams& params, const Matrix& a,
                      const Matrix& r, double alpha) {
  const SignalNoiseParts parts = build_parts(params, a, alpha);
  const NormalizedAdjacency l = build_normalized_adjacency(a, alpha);
  return std::abs(op_norm(apply_signflip(l.matrix, r)) - op_norm(parts.N));
}

double thm4_gap(const DcsbmParams& params, double alpha, RngStream& rng) {
  const Matrix a = sample_adjacency(params, rng);
  const Matrix r = rademacher_matrix(params.n, rng);
  return thm4_gap_given(params, a, r, alpha);
}

LoglogFit fit_loglog(const std::vector<int>& grid,
                     const std::vector<double>& estimates) {
  if (grid.size() != estimates.size() || grid.size() < 2)
    throw std::invalid_argument("fit_loglog: need matching grids, length >= 2");
  const auto count = static_cast<double>(grid.size());
  double x_mean = 0.0, y_mean = 0.0;
  std::vector<double> xs(grid.size()), ys(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 1)
      throw std::invalid_argument("fit_loglog: grid entries must be positive");
    if (!(estimates[i] > 0.0))
      throw std::invalid_argument("fit_loglog: estimates must be positive");
    xs[i] = std::log(static_cast<double>(grid[i]));
    ys[i] = std::log(estimates[i]);
    x_mean += xs[i];
    y_mean += ys[i];
  }
  x_mean /= count;
  y_mean /= count;
  double sxy = 0.0, sxx = 0.0;
  for (size_t i = 0; i < grid.size(); ++i) {
    sxy += (xs[i] - x_mean) * (ys[i] - y_mean);
    sxx += (xs[i] - x_mean) * (xs[i] - x_mean);
  }
  if (sxx == 0.0)
    throw std::invalid_argument("fit_loglog: grid has no spread");
  LoglogFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = y_mean - fit.slope * x_mean;
  return fit;
}

DecayFit decay_fit(DecayStat stat, const std::vector<int>& grid, int reps,
                   const ParamsFamily& family, double alpha,
                   std::uint64_t seed) {
  if (grid.size() < 3)
    throw std::invalid_argument("decay_fit: grid must have at least 3 sizes");
  for (size_t i = 0; i + 1 < grid.size(); ++i)
    if (grid[i] >= grid[i + 1])
      throw std::invalid_argument("decay_fit: grid must be strictly increasing");
  if (reps < 20)
    throw std::invalid_argument("decay_fit: reps below minimum of 20");

  DecayFit fit;
  fit.grid = grid;
  fit.samples.assign(grid.size(), std::vector<double>(static_cast<size_t>(reps), 0.0));

  const int total = static_cast<int>(grid.size()) * reps;
  parallel_for(0, total, [&](int job) {
    const int ni = job / reps;
    const int rep = job % reps;
    RngStream rng(seed, static_cast<std::uint64_t>(job));
    const DcsbmParams params = family(grid[static_cast<size_t>(ni)], rng);
    const Matrix a = sample_adjacency(params, rng);
    const Matrix r = rademacher_matrix(params.n, rng);
    fit.samples[static_cast<size_t>(ni)][static_cast<size_t>(rep)] =
        stat_value(stat, params, a, r, alpha);
  });

  fit.estimates.resize(grid.size());
  for (size_t ni = 0; ni < grid.size(); ++ni)
    fit.estimates[ni] = moment_norm(fit.samples[ni], 1);

  const LoglogFit line = fit_loglog(fit.grid, fit.estimates);
  fit.slope = line.slope;
  fit.intercept = line.intercept;
  return fit;
}

}  // namespace netflippa
