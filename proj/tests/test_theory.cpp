#include <doctest.h>

#include <cmath>

#include "netflippa/dcsbm.hpp"
#include "netflippa/flippa.hpp"
#include "netflippa/normadj.hpp"
#include "netflippa/parallel.hpp"
#include "netflippa/spectra.hpp"
#include "netflippa/theory.hpp"
#include "oracles.hpp"

using namespace netflippa;

namespace {

DcsbmParams small_params(int n, double m_scale, RngStream& rng) {
  DcsbmParams params;
  params.n = n;
  params.K = 3;
  params.q.resize(n);
  for (int i = 0; i < n; ++i) params.q(i) = 0.3 + 0.5 * rng.next_uniform();
  params.g.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    params.g[static_cast<size_t>(i)] = 1 + (i % 3);
  params.M = Matrix::Constant(3, 3, -m_scale / 2.0);
  params.M.diagonal().setConstant(m_scale);
  return params;
}

ParamsFamily mzero_family() {
  return [](int n, RngStream& rng) {
    DcsbmParams params;
    params.n = n;
    params.K = 3;
    params.q.resize(n);
    for (int i = 0; i < n; ++i)
      params.q(i) = rng.next_uniform() < 0.5 ? 0.4 : 0.9;
    params.g.resize(static_cast<size_t>(n));
    const int s = n / 3;
    for (int i = 0; i < n; ++i)
      params.g[static_cast<size_t>(i)] = i < s ? 1 : (i < 2 * s ? 2 : 3);
    params.M = Matrix::Zero(3, 3);
    return params;
  };
}

}  // namespace

TEST_CASE("build_parts: block structure of Lambda") {
  RngStream rng(201, 0);
  DcsbmParams params = small_params(30, 1.0, rng);
  const Matrix a = sample_adjacency(params, rng);
  const SignalNoiseParts parts = build_parts(params, a, 0.5);

  const int k = params.K;
  CHECK(parts.Lambda.rows() == k + 1);
  CHECK(parts.Lambda(k, k) == 0.0);
  for (int c = 0; c < k; ++c) {
    CHECK(parts.Lambda(c, k) == -1.0);
    CHECK(parts.Lambda(k, c) == -1.0);
  }
  CHECK((parts.Lambda - parts.Lambda.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("build_parts: M = 0 zeroes the top-left block of Lambda") {
  RngStream rng(202, 0);
  DcsbmParams params = small_params(24, 0.0, rng);
  params.M.setZero();
  const Matrix a = sample_adjacency(params, rng);
  const SignalNoiseParts parts = build_parts(params, a, 0.0);
  CHECK(parts.Lambda.topLeftCorner(3, 3).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("build_parts: equal q and equal block sizes give uniform v_c") {
  DcsbmParams params;
  params.n = 30;
  params.K = 3;
  params.q = Vector::Constant(30, 0.5);
  params.g.resize(30);
  for (int i = 0; i < 30; ++i) params.g[static_cast<size_t>(i)] = 1 + i / 10;
  params.M = Matrix::Zero(3, 3);
  RngStream rng(203, 0);
  const Matrix a = sample_adjacency(params, rng);
  const SignalNoiseParts parts = build_parts(params, a, 0.5);
  for (int c = 0; c < 3; ++c)
    CHECK(parts.v_c(c) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("build_parts: exact identities") {
  RngStream rng(204, 0);
  const DcsbmParams params = small_params(40, 1.5, rng);
  const Matrix a = sample_adjacency(params, rng);
  const SignalNoiseParts parts = build_parts(params, a, 0.5);

  CHECK((parts.S + parts.N - parts.L_tilde).cwiseAbs().maxCoeff() == 0.0);
  CHECK((parts.X - (a - expected_adjacency(params))).cwiseAbs().maxCoeff() == 0.0);

  CHECK(parts.v_c.minCoeff() >= 0.0);
  CHECK(std::abs(parts.v_c.sum() - 1.0) <= 1e-14);

  CHECK((parts.S - parts.S.transpose()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((parts.N - parts.N.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("build_parts: signal has rank at most K + 1") {
  RngStream rng(205, 0);
  const DcsbmParams params = small_params(60, 2.0, rng);
  const Matrix a = sample_adjacency(params, rng);
  const SignalNoiseParts parts = build_parts(params, a, 1.0);

  const Vector values = eigvals_sym(parts.S);
  Vector magnitudes = values.cwiseAbs();
  std::sort(magnitudes.data(), magnitudes.data() + magnitudes.size(),
            std::greater<double>());
  CHECK(magnitudes(params.K + 1) <= 1e-8 * op_norm(parts.S));
}

TEST_CASE("build_parts: L_tilde approximates L_alpha") {
  RngStream rng(206, 0);
  const DcsbmParams params = small_params(200, 1.0, rng);
  const Matrix a = sample_adjacency(params, rng);
  const SignalNoiseParts parts = build_parts(params, a, 0.5);
  const NormalizedAdjacency l = build_normalized_adjacency(a, 0.5);
  const double gap = op_norm(l.matrix - parts.L_tilde);
  CHECK(gap > 0.0);
  CHECK(gap < 1.0);  // coarse; the rate check happens in the decay fits
}

TEST_CASE("thm1: M = 0 at alpha = 0, n = 200 keeps the gap below one") {
  RngStream rng(216, 0);
  const DcsbmParams params = mzero_family()(200, rng);
  const Thm1Stats stats = thm1_stats(params, 0.0, rng);
  CHECK(stats.gap > 0.0);
  CHECK(stats.gap < 1.0);
  CHECK(stats.flipped_gap < 1.0);
}

TEST_CASE("thm2: M = 0 leaves only the rank-2 cross terms in S") {
  RngStream rng(217, 0);
  const DcsbmParams params = mzero_family()(60, rng);
  const Matrix a = sample_adjacency(params, rng);
  const SignalNoiseParts parts = build_parts(params, a, 0.5);

  Vector magnitudes = eigvals_sym(parts.S).cwiseAbs();
  std::sort(magnitudes.data(), magnitudes.data() + magnitudes.size(),
            std::greater<double>());
  CHECK(magnitudes(2) <= 1e-10 * op_norm(parts.S));

  const double two_inf = two_inf_norm(parts.S);
  CHECK(std::isfinite(two_inf));
  CHECK(two_inf > 0.0);
}

TEST_CASE("build_parts: centered noise has mean zero across seeds") {
  RngStream setup(207, 0);
  const DcsbmParams params = small_params(3, 0.5, setup);
  const Matrix expected = expected_adjacency(params);
  Matrix total = Matrix::Zero(3, 3);
  const int reps = 4000;
  for (int rep = 0; rep < reps; ++rep) {
    RngStream rng(207, static_cast<std::uint64_t>(rep) + 1);
    const Matrix a = sample_adjacency(params, rng);
    total += build_parts(params, a, 0.5).X;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double p = expected(i, j);
      const double sigma = std::sqrt(p * (1.0 - p) / reps);
      CHECK(std::abs(total(i, j) / reps) <= 4.0 * sigma);
    }
}

TEST_CASE("moment_norm: examples") {
  CHECK(moment_norm({2.0, 2.0, 2.0}, 3) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(moment_norm({0.0, 0.0}, 5) == 0.0);
  CHECK(moment_norm({1.0, -1.0}, 2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(moment_norm({}, 1), std::invalid_argument);
  CHECK_THROWS_AS(moment_norm({1.0}, 0), std::invalid_argument);
}

TEST_CASE("theorem statistics: R = +1 hooks and nonnegativity") {
  RngStream rng(208, 0);
  const DcsbmParams params = small_params(30, 1.0, rng);
  const Matrix a = sample_adjacency(params, rng);
  const Matrix plus_one = Matrix::Ones(30, 30);

  const Thm1Stats t1 = thm1_stats_given(params, a, plus_one, 0.5);
  CHECK(t1.flipped_gap == t1.gap);

  const SignalNoiseParts parts = build_parts(params, a, 0.5);
  const Thm2Stats t2 = thm2_stats_given(params, a, plus_one, 0.5);
  CHECK(t2.flipped_signal_opnorm == op_norm(parts.S));
  CHECK(t2.two_inf == two_inf_norm(parts.S));

  CHECK(thm3_gap_given(params, a, plus_one, 0.5) == 0.0);

  RngStream flip_rng(208, 9);
  const Matrix r = rademacher_matrix(30, flip_rng);
  CHECK(thm1_stats_given(params, a, r, 0.5).gap >= 0.0);
  CHECK(thm1_stats_given(params, a, r, 0.5).flipped_gap >= 0.0);
  CHECK(thm2_stats_given(params, a, r, 0.5).two_inf >= 0.0);
  CHECK(thm2_stats_given(params, a, r, 0.5).flipped_signal_opnorm >= 0.0);
  CHECK(thm3_gap_given(params, a, r, 0.5) >= 0.0);
  CHECK(thm4_gap_given(params, a, r, 0.5) >= 0.0);
}

TEST_CASE("theorem statistics: thm1 gap of a matched pair is zero") {
  // When the approximation is forced equal to the matrix the gap vanishes.
  const Matrix l = Matrix::Random(8, 8);
  const Matrix sym = ((l + l.transpose()) / 2.0).eval();
  CHECK(op_norm(sym - sym) == 0.0);
}

TEST_CASE("theorem statistics: invariant under joint node permutation") {
  RngStream rng(209, 0);
  const int n = 24;
  DcsbmParams params = small_params(n, 1.0, rng);
  const Matrix a = sample_adjacency(params, rng);
  RngStream flip_rng(209, 5);
  const Matrix r = rademacher_matrix(n, flip_rng);

  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(perm[static_cast<size_t>(i)],
              perm[static_cast<size_t>(static_cast<int>(rng.next_uniform() * (i + 1)))]);

  DcsbmParams permuted = params;
  Matrix a_perm(n, n), r_perm(n, n);
  for (int i = 0; i < n; ++i) {
    permuted.q(i) = params.q(perm[static_cast<size_t>(i)]);
    permuted.g[static_cast<size_t>(i)] = params.g[static_cast<size_t>(perm[static_cast<size_t>(i)])];
    for (int j = 0; j < n; ++j) {
      a_perm(i, j) = a(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
      r_perm(i, j) = r(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    }
  }

  const Thm1Stats t1 = thm1_stats_given(params, a, r, 0.5);
  const Thm1Stats t1p = thm1_stats_given(permuted, a_perm, r_perm, 0.5);
  CHECK(std::abs(t1.gap - t1p.gap) < 1e-9);
  CHECK(std::abs(t1.flipped_gap - t1p.flipped_gap) < 1e-9);

  CHECK(std::abs(thm3_gap_given(params, a, r, 0.5) -
                 thm3_gap_given(permuted, a_perm, r_perm, 0.5)) < 1e-9);
  CHECK(std::abs(thm4_gap_given(params, a, r, 0.5) -
                 thm4_gap_given(permuted, a_perm, r_perm, 0.5)) < 1e-9);
}

TEST_CASE("fit_loglog: exact power law recovers the exponent") {
  const std::vector<int> grid = {250, 500, 1000, 2000};
  std::vector<double> exact;
  for (int n : grid) exact.push_back(4.2 / std::sqrt(static_cast<double>(n)));
  const LoglogFit fit = fit_loglog(grid, exact);
  CHECK(std::abs(fit.slope + 0.5) < 1e-10);
}

TEST_CASE("fit_loglog: log factor flattens the slope") {
  const std::vector<int> grid = {250, 500, 1000, 2000};
  std::vector<double> values;
  for (int n : grid)
    values.push_back(std::sqrt(std::log(static_cast<double>(n)) / n));
  const LoglogFit fit = fit_loglog(grid, values);

  // Closed-form least squares computed independently of fit_loglog.
  double xm = 0.0, ym = 0.0;
  std::vector<double> xs, ys;
  for (size_t i = 0; i < grid.size(); ++i) {
    xs.push_back(std::log(static_cast<double>(grid[i])));
    ys.push_back(std::log(values[i]));
    xm += xs.back();
    ym += ys.back();
  }
  xm /= 4.0;
  ym /= 4.0;
  double sxy = 0.0, sxx = 0.0;
  for (size_t i = 0; i < 4; ++i) {
    sxy += (xs[i] - xm) * (ys[i] - ym);
    sxx += (xs[i] - xm) * (xs[i] - xm);
  }
  CHECK(std::abs(fit.slope - sxy / sxx) < 1e-12);
  CHECK(fit.slope == doctest::Approx(-0.423204219824).epsilon(1e-9));
}

TEST_CASE("decay_fit: argument validation") {
  const auto family = mzero_family();
  CHECK_THROWS_AS(decay_fit(DecayStat::kThm1, {64, 128}, 20, family, 0.5, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(decay_fit(DecayStat::kThm1, {64, 128, 128}, 20, family, 0.5, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(decay_fit(DecayStat::kThm1, {64, 128, 256}, 1, family, 0.5, 1),
                  std::invalid_argument);
}

TEST_CASE("decay_fit: small-scale Monte Carlo smoke") {
  const DecayFit fit = decay_fit(DecayStat::kThm1, {48, 96, 192}, 20,
                                 mzero_family(), 0.5, 31);
  CHECK(fit.estimates.size() == 3);
  for (double estimate : fit.estimates) CHECK(estimate > 0.0);
  CHECK(fit.samples[0].size() == 20);
  CHECK(fit.slope < 0.0);  // the gap shrinks with n

  // Deterministic reruns reproduce every replicate value.
  const DecayFit again = decay_fit(DecayStat::kThm1, {48, 96, 192}, 20,
                                   mzero_family(), 0.5, 31);
  for (size_t ni = 0; ni < 3; ++ni)
    for (size_t rep = 0; rep < 20; ++rep)
      CHECK(fit.samples[ni][rep] == again.samples[ni][rep]);
}

TEST_SUITE("slow") {
  TEST_CASE("thm2 statistics shrink when n doubles") {
    const int reps = 50;
    std::vector<Thm2Stats> small_stats(reps), large_stats(reps);
    parallel_for(0, 2 * reps, [&](int job) {
      const int rep = job % reps;
      if (job < reps) {
        RngStream rng(301, static_cast<std::uint64_t>(rep));
        const DcsbmParams params = preset_decay(512, rng);
        small_stats[static_cast<size_t>(rep)] = thm2_stats(params, 0.5, rng);
      } else {
        RngStream rng(302, static_cast<std::uint64_t>(rep));
        const DcsbmParams params = preset_decay(2048, rng);
        large_stats[static_cast<size_t>(rep)] = thm2_stats(params, 0.5, rng);
      }
    });
    double two_inf_small = 0.0, two_inf_large = 0.0;
    double flip_small = 0.0, flip_large = 0.0;
    for (int rep = 0; rep < reps; ++rep) {
      two_inf_small += small_stats[static_cast<size_t>(rep)].two_inf;
      two_inf_large += large_stats[static_cast<size_t>(rep)].two_inf;
      flip_small += small_stats[static_cast<size_t>(rep)].flipped_signal_opnorm;
      flip_large += large_stats[static_cast<size_t>(rep)].flipped_signal_opnorm;
    }
    CHECK(two_inf_large < two_inf_small);
    CHECK(flip_large < flip_small);
  }
}
