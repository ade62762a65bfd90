#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "netflippa/dcsbm.hpp"
#include "netflippa/rng.hpp"
#include "netflippa/types.hpp"

namespace netflippa {

// Signal-plus-noise decomposition of the normalized adjacency under known
// DCSBM parameters:
//   L_tilde = S + N,  S = U Lambda U',  N = (1/sqrt(n)) Dq^-a X Dq^-a,
// with X = A - E[A],
//   U = [ Dq^(1-a) J / sqrt(n),  Dq^-a X 1 / (q'1) ],
//   Lambda = [ (I - 1 vc') M (I - vc 1')   -1 ]
//            [ -1'                          0 ],
//   vc = J'q / (1'q).
struct SignalNoiseParts {
  Matrix U;        // n x (K+1)
  Matrix Lambda;   // (K+1) x (K+1), symmetric
  Vector v_c;      // length K, nonnegative, sums to 1
  Matrix X;        // centered noise A - E[A]
  Matrix S;        // signal U Lambda U'
  Matrix N;        // noise (1/sqrt(n)) Dq^-a X Dq^-a
  Matrix L_tilde;  // S + N
};

SignalNoiseParts build_parts(const DcsbmParams& params, const Matrix& a,
                             double alpha);

/// Monte Carlo p-th moment norm (mean |x|^p)^(1/p). Throws on empty input.
double moment_norm(const std::vector<double>& samples, int p);

// Per-sample statistics for the four decay theorems. The *_given variants
// take an explicit adjacency and sign matrix (test hooks); the sampling
// variants draw one graph and one flip from the stream.

struct Thm1Stats {
  double gap;          // ||L_a - L_tilde||_op
  double flipped_gap;  // ||R o L_a - R o L_tilde||_op
};
Thm1Stats thm1_stats_given(const DcsbmParams& params, const Matrix& a,
                           const Matrix& r, double alpha);
Thm1Stats thm1_stats(const DcsbmParams& params, double alpha, RngStream& rng);

struct Thm2Stats {
  double two_inf;               // ||S||_{2,inf}
  double flipped_signal_opnorm; // ||R o S||_op
};
Thm2Stats thm2_stats_given(const DcsbmParams& params, const Matrix& a,
                           const Matrix& r, double alpha);
Thm2Stats thm2_stats(const DcsbmParams& params, double alpha, RngStream& rng);

/// | ||R o N||_op - ||N||_op |
double thm3_gap_given(const DcsbmParams& params, const Matrix& a,
                      const Matrix& r, double alpha);
double thm3_gap(const DcsbmParams& params, double alpha, RngStream& rng);

/// | ||R o L_a||_op - ||N||_op |
double thm4_gap_given(const DcsbmParams& params, const Matrix& a,
                      const Matrix& r, double alpha);
double thm4_gap(const DcsbmParams& params, double alpha, RngStream& rng);

enum class DecayStat { kThm1, kThm2a, kThm2b, kThm3, kThm4 };

struct LoglogFit {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Least squares of log(estimate) against log(n).
LoglogFit fit_loglog(const std::vector<int>& grid,
                     const std::vector<double>& estimates);

struct DecayFit {
  std::vector<int> grid;
  std::vector<double> estimates;             // per-n mean of the statistic
  std::vector<std::vector<double>> samples;  // per-n replicate values
  double slope = 0.0;
  double intercept = 0.0;
};

using ParamsFamily = std::function<DcsbmParams(int n, RngStream&)>;

// Monte Carlo decay-rate estimate: for each n in the grid, average the
// statistic over `reps` seeded replicates, then fit log(mean) against
// log(n). Replicate (ni, rep) draws everything from
// RngStream(seed, ni * reps + rep); replicates may run in parallel and the
// aggregation order is fixed, so results match sequential execution exactly.
// Requires grid strictly increasing with at least 3 points and reps >= 20.
DecayFit decay_fit(DecayStat stat, const std::vector<int>& grid, int reps,
                   const ParamsFamily& family, double alpha,
                   std::uint64_t seed);

}  // namespace netflippa
