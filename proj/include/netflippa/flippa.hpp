#pragma once

#include <cstdint>
#include <vector>

#include "netflippa/normadj.hpp"
#include "netflippa/rng.hpp"
#include "netflippa/types.hpp"

namespace netflippa {

enum class ComparisonMode {
  kUpperEdge,  // compare against the leading flipped eigenvalue's quantile
  kPairwise,   // compare each eigenvalue against its own flipped analogue
};

struct FlipConfig {
  int trials = 20;
  double quantile = 1.0;
  std::uint64_t seed = 0;
  ComparisonMode mode = ComparisonMode::kUpperEdge;
  // Extra amount an eigenvalue must rise above the threshold to be kept.
  double margin = 0.0;
  bool keep_trial_spectra = false;  // always kept in pairwise mode
};

struct SelectionResult {
  Vector eigenvalues;               // of L_alpha, decreasing, length n
  std::vector<double> flip_leading; // leading flipped eigenvalue per trial
  double threshold = 0.0;           // quantile of flip_leading
  int k_hat = 0;
  ComparisonMode mode = ComparisonMode::kUpperEdge;
  double margin = 0.0;
  std::vector<Vector> trial_spectra;  // full spectra when retained
};

/// Symmetric Rademacher matrix: independent +-1 on pairs i <= j (diagonal
/// included, consumed row-major), mirrored below.
Matrix rademacher_matrix(int n, RngStream& rng);

/// Hadamard product r o l for an explicit sign matrix; r must be symmetric
/// with entries in {-1, +1}.
Matrix apply_signflip(const Matrix& l, const Matrix& r);

/// Random symmetric signflip R o L.
Matrix signflip(const Matrix& l, RngStream& rng);

// gamma-quantile as an order statistic: sort ascending, take the element at
// 1-based index ceil(gamma * T), with gamma = 0 mapping to the minimum. No
// interpolation. Throws on an empty sequence.
double empirical_quantile(const std::vector<double>& values, double gamma);

/// Smallest k >= 0 with lam_{k+1} <= threshold + margin, or n when every
/// eigenvalue stays above. lam must be sorted decreasing.
int first_k_rule(const Vector& lam, double threshold, double margin);

/// Largest k such that lam_j > thresholds_j + margin for all j <= k.
int pairwise_k_rule(const Vector& lam, const Vector& thresholds, double margin);

// NetFlipPA. Runs cfg.trials independent signflip trials (trial t draws from
// RngStream(cfg.seed, t)), takes the quantile of the leading flipped
// eigenvalues as the noise-floor estimate, and selects the eigenvalues of
// L_alpha that rise above it. Trials may run in parallel; the result is
// identical to sequential execution.
SelectionResult select_dimension(const NormalizedAdjacency& l,
                                 const FlipConfig& cfg);

/// Top-k eigenvectors of L_alpha, sign-normalized; the n x k embedding.
Matrix embed(const NormalizedAdjacency& l, int k);

}  // namespace netflippa
