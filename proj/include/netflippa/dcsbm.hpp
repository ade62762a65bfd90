#pragma once

#include <optional>
#include <vector>

#include "netflippa/rng.hpp"
#include "netflippa/types.hpp"

namespace netflippa {

// Degree-corrected stochastic blockmodel with community weights
// C = 1 + M / sqrt(n). Edges are Bernoulli(q_i q_j C_{g_i g_j}), drawn
// independently for every pair i <= j, diagonal included.
struct DcsbmParams {
  int n = 0;           // node count
  int K = 0;           // community count
  Vector q;            // node degree parameters, each in (0, 1)
  std::vector<int> g;  // community labels, 1-based in {1..K}
  Matrix M;            // K x K symmetric community weight offsets

  // Optional regime bounds; when supplied, validation also requires
  // q_min <= q_i <= q_max and |M_ab| <= m_max.
  std::optional<double> q_min;
  std::optional<double> q_max;
  std::optional<double> m_max;
};

/// Shape/range checks for DcsbmParams; throws std::invalid_argument.
void validate_params(const DcsbmParams& params);

/// C = 1 + M / sqrt(n).
Matrix community_matrix(const DcsbmParams& params);

// Expected adjacency with entries q_i q_j C_{g_i g_j} (equivalently
// D_q J C J' D_q). Throws std::domain_error naming the first pair whose
// edge probability falls outside [0, 1]; probabilities are never clamped.
Matrix expected_adjacency(const DcsbmParams& params);

// One symmetric 0/1 adjacency sample. Bernoulli draws are consumed in
// row-major order over pairs i <= j (diagonal included) and mirrored below
// the diagonal, so a fixed (seed, stream) reproduces the same matrix.
Matrix sample_adjacency(const DcsbmParams& params, RngStream& rng);

/// Sampling hook taking explicit edge probabilities instead of params.
Matrix sample_from_probabilities(const Matrix& probabilities, RngStream& rng);

// Three-community benchmark presets. Community sizes are
// floor(0.3 n) / floor(0.3 n) / remainder; M has 10 on the diagonal and -4
// off it; q_i are i.i.d. 0.4 or 0.9 with equal probability (fig1) or drawn
// from community-conditional mixtures (fig2). The rng supplies the q draws.
DcsbmParams preset_fig1(int n, RngStream& rng);
DcsbmParams preset_fig2(int n, RngStream& rng);

// Fig1-style family for cross-n sweeps. The community weights are scaled to
// 3 / -1.2 so edge probabilities stay in [0, 1] down to n ~ 170; the literal
// 10 / -4 weights are only valid for n >= ~1820.
DcsbmParams preset_decay(int n, RngStream& rng);

}  // namespace netflippa
