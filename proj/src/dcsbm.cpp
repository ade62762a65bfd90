#include "netflippa/dcsbm.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace netflippa {

namespace {

DcsbmParams make_preset(int n, double m_diag, double m_offdiag) {
  if (n < 3)
    throw std::invalid_argument("preset: n must be at least K = 3, got " +
                                std::to_string(n));
  DcsbmParams params;
  params.n = n;
  params.K = 3;
  const int s1 = static_cast<int>(std::floor(0.3 * n));
  const int s2 = static_cast<int>(std::floor(0.3 * n));
  params.g.reserve(n);
  for (int i = 0; i < n; ++i) params.g.push_back(i < s1 ? 1 : (i < s1 + s2 ? 2 : 3));
  params.M = Matrix::Constant(3, 3, m_offdiag);
  params.M.diagonal().setConstant(m_diag);
  params.q.resize(n);
  params.q_min = 0.4;
  params.q_max = 0.9;
  params.m_max = m_diag;
  return params;
}

}  // namespace

void validate_params(const DcsbmParams& params) {
  if (params.n < 1) throw std::invalid_argument("DcsbmParams: n must be positive");
  if (params.K < 1) throw std::invalid_argument("DcsbmParams: K must be positive");
  if (params.q.size() != params.n)
    throw std::invalid_argument("DcsbmParams: q must have length n");
  for (int i = 0; i < params.n; ++i)
    if (!(params.q(i) > 0.0 && params.q(i) < 1.0))
      throw std::invalid_argument("DcsbmParams: q[" + std::to_string(i) +
                                  "] outside (0, 1)");
  if (params.q_min || params.q_max) {
    const double lo = params.q_min.value_or(0.0);
    const double hi = params.q_max.value_or(1.0);
    for (int i = 0; i < params.n; ++i)
      if (params.q(i) < lo || params.q(i) > hi)
        throw std::invalid_argument("DcsbmParams: q[" + std::to_string(i) +
                                    "] outside the supplied [q_min, q_max]");
  }
  if (static_cast<int>(params.g.size()) != params.n)
    throw std::invalid_argument("DcsbmParams: g must have length n");
  for (int i = 0; i < params.n; ++i)
    if (params.g[i] < 1 || params.g[i] > params.K)
      throw std::invalid_argument("DcsbmParams: label g[" + std::to_string(i) +
                                  "] outside {1.." + std::to_string(params.K) + "}");
  if (params.M.rows() != params.K || params.M.cols() != params.K)
    throw std::invalid_argument("DcsbmParams: M must be K x K");
  if (!params.M.allFinite())
    throw std::invalid_argument("DcsbmParams: M has a non-finite entry");
  for (int a = 0; a < params.K; ++a)
    for (int b = 0; b < a; ++b)
      if (params.M(a, b) != params.M(b, a))
        throw std::invalid_argument("DcsbmParams: M is not symmetric");
  if (params.m_max && params.M.cwiseAbs().maxCoeff() > *params.m_max)
    throw std::invalid_argument(
        "DcsbmParams: |M| exceeds the supplied bound M_max");
}

Matrix community_matrix(const DcsbmParams& params) {
  validate_params(params);
  return Matrix::Ones(params.K, params.K) +
         params.M / std::sqrt(static_cast<double>(params.n));
}

Matrix expected_adjacency(const DcsbmParams& params) {
  validate_params(params);
  const Matrix c = community_matrix(params);
  const int n = params.n;
  Matrix p(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double pij = params.q(i) * params.q(j) * c(params.g[i] - 1, params.g[j] - 1);
      if (!(pij >= 0.0 && pij <= 1.0))
        throw std::domain_error(
            "expected_adjacency: edge probability out of [0, 1] at (" +
            std::to_string(i) + ", " + std::to_string(j) +
            "): p=" + std::to_string(pij));
      p(i, j) = pij;
      p(j, i) = pij;
    }
  }
  return p;
}

Matrix sample_from_probabilities(const Matrix& probabilities, RngStream& rng) {
  const int n = static_cast<int>(probabilities.rows());
  if (probabilities.cols() != n)
    throw std::invalid_argument("sample_from_probabilities: matrix not square");
  Matrix a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double value = rng.next_bernoulli(probabilities(i, j)) ? 1.0 : 0.0;
      a(i, j) = value;
      a(j, i) = value;
    }
  }
  return a;
}

Matrix sample_adjacency(const DcsbmParams& params, RngStream& rng) {
  return sample_from_probabilities(expected_adjacency(params), rng);
}

DcsbmParams preset_fig1(int n, RngStream& rng) {
  DcsbmParams params = make_preset(n, 10.0, -4.0);
  for (int i = 0; i < n; ++i)
    params.q(i) = rng.next_uniform() < 0.5 ? 0.4 : 0.9;
  return params;
}

DcsbmParams preset_fig2(int n, RngStream& rng) {
  DcsbmParams params = make_preset(n, 10.0, -4.0);
  for (int i = 0; i < n; ++i) {
    switch (params.g[i]) {
      case 1: params.q(i) = 0.4; break;
      case 2: params.q(i) = rng.next_uniform() < 2.0 / 3.0 ? 0.4 : 0.9; break;
      default: params.q(i) = 0.9; break;
    }
  }
  return params;
}

DcsbmParams preset_decay(int n, RngStream& rng) {
  DcsbmParams params = make_preset(n, 3.0, -1.2);
  for (int i = 0; i < n; ++i)
    params.q(i) = rng.next_uniform() < 0.5 ? 0.4 : 0.9;
  return params;
}

}  // namespace netflippa
