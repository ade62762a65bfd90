#pragma once

#include "netflippa/types.hpp"

namespace netflippa {

// Relative residual the dense symmetric eigensolver is held to:
// ||M v - lambda v||_2 <= kTolEig * max(1, ||M||_op) for every eigenpair.
constexpr double kTolEig = 1e-9;

struct EighResult {
  Vector eigenvalues;   // length k, decreasing algebraic order
  Matrix eigenvectors;  // n x k, orthonormal columns paired with eigenvalues
};

/// All eigenvalues of a symmetric matrix, sorted in decreasing algebraic
/// order. Throws std::invalid_argument on non-finite or asymmetric input.
Vector eigvals_sym(const Matrix& m);

// Top-k eigenpairs by decreasing algebraic eigenvalue. Each eigenvector is
// sign-fixed so that its first nonzero coordinate (scanning by index) is
// positive. Eigenvalues come from eigvals_sym, so the two surfaces agree
// exactly for k = n.
EighResult eigh_topk(const Matrix& m, int k);

/// Spectral norm max(|lambda_max|, |lambda_min|) of a symmetric matrix.
double op_norm(const Matrix& m);

/// Maximum Euclidean row norm; defined for any rectangular matrix.
double two_inf_norm(const Matrix& m);

}  // namespace netflippa
