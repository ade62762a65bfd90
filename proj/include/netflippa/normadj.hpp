#pragma once

#include "netflippa/types.hpp"

namespace netflippa {

struct DegreeData {
  Vector d;            // row sums of A, diagonal counted once
  double two_m = 0.0;  // sum of d
  Vector d_neg_alpha;  // d_i^(-alpha) under the 0^p = 0 convention
};

struct NormalizedAdjacency {
  double alpha = 0.0;
  Matrix matrix;
  DegreeData degrees;
};

// Degree data for a symmetric 0/1 adjacency matrix. Entries of d_neg_alpha
// are zero wherever d_i = 0; with strict_zero_power the 0^p = 0 convention
// is applied for every p including p = 0, otherwise 0^0 = 1. The choice is
// observable only in d_neg_alpha itself: rows of isolated nodes vanish in
// A - dd'/(2m) regardless.
DegreeData degree_data(const Matrix& a, double alpha,
                       bool strict_zero_power = true);

// The normalized adjacency
//   L_alpha = (2m)^alpha (1/sqrt(n)) D^-alpha (A - dd'/(2m)) D^-alpha.
// An edgeless graph yields the zero matrix. The upper triangle is computed
// once and mirrored, so the result is symmetric to the bit.
NormalizedAdjacency build_normalized_adjacency(const Matrix& a, double alpha,
                                               bool strict_zero_power = true);

}  // namespace netflippa
