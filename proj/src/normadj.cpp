#include "netflippa/normadj.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace netflippa {

namespace {

void check_adjacency(const Matrix& a, const char* who) {
  if (a.rows() != a.cols())
    throw std::invalid_argument(std::string(who) + ": matrix is not square");
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i <= j; ++i) {
      const double v = a(i, j);
      if (v != 0.0 && v != 1.0)
        throw std::invalid_argument(std::string(who) +
                                    ": adjacency entries must be 0 or 1");
      if (a(j, i) != v)
        throw std::invalid_argument(std::string(who) +
                                    ": adjacency is not symmetric");
    }
  }
}

}  // namespace

DegreeData degree_data(const Matrix& a, double alpha, bool strict_zero_power) {
  check_adjacency(a, "degree_data");
  const int n = static_cast<int>(a.rows());
  DegreeData degrees;
  degrees.d = a.rowwise().sum();
  degrees.two_m = degrees.d.sum();
  degrees.d_neg_alpha.resize(n);
  for (int i = 0; i < n; ++i) {
    const double di = degrees.d(i);
    if (di > 0.0) {
      degrees.d_neg_alpha(i) = std::pow(di, -alpha);
    } else {
      // 0^p = 0 convention; only the p = 0 case is up for debate.
      degrees.d_neg_alpha(i) = (alpha == 0.0 && !strict_zero_power) ? 1.0 : 0.0;
    }
  }
  return degrees;
}

NormalizedAdjacency build_normalized_adjacency(const Matrix& a, double alpha,
                                               bool strict_zero_power) {
  const int n = static_cast<int>(a.rows());
  NormalizedAdjacency result;
  result.alpha = alpha;
  result.degrees = degree_data(a, alpha, strict_zero_power);

  const double two_m = result.degrees.two_m;
  if (two_m == 0.0) {
    // Every term carries a zero factor under the 0^p = 0 convention, and
    // 1/(2m) is undefined; the whole matrix is zero.
    result.matrix = Matrix::Zero(n, n);
    return result;
  }

  const Vector& d = result.degrees.d;
  const Vector& dn = result.degrees.d_neg_alpha;
  const double scale =
      std::pow(two_m, alpha) / std::sqrt(static_cast<double>(n));

  result.matrix.resize(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i <= j; ++i) {
      const double centered = a(i, j) - d(i) * d(j) / two_m;
      const double value = scale * (dn(i) * centered * dn(j));
      result.matrix(i, j) = value;
      result.matrix(j, i) = value;
    }
  }
  return result;
}

}  // namespace netflippa
