#include "netflippa/spectra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

extern "C" {
void dsyevd_(const char* jobz, const char* uplo, const int* n, double* a,
             const int* lda, double* w, double* work, const int* lwork,
             int* iwork, const int* liwork, int* info);
void openblas_set_num_threads(int);
}

namespace netflippa {

namespace {

// BLAS is pinned to one thread; parallelism happens at the trial/replicate
// level where it scales better for the BLAS2-bound tridiagonalization.
void pin_blas_threads() {
  static const bool done = [] {
    openblas_set_num_threads(1);
    return true;
  }();
  (void)done;
}

void check_sym_finite(const Matrix& m, const char* who) {
  if (m.rows() != m.cols())
    throw std::invalid_argument(std::string(who) + ": matrix is not square");
  if (!m.allFinite())
    throw std::invalid_argument(std::string(who) + ": non-finite entry");
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < j; ++i)
      if (m(i, j) != m(j, i))
        throw std::invalid_argument(std::string(who) +
                                    ": matrix is not symmetric");
}

// dsyevd returns eigenvalues ascending; vectors (when requested) overwrite
// the input copy column by column in the same order.
void dsyevd_inplace(Matrix& a, Vector& w, bool want_vectors) {
  pin_blas_threads();
  const int n = static_cast<int>(a.rows());
  w.resize(n);
  if (n == 0) return;

  const char jobz = want_vectors ? 'V' : 'N';
  const char uplo = 'L';
  int info = 0;
  int lwork = -1, liwork = -1;
  double work_query = 0;
  int iwork_query = 0;
  dsyevd_(&jobz, &uplo, &n, a.data(), &n, w.data(), &work_query, &lwork,
          &iwork_query, &liwork, &info);
  if (info != 0)
    throw std::runtime_error("dsyevd workspace query failed, info=" +
                             std::to_string(info));
  lwork = static_cast<int>(work_query);
  liwork = iwork_query;
  std::vector<double> work(static_cast<size_t>(lwork));
  std::vector<int> iwork(static_cast<size_t>(liwork));
  dsyevd_(&jobz, &uplo, &n, a.data(), &n, w.data(), work.data(), &lwork,
          iwork.data(), &liwork, &info);
  if (info != 0)
    throw std::runtime_error("dsyevd failed to converge, info=" +
                             std::to_string(info));
}

void fix_column_signs(Matrix& vectors) {
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    auto col = vectors.col(j);
    const double scale = col.cwiseAbs().maxCoeff();
    if (scale == 0.0) continue;
    const double tol = 1e-12 * scale;
    for (Eigen::Index i = 0; i < col.size(); ++i) {
      if (std::abs(col(i)) > tol) {
        if (col(i) < 0.0) col = -col;
        break;
      }
    }
  }
}

}  // namespace

Vector eigvals_sym(const Matrix& m) {
  check_sym_finite(m, "eigvals_sym");
  Matrix a = m;
  Vector w;
  dsyevd_inplace(a, w, /*want_vectors=*/false);
  return w.reverse();
}

EighResult eigh_topk(const Matrix& m, int k) {
  check_sym_finite(m, "eigh_topk");
  const int n = static_cast<int>(m.rows());
  if (k < 1 || k > n)
    throw std::invalid_argument("eigh_topk: k must be in [1, n], got " +
                                std::to_string(k));

  const Vector values = eigvals_sym(m);

  Matrix a = m;
  Vector w;
  dsyevd_inplace(a, w, /*want_vectors=*/true);

  EighResult result;
  result.eigenvalues = values.head(k);
  result.eigenvectors.resize(n, k);
  for (int j = 0; j < k; ++j)
    result.eigenvectors.col(j) = a.col(n - 1 - j);  // ascending -> descending
  fix_column_signs(result.eigenvectors);
  return result;
}

double op_norm(const Matrix& m) {
  const Vector values = eigvals_sym(m);
  if (values.size() == 0) return 0.0;
  return std::max(std::abs(values(0)), std::abs(values(values.size() - 1)));
}

double two_inf_norm(const Matrix& m) {
  if (!m.allFinite())
    throw std::invalid_argument("two_inf_norm: non-finite entry");
  if (m.rows() == 0) return 0.0;
  return m.rowwise().norm().maxCoeff();
}

}  // namespace netflippa
