#pragma once

#include <Eigen/Dense>

#include <complex>
#include <limits>

namespace diracidx {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline double max_abs(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return std::numeric_limits<double>::infinity();
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

inline bool exactly_equal(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

// Kronecker product; zero-sized factors yield zero-sized results.
inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline CMatrix matrix_direct_sum(const CMatrix& a, const CMatrix& b) {
  CMatrix out = CMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

// Singular values in descending order. Jacobi for small matrices; larger ones
// go through the Hermitian block embedding [[0, A*], [A, 0]], whose spectrum
// is {+-sigma_i} padded with zeros. The tridiagonal eigensolver behind it
// keeps absolute accuracy of order eps * sigma_max on the small end of the
// spectrum, where the divide-and-conquer SVD in Eigen 3.4.0 can misplace a
// singular value entirely under heavy degeneracy.
inline RVector singular_values(const CMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return RVector(0);
  const Eigen::Index k = std::min(a.rows(), a.cols());
  if (a.rows() <= 32 && a.cols() <= 32)
    return Eigen::JacobiSVD<CMatrix>(a).singularValues();
  const Eigen::Index total = a.rows() + a.cols();
  CMatrix w = CMatrix::Zero(total, total);
  w.topRightCorner(a.cols(), a.rows()) = a.adjoint();
  w.bottomLeftCorner(a.rows(), a.cols()) = a;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(w, Eigen::EigenvaluesOnly);
  RVector sv(k);
  for (Eigen::Index i = 0; i < k; ++i)
    sv(i) = std::max(es.eigenvalues()(total - 1 - i), 0.0);
  return sv;
}

inline double smallest_singular_value(const CMatrix& a) {
  RVector sv = singular_values(a);
  return sv.size() ? sv(sv.size() - 1) : 0.0;
}

}  // namespace diracidx
