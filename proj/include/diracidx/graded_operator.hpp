#pragma once

#include <diracidx/linalg.hpp>

#include <stdexcept>
#include <string>

namespace diracidx {

// An odd operator between graded spaces, stored as its + -> - block. The full
// odd matrix [[0, -(D+)*], [D+, 0]] is derivable on demand; every index
// computation only needs the block.
struct GradedOperator {
  CMatrix d_plus;  // minus_dim x plus_dim

  GradedOperator() = default;
  explicit GradedOperator(CMatrix m) : d_plus(std::move(m)) {}

  int plus_dim() const { return int(d_plus.cols()); }
  int minus_dim() const { return int(d_plus.rows()); }

  CMatrix full_odd() const {
    const int p = plus_dim(), m = minus_dim();
    CMatrix out = CMatrix::Zero(p + m, p + m);
    out.topRightCorner(p, m) = -d_plus.adjoint();
    out.bottomLeftCorner(m, p) = d_plus;
    return out;
  }
};

// Graded operator whose + part is the adjoint block (the +/- labels swap).
inline GradedOperator graded_adjoint(const GradedOperator& d) {
  return GradedOperator(d.d_plus.adjoint());
}

inline GradedOperator graded_direct_sum(const GradedOperator& a,
                                        const GradedOperator& b) {
  return GradedOperator(matrix_direct_sum(a.d_plus, b.d_plus));
}

class SpectralGapError : public std::runtime_error {
 public:
  explicit SpectralGapError(const std::string& what)
      : std::runtime_error(what) {}
};

struct IndexResult {
  int ker_dim = 0;
  int coker_dim = 0;
  long index = 0;
  int rank = 0;
  double sigma_max = 0.0;
  double largest_zero = 0.0;      // largest singular value classified as zero
  double smallest_nonzero = 0.0;  // smallest kept singular value (0 if none)
  double gap_ratio = 0.0;         // separation quality, infinity when clean
};

// Kernel/cokernel dimensions by thresholded singular values. A singular value
// counts as zero when sigma < rel_tol * sigma_max. The classification must be
// backed by a visible gap: the smallest kept value has to exceed the largest
// discarded one (or the threshold line, when nothing is discarded) by the
// min_gap_ratio factor, otherwise the result is indeterminate and an error is
// thrown rather than a guess returned.
inline IndexResult index_of(const GradedOperator& op, double rel_tol = 1e-8,
                            double min_gap_ratio = 1e3) {
  IndexResult res;
  const int p = op.plus_dim(), m = op.minus_dim();
  RVector sv = singular_values(op.d_plus);

  res.sigma_max = sv.size() ? sv(0) : 0.0;
  const double thresh = rel_tol * res.sigma_max;
  int rank = 0;
  res.largest_zero = 0.0;
  res.smallest_nonzero = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (res.sigma_max > 0.0 && sv(i) >= thresh) {
      ++rank;
      res.smallest_nonzero = sv(i);  // descending order: last kept is smallest
    } else {
      res.largest_zero = std::max(res.largest_zero, sv(i));
    }
  }

  res.rank = rank;
  res.ker_dim = p - rank;
  res.coker_dim = m - rank;
  res.index = long(res.ker_dim) - long(res.coker_dim);

  if (rank == 0) {
    res.gap_ratio = std::numeric_limits<double>::infinity();
    return res;
  }
  if (res.largest_zero > 0.0)
    res.gap_ratio = res.smallest_nonzero / res.largest_zero;
  else
    res.gap_ratio = res.smallest_nonzero / thresh;

  if (res.gap_ratio <= min_gap_ratio)
    throw SpectralGapError(
        "index_of: no clean spectral gap at the declared threshold (ratio " +
        std::to_string(res.gap_ratio) + ")");
  return res;
}

inline constexpr long kSharpDimensionCap = 10000;

// Graded product operator on tensor products:
//   (S1+ (x) S2+) (+) (S1- (x) S2-)  ->  (S1- (x) S2+) (+) (S1+ (x) S2-)
//   [[ D1 (x) 1, -1 (x) D2* ], [ 1 (x) D2, D1* (x) 1 ]]
inline GradedOperator sharp(const GradedOperator& d1, const GradedOperator& d2) {
  const long p1 = d1.plus_dim(), m1 = d1.minus_dim();
  const long p2 = d2.plus_dim(), m2 = d2.minus_dim();
  const long src = p1 * p2 + m1 * m2;
  const long dst = m1 * p2 + p1 * m2;
  if (src > kSharpDimensionCap || dst > kSharpDimensionCap)
    throw std::length_error("sharp: product dimension exceeds cap");

  CMatrix out = CMatrix::Zero(dst, src);
  const CMatrix ip1 = CMatrix::Identity(p1, p1);
  const CMatrix im1 = CMatrix::Identity(m1, m1);
  const CMatrix ip2 = CMatrix::Identity(p2, p2);
  const CMatrix im2 = CMatrix::Identity(m2, m2);

  out.block(0, 0, m1 * p2, p1 * p2) = kron(d1.d_plus, ip2);
  out.block(0, p1 * p2, m1 * p2, m1 * m2) = -kron(im1, CMatrix(d2.d_plus.adjoint()));
  out.block(m1 * p2, 0, p1 * m2, p1 * p2) = kron(ip1, d2.d_plus);
  out.block(m1 * p2, p1 * p2, p1 * m2, m1 * m2) =
      kron(CMatrix(d1.d_plus.adjoint()), im2);
  return GradedOperator(std::move(out));
}

}  // namespace diracidx
