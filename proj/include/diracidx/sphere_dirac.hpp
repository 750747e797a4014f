#pragma once

#include <diracidx/graded_operator.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace diracidx {

// One total-angular-momentum sector of the twisted sphere operator. l is
// half-integral in general, stored doubled. A sector present on only one side
// contributes pure kernel (source) or pure cokernel (target).
struct SphereSector {
  int twice_l = 0;
  int dim = 0;           // 2l + 1
  double coefficient = 0.0;  // ladder coefficient, 0 for unmatched sectors
  bool in_source = false;
  bool in_target = false;
};

struct SphereDiracModel {
  int q = 0;
  double l_max = 0.0;
  std::vector<SphereSector> sectors;
  GradedOperator op;
};

// Twisted Dirac operator on the 2-sphere in the spin-weighted ladder basis.
// Source sections carry spin weight s = (q-1)/2, targets s+1; each common
// sector acts by the scalar sqrt((l-s)(l+s+1)) = sqrt((2l+1)^2 - q^2)/2 on
// its (2l+1)-dimensional multiplicity space. Sectors present on one side only
// are the lowest ones, and they carry the entire kernel (q > 0) or cokernel
// (q < 0); all matched sectors have strictly positive coefficient, so the
// index equals q at every truncation above the threshold.
inline SphereDiracModel build_sphere_dirac(int q, double l_max) {
  if (l_max < std::abs(q) / 2.0 + 4.0)
    throw std::invalid_argument(
        "build_sphere_dirac: l_max below |q|/2 + 4, blocks incomplete");

  const int twice_s = q - 1;
  const int src_min = std::abs(twice_s);
  const int dst_min = std::abs(twice_s + 2);
  const int top = int(std::floor(2.0 * l_max));

  SphereDiracModel model;
  model.q = q;
  model.l_max = l_max;

  int plus_dim = 0, minus_dim = 0;
  const int lo = std::min(src_min, dst_min);
  for (int L = lo; L <= top; L += 2) {
    SphereSector sec;
    sec.twice_l = L;
    sec.dim = L + 1;
    sec.in_source = L >= src_min;
    sec.in_target = L >= dst_min;
    if (sec.in_source && sec.in_target)
      sec.coefficient = std::sqrt(double(L + 1) * double(L + 1) - double(q) * q) / 2.0;
    if (sec.in_source) plus_dim += sec.dim;
    if (sec.in_target) minus_dim += sec.dim;
    model.sectors.push_back(sec);
  }

  CMatrix m = CMatrix::Zero(minus_dim, plus_dim);
  int row = 0, col = 0;
  for (const SphereSector& sec : model.sectors) {
    if (sec.in_source && sec.in_target)
      m.block(row, col, sec.dim, sec.dim) =
          sec.coefficient * CMatrix::Identity(sec.dim, sec.dim);
    if (sec.in_source) col += sec.dim;
    if (sec.in_target) row += sec.dim;
  }
  model.op = GradedOperator(std::move(m));
  return model;
}

inline GradedOperator dirac_s2(int q, double l_max) {
  return build_sphere_dirac(q, l_max).op;
}

}  // namespace diracidx
