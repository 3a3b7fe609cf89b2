#include "qsd/mat2.hpp"

#include <algorithm>

namespace qsd {

double hermiticity_defect(const Mat2& m) {
  Mat2 d = m - m.adjoint();
  return d.max_abs();
}

std::array<double, 2> hermitian_eigenvalues(const Mat2& h) {
  // H = [[a, b], [b*, d]] with a, d real: lambda = mean +- sqrt(disc)
  double a = h.e[0].real();
  double d = h.e[3].real();
  double mean = 0.5 * (a + d);
  double half_gap = 0.5 * (a - d);
  double root = std::sqrt(half_gap * half_gap + std::norm(h.e[1]));
  return {mean - root, mean + root};
}

Mat2 hermitian_apply(const Mat2& h, const std::function<double(double)>& f) {
  auto [lo, hi] = hermitian_eigenvalues(h);
  if (hi - lo < 1e-300) {
    // degenerate spectrum: H = lo * I on its support
    return Mat2::diag(Complex{f(lo), 0}, Complex{f(lo), 0});
  }
  // spectral projectors: P_hi = (H - lo I)/(hi - lo), P_lo = I - P_hi
  Mat2 p_hi = (1.0 / (hi - lo)) * (h - lo * Mat2::identity());
  Mat2 p_lo = Mat2::identity() - p_hi;
  return f(hi) * p_hi + f(lo) * p_lo;
}

double trace_norm_hermitian(const Mat2& h) {
  auto [lo, hi] = hermitian_eigenvalues(h);
  return std::abs(lo) + std::abs(hi);
}

}  // namespace qsd
