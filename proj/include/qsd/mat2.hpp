#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>

namespace qsd {

using Complex = std::complex<double>;

/// 2x2 complex matrix, row-major storage.
struct Mat2 {
  std::array<Complex, 4> e{};

  Mat2() = default;
  Mat2(Complex m00, Complex m01, Complex m10, Complex m11) : e{m00, m01, m10, m11} {}

  static Mat2 zero() { return {}; }
  static Mat2 identity() { return {Complex{1, 0}, {}, {}, Complex{1, 0}}; }
  static Mat2 diag(Complex a, Complex d) { return {a, {}, {}, d}; }

  Complex& at(int r, int c) { return e[r * 2 + c]; }
  const Complex& at(int r, int c) const { return e[r * 2 + c]; }

  Mat2 adjoint() const {
    return {std::conj(e[0]), std::conj(e[2]), std::conj(e[1]), std::conj(e[3])};
  }
  Complex trace() const { return e[0] + e[3]; }
  Complex det() const { return e[0] * e[3] - e[1] * e[2]; }

  bool finite() const {
    for (const auto& z : e) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& z : e) m = std::max(m, std::abs(z));
    return m;
  }
};

inline Mat2 operator+(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 4; ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

inline Mat2 operator-(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 4; ++i) r.e[i] = a.e[i] - b.e[i];
  return r;
}

inline Mat2 operator*(const Mat2& a, const Mat2& b) {
  Mat2 r;
  r.e[0] = a.e[0] * b.e[0] + a.e[1] * b.e[2];
  r.e[1] = a.e[0] * b.e[1] + a.e[1] * b.e[3];
  r.e[2] = a.e[2] * b.e[0] + a.e[3] * b.e[2];
  r.e[3] = a.e[2] * b.e[1] + a.e[3] * b.e[3];
  return r;
}

inline Mat2 operator*(Complex s, const Mat2& a) {
  Mat2 r;
  for (int i = 0; i < 4; ++i) r.e[i] = s * a.e[i];
  return r;
}

inline Mat2 operator*(double s, const Mat2& a) { return Complex{s, 0} * a; }

inline Mat2 pauli_x() { return {{}, Complex{1, 0}, Complex{1, 0}, {}}; }
inline Mat2 pauli_y() { return {{}, Complex{0, -1}, Complex{0, 1}, {}}; }
inline Mat2 pauli_z() { return {Complex{1, 0}, {}, {}, Complex{-1, 0}}; }

/// max entrywise |M - M†|
double hermiticity_defect(const Mat2& m);

/// Closed-form eigenvalues of a Hermitian 2x2 matrix, ascending order.
std::array<double, 2> hermitian_eigenvalues(const Mat2& h);

/// Apply a scalar function to a Hermitian matrix through its spectral
/// decomposition (closed form, no iteration).
Mat2 hermitian_apply(const Mat2& h, const std::function<double(double)>& f);

/// Sum of |eigenvalue| for a Hermitian matrix (trace norm).
double trace_norm_hermitian(const Mat2& h);

}  // namespace qsd
