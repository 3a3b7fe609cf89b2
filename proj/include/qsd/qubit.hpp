#pragma once

#include <vector>

#include "qsd/mat2.hpp"

namespace qsd {

// Floating-point slack; all identities in this library hold exactly in
// real arithmetic.
inline constexpr double kGeomTol = 1e-12;          // Bloch-norm overshoot
inline constexpr double kHermTol = 1e-12;          // entrywise |M - M†|
inline constexpr double kTraceTol = 1e-12;         // |Tr - 1|
inline constexpr double kEigTol = 1e-12;           // eigenvalue floor
inline constexpr double kCompletenessTol = 1e-10;  // |sum E_i - I|
inline constexpr double kProbSumTol = 1e-10;       // |sum p_j - 1|

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

/// 2x2 Hermitian, unit-trace, positive-semidefinite matrix. Validated on
/// construction.
class DensityOperator {
 public:
  explicit DensityOperator(const Mat2& m);
  const Mat2& matrix() const { return m_; }

 private:
  Mat2 m_;
};

/// A single POVM element: Hermitian and positive-semidefinite.
class PovmEffect {
 public:
  explicit PovmEffect(const Mat2& m);
  const Mat2& matrix() const { return m_; }

 private:
  Mat2 m_;
};

/// Finite collection of effects summing to identity.
class Povm {
 public:
  explicit Povm(std::vector<PovmEffect> effects);

  int size() const { return static_cast<int>(effects_.size()); }
  const PovmEffect& operator[](int i) const { return effects_[static_cast<size_t>(i)]; }
  const std::vector<PovmEffect>& effects() const { return effects_; }

 private:
  std::vector<PovmEffect> effects_;
};

/// rho = (1/2)(I + v . sigma). Rejects |v| > 1 + kGeomTol.
DensityOperator bloch_to_density(const BlochVector& v);

/// Components are Tr(rho sigma_k); inverse of bloch_to_density.
BlochVector density_to_bloch(const DensityOperator& rho);

/// Born rule: p_j = Re Tr(E_j rho). Clamped to [0, 1].
std::vector<double> born_probabilities(const Povm& povm, const DensityOperator& rho);

/// Optimal two-state guessing probability 1/2 + (1/4) Tr|rho0 - rho1|.
double helstrom_guess_probability(const DensityOperator& rho0, const DensityOperator& rho1);

}  // namespace qsd
