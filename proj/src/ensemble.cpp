#include "qsd/ensemble.hpp"

#include <numbers>
#include <stdexcept>

#include "qsd/channel.hpp"

namespace qsd {

double SymmetricEnsemble::azimuth(int i) const {
  return std::numbers::pi * static_cast<double>(i) / half_count;
}

BlochVector SymmetricEnsemble::bloch(int i) const {
  double phi = azimuth(i);
  double s = std::sin(polar_angle);
  return {radius * s * std::cos(phi), radius * s * std::sin(phi),
          radius * std::cos(polar_angle)};
}

DensityOperator SymmetricEnsemble::state(int i) const {
  return bloch_to_density(bloch(i));
}

SymmetricEnsemble make_symmetric_ensemble(int half_count, double radius, double polar_angle) {
  if (half_count < 1) throw std::invalid_argument("ensemble: M must be >= 1");
  if (radius < 0.0 || radius > 1.0) throw std::invalid_argument("ensemble: r must be in [0, 1]");
  if (polar_angle < 0.0 || polar_angle > std::numbers::pi) {
    throw std::invalid_argument("ensemble: theta must be in [0, pi]");
  }
  return {half_count, radius, polar_angle};
}

double mixing_coefficient(int m, int half_count) {
  if (m < 1 || m > half_count - 1) {
    throw std::invalid_argument("mixing_coefficient: m must be in [1, M-1]");
  }
  double c = std::cos(std::numbers::pi * m / (2.0 * half_count));
  return c * c;
}

double verify_decomposition_identity(const SymmetricEnsemble& e, int m) {
  double p = mixing_coefficient(m, e.half_count);
  int n = e.state_count();
  Mat2 lhs = 0.5 * e.state(m).matrix() + 0.5 * e.state((n - m) % n).matrix();
  Mat2 rhs = p * e.state(0).matrix() + (1.0 - p) * e.state(e.half_count).matrix();
  return (lhs - rhs).max_abs();
}

ShadowDecomposition make_shadow_decomposition(const SymmetricEnsemble& e) {
  double rs = e.radius * std::sin(e.polar_angle);
  if (rs <= 0.0) {
    throw std::invalid_argument("shadow decomposition: degenerate ensemble (r sin theta = 0)");
  }
  double p = 1.0 / (1.0 + rs);
  std::vector<DensityOperator> shadows;
  shadows.reserve(static_cast<size_t>(e.state_count()));
  for (int i = 0; i < e.state_count(); ++i) {
    double phi = e.azimuth(i);
    // antipodal equatorial pure state; the only Bloch vector closing the
    // mixture to a common state at this p
    shadows.push_back(bloch_to_density({-std::cos(phi), -std::sin(phi), 0.0}));
  }
  DensityOperator common =
      bloch_to_density({0.0, 0.0, p * e.radius * std::cos(e.polar_angle)});
  return {p, std::move(shadows), common};
}

double guessing_probability(const ChannelMatrix& channel, const std::vector<double>& priors) {
  if (static_cast<int>(priors.size()) != channel.size()) {
    throw std::invalid_argument("guessing_probability: dimension mismatch");
  }
  double g = 0.0;
  for (int i = 0; i < channel.size(); ++i) g += priors[static_cast<size_t>(i)] * channel(i, i);
  return g;
}

}  // namespace qsd
