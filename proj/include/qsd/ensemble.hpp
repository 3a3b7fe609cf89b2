#pragma once

#include <vector>

#include "qsd/qubit.hpp"

namespace qsd {

class ChannelMatrix;

/// 2M qubit states with uniform priors, Bloch vectors at common radius and
/// polar angle, azimuths pi*i/M. States are derived on demand, never stored.
struct SymmetricEnsemble {
  int half_count = 1;        // M
  double radius = 0.0;       // r in [0, 1]
  double polar_angle = 0.0;  // theta in [0, pi]

  int state_count() const { return 2 * half_count; }
  double prior() const { return 1.0 / state_count(); }
  double azimuth(int i) const;
  BlochVector bloch(int i) const;
  DensityOperator state(int i) const;
  std::vector<double> priors() const {
    return std::vector<double>(static_cast<size_t>(state_count()), prior());
  }
};

SymmetricEnsemble make_symmetric_ensemble(int half_count, double radius, double polar_angle);

/// Weight p with (1/2) rho_m + (1/2) rho_{2M-m} = p rho_0 + (1-p) rho_M;
/// equals cos^2(pi m / (2M)). Requires 1 <= m <= M-1.
double mixing_coefficient(int m, int half_count);

/// Max entrywise residual of the decomposition identity above.
double verify_decomposition_identity(const SymmetricEnsemble& e, int m);

/// Completion of every ensemble member to one common density operator:
/// p rho_i + (1-p) sigma_i = L for all i.
struct ShadowDecomposition {
  double mixing;                          // p = 1/(1 + r sin theta)
  std::vector<DensityOperator> shadows;   // sigma_i
  DensityOperator common_state;           // L
};

/// Requires r sin(theta) > 0; the degenerate family needs no shadows.
ShadowDecomposition make_shadow_decomposition(const SymmetricEnsemble& e);

/// Diagonal contraction sum_i q_i P(i|i).
double guessing_probability(const ChannelMatrix& channel, const std::vector<double>& priors);

}  // namespace qsd
