#pragma once

#include <optional>

#include "qsd/channel.hpp"

namespace qsd {

/// Guessing-probability bound derived from decomposition indistinguishability.
struct BoundReport {
  double mixing = 0.0;      // p, per-state shadow weight
  double sum_mixing = 0.0;  // N p
  double bound = 0.0;       // 1 / (N p) = (1 + r sin theta) / (2M)
  std::optional<CosineFit> saturated_by;  // fit of the extremal channel Q
};

/// Endpoints of the admissible (alpha, beta) ranges for the cosine law.
/// alpha and beta are linked by row normalization: alpha M + 2 M beta = 1.
struct AdmissibleRegion {
  double alpha_min = 0.0;
  double alpha_max = 0.0;
  double beta_min = 0.0;
  double beta_max = 0.0;

  bool contains(double alpha, double beta, double slack) const {
    return alpha >= alpha_min - slack && alpha <= alpha_max + slack &&
           beta >= beta_min - slack && beta <= beta_max + slack;
  }
};

enum class Admissibility { admissible, violates_bound, not_cosine_form };

const char* to_string(Admissibility a);

/// Fold a negative-alpha fit onto the equivalent positive-alpha one: a
/// discriminator with coefficients (A, B) swapped is the same device with
/// outputs relabeled by half a cycle.
CosineFit canonical_orientation(const CosineFit& fit);

BoundReport guessing_bound(const SymmetricEnsemble& e);

/// Extremal admissible channel Q(|i-j|) = (r sin theta / M) cos^2(|i-j| pi / (2M))
/// + (1 - r sin theta) / (2M); its diagonal equals the guessing bound.
ChannelMatrix q_channel(const SymmetricEnsemble& e);

AdmissibleRegion admissible_region(const SymmetricEnsemble& e);

/// Cosine fit first (residual vs fit_tol), then range check with slack.
/// A channel narrower than Q is a signaling witness.
Admissibility check_channel_admissible(const ChannelMatrix& c, const SymmetricEnsemble& e,
                                       double fit_tol = 1e-10, double slack = 1e-12);

}  // namespace qsd
