#pragma once

#include <cstdint>
#include <vector>

#include "qsd/merit.hpp"

namespace qsd {

/// Seed effect of a covariant POVM: the orbit under z-rotations by 2 pi / N
/// sums to identity.
struct CovariantPovmSeed {
  PovmEffect seed_effect;
  int group_order;

  /// Max entrywise deviation of the orbit sum from identity.
  double orbit_defect() const;

  Povm expand() const;
};

struct OptimizeOptions {
  int max_iterations = 10000;
  double tolerance = 1e-10;
  int restarts = 8;
  std::uint64_t rng_seed = 1;
};

struct OptimizationResult {
  Povm povm;
  double score = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<double> score_trace;  // accepted scores, non-decreasing
};

/// Bloch-sphere rotation about z by `angle` as a 2x2 unitary.
Mat2 z_rotation(double angle);

/// The symmetric measurement E_i = (1/(2M))(I + d_i . sigma) with d_i the
/// unit vector at azimuth pi i / M; induces the extremal channel Q.
Povm symmetric_povm(const SymmetricEnsemble& e);

/// Max entrywise |channel(symmetric_povm) - q_channel|.
double verify_optimal_channel(const SymmetricEnsemble& e);

/// Normalize an arbitrary positive seed into a covariant POVM by the
/// orbit-sum sandwich. Throws if the orbit sum is singular.
Povm covariant_povm_from_seed(const Mat2& seed, int group_order);

/// Random covariant POVM of even length N. Retries on singular orbit sums.
Povm random_covariant_povm(int n, std::uint64_t rng_seed);

/// Maximize the average score over the covariant family (seed Bloch vector
/// in the unit ball) by dense grid plus local pattern refinement.
OptimizationResult optimize_covariant(const SymmetricEnsemble& e, const FigureOfMerit& f);

/// Projected gradient ascent over the full POVM set with multi-restart.
OptimizationResult optimize_general(const SymmetricEnsemble& e, const FigureOfMerit& f,
                                    const OptimizeOptions& options = {});

}  // namespace qsd
