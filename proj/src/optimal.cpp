#include "qsd/optimal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>

#include "qsd/nosignal.hpp"

namespace qsd {

namespace {

constexpr double kSingularTol = 1e-9;

double clip_nonneg(double x) { return std::max(x, 0.0); }

Mat2 inv_sqrt_psd(const Mat2& h) {
  return hermitian_apply(h, [](double x) { return 1.0 / std::sqrt(x); });
}

Mat2 orbit_sum(const Mat2& seed, int n) {
  Mat2 g = Mat2::zero();
  for (int i = 0; i < n; ++i) {
    Mat2 u = z_rotation(2.0 * std::numbers::pi * i / n);
    g = g + u * seed * u.adjoint();
  }
  return g;
}

Mat2 bloch_seed(double bx, double by, double bz) {
  return 0.5 * (Mat2::identity() + bx * pauli_x() + by * pauli_y() + bz * pauli_z());
}

double povm_score(const Povm& povm, const SymmetricEnsemble& e, const FigureOfMerit& f) {
  return score(channel_from_measurement(povm, e), f, e.priors()).total;
}

// Score of the covariant POVM seeded by Bloch vector b, or -inf when the
// orbit sum is singular (|b_z| = 1).
double covariant_seed_score(double bx, double by, double bz, const SymmetricEnsemble& e,
                            const FigureOfMerit& f) {
  int n = e.state_count();
  Mat2 g = orbit_sum(bloch_seed(bx, by, bz), n);
  if (hermitian_eigenvalues(g)[0] < kSingularTol) {
    return -std::numeric_limits<double>::infinity();
  }
  Mat2 inv = inv_sqrt_psd(g);
  Mat2 effect = inv * bloch_seed(bx, by, bz) * inv;
  return povm_score(CovariantPovmSeed{PovmEffect(effect), n}.expand(), e, f);
}

}  // namespace

Mat2 z_rotation(double angle) {
  Complex lo = std::exp(Complex{0, -0.5 * angle});
  return Mat2::diag(lo, std::conj(lo));
}

double CovariantPovmSeed::orbit_defect() const {
  Mat2 g = orbit_sum(seed_effect.matrix(), group_order);
  return (g - Mat2::identity()).max_abs();
}

Povm CovariantPovmSeed::expand() const {
  std::vector<PovmEffect> effects;
  effects.reserve(static_cast<size_t>(group_order));
  for (int i = 0; i < group_order; ++i) {
    Mat2 u = z_rotation(2.0 * std::numbers::pi * i / group_order);
    effects.emplace_back(u * seed_effect.matrix() * u.adjoint());
  }
  return Povm(std::move(effects));
}

Povm symmetric_povm(const SymmetricEnsemble& e) {
  int n = e.state_count();
  std::vector<PovmEffect> effects;
  effects.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    double phi = e.azimuth(i);
    Mat2 m = (1.0 / n) *
             (Mat2::identity() + std::cos(phi) * pauli_x() + std::sin(phi) * pauli_y());
    effects.emplace_back(m);
  }
  return Povm(std::move(effects));
}

double verify_optimal_channel(const SymmetricEnsemble& e) {
  ChannelMatrix measured = channel_from_measurement(symmetric_povm(e), e);
  ChannelMatrix q = q_channel(e);
  double worst = 0.0;
  for (int i = 0; i < measured.size(); ++i) {
    for (int j = 0; j < measured.size(); ++j) {
      worst = std::max(worst, std::abs(measured(i, j) - q(i, j)));
    }
  }
  return worst;
}

Povm covariant_povm_from_seed(const Mat2& seed, int group_order) {
  Mat2 g = orbit_sum(seed, group_order);
  if (hermitian_eigenvalues(g)[0] < kSingularTol) {
    throw std::domain_error("covariant_povm_from_seed: singular orbit sum");
  }
  Mat2 inv = inv_sqrt_psd(g);
  return CovariantPovmSeed{PovmEffect(inv * seed * inv), group_order}.expand();
}

Povm random_covariant_povm(int n, std::uint64_t rng_seed) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("random_covariant_povm: N must be even and >= 2");
  }
  std::mt19937_64 rng(rng_seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int attempt = 0; attempt < 10; ++attempt) {
    Mat2 x;
    for (auto& z : x.e) z = Complex{gauss(rng), gauss(rng)};
    Mat2 seed = x * x.adjoint();
    try {
      return covariant_povm_from_seed(seed, n);
    } catch (const std::domain_error&) {
      // seed concentrated on a pole; redraw
    }
  }
  throw std::runtime_error("random_covariant_povm: no usable seed after 10 draws");
}

OptimizationResult optimize_covariant(const SymmetricEnsemble& e, const FigureOfMerit& f) {
  int n = e.state_count();
  if (f.size() != n) throw std::invalid_argument("optimize_covariant: dimension mismatch");

  double best = -std::numeric_limits<double>::infinity();
  double bx = 0.0, by = 0.0, bz = 0.0;
  const int radial = 8, polar = 12, azimuthal = 24;
  for (int iu = 0; iu <= radial; ++iu) {
    double u = static_cast<double>(iu) / radial;
    for (int it = 0; it <= polar; ++it) {
      double t = std::numbers::pi * it / polar;
      for (int ip = 0; ip < azimuthal; ++ip) {
        double phi = 2.0 * std::numbers::pi * ip / azimuthal;
        double cx = u * std::sin(t) * std::cos(phi);
        double cy = u * std::sin(t) * std::sin(phi);
        double cz = u * std::cos(t);
        double s = covariant_seed_score(cx, cy, cz, e, f);
        if (s > best) {
          best = s;
          bx = cx;
          by = cy;
          bz = cz;
        }
      }
    }
  }

  // pattern search refinement in the unit ball
  std::vector<double> trace{best};
  int iterations = 0;
  double step = 1.0 / radial;
  while (step > 1e-9 && iterations < 10000) {
    bool improved = false;
    for (int axis = 0; axis < 3 && !improved; ++axis) {
      for (double sign : {1.0, -1.0}) {
        double cx = bx + (axis == 0 ? sign * step : 0.0);
        double cy = by + (axis == 1 ? sign * step : 0.0);
        double cz = bz + (axis == 2 ? sign * step : 0.0);
        double norm = std::sqrt(cx * cx + cy * cy + cz * cz);
        if (norm > 1.0) {
          cx /= norm;
          cy /= norm;
          cz /= norm;
        }
        double s = covariant_seed_score(cx, cy, cz, e, f);
        if (s > best) {
          best = s;
          bx = cx;
          by = cy;
          bz = cz;
          trace.push_back(best);
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
    ++iterations;
  }

  Mat2 g = orbit_sum(bloch_seed(bx, by, bz), n);
  Mat2 inv = inv_sqrt_psd(g);
  Povm povm = CovariantPovmSeed{PovmEffect(inv * bloch_seed(bx, by, bz) * inv), n}.expand();
  return {std::move(povm), best, iterations, true, std::move(trace)};
}

namespace {

// One ascent run from a starting POVM; linear objective S = sum_j Tr(E_j R_j).
OptimizationResult ascend(std::vector<Mat2> effects, const std::vector<Mat2>& reward,
                          const SymmetricEnsemble& e, const FigureOfMerit& f,
                          const OptimizeOptions& options) {
  int n = static_cast<int>(effects.size());
  auto objective = [&](const std::vector<Mat2>& es) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += (es[static_cast<size_t>(j)] * reward[static_cast<size_t>(j)]).trace().real();
    return s;
  };

  // Ascent direction: reward gradient projected onto the tangent space of
  // the completeness constraint (sum of steps = 0). Stepping along the raw
  // gradient has suboptimal fixed points because the sandwich renormalizes
  // all effects by the same factor.
  Mat2 mean_reward = Mat2::zero();
  for (const auto& r : reward) mean_reward = mean_reward + r;
  mean_reward = (1.0 / n) * mean_reward;
  std::vector<Mat2> direction(reward.size());
  for (size_t j = 0; j < reward.size(); ++j) direction[j] = reward[j] - mean_reward;

  double direction_norm = 0.0;
  for (const auto& d : direction) {
    auto [lo, hi] = hermitian_eigenvalues(d);
    direction_norm = std::max({direction_norm, std::abs(lo), std::abs(hi)});
  }
  double base_step = direction_norm > 1e-15 ? 0.1 / direction_norm : 0.0;

  double current = objective(effects);
  std::vector<double> trace{current};
  bool converged = base_step == 0.0;  // constant objective: nothing to do
  int iter = 0;
  for (; iter < options.max_iterations && !converged; ++iter) {
    double step = base_step;
    bool accepted = false;
    for (int halving = 0; halving < 45; ++halving, step *= 0.5) {
      std::vector<Mat2> cand(effects.size());
      Mat2 total = Mat2::zero();
      for (size_t j = 0; j < effects.size(); ++j) {
        cand[j] = hermitian_apply(effects[j] + step * direction[j], clip_nonneg);
        total = total + cand[j];
      }
      if (hermitian_eigenvalues(total)[0] < 1e-12) continue;
      Mat2 inv = inv_sqrt_psd(total);
      for (auto& m : cand) m = inv * m * inv;
      double next = objective(cand);
      if (next >= current) {
        accepted = next > current;
        if (next - current < options.tolerance) converged = true;
        effects = std::move(cand);
        current = next;
        trace.push_back(current);
        break;
      }
    }
    if (!accepted) {
      converged = true;  // no uphill step at any scale
      break;
    }
  }

  std::vector<PovmEffect> out;
  out.reserve(effects.size());
  for (const auto& m : effects) out.emplace_back(m);
  double final_score = povm_score(Povm(out), e, f);
  return {Povm(std::move(out)), final_score, iter, converged, std::move(trace)};
}

}  // namespace

OptimizationResult optimize_general(const SymmetricEnsemble& e, const FigureOfMerit& f,
                                    const OptimizeOptions& options) {
  int n = e.state_count();
  if (f.size() != n) throw std::invalid_argument("optimize_general: dimension mismatch");

  // reward operators R_j = sum_i q_i f(i,j) rho_i
  std::vector<Mat2> reward(static_cast<size_t>(n), Mat2::zero());
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      reward[static_cast<size_t>(j)] =
          reward[static_cast<size_t>(j)] + (e.prior() * f(i, j)) * e.state(i).matrix();
    }
  }

  std::mt19937_64 rng(options.rng_seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto random_dense_povm = [&]() {
    std::vector<Mat2> raw(static_cast<size_t>(n));
    Mat2 total = Mat2::zero();
    for (auto& m : raw) {
      Mat2 x;
      for (auto& z : x.e) z = Complex{gauss(rng), gauss(rng)};
      m = x * x.adjoint();
      total = total + m;
    }
    Mat2 inv = inv_sqrt_psd(total);
    for (auto& m : raw) m = inv * m * inv;
    return raw;
  };

  std::optional<OptimizationResult> best;
  for (int restart = 0; restart < std::max(options.restarts, 1); ++restart) {
    std::vector<Mat2> start;
    if (restart % 2 == 0) {
      Povm cov = random_covariant_povm(n, rng());
      for (const auto& eff : cov.effects()) start.push_back(eff.matrix());
    } else {
      start = random_dense_povm();
    }
    OptimizationResult run = ascend(std::move(start), reward, e, f, options);
    if (!best || run.score > best->score) best.emplace(std::move(run));
  }
  return std::move(*best);
}

}  // namespace qsd
