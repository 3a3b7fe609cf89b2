#include "qsd/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qsd/merit.hpp"

namespace qsd {

ChannelMatrix::ChannelMatrix(int n, std::vector<double> entries)
    : n_(n), p_(std::move(entries)) {
  if (n < 1) throw std::invalid_argument("ChannelMatrix: size must be >= 1");
  if (p_.size() != static_cast<size_t>(n) * static_cast<size_t>(n)) {
    throw std::invalid_argument("ChannelMatrix: entry count mismatch");
  }
  for (double& v : p_) {
    if (!std::isfinite(v) || v < -kEntryTol || v > 1.0 + kEntryTol) {
      throw std::invalid_argument("ChannelMatrix: entry outside [0, 1]");
    }
    v = std::clamp(v, 0.0, 1.0);
  }
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += (*this)(i, j);
    if (std::abs(s - 1.0) > kRowSumTol) {
      throw std::invalid_argument("ChannelMatrix: row not stochastic");
    }
  }
}

ChannelMatrix ChannelMatrix::uniform(int n) {
  return ChannelMatrix(n, std::vector<double>(static_cast<size_t>(n) * n, 1.0 / n));
}

ChannelMatrix ChannelMatrix::identity(int n) {
  std::vector<double> p(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i) * n + i] = 1.0;
  return ChannelMatrix(n, std::move(p));
}

std::vector<double> ChannelMatrix::row(int i) const {
  std::vector<double> r(static_cast<size_t>(n_));
  for (int j = 0; j < n_; ++j) r[static_cast<size_t>(j)] = (*this)(i, j);
  return r;
}

ChannelMatrix channel_from_measurement(const Povm& povm, const SymmetricEnsemble& e) {
  int n = e.state_count();
  if (povm.size() != n) {
    throw std::invalid_argument("channel_from_measurement: POVM length != 2M");
  }
  std::vector<double> p(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    auto born = born_probabilities(povm, e.state(i));
    for (int j = 0; j < n; ++j) p[static_cast<size_t>(i) * n + j] = born[static_cast<size_t>(j)];
  }
  return ChannelMatrix(n, std::move(p));
}

ChannelMatrix symmetrize(const ChannelMatrix& c) {
  int n = c.size();
  std::vector<double> p(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int s = 0; s < n; ++s) {
        acc += c((i + s) % n, (j + s) % n);
        acc += c((j + s) % n, (i + s) % n);
      }
      p[static_cast<size_t>(i) * n + j] = acc / (2.0 * n);
    }
  }
  return ChannelMatrix(n, std::move(p));
}

std::pair<double, double> check_score_invariance(const ChannelMatrix& c,
                                                 const FigureOfMerit& f,
                                                 const std::vector<double>& priors) {
  for (double q : priors) {
    if (std::abs(q - 1.0 / c.size()) > 1e-12) {
      throw std::invalid_argument("check_score_invariance: priors must be uniform");
    }
  }
  double before = score(c, f, priors).total;
  double after = score(symmetrize(c), f, priors).total;
  return {before, after};
}

double check_nosignaling_constraint(const ChannelMatrix& c, const SymmetricEnsemble& e) {
  int n = e.state_count();
  int half = e.half_count;
  if (c.size() != n) {
    throw std::invalid_argument("check_nosignaling_constraint: dimension mismatch");
  }
  double worst = 0.0;
  for (int m = 1; m <= half - 1; ++m) {
    double p = mixing_coefficient(m, half);
    for (int shift = 0; shift < n; ++shift) {
      for (int k = 0; k < n; ++k) {
        double lhs = 0.5 * c((m + shift) % n, k) + 0.5 * c((n - m + shift) % n, k);
        double rhs = p * c(shift, k) + (1.0 - p) * c((half + shift) % n, k);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    }
  }
  return worst;
}

CosineFit fit_cosine_form(const ChannelMatrix& c, const SymmetricEnsemble& e) {
  int n = e.state_count();
  int half = e.half_count;
  if (c.size() != n) throw std::invalid_argument("fit_cosine_form: dimension mismatch");
  CosineFit fit;
  fit.beta = c(half, 0);
  fit.alpha = c(0, 0) - fit.beta;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double arg = std::abs(i - j) * std::numbers::pi / (2.0 * half);
      double cosv = std::cos(arg);
      double model = fit.alpha * cosv * cosv + fit.beta;
      fit.residual = std::max(fit.residual, std::abs(c(i, j) - model));
    }
  }
  return fit;
}

}  // namespace qsd
