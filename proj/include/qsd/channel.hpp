#pragma once

#include <utility>
#include <vector>

#include "qsd/ensemble.hpp"

namespace qsd {

class FigureOfMerit;

inline constexpr double kRowSumTol = 1e-10;
inline constexpr double kEntryTol = 1e-12;

/// Row-stochastic conditional-probability table; entry (i, j) is P(j|i)
/// with i the prepared index and j the guess.
class ChannelMatrix {
 public:
  /// Entries in row-major order; rows must be probability vectors within
  /// tolerance. Entries in [-kEntryTol, 1 + kEntryTol] are clamped to [0, 1].
  ChannelMatrix(int n, std::vector<double> entries);

  static ChannelMatrix uniform(int n);
  static ChannelMatrix identity(int n);

  int size() const { return n_; }
  double operator()(int i, int j) const {
    return p_[static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j)];
  }
  const std::vector<double>& entries() const { return p_; }

  /// Row i as a probability vector.
  std::vector<double> row(int i) const;

 private:
  int n_;
  std::vector<double> p_;
};

/// Read-off of the cosine law P(j|i) = alpha cos^2(|i-j| pi / (2M)) + beta;
/// residual is the max absolute deviation from that law.
struct CosineFit {
  double alpha = 0.0;
  double beta = 0.0;
  double residual = 0.0;
};

/// Born-rule channel: P(j|i) = Re Tr(E_j rho_i).
ChannelMatrix channel_from_measurement(const Povm& povm, const SymmetricEnsemble& e);

/// Average over all cyclic relabelings and the transpose; the result is
/// exchange-symmetric and cyclically covariant with the same score under
/// any symmetric figure of merit.
ChannelMatrix symmetrize(const ChannelMatrix& c);

/// (score of c, score of symmetrize(c)) under uniform priors; the two
/// agree for every symmetric figure of merit.
std::pair<double, double> check_score_invariance(const ChannelMatrix& c,
                                                 const FigureOfMerit& f,
                                                 const std::vector<double>& priors);

/// Max residual of the linear decomposition constraint applied to every
/// output and every cyclic frame. Zero for any measurement-induced channel.
double check_nosignaling_constraint(const ChannelMatrix& c, const SymmetricEnsemble& e);

CosineFit fit_cosine_form(const ChannelMatrix& c, const SymmetricEnsemble& e);

}  // namespace qsd
