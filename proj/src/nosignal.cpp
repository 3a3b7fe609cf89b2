#include "qsd/nosignal.hpp"

#include <cmath>
#include <numbers>

namespace qsd {

const char* to_string(Admissibility a) {
  switch (a) {
    case Admissibility::admissible: return "admissible";
    case Admissibility::violates_bound: return "violates_bound";
    case Admissibility::not_cosine_form: return "not_cosine_form";
  }
  return "unknown";
}

CosineFit canonical_orientation(const CosineFit& fit) {
  if (fit.alpha >= 0.0) return fit;
  return {-fit.alpha, fit.beta + fit.alpha, fit.residual};
}

BoundReport guessing_bound(const SymmetricEnsemble& e) {
  int n = e.state_count();
  double rs = e.radius * std::sin(e.polar_angle);
  BoundReport report;
  if (rs <= 0.0) {
    // degenerate family: all states coincide up to a z-axis component and
    // the bound collapses to uniform guessing
    report.mixing = 1.0;
    report.sum_mixing = n;
    report.bound = 1.0 / n;
  } else {
    report.mixing = make_shadow_decomposition(e).mixing;
    report.sum_mixing = n * report.mixing;
    report.bound = 1.0 / report.sum_mixing;
  }
  report.saturated_by = fit_cosine_form(q_channel(e), e);
  return report;
}

ChannelMatrix q_channel(const SymmetricEnsemble& e) {
  int n = e.state_count();
  int half = e.half_count;
  double rs = e.radius * std::sin(e.polar_angle);
  double alpha = rs / half;
  double beta = (1.0 - rs) / n;
  std::vector<double> p(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double c = std::cos(std::abs(i - j) * std::numbers::pi / (2.0 * half));
      p[static_cast<size_t>(i) * n + j] = alpha * c * c + beta;
    }
  }
  return ChannelMatrix(n, std::move(p));
}

AdmissibleRegion admissible_region(const SymmetricEnsemble& e) {
  double rs = e.radius * std::sin(e.polar_angle);
  int n = e.state_count();
  AdmissibleRegion r;
  r.alpha_min = 0.0;
  r.alpha_max = rs / e.half_count;
  r.beta_min = (1.0 - rs) / n;
  r.beta_max = 1.0 / n;
  return r;
}

Admissibility check_channel_admissible(const ChannelMatrix& c, const SymmetricEnsemble& e,
                                       double fit_tol, double slack) {
  CosineFit fit = canonical_orientation(fit_cosine_form(c, e));
  AdmissibleRegion region = admissible_region(e);
  // A read-off alpha above alpha_max means the channel is narrower than Q;
  // that is the signaling witness and outranks fit quality.
  if (fit.alpha > region.alpha_max + slack) return Admissibility::violates_bound;
  if (fit.residual > fit_tol) return Admissibility::not_cosine_form;
  if (!region.contains(fit.alpha, fit.beta, slack)) return Admissibility::violates_bound;
  return Admissibility::admissible;
}

}  // namespace qsd
