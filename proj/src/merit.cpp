#include "qsd/merit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qsd {

FigureOfMerit::FigureOfMerit(int n, std::vector<double> scores)
    : n_(n), f_(std::move(scores)) {
  if (n < 1) throw std::invalid_argument("FigureOfMerit: size must be >= 1");
  if (f_.size() != static_cast<size_t>(n) * static_cast<size_t>(n)) {
    throw std::invalid_argument("FigureOfMerit: entry count mismatch");
  }
  for (double v : f_) {
    if (!std::isfinite(v)) throw std::invalid_argument("FigureOfMerit: non-finite entry");
  }
}

std::vector<double> FigureOfMerit::profile() const {
  std::vector<double> g(static_cast<size_t>(n_));
  for (int d = 0; d < n_; ++d) g[static_cast<size_t>(d)] = (*this)(0, d);
  return g;
}

FigureOfMerit make_fom(const std::vector<double>& profile) {
  int n = static_cast<int>(profile.size());
  if (n < 1) throw std::invalid_argument("make_fom: empty profile");
  for (int d = 1; d < n; ++d) {
    if (profile[static_cast<size_t>(d)] != profile[static_cast<size_t>(n - d)]) {
      throw std::invalid_argument("make_fom: profile must satisfy g(d) = g(N-d)");
    }
  }
  std::vector<double> f(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int d = ((j - i) % n + n) % n;
      f[static_cast<size_t>(i) * n + j] = profile[static_cast<size_t>(d)];
    }
  }
  return FigureOfMerit(n, std::move(f));
}

FigureOfMerit builtin_fom(const std::string& name, int n) {
  std::vector<double> g(static_cast<size_t>(n), 0.0);
  int half = n / 2;
  if (name == "delta") {
    g[0] = 1.0;
  } else if (name == "constant") {
    g.assign(static_cast<size_t>(n), 1.0);
  } else if (n % 2 != 0) {
    throw std::invalid_argument("builtin_fom: '" + name + "' needs even N");
  } else if (name == "cosine2") {
    for (int d = 0; d <= half; ++d) {
      double c = std::cos(d * std::numbers::pi / (2.0 * half));
      g[static_cast<size_t>(d)] = c * c;
      g[static_cast<size_t>((n - d) % n)] = g[static_cast<size_t>(d)];
    }
  } else if (name == "linear") {
    for (int d = 0; d <= half; ++d) {
      g[static_cast<size_t>(d)] = 1.0 - static_cast<double>(d) / half;
      g[static_cast<size_t>((n - d) % n)] = g[static_cast<size_t>(d)];
    }
  } else {
    throw std::invalid_argument("builtin_fom: unknown merit '" + name + "'");
  }
  return make_fom(g);
}

std::vector<std::string> validate_fom(const FigureOfMerit& f) {
  std::vector<std::string> violations;
  int n = f.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (f(i, j) != f(j, i)) {
        violations.push_back("exchange: f(" + std::to_string(i) + "," + std::to_string(j) +
                             ") != f(" + std::to_string(j) + "," + std::to_string(i) + ")");
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (f(i, j) != f((i + 1) % n, (j + 1) % n)) {
        violations.push_back("covariance: f(" + std::to_string(i) + "," + std::to_string(j) +
                             ") != f(" + std::to_string((i + 1) % n) + "," +
                             std::to_string((j + 1) % n) + ")");
      }
    }
  }
  return violations;
}

bool is_monotonous(const FigureOfMerit& f) {
  auto g = f.profile();
  int half = f.size() / 2;
  bool strict = false;
  for (int d = 1; d <= half; ++d) {
    if (g[static_cast<size_t>(d)] > g[static_cast<size_t>(d - 1)]) return false;
    if (g[static_cast<size_t>(d)] < g[static_cast<size_t>(d - 1)]) strict = true;
  }
  return strict;
}

ScoreReport score(const ChannelMatrix& channel, const FigureOfMerit& f,
                  const std::vector<double>& priors) {
  int n = channel.size();
  if (f.size() != n || static_cast<int>(priors.size()) != n) {
    throw std::invalid_argument("score: dimension mismatch");
  }
  ScoreReport report;
  report.per_input.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    double c = 0.0;
    for (int j = 0; j < n; ++j) c += f(i, j) * channel(i, j);
    report.per_input[static_cast<size_t>(i)] = priors[static_cast<size_t>(i)] * c;
    report.total += report.per_input[static_cast<size_t>(i)];
  }
  return report;
}

double mutual_information(const ChannelMatrix& channel, const std::vector<double>& priors) {
  int n = channel.size();
  if (static_cast<int>(priors.size()) != n) {
    throw std::invalid_argument("mutual_information: dimension mismatch");
  }
  std::vector<double> marginal(static_cast<size_t>(n), 0.0);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) marginal[static_cast<size_t>(j)] += priors[static_cast<size_t>(i)] * channel(i, j);
  }
  double mi = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double joint = priors[static_cast<size_t>(i)] * channel(i, j);
      if (joint <= 0.0) continue;  // 0 log 0 = 0
      mi += joint * std::log2(joint / (priors[static_cast<size_t>(i)] * marginal[static_cast<size_t>(j)]));
    }
  }
  return mi;
}

}  // namespace qsd
