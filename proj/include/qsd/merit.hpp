#pragma once

#include <string>
#include <vector>

#include "qsd/channel.hpp"

namespace qsd {

/// Score function f(i, j) over (prepared, guessed) index pairs. Valid
/// instances are exchange-symmetric and cyclically covariant, so every
/// entry is a function of the circular index distance.
class FigureOfMerit {
 public:
  /// Full matrix, row-major. Does not validate; use validate_fom.
  FigureOfMerit(int n, std::vector<double> scores);

  int size() const { return n_; }
  double operator()(int i, int j) const {
    return f_[static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j)];
  }
  const std::vector<double>& entries() const { return f_; }

  /// Distance profile g(d) = f(0, d).
  std::vector<double> profile() const;

 private:
  int n_;
  std::vector<double> f_;
};

struct ScoreReport {
  double total = 0.0;
  std::vector<double> per_input;  // q_i sum_j f(i,j) P(j|i)
};

/// Build f(i, j) = g(circular distance). The profile must satisfy
/// g(d) = g(N - d), otherwise exchange symmetry is impossible.
FigureOfMerit make_fom(const std::vector<double>& profile);

/// Built-in profiles: "delta", "cosine2", "linear", "constant".
FigureOfMerit builtin_fom(const std::string& name, int n);

/// Human-readable list of violated symmetry constraints; empty iff valid.
std::vector<std::string> validate_fom(const FigureOfMerit& f);

/// Non-increasing in circular distance with at least one strict decrease.
bool is_monotonous(const FigureOfMerit& f);

ScoreReport score(const ChannelMatrix& channel, const FigureOfMerit& f,
                  const std::vector<double>& priors);

/// Shannon mutual information of the joint q_i P(j|i), in bits.
double mutual_information(const ChannelMatrix& channel, const std::vector<double>& priors);

}  // namespace qsd
