#include "qsd/io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qsd {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json ensemble_to_json(const SymmetricEnsemble& e) {
  return {{"M", e.half_count}, {"r", e.radius}, {"theta", e.polar_angle}};
}

SymmetricEnsemble ensemble_from_json(const json& j) {
  return make_symmetric_ensemble(j.at("M").get<int>(), j.at("r").get<double>(),
                                 j.at("theta").get<double>());
}

json merit_to_json(const FigureOfMerit& f) {
  if (validate_fom(f).empty()) {
    return {{"N", f.size()}, {"profile", f.profile()}};
  }
  std::vector<std::vector<double>> rows;
  for (int i = 0; i < f.size(); ++i) {
    std::vector<double> row;
    for (int j = 0; j < f.size(); ++j) row.push_back(f(i, j));
    rows.push_back(std::move(row));
  }
  return {{"N", f.size()}, {"matrix", rows}};
}

FigureOfMerit merit_from_json(const json& j) {
  int n = j.at("N").get<int>();
  if (j.contains("profile")) {
    auto profile = j.at("profile").get<std::vector<double>>();
    if (static_cast<int>(profile.size()) != n) {
      throw std::invalid_argument("merit: profile length != N");
    }
    return make_fom(profile);
  }
  auto rows = j.at("matrix").get<std::vector<std::vector<double>>>();
  if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("merit: row count != N");
  std::vector<double> flat;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("merit: ragged matrix");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return FigureOfMerit(n, std::move(flat));
}

std::string channel_to_csv(const ChannelMatrix& c) {
  std::string out;
  for (int i = 0; i < c.size(); ++i) {
    for (int j = 0; j < c.size(); ++j) {
      if (j) out += ',';
      out += format_double(c(i, j));
    }
    out += '\n';
  }
  return out;
}

ChannelMatrix channel_from_csv(const std::string& text) {
  std::vector<double> entries;
  int cols = -1;
  int rows = 0;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string field;
    int count = 0;
    while (std::getline(fields, field, ',')) {
      entries.push_back(std::stod(field));
      ++count;
    }
    if (cols < 0) cols = count;
    if (count != cols) throw std::invalid_argument("channel csv: ragged rows");
    ++rows;
  }
  if (rows != cols) throw std::invalid_argument("channel csv: matrix not square");
  return ChannelMatrix(rows, std::move(entries));
}

json channel_to_json(const ChannelMatrix& c) {
  std::vector<std::vector<double>> rows;
  for (int i = 0; i < c.size(); ++i) rows.push_back(c.row(i));
  return {{"N", c.size()}, {"rows", rows}};
}

ChannelMatrix channel_from_json(const json& j) {
  int n = j.at("N").get<int>();
  auto rows = j.at("rows").get<std::vector<std::vector<double>>>();
  if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("channel: row count != N");
  std::vector<double> flat;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("channel: ragged rows");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return ChannelMatrix(n, std::move(flat));
}

namespace {

json mat2_to_json(const Mat2& m) {
  json rows = json::array();
  for (int r = 0; r < 2; ++r) {
    json row = json::array();
    for (int c = 0; c < 2; ++c) {
      row.push_back({m.at(r, c).real(), m.at(r, c).imag()});
    }
    rows.push_back(row);
  }
  return rows;
}

Mat2 mat2_from_json(const json& j) {
  Mat2 m;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const auto& z = j.at(r).at(c);
      m.at(r, c) = Complex{z.at(0).get<double>(), z.at(1).get<double>()};
    }
  }
  return m;
}

}  // namespace

json povm_to_json(const Povm& p) {
  json effects = json::array();
  for (const auto& e : p.effects()) effects.push_back(mat2_to_json(e.matrix()));
  return {{"effects", effects}};
}

Povm povm_from_json(const json& j) {
  std::vector<PovmEffect> effects;
  for (const auto& e : j.at("effects")) effects.emplace_back(mat2_from_json(e));
  return Povm(std::move(effects));
}

json fit_to_json(const CosineFit& f) {
  return {{"alpha", f.alpha}, {"beta", f.beta}, {"residual", f.residual}};
}

json bound_to_json(const BoundReport& b) {
  json j = {{"p", b.mixing}, {"sum_p", b.sum_mixing}, {"bound", b.bound}};
  if (b.saturated_by) j["saturated_by"] = fit_to_json(*b.saturated_by);
  return j;
}

json region_to_json(const AdmissibleRegion& r) {
  return {{"alpha_min", r.alpha_min},
          {"alpha_max", r.alpha_max},
          {"beta_min", r.beta_min},
          {"beta_max", r.beta_max}};
}

json score_to_json(const ScoreReport& s) {
  return {{"score", s.total}, {"per_input", s.per_input}};
}

json optimization_to_json(const OptimizationResult& r) {
  return {{"score", r.score},
          {"iterations", r.iterations},
          {"converged", r.converged},
          {"score_trace", r.score_trace},
          {"povm", povm_to_json(r.povm)}};
}

}  // namespace qsd
