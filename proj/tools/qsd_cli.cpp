// Command-line front end: ensembles, bounds, channels, cosine fits, scores,
// optimizers, invariant verification, and parameter sweeps.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "qsd/io.hpp"

using namespace qsd;

namespace {

enum class LogLevel { quiet = 0, info = 1, debug = 2 };

LogLevel log_level() {
  const char* env = std::getenv("QSD_MERIT_LOG");
  if (!env) return LogLevel::quiet;
  std::string v(env);
  if (v == "debug") return LogLevel::debug;
  if (v == "info") return LogLevel::info;
  return LogLevel::quiet;
}

void log_info(const std::string& msg) {
  if (log_level() >= LogLevel::info) std::cerr << "[qsd] " << msg << "\n";
}

struct RunConfig {
  std::string command;
  int half_count = 1;
  double radius = 1.0;
  double polar_angle = std::numbers::pi / 2;
  std::string merit = "delta";
  std::string povm = "eq20";
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 1;
  int restarts = 8;
  int max_iter = 10000;
  double tol = 1e-10;
  std::string method = "general";
  std::vector<int> m_list;
  std::vector<double> r_list;
  std::vector<double> theta_list;
};

SymmetricEnsemble ensemble_of(const RunConfig& cfg) {
  if (cfg.half_count < 1 || cfg.half_count > 32) {
    throw CLI::ValidationError("--M", "M must be in [1, 32]");
  }
  return make_symmetric_ensemble(cfg.half_count, cfg.radius, cfg.polar_angle);
}

FigureOfMerit merit_of(const RunConfig& cfg, int n) {
  if (cfg.merit == "delta" || cfg.merit == "cosine2" || cfg.merit == "linear" ||
      cfg.merit == "constant") {
    return builtin_fom(cfg.merit, n);
  }
  std::ifstream in(cfg.merit);
  if (!in) throw CLI::ValidationError("--merit", "cannot open file: " + cfg.merit);
  auto f = merit_from_json(json::parse(in));
  auto violations = validate_fom(f);
  if (!violations.empty()) {
    throw CLI::ValidationError("--merit", "not a symmetric figure of merit: " + violations[0]);
  }
  return f;
}

Povm povm_of(const RunConfig& cfg, const SymmetricEnsemble& e) {
  if (cfg.povm == "eq20") return symmetric_povm(e);
  if (cfg.povm.starts_with("covariant:")) {
    std::uint64_t seed = std::stoull(cfg.povm.substr(10));
    return random_covariant_povm(e.state_count(), seed);
  }
  if (cfg.povm == "covariant") return random_covariant_povm(e.state_count(), cfg.seed);
  std::ifstream in(cfg.povm);
  if (!in) throw CLI::ValidationError("--povm", "cannot open file: " + cfg.povm);
  return povm_from_json(json::parse(in));
}

void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out, std::ios::binary);
  if (!out) throw CLI::ValidationError("--out", "cannot open file: " + cfg.out);
  out << text;
  log_info("wrote " + cfg.out);
}

std::string render(const RunConfig& cfg, json j) {
  j["seed"] = cfg.seed;
  if (cfg.format == "json") return j.dump(2) + "\n";
  // flat key,value CSV for scalar reports
  std::string out = "# seed=" + std::to_string(cfg.seed) + "\nquantity,value\n";
  for (auto& [key, value] : j.items()) {
    if (value.is_number_float()) {
      out += key + "," + format_double(value.get<double>()) + "\n";
    } else if (value.is_number()) {
      out += key + "," + value.dump() + "\n";
    }
  }
  return out;
}

int cmd_ensemble(const RunConfig& cfg) {
  auto e = ensemble_of(cfg);
  write_output(cfg, render(cfg, ensemble_to_json(e)));
  return 0;
}

int cmd_bound(const RunConfig& cfg) {
  auto e = ensemble_of(cfg);
  write_output(cfg, render(cfg, bound_to_json(guessing_bound(e))));
  return 0;
}

int cmd_channel(const RunConfig& cfg) {
  auto e = ensemble_of(cfg);
  auto c = channel_from_measurement(povm_of(cfg, e), e);
  if (cfg.format == "csv") {
    write_output(cfg, "# seed=" + std::to_string(cfg.seed) + "\n" + channel_to_csv(c));
  } else {
    write_output(cfg, render(cfg, channel_to_json(c)));
  }
  return 0;
}

int cmd_fit(const RunConfig& cfg) {
  auto e = ensemble_of(cfg);
  auto c = symmetrize(channel_from_measurement(povm_of(cfg, e), e));
  auto fit = fit_cosine_form(c, e);
  json j = fit_to_json(fit);
  j["verdict"] = to_string(check_channel_admissible(c, e));
  write_output(cfg, render(cfg, std::move(j)));
  return 0;
}

int cmd_score(const RunConfig& cfg) {
  auto e = ensemble_of(cfg);
  auto c = channel_from_measurement(povm_of(cfg, e), e);
  auto report = score(c, merit_of(cfg, e.state_count()), e.priors());
  write_output(cfg, render(cfg, score_to_json(report)));
  return 0;
}

int cmd_optimize(const RunConfig& cfg) {
  auto e = ensemble_of(cfg);
  auto merit = merit_of(cfg, e.state_count());
  OptimizationResult result = [&] {
    if (cfg.method == "covariant") return optimize_covariant(e, merit);
    OptimizeOptions options;
    options.restarts = cfg.restarts;
    options.max_iterations = cfg.max_iter;
    options.tolerance = cfg.tol;
    options.rng_seed = cfg.seed;
    return optimize_general(e, merit, options);
  }();
  log_info("optimizer score " + format_double(result.score));
  write_output(cfg, render(cfg, optimization_to_json(result)));
  return 0;
}

// Full invariant suite for one ensemble; returns the number of violations.
int cmd_verify(const RunConfig& cfg) {
  auto e = ensemble_of(cfg);
  int n = e.state_count();
  std::vector<std::string> failures;
  auto require = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
    log_info(std::string(ok ? "ok  " : "FAIL") + " " + what);
  };

  for (int m = 1; m <= e.half_count - 1; ++m) {
    require(verify_decomposition_identity(e, m) <= 1e-12,
            "decomposition identity m=" + std::to_string(m));
  }
  double rs = e.radius * std::sin(e.polar_angle);
  if (rs > 0.0) {
    auto shadow = make_shadow_decomposition(e);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      Mat2 mixture = shadow.mixing * e.state(i).matrix() +
                     (1.0 - shadow.mixing) * shadow.shadows[static_cast<size_t>(i)].matrix();
      worst = std::max(worst, (mixture - shadow.common_state.matrix()).max_abs());
    }
    require(worst <= 1e-12, "shadow decomposition closes to a common state");
  }
  require(verify_optimal_channel(e) <= 1e-12, "symmetric measurement realizes Q");
  auto bound = guessing_bound(e);
  require(std::abs(q_channel(e)(0, 0) - bound.bound) <= 1e-14, "Q diagonal equals the bound");
  require(check_nosignaling_constraint(q_channel(e), e) <= 1e-12,
          "Q satisfies the no-signaling constraint");
  require(check_channel_admissible(q_channel(e), e) == Admissibility::admissible,
          "Q is admissible");

  std::mt19937_64 rng(cfg.seed);
  auto region = admissible_region(e);
  for (int k = 0; k < 25; ++k) {
    auto povm = random_covariant_povm(n, rng());
    auto fit = canonical_orientation(
        fit_cosine_form(symmetrize(channel_from_measurement(povm, e)), e));
    require(fit.residual <= 1e-10 && region.contains(fit.alpha, fit.beta, 1e-10),
            "random covariant channel " + std::to_string(k) + " fits the cosine law");
  }

  json summary = {{"violations", failures}, {"checked", true}};
  write_output(cfg, render(cfg, std::move(summary)));
  if (!failures.empty()) {
    for (const auto& f : failures) std::cerr << "verification failed: " << f << "\n";
    return 1;
  }
  return 0;
}

int cmd_sweep(const RunConfig& cfg) {
  std::vector<int> ms = cfg.m_list.empty() ? std::vector<int>{cfg.half_count} : cfg.m_list;
  std::vector<double> rs = cfg.r_list.empty() ? std::vector<double>{cfg.radius} : cfg.r_list;
  std::vector<double> thetas =
      cfg.theta_list.empty() ? std::vector<double>{cfg.polar_angle} : cfg.theta_list;

  std::string out = "# seed=" + std::to_string(cfg.seed) + "\nM,r,theta,quantity,value\n";
  auto emit = [&](int m, double r, double theta, const std::string& quantity, double value) {
    out += std::to_string(m) + "," + format_double(r) + "," + format_double(theta) + "," +
           quantity + "," + format_double(value) + "\n";
  };
  for (int m : ms) {
    if (m < 1 || m > 32) throw CLI::ValidationError("--M-list", "M must be in [1, 32]");
    for (double r : rs) {
      for (double theta : thetas) {
        auto e = make_symmetric_ensemble(m, r, theta);
        auto bound = guessing_bound(e);
        auto region = admissible_region(e);
        auto merit = merit_of(cfg, e.state_count());
        emit(m, r, theta, "bound", bound.bound);
        emit(m, r, theta, "alpha_max", region.alpha_max);
        emit(m, r, theta, "beta_min", region.beta_min);
        emit(m, r, theta, "beta_max", region.beta_max);
        emit(m, r, theta, "q_score", score(q_channel(e), merit, e.priors()).total);
        emit(m, r, theta, "q_mutual_information", mutual_information(q_channel(e), e.priors()));
      }
    }
  }
  write_output(cfg, out);
  return 0;
}

int dispatch(const RunConfig& cfg) {
  log_info("command " + cfg.command);
  if (cfg.command == "ensemble") return cmd_ensemble(cfg);
  if (cfg.command == "bound") return cmd_bound(cfg);
  if (cfg.command == "channel") return cmd_channel(cfg);
  if (cfg.command == "fit") return cmd_fit(cfg);
  if (cfg.command == "score") return cmd_score(cfg);
  if (cfg.command == "optimize") return cmd_optimize(cfg);
  if (cfg.command == "verify") return cmd_verify(cfg);
  if (cfg.command == "sweep") return cmd_sweep(cfg);
  std::cerr << "unknown command: " << cfg.command << "\n";
  return 2;
}

void load_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open file: " + path);
  json j = json::parse(in);
  cfg.command = j.value("command", cfg.command);
  cfg.half_count = j.value("M", cfg.half_count);
  cfg.radius = j.value("r", cfg.radius);
  cfg.polar_angle = j.value("theta", cfg.polar_angle);
  cfg.merit = j.value("merit", cfg.merit);
  cfg.povm = j.value("povm", cfg.povm);
  cfg.format = j.value("format", cfg.format);
  cfg.out = j.value("out", cfg.out);
  cfg.seed = j.value("seed", cfg.seed);
  cfg.restarts = j.value("restarts", cfg.restarts);
  cfg.max_iter = j.value("max_iter", cfg.max_iter);
  cfg.tol = j.value("tol", cfg.tol);
  cfg.method = j.value("method", cfg.method);
  cfg.m_list = j.value("M_list", cfg.m_list);
  cfg.r_list = j.value("r_list", cfg.r_list);
  cfg.theta_list = j.value("theta_list", cfg.theta_list);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum state discrimination with symmetric figures of merit"};
  app.require_subcommand(0, 1);

  RunConfig cfg;
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file mirroring the flags");

  const std::vector<std::string> commands{"ensemble", "bound", "channel", "fit",
                                          "score",    "optimize", "verify", "sweep"};
  for (const auto& name : commands) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--M", cfg.half_count, "ensemble half count (N = 2M)");
    sub->add_option("--r", cfg.radius, "Bloch radius in [0, 1]");
    sub->add_option("--theta", cfg.polar_angle, "polar angle in radians, [0, pi]");
    sub->add_option("--merit", cfg.merit, "builtin name (delta|cosine2|linear|constant) or JSON file");
    sub->add_option("--povm", cfg.povm, "eq20 | covariant:SEED | JSON file");
    sub->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.out, "output path (default stdout)");
    sub->add_option("--seed", cfg.seed, "rng seed, recorded in outputs");
    sub->add_option("--restarts", cfg.restarts);
    sub->add_option("--max-iter", cfg.max_iter);
    sub->add_option("--tol", cfg.tol);
    sub->add_option("--method", cfg.method)->check(CLI::IsMember({"general", "covariant"}));
    if (name == "sweep") {
      sub->add_option("--M-list", cfg.m_list)->delimiter(',');
      sub->add_option("--r-list", cfg.r_list)->delimiter(',');
      sub->add_option("--theta-list", cfg.theta_list)->delimiter(',');
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!config_path.empty()) load_config_file(config_path, cfg);
    for (const auto& name : commands) {
      if (app.got_subcommand(name)) cfg.command = name;
    }
    if (cfg.command.empty()) {
      std::cerr << "no command given (flag or config file)\n";
      return 2;
    }
    return dispatch(cfg);
  } catch (const CLI::ValidationError& err) {
    std::cerr << err.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& err) {
    std::cerr << "invalid argument: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
}
