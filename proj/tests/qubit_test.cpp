#include "qsd/qubit.hpp"

#include <doctest.h>

#include <numbers>

#include "qsd/ensemble.hpp"
#include "qsd/optimal.hpp"
#include "test_support.hpp"

using namespace qsd;
using namespace qsd::testing;

namespace {

double max_abs_diff(const Mat2& a, const Mat2& b) { return (a - b).max_abs(); }

}  // namespace

TEST_CASE("bloch_to_density known points") {
  CHECK(max_abs_diff(bloch_to_density({0, 0, 0}).matrix(), 0.5 * Mat2::identity()) == 0.0);
  CHECK(max_abs_diff(bloch_to_density({0, 0, 1}).matrix(),
                     Mat2::diag(Complex{1, 0}, Complex{0, 0})) == 0.0);
  // (1/2)(I + sigma_x) expanded by hand
  Mat2 plus{Complex{0.5, 0}, Complex{0.5, 0}, Complex{0.5, 0}, Complex{0.5, 0}};
  CHECK(max_abs_diff(bloch_to_density({1, 0, 0}).matrix(), plus) == 0.0);
}

TEST_CASE("bloch_to_density rejects unphysical vectors") {
  CHECK_THROWS_AS(bloch_to_density({1.1, 0, 0}), std::invalid_argument);
  CHECK_NOTHROW(bloch_to_density({1.0 + 0.5e-12, 0, 0}));
}

TEST_CASE("density_to_bloch known points") {
  auto v = density_to_bloch(bloch_to_density({0, 0, 0}));
  CHECK(v.norm() == doctest::Approx(0.0).epsilon(1e-12));
  v = density_to_bloch(bloch_to_density({1, 0, 0}));
  CHECK(v.x == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(v.y) < 1e-12);
  CHECK(std::abs(v.z) < 1e-12);
}

TEST_CASE("bloch round trip on random states") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    BlochVector v = random_bloch(rng);
    BlochVector w = density_to_bloch(bloch_to_density(v));
    CHECK(std::abs(v.x - w.x) < 1e-12);
    CHECK(std::abs(v.y - w.y) < 1e-12);
    CHECK(std::abs(v.z - w.z) < 1e-12);
  }
}

TEST_CASE("density operator validation") {
  CHECK_THROWS(DensityOperator(Mat2::diag(Complex{0.7, 0}, Complex{0.7, 0})));
  CHECK_THROWS(DensityOperator(Mat2::diag(Complex{1.5, 0}, Complex{-0.5, 0})));
  Mat2 not_herm{Complex{0.5, 0}, Complex{0.1, 0}, Complex{0.3, 0}, Complex{0.5, 0}};
  CHECK_THROWS(DensityOperator(not_herm));
}

TEST_CASE("born probabilities on computational basis") {
  Povm basis({PovmEffect(Mat2::diag(Complex{1, 0}, Complex{0, 0})),
              PovmEffect(Mat2::diag(Complex{0, 0}, Complex{1, 0}))});
  auto p = born_probabilities(basis, bloch_to_density({0, 0, 0}));
  CHECK(p[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(p[1] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("born probabilities on the symmetric POVM") {
  // oracle: p_j = (1/2M)(1 + r sin(theta) cos(phi_j - phi_0))
  auto e = make_symmetric_ensemble(2, 1.0, std::numbers::pi / 2);
  auto p = born_probabilities(symmetric_povm(e), e.state(0));
  std::vector<double> expected{0.5, 0.25, 0.0, 0.25};
  for (int j = 0; j < 4; ++j) {
    double oracle = (1.0 / 4.0) * (1.0 + std::cos(e.azimuth(j)));
    CHECK(oracle == doctest::Approx(expected[static_cast<size_t>(j)]).epsilon(1e-14));
    CHECK(p[static_cast<size_t>(j)] == doctest::Approx(expected[static_cast<size_t>(j)]).epsilon(1e-12));
  }
}

TEST_CASE("born output is a probability vector for random pairs") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    int n = 2 + static_cast<int>(rng() % 5);
    auto povm = random_povm(n, rng);
    auto p = born_probabilities(povm, random_density(rng));
    double sum = 0.0;
    for (double v : p) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
      sum += v;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("helstrom oracle basics") {
  auto mixed = bloch_to_density({0.4, 0.1, -0.2});
  CHECK(helstrom_guess_probability(mixed, mixed) == doctest::Approx(0.5).epsilon(1e-14));
  auto north = bloch_to_density({0, 0, 1});
  auto south = bloch_to_density({0, 0, -1});
  CHECK(helstrom_guess_probability(north, south) == doctest::Approx(1.0).epsilon(1e-14));
  auto east = bloch_to_density({1, 0, 0});
  auto west = bloch_to_density({-1, 0, 0});
  CHECK(helstrom_guess_probability(east, west) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("helstrom matches the closed-form two-state bound") {
  for (double r : grid_radii()) {
    for (double theta : grid_polars()) {
      auto e = make_symmetric_ensemble(1, r, theta);
      double helstrom = helstrom_guess_probability(e.state(0), e.state(1));
      CHECK(helstrom == doctest::Approx(0.5 * (1.0 + r * std::sin(theta))).epsilon(1e-12));
    }
  }
}

TEST_CASE("povm completeness is enforced") {
  std::vector<PovmEffect> short_effects;
  short_effects.emplace_back(Mat2::diag(Complex{1, 0}, Complex{0, 0}));
  CHECK_THROWS_AS(Povm(std::move(short_effects)), std::invalid_argument);
}
