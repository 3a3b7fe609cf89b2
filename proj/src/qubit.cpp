#include "qsd/qubit.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace qsd {

namespace {

void require_hermitian_psd(const Mat2& m, const char* what) {
  if (!m.finite()) {
    throw std::invalid_argument(std::string(what) + ": non-finite entries");
  }
  if (hermiticity_defect(m) > kHermTol) {
    throw std::invalid_argument(std::string(what) + ": not Hermitian");
  }
  if (hermitian_eigenvalues(m)[0] < -kEigTol) {
    throw std::invalid_argument(std::string(what) + ": negative eigenvalue");
  }
}

}  // namespace

DensityOperator::DensityOperator(const Mat2& m) : m_(m) {
  require_hermitian_psd(m, "DensityOperator");
  if (std::abs(m.trace() - Complex{1, 0}) > kTraceTol) {
    throw std::invalid_argument("DensityOperator: trace != 1");
  }
}

PovmEffect::PovmEffect(const Mat2& m) : m_(m) {
  require_hermitian_psd(m, "PovmEffect");
}

Povm::Povm(std::vector<PovmEffect> effects) : effects_(std::move(effects)) {
  if (effects_.empty()) throw std::invalid_argument("Povm: no effects");
  Mat2 sum = Mat2::zero();
  for (const auto& e : effects_) sum = sum + e.matrix();
  if ((sum - Mat2::identity()).max_abs() > kCompletenessTol) {
    throw std::invalid_argument("Povm: effects do not sum to identity");
  }
}

DensityOperator bloch_to_density(const BlochVector& v) {
  if (v.norm() > 1.0 + kGeomTol) {
    throw std::invalid_argument("bloch_to_density: |v| > 1");
  }
  Mat2 m = 0.5 * (Mat2::identity() + v.x * pauli_x() + v.y * pauli_y() + v.z * pauli_z());
  return DensityOperator(m);
}

BlochVector density_to_bloch(const DensityOperator& rho) {
  const Mat2& m = rho.matrix();
  return {(m * pauli_x()).trace().real(),
          (m * pauli_y()).trace().real(),
          (m * pauli_z()).trace().real()};
}

std::vector<double> born_probabilities(const Povm& povm, const DensityOperator& rho) {
  std::vector<double> p(static_cast<size_t>(povm.size()));
  for (int j = 0; j < povm.size(); ++j) {
    double pj = (povm[j].matrix() * rho.matrix()).trace().real();
    if (pj < -kEigTol) {
      throw std::domain_error("born_probabilities: negative probability");
    }
    p[static_cast<size_t>(j)] = std::clamp(pj, 0.0, 1.0);
  }
  return p;
}

double helstrom_guess_probability(const DensityOperator& rho0, const DensityOperator& rho1) {
  return 0.5 + 0.25 * trace_norm_hermitian(rho0.matrix() - rho1.matrix());
}

}  // namespace qsd
