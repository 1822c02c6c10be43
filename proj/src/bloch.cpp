#include "qrac/bloch.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "qrac/eigen.hpp"
#include "qrac/tolerances.hpp"

namespace qrac {

double BlochVector::norm() const {
  double s = 0.0;
  for (double c : coords) s += c * c;
  return std::sqrt(s);
}

double dot(const BlochVector& a, const BlochVector& b) {
  if (a.level != b.level) throw DimensionError("bloch dot: level mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.coords.size(); ++i) s += a.coords[i] * b.coords[i];
  return s;
}

namespace {

std::vector<ComplexMatrix> build_gell_mann(std::size_t n) {
  std::vector<ComplexMatrix> out;
  out.reserve(n * n - 1);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      ComplexMatrix m(n);
      m(j, k) = 1.0;
      m(k, j) = 1.0;
      out.push_back(std::move(m));
    }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      ComplexMatrix m(n);
      m(j, k) = Complex{0.0, -1.0};
      m(k, j) = Complex{0.0, 1.0};
      out.push_back(std::move(m));
    }
  for (std::size_t l = 1; l < n; ++l) {
    ComplexMatrix m(n);
    const double scale = std::sqrt(2.0 / static_cast<double>(l * (l + 1)));
    for (std::size_t j = 0; j < l; ++j) m(j, j) = scale;
    m(l, l) = -scale * static_cast<double>(l);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

const std::vector<ComplexMatrix>& gell_mann_basis(std::size_t level) {
  if (level < 2) throw InvalidArgumentError("gell_mann_basis: level must be >= 2");
  static std::map<std::size_t, std::vector<ComplexMatrix>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(level);
  if (it == cache.end()) it = cache.emplace(level, build_gell_mann(level)).first;
  return it->second;
}

BlochVector density_to_bloch(const DensityMatrix& rho) {
  const std::size_t n = rho.dim();
  const auto& basis = gell_mann_basis(n);
  BlochVector r;
  r.level = n;
  r.coords.reserve(basis.size());
  const ComplexMatrix& m = rho.matrix();
  for (const ComplexMatrix& g : basis) {
    Complex t = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t += g(i, j) * m(j, i);
    r.coords.push_back(t.real());
  }
  return r;
}

DensityMatrix bloch_to_density(const BlochVector& r) {
  const std::size_t n = r.level;
  const auto& basis = gell_mann_basis(n);
  if (r.coords.size() != basis.size()) {
    throw DimensionError("bloch_to_density: coordinate count must be N^2 - 1");
  }
  ComplexMatrix m = ComplexMatrix::identity(n);
  m *= Complex{1.0 / static_cast<double>(n)};
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (r.coords[i] == 0.0) continue;
    m += Complex{0.5 * r.coords[i]} * basis[i];
  }
  const double min_eig = min_eigenvalue(m);
  if (min_eig < tol::psd_floor) {
    std::ostringstream msg;
    msg << "bloch vector does not reconstruct to a state: min eigenvalue " << min_eig;
    throw NotAStateError(msg.str(), min_eig);
  }
  return DensityMatrix(std::move(m));
}

BlochVector pure_to_bloch(const PureState& psi) {
  return density_to_bloch(psi.outer_product());
}

}  // namespace qrac
