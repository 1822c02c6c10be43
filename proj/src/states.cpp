#include "qrac/states.hpp"

#include <cmath>
#include <sstream>

#include "qrac/eigen.hpp"
#include "qrac/tolerances.hpp"

namespace qrac {

namespace {

double norm_squared(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const Complex& e : v) s += std::norm(e);
  return s;
}

}  // namespace

PureState::PureState(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.empty()) throw DimensionError("pure state must have dimension >= 1");
  const double n2 = norm_squared(amps_);
  if (std::abs(n2 - 1.0) > tol::structural) {
    std::ostringstream msg;
    msg << "pure state is not unit norm: |norm^2 - 1| = " << std::abs(n2 - 1.0);
    throw InvariantViolation(msg.str());
  }
}

PureState PureState::basis_state(std::size_t dim, std::size_t k) {
  if (k >= dim) throw InvalidArgumentError("basis_state: index out of range");
  std::vector<Complex> amps(dim);
  amps[k] = 1.0;
  return PureState(std::move(amps));
}

PureState PureState::normalized(std::vector<Complex> amplitudes) {
  const double n = std::sqrt(norm_squared(amplitudes));
  if (n < 1e-12) throw InvalidArgumentError("cannot normalize a near-zero vector");
  for (Complex& e : amplitudes) e /= n;
  return PureState(std::move(amplitudes));
}

DensityMatrix PureState::outer_product() const { return DensityMatrix(outer(amps_)); }

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.dim() == 0) throw DimensionError("density matrix must have dimension >= 1");
  if (!m_.is_hermitian(tol::structural)) {
    throw InvariantViolation("density matrix is not Hermitian within 1e-12");
  }
  const double trace_err = std::abs(m_.trace() - Complex{1.0});
  if (trace_err > tol::structural) {
    std::ostringstream msg;
    msg << "density matrix trace differs from 1 by " << trace_err;
    throw InvariantViolation(msg.str());
  }
  const double min_eig = min_eigenvalue(m_);
  if (min_eig < tol::psd_floor) {
    std::ostringstream msg;
    msg << "density matrix has negative eigenvalue " << min_eig;
    throw NotAStateError(msg.str(), min_eig);
  }
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  ComplexMatrix m = ComplexMatrix::identity(dim);
  m *= Complex{1.0 / static_cast<double>(dim)};
  return DensityMatrix(std::move(m));
}

double DensityMatrix::purity() const { return (m_ * m_).trace().real(); }

bool DensityMatrix::is_pure() const { return std::abs(purity() - 1.0) <= tol::purity; }

PureState tensor(const PureState& a, const PureState& b) {
  std::vector<Complex> amps(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      amps[i * b.dim() + j] = a.amplitudes()[i] * b.amplitudes()[j];
  return PureState(std::move(amps));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(kron(a.matrix(), b.matrix()));
}

DensityMatrix partial_trace_state(const DensityMatrix& rho, std::size_t dim_a,
                                  std::size_t dim_b, std::size_t keep) {
  return DensityMatrix(partial_trace(rho.matrix(), dim_a, dim_b, keep));
}

double measure_prob(const ComplexMatrix& effect, const DensityMatrix& rho) {
  if (effect.dim() != rho.dim()) {
    throw DimensionError("measure_prob: effect and state dimensions differ");
  }
  Complex t = 0.0;
  const ComplexMatrix& r = rho.matrix();
  for (std::size_t i = 0; i < effect.dim(); ++i)
    for (std::size_t j = 0; j < effect.dim(); ++j) t += effect(i, j) * r(j, i);
  double p = t.real();
  if (p < 0.0) {
    if (p < -tol::boundary_clamp) {
      std::ostringstream msg;
      msg << "measurement probability " << p << " below 0 beyond tolerance";
      throw InvariantViolation(msg.str());
    }
    p = 0.0;
  } else if (p > 1.0) {
    if (p > 1.0 + tol::boundary_clamp) {
      std::ostringstream msg;
      msg << "measurement probability " << p << " above 1 beyond tolerance";
      throw InvariantViolation(msg.str());
    }
    p = 1.0;
  }
  return p;
}

}  // namespace qrac
