#pragma once

#include <vector>

#include "qrac/complex_matrix.hpp"

namespace qrac {

class DensityMatrix;

/// Unit-norm complex amplitude vector.
class PureState {
 public:
  explicit PureState(std::vector<Complex> amplitudes);

  static PureState basis_state(std::size_t dim, std::size_t k);
  /// Normalizes the amplitudes first; rejects near-zero vectors.
  static PureState normalized(std::vector<Complex> amplitudes);

  std::size_t dim() const { return amps_.size(); }
  const std::vector<Complex>& amplitudes() const { return amps_; }

  DensityMatrix outer_product() const;

 private:
  std::vector<Complex> amps_;
};

/// Hermitian, PSD, unit-trace matrix. Validated on construction.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  static DensityMatrix maximally_mixed(std::size_t dim);

  std::size_t dim() const { return m_.dim(); }
  const ComplexMatrix& matrix() const { return m_; }

  double purity() const;  // Tr(rho^2)
  bool is_pure() const;

 private:
  ComplexMatrix m_;
};

PureState tensor(const PureState& a, const PureState& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// keep = 0 keeps the first factor, keep = 1 the second.
DensityMatrix partial_trace_state(const DensityMatrix& rho, std::size_t dim_a,
                                  std::size_t dim_b, std::size_t keep);

/// Tr(effect * rho), clamped to [0,1] only inside the tol::boundary_clamp band.
/// The effect must be a validated POVM element of matching dimension.
double measure_prob(const ComplexMatrix& effect, const DensityMatrix& rho);

}  // namespace qrac
