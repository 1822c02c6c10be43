#pragma once

#include <vector>

#include "qrac/complex_matrix.hpp"
#include "qrac/states.hpp"

namespace qrac {

/// Real coordinate vector of a state in the traceless-generator basis,
/// length N^2 - 1 for an N-level system.
struct BlochVector {
  std::size_t level = 0;
  std::vector<double> coords;

  double norm() const;
};

/// Generalized Gell-Mann generators of SU(N): Hermitian, traceless,
/// Tr(g_i g_j) = 2 delta_ij.
///
/// Fixed order: symmetric pairs (j,k), j < k, row-major; then the
/// antisymmetric pairs in the same order; then the N-1 diagonal generators.
/// For N = 2 this is exactly {X, Y, Z}.
const std::vector<ComplexMatrix>& gell_mann_basis(std::size_t level);

/// r_i = Tr(rho g_i) for the fixed generator order.
BlochVector density_to_bloch(const DensityMatrix& rho);

/// (1/N) I + (1/2) sum_i r_i g_i. Throws NotAStateError when the
/// reconstruction has an eigenvalue below the PSD floor (possible for N > 2).
DensityMatrix bloch_to_density(const BlochVector& r);

BlochVector pure_to_bloch(const PureState& psi);

double dot(const BlochVector& a, const BlochVector& b);

}  // namespace qrac
