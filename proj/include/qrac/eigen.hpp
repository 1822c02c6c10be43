#pragma once

#include <vector>

#include "qrac/complex_matrix.hpp"

namespace qrac {

/// Eigenvalues in descending order; vectors column j belongs to values[j].
struct EigenDecomposition {
  std::vector<double> values;
  ComplexMatrix vectors;

  std::vector<Complex> column(std::size_t j) const;
};

/// Hermitian eigendecomposition by cyclic complex Jacobi sweeps.
///
/// Deterministic output: eigenvalues are sorted descending; eigenvalues equal
/// within tol::eigen_degenerate form one block whose basis is re-derived by
/// Gram-Schmidt over canonical coordinates in index order, and every vector's
/// first sizable component is rotated to be real positive.
EigenDecomposition hermitian_eigs(const ComplexMatrix& a);

double min_eigenvalue(const ComplexMatrix& hermitian);

}  // namespace qrac
