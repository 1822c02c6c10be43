#pragma once

#include <vector>

#include "qrac/complex_matrix.hpp"
#include "qrac/states.hpp"

namespace qrac {

/// Two-outcome POVM {e0, e1}: both PSD Hermitian, e0 + e1 = I.
class BinaryPovm {
 public:
  BinaryPovm(ComplexMatrix e0, ComplexMatrix e1);

  /// e1 := I - e0.
  static BinaryPovm from_e0(ComplexMatrix e0);

  std::size_t dim() const { return e0_.dim(); }
  const ComplexMatrix& e0() const { return e0_; }
  const ComplexMatrix& e1() const { return e1_; }
  const ComplexMatrix& effect(int outcome) const { return outcome == 0 ? e0_ : e1_; }

 private:
  ComplexMatrix e0_;
  ComplexMatrix e1_;
};

/// Spectral form of e0: eigenvalues descending, orthonormal eigenvectors as
/// columns (deterministic degenerate tie-break, see hermitian_eigs).
struct PovmCanonicalForm {
  std::vector<double> alphas;
  ComplexMatrix vectors;
};

PovmCanonicalForm povm_canonical_form(const BinaryPovm& povm);

}  // namespace qrac
