#include "qrac/povm.hpp"

#include <sstream>

#include "qrac/eigen.hpp"
#include "qrac/tolerances.hpp"

namespace qrac {

BinaryPovm::BinaryPovm(ComplexMatrix e0, ComplexMatrix e1)
    : e0_(std::move(e0)), e1_(std::move(e1)) {
  if (e0_.dim() != e1_.dim() || e0_.dim() == 0) {
    throw DimensionError("binary POVM: effect dimensions differ or are zero");
  }
  if (!e0_.is_hermitian(tol::structural) || !e1_.is_hermitian(tol::structural)) {
    throw InvariantViolation("binary POVM: effect is not Hermitian within 1e-12");
  }
  const double completeness = max_abs_diff(e0_ + e1_, ComplexMatrix::identity(e0_.dim()));
  if (completeness > tol::structural) {
    std::ostringstream msg;
    msg << "binary POVM: e0 + e1 differs from identity by " << completeness;
    throw InvariantViolation(msg.str());
  }
  const auto eig = hermitian_eigs(e0_);
  if (eig.values.back() < tol::psd_floor) {
    std::ostringstream msg;
    msg << "binary POVM: e0 has negative eigenvalue " << eig.values.back();
    throw InvariantViolation(msg.str());
  }
  if (eig.values.front() > 1.0 - tol::psd_floor) {
    std::ostringstream msg;
    msg << "binary POVM: e0 has eigenvalue " << eig.values.front() << " above 1";
    throw InvariantViolation(msg.str());
  }
}

BinaryPovm BinaryPovm::from_e0(ComplexMatrix e0) {
  ComplexMatrix e1 = ComplexMatrix::identity(e0.dim()) - e0;
  return BinaryPovm(std::move(e0), std::move(e1));
}

PovmCanonicalForm povm_canonical_form(const BinaryPovm& povm) {
  auto eig = hermitian_eigs(povm.e0());
  return PovmCanonicalForm{std::move(eig.values), std::move(eig.vectors)};
}

}  // namespace qrac
