#pragma once

#include "qrac/schemes.hpp"

namespace qrac {

/// Universal 1 -> 2 qubit cloning channel, built from the explicit 3-qubit
/// isometry (input -> clone1 x clone2 x ancilla) with the ancilla traced out.
/// Returns the joint state of the two clones.
DensityMatrix buzek_hillery_clone(const DensityMatrix& rho);

/// The four-bit clone-and-measure scheme: mixture encodings
/// rho_x = (|phi(0 x1 x2)><.| + |phi(1 x3 x4)><.|) / 2, decoded by cloning,
/// measuring the block bit on clone 1 and conditionally the target bit on
/// clone 2 (fair coin otherwise), compiled into one effective POVM per bit.
struct Example3 {
  QracScheme scheme;
  /// Success probability conditioned on the favorable block being sent;
  /// identical across cells.
  double p0;
  /// (p0 + 1/2) / 2 -- what the naive halves-average argument would claim.
  double naive_claim;
};

Example3 example3_scheme();

}  // namespace qrac
