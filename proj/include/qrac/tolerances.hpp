#pragma once

// Single source of truth for the numeric tolerances used across the library.
// Structural invariants are checked at 1e-12, derived-quantity equalities at
// 1e-10, geometric norms at 1e-9.
namespace qrac::tol {

inline constexpr double structural = 1e-12;
inline constexpr double derived = 1e-10;
inline constexpr double geometric = 1e-9;

// Smallest admissible eigenvalue of a state or effect.
inline constexpr double psd_floor = -1e-10;
// |Tr(rho^2) - 1| band for purity tests.
inline constexpr double purity = 1e-10;
// Eigenvalues closer than this are treated as one degenerate block.
inline constexpr double eigen_degenerate = 1e-10;
// Off-diagonal Frobenius mass (relative) at Jacobi convergence.
inline constexpr double jacobi_off_mass = 1e-14;
// Probabilities are clamped to [0,1] only inside this band.
inline constexpr double boundary_clamp = 1e-10;
// |s| below this flags a degenerate halfspace.
inline constexpr double degenerate_normal = 1e-12;
// Strict-inequality threshold in no-go certificates.
inline constexpr double strict_slack = 1e-12;
// Default feasibility margin for region realization.
inline constexpr double margin_default = 1e-7;
// Allowed slack in the see-saw monotonicity invariant.
inline constexpr double ascent_slack = 1e-12;

}  // namespace qrac::tol
