#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qrac/povm.hpp"
#include "qrac/schemes.hpp"
#include "qrac/tolerances.hpp"

namespace qrac {

/// Linear test on Bloch vectors equivalent to "decoding succeeds with
/// probability > 1/2": outcome 0 demands s . r > c, outcome 1 demands < c.
struct Halfspace {
  std::vector<double> s;
  double c = 0.0;
  std::size_t source_index = 0;  // decoder bit index (1-based), 0 if unattached
  bool degenerate = false;       // |s| below tol::degenerate_normal
};

/// Bit w_i = 0 demands s_i . r > c_i, w_i = 1 demands s_i . r < c_i.
struct SignPattern {
  std::string bits;
};

enum class WitnessStatus { Realized, EmptyWithinTolerance, Undecided };

struct RegionWitness {
  SignPattern pattern;
  std::optional<std::vector<double>> point;  // present iff realized
  double margin = 0.0;  // best achieved min_i sigma_i (s_i . r - c_i), unit normals
  WitnessStatus status = WitnessStatus::Undecided;
};

/// Extracts (s, c) from a binary POVM: c = 1/2 - sum_j alpha_j / 2^m and
/// s = sum_j (alpha_j / 2) * bloch(|u_j><u_j|) over the spectral form of e0.
/// The predicate measure_prob(e0, rho) > 1/2 <=> s . bloch(rho) > c is exact.
Halfspace povm_to_halfspace(const BinaryPovm& povm, std::size_t source_index = 0);

struct RegionSolverOptions {
  std::size_t max_iters = 100000;   // supergradient budget per (pattern, start)
  std::size_t stall_window = 10000; // iterations without improvement before giving up
  std::size_t polish_cycles = 2000; // alternating-projection polish budget
};

/// Decides, for every one of the 2^k sign patterns, whether some point of the
/// unit ball satisfies every strict inequality with margin >= margin_eps.
/// Halfspaces are normalized to unit normals internally, so positive rescaling
/// of any (s_i, c_i) never changes a status. Deterministic: fixed start points
/// (origin, then each signed normal) and iteration schedule.
std::vector<RegionWitness> realized_patterns(const std::vector<Halfspace>& halfspaces,
                                             std::size_t ball_dim,
                                             double margin_eps = tol::margin_default,
                                             const RegionSolverOptions& options = {});

std::size_t count_realized(const std::vector<RegionWitness>& witnesses);

/// Maximum number of regions k hyperplanes can cut R^d (or a d-ball) into:
/// sum_{i=0}^{min(k,d)} C(k,i). Exact; throws CapacityError past 64 bits.
std::uint64_t max_regions(std::uint64_t k_hyperplanes, std::uint64_t d);

struct CellCheck {
  std::size_t x_index = 0;
  std::size_t bit = 1;
  double slack = 0.0;  // sigma_i (s_i . r_x - c_i); violated when <= tol::strict_slack
  bool ok = false;
};

enum class NoGoStatus {
  Refuted,                     // a required strict inequality fails
  ConsistentAtHalfspaceLevel,  // every strict inequality holds (possible when n < N^2)
  InconsistencyWithTheory,     // all inequalities hold although counting forbids it
};

struct NoGoReport {
  double claimed_p = 0.0;
  std::vector<Halfspace> halfspaces;
  std::vector<CellCheck> checks;       // all 2^n * n cells, x-major order
  std::optional<CellCheck> violated;   // first failing cell
  bool counting_applicable = false;    // n == N^2 (the impossibility regime)
  std::uint64_t max_regions_value = 0;
  std::uint64_t required_regions = 0;
  NoGoStatus status = NoGoStatus::Refuted;
};

/// Executable impossibility check: extracts the scheme's halfspaces, tests the
/// required strict side for every encoding state, and reports the first
/// violated cell with its slack, plus the region-counting certificate when the
/// scheme sits in the n = 2^(2m) regime.
NoGoReport no_go_certificate(const QracScheme& scheme, double claimed_p);

}  // namespace qrac
