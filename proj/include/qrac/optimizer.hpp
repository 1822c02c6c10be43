#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qrac/povm.hpp"
#include "qrac/schemes.hpp"

namespace qrac {

struct SeeSawConfig {
  std::size_t restarts = 32;
  std::size_t max_iters = 500;  // per see-saw segment
  double conv_tol = 1e-9;       // on objective change
  std::uint64_t seed = 0;
  enum class Objective {
    Average,   // stop after the uniform-weight phase
    Weighted,  // follow with multiplicative-weights reweighting rounds
  } objective = Objective::Weighted;
  std::size_t reweight_rounds = 20;
  double reweight_rate = 0.5;
};

struct TracePoint {
  std::size_t restart = 0;
  std::size_t round = 0;  // 0 = uniform-weight phase, then reweighting rounds
  std::size_t iter = 0;
  double objective = 0.0;  // weighted objective for the segment's weights
  double average_p = 0.0;
  double worst_case_p = 0.0;
};

struct SearchResult {
  QracScheme scheme;
  EvaluationReport report;
  std::vector<TracePoint> trace;
  bool converged = false;
};

/// Helstrom update: the exact maximizer of sum_x w_x Tr(E_{x_i} rho_x) over
/// binary POVMs. E_0 is the projector onto the strictly positive eigenspace of
/// the weighted difference operator, with I/2 on the null space. i is 1-based;
/// weights (one per x, summing to 1) index states MSB-first.
BinaryPovm optimal_povm_for_bit(std::span<const DensityMatrix> states, std::size_t i,
                                std::span<const double> weights);

/// Top eigenvector of sum_i weight_i E^i_{x_i}; the exact maximizer over all
/// states (pure without loss of generality). Uniform weights by default.
PureState optimal_state_for_bits(std::span<const BinaryPovm> povms, const std::string& x,
                                 std::span<const double> weights = {});

/// Alternating exact maximization over measurements and states from seeded
/// random starts, then multiplicative-weights rounds that push up the worst
/// cell. Returns the best scheme across restarts by worst_case_p, ties by
/// average_p. Deterministic given the config.
SearchResult see_saw(std::size_t n, std::size_t m, const SeeSawConfig& config = {});

struct AscentCheck {
  bool ok = true;
  /// Trace indices where the objective decreased beyond tol::ascent_slack
  /// within one (restart, round) segment.
  std::vector<std::size_t> violations;
};

AscentCheck ascent_trace_check(const SearchResult& result);

}  // namespace qrac
