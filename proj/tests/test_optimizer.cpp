#include <cmath>

#include "doctest.h"
#include "qrac/bloch.hpp"
#include "qrac/geometry.hpp"
#include "qrac/optimizer.hpp"
#include "qrac/tolerances.hpp"
#include "test_helpers.hpp"

using namespace qrac;
using qrac::testing::random_density;
using qrac::testing::random_pure;

namespace {

double weighted_objective(std::span<const DensityMatrix> states, std::size_t i,
                          std::span<const double> weights, const BinaryPovm& povm) {
  std::size_t n_bits = 0;
  while ((std::size_t{1} << n_bits) < states.size()) ++n_bits;
  double total = 0.0;
  for (std::size_t x = 0; x < states.size(); ++x) {
    const int wanted = (x >> (n_bits - i)) & 1u;
    total += weights[x] * measure_prob(povm.effect(wanted), states[x]);
  }
  return total;
}

}  // namespace

TEST_CASE("optimal_povm_for_bit: orthogonal discrimination and degeneracy") {
  const DensityMatrix zero = PureState::basis_state(2, 0).outer_product();
  const DensityMatrix one = PureState::basis_state(2, 1).outer_product();
  const std::vector<DensityMatrix> states{zero, one};
  const std::vector<double> uniform{0.5, 0.5};
  const BinaryPovm povm = optimal_povm_for_bit(states, 1, uniform);
  CHECK(max_abs_diff(povm.e0(), zero.matrix()) <= tol::derived);

  // All states identical: the difference operator vanishes and E0 = I/2.
  const std::vector<DensityMatrix> same{zero, zero};
  const BinaryPovm flat = optimal_povm_for_bit(same, 1, uniform);
  CHECK(max_abs_diff(flat.e0(), Complex{0.5} * ComplexMatrix::identity(2)) <= tol::derived);

  CHECK_THROWS_AS(optimal_povm_for_bit(states, 3, uniform), InvalidArgumentError);
  CHECK_THROWS_AS(optimal_povm_for_bit(states, 1, std::vector<double>{0.9, 0.9}),
                  InvalidArgumentError);
}

TEST_CASE("optimal_povm_for_bit: recovers the z decoder of the two-bit coding") {
  std::vector<DensityMatrix> states;
  for (std::size_t v = 0; v < 4; ++v)
    states.push_back(encode_ambainis2(index_to_bits(v, 2)).outer_product());
  const std::vector<double> uniform(4, 0.25);
  const BinaryPovm povm = optimal_povm_for_bit(states, 1, uniform);
  CHECK(max_abs_diff(povm.e0(), PureState::basis_state(2, 0).outer_product().matrix()) <=
        tol::geometric);
}

TEST_CASE("optimal_povm_for_bit: beats random projective decoders") {
  SplitMix64 rng(41);
  std::vector<DensityMatrix> states;
  for (int k = 0; k < 4; ++k) states.push_back(random_density(rng, 2));
  std::vector<double> weights(4);
  double total = 0.0;
  for (double& w : weights) {
    w = rng.uniform01() + 0.01;
    total += w;
  }
  for (double& w : weights) w /= total;

  for (std::size_t i = 1; i <= 2; ++i) {
    const BinaryPovm best = optimal_povm_for_bit(states, i, weights);
    const double best_value = weighted_objective(states, i, weights, best);
    for (int trial = 0; trial < 100; ++trial) {
      const BinaryPovm candidate =
          BinaryPovm::from_e0(outer(random_pure(rng, 2).amplitudes()));
      CHECK(best_value >= weighted_objective(states, i, weights, candidate) - tol::derived);
    }
  }
}

TEST_CASE("optimal_state_for_bits: chuang3 decoders give back the encoding state") {
  const QracScheme scheme = standard_scheme("chuang3");
  const PureState psi = optimal_state_for_bits(scheme.povms(), "000");
  const BlochVector r = pure_to_bloch(psi);
  const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
  for (double c : r.coords) CHECK(std::abs(c - inv_sqrt3) <= tol::geometric);
}

TEST_CASE("optimal_state_for_bits: projective case, degeneracy, dominance") {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const BinaryPovm plus = BinaryPovm::from_e0(outer({Complex{inv_sqrt2}, Complex{inv_sqrt2}}));
  const std::vector<BinaryPovm> single{plus};
  const PureState psi = optimal_state_for_bits(single, "0");
  CHECK(max_abs_diff(psi.outer_product().matrix(), plus.e0()) <= tol::derived);

  // Fully uninformative decoders: deterministic canonical pick.
  const BinaryPovm flat = BinaryPovm::from_e0(Complex{0.5} * ComplexMatrix::identity(2));
  const std::vector<BinaryPovm> flats{flat, flat};
  const PureState canonical = optimal_state_for_bits(flats, "01");
  CHECK(std::abs(canonical.amplitudes()[0] - Complex{1.0}) <= tol::derived);

  SplitMix64 rng(42);
  std::vector<BinaryPovm> povms;
  for (int i = 0; i < 3; ++i) povms.push_back(qrac::testing::random_povm(rng, 2));
  const PureState best = optimal_state_for_bits(povms, "010");
  auto score = [&povms](const DensityMatrix& rho) {
    double s = 0.0;
    const std::string x = "010";
    for (std::size_t i = 1; i <= 3; ++i)
      s += measure_prob(povms[i - 1].effect(bit_of(x, i)), rho);
    return s;
  };
  const double best_score = score(best.outer_product());
  for (int trial = 0; trial < 100; ++trial)
    CHECK(best_score >= score(random_pure(rng, 2).outer_product()) - tol::derived);

  CHECK_THROWS_AS(optimal_state_for_bits(single, "00"), InvalidArgumentError);
}

TEST_CASE("see_saw: recovers the two-bit optimum and is deterministic") {
  SeeSawConfig config;
  config.restarts = 6;
  config.max_iters = 300;
  config.reweight_rounds = 10;
  config.seed = 7;
  const SearchResult result = see_saw(2, 1, config);
  CHECK(result.report.worst_case_p >= 0.8535533 - 1e-4);
  CHECK(ascent_trace_check(result).ok);

  const SearchResult again = see_saw(2, 1, config);
  CHECK(again.report.worst_case_p == result.report.worst_case_p);
  CHECK(again.report.average_p == result.report.average_p);
  REQUIRE(again.trace.size() == result.trace.size());
  for (std::size_t t = 0; t < result.trace.size(); ++t)
    CHECK(again.trace[t].objective == result.trace[t].objective);
}

TEST_CASE("see_saw: three-bit coding reaches the known optimum") {
  SeeSawConfig config;
  config.restarts = 8;
  config.max_iters = 300;
  config.reweight_rounds = 12;
  config.seed = 11;
  const SearchResult result = see_saw(3, 1, config);
  CHECK(result.report.worst_case_p >= 0.7886751 - 1e-4);
  CHECK(ascent_trace_check(result).ok);
}

TEST_CASE("see_saw: recovered schemes realize all 2^n sign patterns") {
  SeeSawConfig config;
  config.restarts = 6;
  config.max_iters = 300;
  config.reweight_rounds = 10;
  config.seed = 2;
  for (std::size_t n : {2u, 3u}) {
    const SearchResult result = see_saw(n, 1, config);
    std::vector<Halfspace> halfspaces;
    for (std::size_t i = 1; i <= n; ++i)
      halfspaces.push_back(povm_to_halfspace(result.scheme.povm(i), i));
    CHECK(count_realized(realized_patterns(halfspaces, 3)) == (std::size_t{1} << n));
  }
}

TEST_CASE("see_saw: four bits into one qubit never beat a coin flip") {
  SeeSawConfig config;
  config.restarts = 8;
  config.max_iters = 200;
  config.reweight_rounds = 8;
  config.seed = 3;
  const SearchResult result = see_saw(4, 1, config);
  CHECK(result.report.worst_case_p <= 0.5 + 1e-6);
  CHECK(ascent_trace_check(result).ok);
}

TEST_CASE("see_saw: argument validation") {
  CHECK_THROWS_AS(see_saw(0, 1), InvalidArgumentError);
  CHECK_THROWS_AS(see_saw(2, 3), InvalidArgumentError);
  SeeSawConfig bad;
  bad.conv_tol = 0.0;
  CHECK_THROWS_AS(see_saw(2, 1, bad), InvalidArgumentError);
}

TEST_CASE("ascent_trace_check: flags a handcrafted dip") {
  SeeSawConfig config;
  config.restarts = 1;
  config.max_iters = 50;
  config.reweight_rounds = 1;
  SearchResult result = see_saw(2, 1, config);
  REQUIRE(result.trace.size() >= 3);
  CHECK(ascent_trace_check(result).ok);

  result.trace[2].objective = result.trace[1].objective - 1e-3;
  result.trace[2].restart = result.trace[1].restart;
  result.trace[2].round = result.trace[1].round;
  const AscentCheck check = ascent_trace_check(result);
  CHECK_FALSE(check.ok);
  REQUIRE(check.violations.size() >= 1);
  CHECK(check.violations.front() == 2);
}
