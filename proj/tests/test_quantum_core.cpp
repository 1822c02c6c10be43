#include <cmath>

#include "doctest.h"
#include "qrac/bloch.hpp"
#include "qrac/eigen.hpp"
#include "qrac/schemes.hpp"
#include "qrac/tolerances.hpp"
#include "test_helpers.hpp"

using namespace qrac;
using qrac::testing::random_density;
using qrac::testing::random_povm;
using qrac::testing::random_pure;

namespace {

const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

DensityMatrix qubit_zero() { return PureState::basis_state(2, 0).outer_product(); }

}  // namespace

TEST_CASE("gell_mann_basis: N=2 is exactly the Pauli triple") {
  const auto& basis = gell_mann_basis(2);
  REQUIRE(basis.size() == 3);
  const ComplexMatrix x{{0.0, 1.0}, {1.0, 0.0}};
  const ComplexMatrix y{{0.0, Complex{0.0, -1.0}}, {Complex{0.0, 1.0}, 0.0}};
  const ComplexMatrix z{{1.0, 0.0}, {0.0, -1.0}};
  CHECK(max_abs_diff(basis[0], x) == 0.0);
  CHECK(max_abs_diff(basis[1], y) == 0.0);
  CHECK(max_abs_diff(basis[2], z) == 0.0);
}

TEST_CASE("gell_mann_basis: generator properties for N up to 4") {
  for (std::size_t n : {2u, 3u, 4u}) {
    const auto& basis = gell_mann_basis(n);
    REQUIRE(basis.size() == n * n - 1);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(basis[i].is_hermitian(tol::structural));
      CHECK(std::abs(basis[i].trace()) <= tol::structural);
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const Complex ip = (basis[i] * basis[j]).trace();
        const double expected = i == j ? 2.0 : 0.0;
        CHECK(std::abs(ip - expected) <= tol::structural);
      }
    }
  }
}

TEST_CASE("gell_mann_basis: invalid level") {
  CHECK_THROWS_AS(gell_mann_basis(1), InvalidArgumentError);
  CHECK_THROWS_AS(gell_mann_basis(0), InvalidArgumentError);
}

TEST_CASE("density_to_bloch: reference points") {
  const BlochVector mixed = density_to_bloch(DensityMatrix::maximally_mixed(2));
  CHECK(mixed.norm() <= tol::structural);

  const BlochVector zero = density_to_bloch(qubit_zero());
  CHECK(std::abs(zero.coords[0]) <= tol::structural);
  CHECK(std::abs(zero.coords[1]) <= tol::structural);
  CHECK(std::abs(zero.coords[2] - 1.0) <= tol::structural);

  const BlochVector phi000 = pure_to_bloch(encode_chuang3("000"));
  for (double c : phi000.coords) CHECK(std::abs(c - kInvSqrt3) <= tol::derived);
}

TEST_CASE("bloch_to_density: reference points and the PSD gate") {
  CHECK(max_abs_diff(bloch_to_density(BlochVector{2, {0.0, 0.0, 0.0}}).matrix(),
                     DensityMatrix::maximally_mixed(2).matrix()) <= tol::structural);
  CHECK(max_abs_diff(bloch_to_density(BlochVector{4, std::vector<double>(15, 0.0)}).matrix(),
                     DensityMatrix::maximally_mixed(4).matrix()) <= tol::structural);

  const DensityMatrix one = bloch_to_density(BlochVector{2, {0.0, 0.0, -1.0}});
  CHECK(max_abs_diff(one.matrix(), PureState::basis_state(2, 1).outer_product().matrix()) <=
        tol::structural);

  // N=4, coordinate along the diag(1,1,-2,0)/sqrt(3) generator (index 13):
  // I/4 + (t/2) g drops an eigenvalue below zero past t* = sqrt(3)/4.
  auto along_generator = [](double t) {
    std::vector<double> coords(15, 0.0);
    coords[13] = t;
    return BlochVector{4, std::move(coords)};
  };
  CHECK_NOTHROW(bloch_to_density(along_generator(0.42)));
  CHECK_THROWS_AS(bloch_to_density(along_generator(0.5)), NotAStateError);
  try {
    bloch_to_density(along_generator(0.5));
  } catch (const NotAStateError& e) {
    CHECK(std::abs(e.min_eigenvalue - (0.25 - 0.5 / std::sqrt(3.0))) <= 1e-12);
  }

  // Threshold located by bisection against the PSD gate.
  double lo = 0.0, hi = 1.0;
  for (int step = 0; step < 50; ++step) {
    const double mid = 0.5 * (lo + hi);
    try {
      bloch_to_density(along_generator(mid));
      lo = mid;
    } catch (const NotAStateError&) {
      hi = mid;
    }
  }
  CHECK(std::abs(lo - std::sqrt(3.0) / 4.0) <= 1e-6);

  CHECK_THROWS_AS(bloch_to_density(BlochVector{2, {1.0, 0.0}}), DimensionError);
}

TEST_CASE("bloch round-trip on random states, N in {2, 4}") {
  SplitMix64 rng(11);
  for (std::size_t dim : {2u, 4u}) {
    for (int trial = 0; trial < 200; ++trial) {
      const DensityMatrix rho = random_density(rng, dim);
      const BlochVector r = density_to_bloch(rho);
      const DensityMatrix back = bloch_to_density(r);
      CHECK(max_abs_diff(back.matrix(), rho.matrix()) <= tol::derived);
      const BlochVector r2 = density_to_bloch(back);
      for (std::size_t k = 0; k < r.coords.size(); ++k)
        CHECK(std::abs(r.coords[k] - r2.coords[k]) <= tol::derived);
    }
  }
}

TEST_CASE("purity iff unit Bloch norm for qubits") {
  SplitMix64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const PureState psi = random_pure(rng, 2);
    const DensityMatrix rho = psi.outer_product();
    CHECK(rho.is_pure());
    CHECK(std::abs(density_to_bloch(rho).norm() - 1.0) <= tol::geometric);
  }
  for (int trial = 0; trial < 200; ++trial) {
    const DensityMatrix rho = random_density(rng, 2);
    const double norm = density_to_bloch(rho).norm();
    if (rho.is_pure()) {
      CHECK(std::abs(norm - 1.0) <= tol::geometric);
    } else {
      CHECK(norm < 1.0 + tol::geometric);
      CHECK(std::abs(rho.purity() - 1.0) > tol::purity);
    }
  }
}

TEST_CASE("measure_prob: completeness, reference value, trace formula") {
  const DensityMatrix phi00 = encode_ambainis2("00").outer_product();
  CHECK(measure_prob(ComplexMatrix::identity(2), phi00) == doctest::Approx(1.0).epsilon(1e-12));

  const double c8 = std::cos(std::acos(-1.0) / 8.0);
  CHECK(std::abs(measure_prob(qubit_zero().matrix(), phi00) - c8 * c8) <= tol::derived);

  SplitMix64 rng(13);
  for (std::size_t dim : {2u, 4u}) {
    for (int trial = 0; trial < 300; ++trial) {
      const DensityMatrix rho = random_density(rng, dim);
      const DensityMatrix sigma = random_pure(rng, dim).outer_product();
      const double via_trace = measure_prob(sigma.matrix(), rho);
      const double via_bloch =
          1.0 / static_cast<double>(dim) +
          0.5 * dot(density_to_bloch(rho), density_to_bloch(sigma));
      CHECK(std::abs(via_trace - via_bloch) <= tol::derived);
    }
  }

  CHECK_THROWS_AS(measure_prob(ComplexMatrix::identity(4), qubit_zero()), DimensionError);
}

TEST_CASE("binary POVM invariants and completeness of probabilities") {
  SplitMix64 rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t dim = trial % 2 == 0 ? 2 : 4;
    const BinaryPovm povm = random_povm(rng, dim);
    const DensityMatrix rho = random_density(rng, dim);
    const double p0 = measure_prob(povm.e0(), rho);
    const double p1 = measure_prob(povm.e1(), rho);
    CHECK(std::abs(p0 + p1 - 1.0) <= tol::derived);
  }

  // e0 eigenvalue above 1 makes e1 non-PSD.
  ComplexMatrix bad(2);
  bad(0, 0) = 1.2;
  CHECK_THROWS_AS(BinaryPovm::from_e0(bad), InvariantViolation);
}

TEST_CASE("povm_canonical_form: projective, degenerate and weighted cases") {
  const auto projective = povm_canonical_form(BinaryPovm::from_e0(qubit_zero().matrix()));
  CHECK(projective.alphas[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(projective.alphas[1]) <= tol::derived);
  CHECK(std::abs(projective.vectors(0, 0) - Complex{1.0}) <= tol::derived);

  // Fully degenerate: deterministic canonical basis.
  const auto degenerate =
      povm_canonical_form(BinaryPovm::from_e0(Complex{0.5} * ComplexMatrix::identity(2)));
  CHECK(degenerate.alphas[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(degenerate.alphas[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(max_abs_diff(degenerate.vectors, ComplexMatrix::identity(2)) <= tol::derived);

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const std::vector<Complex> plus{inv_sqrt2, inv_sqrt2};
  const std::vector<Complex> minus{inv_sqrt2, -inv_sqrt2};
  ComplexMatrix weighted(2);
  weighted += Complex{0.8} * outer(plus);
  weighted += Complex{0.3} * outer(minus);
  const auto form = povm_canonical_form(BinaryPovm::from_e0(weighted));
  CHECK(form.alphas[0] == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(form.alphas[1] == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(std::abs(form.vectors(0, 0) - Complex{inv_sqrt2}) <= tol::derived);
  CHECK(std::abs(form.vectors(1, 0) - Complex{inv_sqrt2}) <= tol::derived);
}

TEST_CASE("povm_canonical_form: reconstruction on random POVMs") {
  SplitMix64 rng(15);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t dim = trial % 2 == 0 ? 2 : 4;
    const BinaryPovm povm = random_povm(rng, dim);
    const auto form = povm_canonical_form(povm);
    ComplexMatrix rebuilt(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
          rebuilt(r, c) += form.alphas[j] * form.vectors(r, j) * std::conj(form.vectors(c, j));
      if (j > 0) CHECK(form.alphas[j] <= form.alphas[j - 1] + tol::derived);
    }
    CHECK(max_abs_diff(rebuilt, povm.e0()) <= tol::derived);
    // Orthonormal columns.
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b) {
        Complex ip = 0.0;
        for (std::size_t r = 0; r < dim; ++r)
          ip += std::conj(form.vectors(r, a)) * form.vectors(r, b);
        CHECK(std::abs(ip - (a == b ? Complex{1.0} : Complex{0.0})) <= tol::derived);
      }
  }
}

TEST_CASE("tensor and partial trace") {
  const DensityMatrix mixed2 = DensityMatrix::maximally_mixed(2);
  CHECK(max_abs_diff(tensor(mixed2, mixed2).matrix(),
                     DensityMatrix::maximally_mixed(4).matrix()) <= tol::structural);

  const DensityMatrix zero = qubit_zero();
  const DensityMatrix one = PureState::basis_state(2, 1).outer_product();
  const DensityMatrix zo = tensor(zero, one);
  CHECK(max_abs_diff(zo.matrix(), PureState::basis_state(4, 1).outer_product().matrix()) <=
        tol::structural);

  // Product of two pure qubits has Bloch norm sqrt(3/2) in the N=4 basis,
  // since Tr(rho^2) = 1/N + |r|^2 / 2.
  SplitMix64 rng(16);
  for (int trial = 0; trial < 50; ++trial) {
    const DensityMatrix product =
        tensor(random_pure(rng, 2).outer_product(), random_pure(rng, 2).outer_product());
    CHECK(std::abs(density_to_bloch(product).norm() - std::sqrt(1.5)) <= tol::geometric);
  }

  // Bell pair marginal is maximally mixed.
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const PureState xi0({inv_sqrt2, 0.0, 0.0, inv_sqrt2});
  const DensityMatrix marginal = partial_trace_state(xi0.outer_product(), 2, 2, 0);
  CHECK(max_abs_diff(marginal.matrix(), mixed2.matrix()) <= tol::structural);

  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix a = random_density(rng, 2);
    const DensityMatrix b = random_density(rng, 2);
    CHECK(max_abs_diff(partial_trace_state(tensor(a, b), 2, 2, 0).matrix(), a.matrix()) <=
          tol::structural);
    CHECK(max_abs_diff(partial_trace_state(tensor(a, b), 2, 2, 1).matrix(), b.matrix()) <=
          tol::structural);
  }

  CHECK(max_abs_diff(partial_trace_state(DensityMatrix::maximally_mixed(4), 2, 2, 1).matrix(),
                     mixed2.matrix()) <= tol::structural);

  CHECK_THROWS_AS(partial_trace(ComplexMatrix::identity(6), 4, 2, 0), DimensionError);
}

TEST_CASE("hermitian_eigs: reconstruction on random Hermitians up to dim 8") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = 2 + trial % 7;
    ComplexMatrix a(dim);
    for (std::size_t r = 0; r < dim; ++r) {
      a(r, r) = rng.gaussian();
      for (std::size_t c = r + 1; c < dim; ++c) {
        a(r, c) = Complex{rng.gaussian(), rng.gaussian()};
        a(c, r) = std::conj(a(r, c));
      }
    }
    const EigenDecomposition eig = hermitian_eigs(a);
    ComplexMatrix rebuilt(dim);
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
          rebuilt(r, c) += eig.values[j] * eig.vectors(r, j) * std::conj(eig.vectors(c, j));
    CHECK(max_abs_diff(rebuilt, a) <= 1e-11 * std::max(1.0, a.max_abs()));
  }
}

TEST_CASE("pure state invariants") {
  CHECK_THROWS_AS(PureState({Complex{0.5}, Complex{0.5}}), InvariantViolation);
  const PureState psi = PureState::normalized({Complex{1.0}, Complex{1.0}});
  CHECK(psi.outer_product().is_pure());
  CHECK_THROWS_AS(PureState::normalized({Complex{0.0}, Complex{0.0}}), InvalidArgumentError);

  ComplexMatrix not_trace_one(2);
  not_trace_one(0, 0) = 0.9;
  CHECK_THROWS_AS(DensityMatrix{not_trace_one}, InvariantViolation);
}
