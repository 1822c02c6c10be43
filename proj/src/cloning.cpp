#include "qrac/cloning.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "qrac/tolerances.hpp"

namespace qrac {

namespace {

// Columns of the cloning isometry V : C^2 -> C^8 in (clone1, clone2, ancilla)
// basis order:
//   V|0> = sqrt(2/3)|000> + sqrt(1/6)(|011> + |101>)
//   V|1> = sqrt(2/3)|111> + sqrt(1/6)(|010> + |100>)
std::array<std::array<Complex, 2>, 8> cloning_isometry() {
  std::array<std::array<Complex, 2>, 8> v{};
  const double a = std::sqrt(2.0 / 3.0);
  const double b = std::sqrt(1.0 / 6.0);
  v[0][0] = a;  // |000>
  v[3][0] = b;  // |011>
  v[5][0] = b;  // |101>
  v[7][1] = a;  // |111>
  v[2][1] = b;  // |010>
  v[4][1] = b;  // |100>
  return v;
}

ComplexMatrix apply_isometry(const ComplexMatrix& rho) {
  const auto v = cloning_isometry();
  ComplexMatrix out(8);
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      Complex sum = 0.0;
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
          sum += v[a][i] * rho(i, j) * std::conj(v[b][j]);
      out(a, b) = sum;
    }
  return out;
}

// V^dagger M V for an 8x8 operator M; the 2x2 Heisenberg-picture pullback.
ComplexMatrix pull_back(const ComplexMatrix& m) {
  const auto v = cloning_isometry();
  ComplexMatrix out(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Complex sum = 0.0;
      for (std::size_t a = 0; a < 8; ++a)
        for (std::size_t b = 0; b < 8; ++b)
          sum += std::conj(v[a][i]) * m(a, b) * v[b][j];
      out(i, j) = sum;
    }
  return out;
}

}  // namespace

DensityMatrix buzek_hillery_clone(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw DimensionError("buzek_hillery_clone: input must be a qubit");
  return DensityMatrix(partial_trace(apply_isometry(rho.matrix()), 4, 2, 0));
}

Example3 example3_scheme() {
  // Block decoder on clone 1 (z basis) and target decoders on clone 2.
  const ComplexMatrix f0 = outer({Complex{1.0}, Complex{0.0}});
  const ComplexMatrix f1 = outer({Complex{0.0}, Complex{1.0}});
  const double inv_sqrt2 = 1 / std::sqrt(2.0);
  const ComplexMatrix gx = outer({Complex{inv_sqrt2}, Complex{inv_sqrt2}});
  const ComplexMatrix gy = outer({Complex{inv_sqrt2}, Complex{0.0, inv_sqrt2}});
  const ComplexMatrix id2 = ComplexMatrix::identity(2);

  std::vector<BinaryPovm> povms;
  for (std::size_t target = 1; target <= 4; ++target) {
    const bool first_block = target <= 2;
    const ComplexMatrix& assume = first_block ? f0 : f1;
    const ComplexMatrix& other = first_block ? f1 : f0;
    const ComplexMatrix& g = (target % 2 == 1) ? gx : gy;
    // outcome 0 <=> (block bit as assumed, clone-2 decoder says 0) or
    // (block bit disagrees, fair coin says 0)
    ComplexMatrix m = kron(kron(assume, g), id2);
    m += Complex{0.5} * kron(kron(other, id2), id2);
    povms.push_back(BinaryPovm::from_e0(pull_back(m)));
  }

  std::vector<QracScheme::StateSpec> states;
  for (std::size_t v = 0; v < 16; ++v) {
    const std::string x = index_to_bits(v, 4);
    const PureState a = encode_chuang3(std::string("0") + x[0] + x[1]);
    const PureState b = encode_chuang3(std::string("1") + x[2] + x[3]);
    ComplexMatrix m = Complex{0.5} * outer(a.amplitudes());
    m += Complex{0.5} * outer(b.amplitudes());
    states.emplace_back(DensityMatrix(std::move(m)));
  }

  QracScheme scheme(4, 1, std::move(states), std::move(povms), "example3");

  // p0: success conditioned on the favorable block; must be cell-independent.
  double p0 = -1.0;
  for (std::size_t v = 0; v < 16; ++v) {
    const std::string x = index_to_bits(v, 4);
    for (std::size_t i = 1; i <= 4; ++i) {
      const std::string block = (i <= 2) ? std::string("0") + x[0] + x[1]
                                         : std::string("1") + x[2] + x[3];
      const DensityMatrix favorable = encode_chuang3(block).outer_product();
      const double p = measure_prob(scheme.povm(i).effect(bit_of(x, i)), favorable);
      if (p0 < 0.0) {
        p0 = p;
      } else if (std::abs(p - p0) > tol::geometric) {
        std::ostringstream msg;
        msg << "example3 conditional success varies across cells: " << p0 << " vs " << p;
        throw InvariantViolation(msg.str());
      }
    }
  }

  return Example3{std::move(scheme), p0, (p0 + 0.5) / 2.0};
}

}  // namespace qrac
