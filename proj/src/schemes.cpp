#include "qrac/schemes.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qrac/tolerances.hpp"

namespace qrac {

std::string index_to_bits(std::size_t value, std::size_t n) {
  std::string bits(n, '0');
  for (std::size_t i = 0; i < n; ++i)
    if (value >> (n - 1 - i) & 1u) bits[i] = '1';
  return bits;
}

std::size_t bits_to_index(const std::string& bits) {
  std::size_t v = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw InvalidArgumentError("bitstring must be over {0,1}");
    v = (v << 1) | static_cast<std::size_t>(c == '1');
  }
  return v;
}

QracScheme::QracScheme(std::size_t n, std::size_t m, std::vector<StateSpec> states,
                       std::vector<BinaryPovm> povms, std::string label)
    : n_(n), m_(m), povms_(std::move(povms)), label_(std::move(label)) {
  if (n_ == 0 || m_ == 0) throw InvalidArgumentError("scheme needs n >= 1 and m >= 1");
  const std::size_t expected_states = std::size_t{1} << n_;
  const std::size_t dim = std::size_t{1} << m_;
  if (states.size() != expected_states) {
    std::ostringstream msg;
    msg << "scheme needs " << expected_states << " states, got " << states.size();
    throw InvariantViolation(msg.str());
  }
  if (povms_.size() != n_) {
    std::ostringstream msg;
    msg << "scheme needs " << n_ << " decoders, got " << povms_.size();
    throw InvariantViolation(msg.str());
  }
  states_.reserve(states.size());
  pure_.reserve(states.size());
  for (auto& spec : states) {
    if (std::holds_alternative<PureState>(spec)) {
      PureState psi = std::get<PureState>(std::move(spec));
      states_.push_back(psi.outer_product());
      pure_.push_back(std::move(psi));
    } else {
      states_.push_back(std::get<DensityMatrix>(std::move(spec)));
      pure_.push_back(std::nullopt);
    }
    if (states_.back().dim() != dim) {
      throw InvariantViolation("scheme state dimension does not match 2^m");
    }
  }
  for (const BinaryPovm& p : povms_) {
    if (p.dim() != dim) throw InvariantViolation("scheme POVM dimension does not match 2^m");
  }
}

namespace {

constexpr double kPi = std::numbers::pi;

PureState real_qubit(double angle) {
  return PureState({Complex{std::cos(angle)}, Complex{std::sin(angle)}});
}

void check_bits(const std::string& x, std::size_t n, const char* who) {
  if (x.size() != n) {
    std::ostringstream msg;
    msg << who << ": expected a " << n << "-bit string, got \"" << x << "\"";
    throw InvalidArgumentError(msg.str());
  }
  for (char c : x)
    if (c != '0' && c != '1') {
      std::ostringstream msg;
      msg << who << ": bitstring must be over {0,1}, got \"" << x << "\"";
      throw InvalidArgumentError(msg.str());
    }
}

PureState plus_state() { return PureState({Complex{1 / std::sqrt(2.0)}, Complex{1 / std::sqrt(2.0)}}); }

PureState plus_i_state() {
  return PureState({Complex{1 / std::sqrt(2.0)}, Complex{0.0, 1 / std::sqrt(2.0)}});
}

BinaryPovm projective(const PureState& u) { return BinaryPovm::from_e0(outer(u.amplitudes())); }

// Decoders of the three-bit coding: z, x and y axis projective measurements.
std::vector<BinaryPovm> chuang3_povms() {
  std::vector<BinaryPovm> povms;
  povms.push_back(projective(PureState::basis_state(2, 0)));
  povms.push_back(projective(plus_state()));
  povms.push_back(projective(plus_i_state()));
  return povms;
}

}  // namespace

PureState encode_ambainis2(const std::string& x) {
  check_bits(x, 2, "encode_ambainis2");
  // 00 -> pi/8, 10 -> 3pi/8, 11 -> 5pi/8, 01 -> 7pi/8.
  double angle = 0.0;
  if (x == "00") angle = kPi / 8;
  else if (x == "10") angle = 3 * kPi / 8;
  else if (x == "11") angle = 5 * kPi / 8;
  else angle = 7 * kPi / 8;
  return real_qubit(angle);
}

PureState encode_chuang3(const std::string& x) {
  check_bits(x, 3, "encode_chuang3");
  const double cos2 = 0.5 + std::sqrt(3.0) / 6.0;
  const double c = std::sqrt(cos2);
  const double s = std::sqrt(1.0 - cos2);
  // Phase pi/4 * {1, -1, 3, -3} keyed by the last two bits.
  double phase = 0.0;
  const std::string tail = x.substr(1);
  if (tail == "00") phase = kPi / 4;
  else if (tail == "01") phase = -kPi / 4;
  else if (tail == "10") phase = 3 * kPi / 4;
  else phase = -3 * kPi / 4;
  const Complex e_phase = std::polar(1.0, phase);
  if (x[0] == '0') return PureState({Complex{c}, e_phase * s});
  return PureState({Complex{s}, e_phase * c});
}

DensityMatrix encode_hinry7(const std::string& x) {
  check_bits(x, 7, "encode_hinry7");
  const double alpha = 6.0 / (7.0 + std::sqrt(3.0));
  const PureState product =
      tensor(encode_chuang3(x.substr(0, 3)), encode_chuang3(x.substr(3, 3)));
  const double inv_sqrt2 = 1 / std::sqrt(2.0);
  std::vector<Complex> xi(4);
  if (x[6] == '0') {
    xi[0] = inv_sqrt2;  // (|00> + |11>)/sqrt(2)
    xi[3] = inv_sqrt2;
  } else {
    xi[1] = inv_sqrt2;  // (|01> + |10>)/sqrt(2)
    xi[2] = inv_sqrt2;
  }
  ComplexMatrix m = Complex{alpha} * outer(product.amplitudes());
  m += Complex{1.0 - alpha} * outer(xi);
  return DensityMatrix(std::move(m));
}

QracScheme standard_scheme(const std::string& name) {
  if (name == "ambainis2") {
    std::vector<QracScheme::StateSpec> states;
    for (std::size_t v = 0; v < 4; ++v) states.emplace_back(encode_ambainis2(index_to_bits(v, 2)));
    std::vector<BinaryPovm> povms;
    povms.push_back(projective(PureState::basis_state(2, 0)));
    povms.push_back(projective(plus_state()));
    return QracScheme(2, 1, std::move(states), std::move(povms), "ambainis2");
  }
  if (name == "chuang3") {
    std::vector<QracScheme::StateSpec> states;
    for (std::size_t v = 0; v < 8; ++v) states.emplace_back(encode_chuang3(index_to_bits(v, 3)));
    return QracScheme(3, 1, std::move(states), chuang3_povms(), "chuang3");
  }
  if (name == "hinry7") {
    std::vector<QracScheme::StateSpec> states;
    for (std::size_t v = 0; v < 128; ++v) states.emplace_back(encode_hinry7(index_to_bits(v, 7)));
    const ComplexMatrix id2 = ComplexMatrix::identity(2);
    std::vector<BinaryPovm> povms;
    for (const BinaryPovm& p : chuang3_povms()) povms.push_back(BinaryPovm::from_e0(kron(p.e0(), id2)));
    for (const BinaryPovm& p : chuang3_povms()) povms.push_back(BinaryPovm::from_e0(kron(id2, p.e0())));
    ComplexMatrix parity_even(4);
    parity_even(0, 0) = 1.0;  // |00><00| + |11><11|
    parity_even(3, 3) = 1.0;
    povms.push_back(BinaryPovm::from_e0(std::move(parity_even)));
    return QracScheme(7, 2, std::move(states), std::move(povms), "hinry7");
  }
  throw InvalidArgumentError("unknown scheme name: " + name);
}

EvaluationReport evaluate_scheme(const QracScheme& scheme) {
  EvaluationReport report;
  report.worst_case_p = 2.0;
  double sum = 0.0;
  const std::size_t num_states = scheme.num_states();
  report.per_cell.resize(num_states);
  for (std::size_t x = 0; x < num_states; ++x) {
    const std::string bits = index_to_bits(x, scheme.n());
    report.per_cell[x].resize(scheme.n());
    for (std::size_t i = 1; i <= scheme.n(); ++i) {
      const int wanted = bit_of(bits, i);
      const double p = measure_prob(scheme.povm(i).effect(wanted), scheme.state(x));
      report.per_cell[x][i - 1] = p;
      sum += p;
      if (p < report.worst_case_p) {
        report.worst_case_p = p;
        report.argmin_cell = CellRef{x, i};
      }
    }
  }
  report.average_p = sum / static_cast<double>(num_states * scheme.n());
  return report;
}

double nayak_bound(std::size_t n, double p) {
  if (n == 0) throw InvalidArgumentError("nayak_bound: n must be >= 1");
  if (p < 0.0 || p > 1.0) throw InvalidArgumentError("nayak_bound: p must lie in [0,1]");
  double h = 0.0;  // binary entropy, limits at the endpoints
  if (p > 0.0 && p < 1.0) h = -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
  return (1.0 - h) * static_cast<double>(n);
}

}  // namespace qrac
