#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qrac/povm.hpp"
#include "qrac/states.hpp"

namespace qrac {

/// MSB-first bitstring of length n: bit i (1-based) is position i-1.
std::string index_to_bits(std::size_t value, std::size_t n);
std::size_t bits_to_index(const std::string& bits);
inline int bit_of(const std::string& bits, std::size_t i) {
  return bits[i - 1] == '1' ? 1 : 0;
}

/// An (n, m) random access coding: 2^n encoding states of dimension 2^m and
/// one binary decoder per bit. States indexed by MSB-first bitstring value.
class QracScheme {
 public:
  using StateSpec = std::variant<PureState, DensityMatrix>;

  QracScheme(std::size_t n, std::size_t m, std::vector<StateSpec> states,
             std::vector<BinaryPovm> povms, std::string label);

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  std::size_t num_states() const { return states_.size(); }
  const std::string& label() const { return label_; }

  const DensityMatrix& state(std::size_t x_index) const { return states_[x_index]; }
  /// Present when the state was supplied as an amplitude vector.
  const std::optional<PureState>& pure_origin(std::size_t x_index) const {
    return pure_[x_index];
  }
  const BinaryPovm& povm(std::size_t i) const { return povms_[i - 1]; }  // i is 1-based
  const std::vector<BinaryPovm>& povms() const { return povms_; }

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<DensityMatrix> states_;
  std::vector<std::optional<PureState>> pure_;
  std::vector<BinaryPovm> povms_;
  std::string label_;
};

struct CellRef {
  std::size_t x_index = 0;
  std::size_t bit = 1;  // 1-based decoder index
};

struct EvaluationReport {
  double worst_case_p = 0.0;
  double average_p = 0.0;
  std::vector<std::vector<double>> per_cell;  // [x_index][bit-1]
  CellRef argmin_cell;
};

PureState encode_ambainis2(const std::string& x);
PureState encode_chuang3(const std::string& x);
DensityMatrix encode_hinry7(const std::string& x);

/// Builds one of the named codings: "ambainis2" (n=2, m=1), "chuang3"
/// (n=3, m=1) or "hinry7" (n=7, m=2).
QracScheme standard_scheme(const std::string& name);

/// Success probability Tr(E^i_{x_i} rho_x) for every cell, exact iteration
/// over all 2^n * n cells, deterministic first-minimum tie-break.
EvaluationReport evaluate_scheme(const QracScheme& scheme);

/// (1 - H(p)) * n with H the binary entropy; H(0) and H(1) taken as limits.
double nayak_bound(std::size_t n, double p);

}  // namespace qrac
