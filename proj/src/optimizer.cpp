#include "qrac/optimizer.hpp"

#include <cmath>
#include <sstream>

#include "qrac/eigen.hpp"
#include "qrac/rng.hpp"
#include "qrac/tolerances.hpp"

namespace qrac {

namespace {

double trace_product_real(const ComplexMatrix& a, const ComplexMatrix& b) {
  Complex t = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) t += a(i, j) * b(j, i);
  return t.real();
}

// Projector onto the strictly positive eigenspace plus I/2 on the null space.
ComplexMatrix positive_part_povm(const ComplexMatrix& delta) {
  const auto eig = hermitian_eigs(delta);
  const std::size_t n = delta.dim();
  ComplexMatrix e0(n);
  for (std::size_t j = 0; j < n; ++j) {
    double weight = 0.0;
    if (eig.values[j] > tol::eigen_degenerate) {
      weight = 1.0;
    } else if (eig.values[j] >= -tol::eigen_degenerate) {
      weight = 0.5;
    } else {
      continue;
    }
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        e0(r, c) += weight * eig.vectors(r, j) * std::conj(eig.vectors(c, j));
  }
  return e0;
}

ComplexMatrix helstrom_e0(const std::vector<ComplexMatrix>& states, std::size_t n_bits,
                          std::size_t i, std::span<const double> weights) {
  const std::size_t dim = states.front().dim();
  ComplexMatrix delta(dim);
  for (std::size_t x = 0; x < states.size(); ++x) {
    const double w = weights[x];
    if (w == 0.0) continue;
    const double sign = (x >> (n_bits - i)) & 1u ? -w : w;
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) delta(r, c) += sign * states[x](r, c);
  }
  return positive_part_povm(delta);
}

std::vector<Complex> top_eigenvector(const ComplexMatrix& m) {
  return hermitian_eigs(m).column(0);
}

struct Cells {
  std::vector<double> p;  // x-major, then bit
  double worst = 2.0;
  double average = 0.0;
  std::size_t argmin = 0;
};

Cells compute_cells(const std::vector<ComplexMatrix>& states,
                    const std::vector<ComplexMatrix>& povm_e0, std::size_t n_bits) {
  Cells cells;
  cells.p.resize(states.size() * n_bits);
  double sum = 0.0;
  for (std::size_t x = 0; x < states.size(); ++x) {
    for (std::size_t i = 1; i <= n_bits; ++i) {
      const double p0 = trace_product_real(povm_e0[i - 1], states[x]);
      const double p = (x >> (n_bits - i)) & 1u ? 1.0 - p0 : p0;
      const std::size_t idx = x * n_bits + (i - 1);
      cells.p[idx] = p;
      sum += p;
      if (p < cells.worst) {
        cells.worst = p;
        cells.argmin = idx;
      }
    }
  }
  cells.average = sum / static_cast<double>(cells.p.size());
  return cells;
}

}  // namespace

BinaryPovm optimal_povm_for_bit(std::span<const DensityMatrix> states, std::size_t i,
                                std::span<const double> weights) {
  if (states.empty()) throw InvalidArgumentError("optimal_povm_for_bit: no states");
  std::size_t n_bits = 0;
  while ((std::size_t{1} << n_bits) < states.size()) ++n_bits;
  if ((std::size_t{1} << n_bits) != states.size()) {
    throw InvalidArgumentError("optimal_povm_for_bit: state count must be a power of 2");
  }
  if (i < 1 || i > n_bits) throw InvalidArgumentError("optimal_povm_for_bit: bit out of range");
  if (weights.size() != states.size()) {
    throw DimensionError("optimal_povm_for_bit: one weight per state required");
  }
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw InvalidArgumentError("optimal_povm_for_bit: negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > tol::geometric) {
    throw InvalidArgumentError("optimal_povm_for_bit: weights must sum to 1");
  }
  std::vector<ComplexMatrix> mats;
  mats.reserve(states.size());
  for (const DensityMatrix& s : states) mats.push_back(s.matrix());
  return BinaryPovm::from_e0(helstrom_e0(mats, n_bits, i, weights));
}

PureState optimal_state_for_bits(std::span<const BinaryPovm> povms, const std::string& x,
                                 std::span<const double> weights) {
  if (povms.empty()) throw InvalidArgumentError("optimal_state_for_bits: no POVMs");
  if (x.size() != povms.size()) {
    throw InvalidArgumentError("optimal_state_for_bits: bitstring length must match POVM count");
  }
  if (!weights.empty() && weights.size() != povms.size()) {
    throw DimensionError("optimal_state_for_bits: one weight per POVM required");
  }
  const std::size_t dim = povms.front().dim();
  ComplexMatrix score(dim);
  for (std::size_t i = 1; i <= povms.size(); ++i) {
    const double w = weights.empty() ? 1.0 : weights[i - 1];
    const ComplexMatrix& effect = povms[i - 1].effect(bit_of(x, i));
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) score(r, c) += w * effect(r, c);
  }
  return PureState(top_eigenvector(score));
}

SearchResult see_saw(std::size_t n, std::size_t m, const SeeSawConfig& config) {
  if (n < 1 || n > 16) throw InvalidArgumentError("see_saw: n must be in [1, 16]");
  if (m < 1 || (std::size_t{1} << m) > 4) {
    throw InvalidArgumentError("see_saw: desk-scale cap is 2^m <= 4");
  }
  if (config.restarts < 1 || config.max_iters < 1 || config.reweight_rounds < 1) {
    throw InvalidArgumentError("see_saw: counts must be >= 1");
  }
  if (!(config.conv_tol > 0.0)) throw InvalidArgumentError("see_saw: conv_tol must be > 0");

  const std::size_t dim = std::size_t{1} << m;
  const std::size_t num_states = std::size_t{1} << n;
  const std::size_t num_cells = num_states * n;
  const std::size_t rounds =
      config.objective == SeeSawConfig::Objective::Weighted ? config.reweight_rounds : 0;

  struct Best {
    double worst = -1.0;
    double average = -1.0;
    std::vector<std::vector<Complex>> amps;
    std::vector<ComplexMatrix> povm_e0;
  } best;

  SearchResult result{
      QracScheme(1, 1,
                 {PureState::basis_state(2, 0), PureState::basis_state(2, 0)},
                 {BinaryPovm::from_e0(outer({Complex{1.0}, Complex{0.0}}))}, "placeholder"),
      {}, {}, true};

  for (std::size_t restart = 0; restart < config.restarts; ++restart) {
    SplitMix64 rng(SplitMix64::derive(config.seed, restart));

    std::vector<std::vector<Complex>> amps(num_states);
    std::vector<ComplexMatrix> states(num_states, ComplexMatrix(dim));
    for (std::size_t x = 0; x < num_states; ++x) {
      std::vector<Complex> a(dim);
      for (Complex& e : a) e = Complex{rng.gaussian(), rng.gaussian()};
      amps[x] = PureState::normalized(std::move(a)).amplitudes();
      states[x] = outer(amps[x]);
    }
    std::vector<ComplexMatrix> povm_e0(n, ComplexMatrix(dim));
    std::vector<double> weights(num_cells, 1.0 / static_cast<double>(num_cells));

    Cells cells;
    for (std::size_t round = 0; round <= rounds; ++round) {
      if (round > 0) {
        // Multiplicative weights: deficit below the current minimum.
        double total = 0.0;
        for (std::size_t c = 0; c < num_cells; ++c) {
          weights[c] *= std::exp(config.reweight_rate * (cells.worst - cells.p[c]));
          total += weights[c];
        }
        for (double& w : weights) w /= total;
      }

      double prev_obj = -1.0;
      bool segment_converged = false;
      std::vector<double> bit_weights(num_states);
      for (std::size_t iter = 0; iter < config.max_iters; ++iter) {
        for (std::size_t i = 1; i <= n; ++i) {
          double col = 0.0;
          for (std::size_t x = 0; x < num_states; ++x) col += weights[x * n + (i - 1)];
          for (std::size_t x = 0; x < num_states; ++x)
            bit_weights[x] = col > 0.0 ? weights[x * n + (i - 1)] / col : 0.0;
          povm_e0[i - 1] = helstrom_e0(states, n, i, bit_weights);
        }
        for (std::size_t x = 0; x < num_states; ++x) {
          ComplexMatrix score(dim);
          for (std::size_t i = 1; i <= n; ++i) {
            const double w = weights[x * n + (i - 1)];
            const bool flip = (x >> (n - i)) & 1u;
            // w * E^i_{x_i} contributes; I-part of e1 shifts the objective by a
            // constant, so only the signed e0 part matters for the argmax.
            const double sign = flip ? -w : w;
            for (std::size_t r = 0; r < dim; ++r)
              for (std::size_t c = 0; c < dim; ++c)
                score(r, c) += sign * povm_e0[i - 1](r, c);
          }
          amps[x] = top_eigenvector(score);
          states[x] = outer(amps[x]);
        }
        cells = compute_cells(states, povm_e0, n);
        double obj = 0.0;
        for (std::size_t c = 0; c < num_cells; ++c) obj += weights[c] * cells.p[c];
        result.trace.push_back(
            TracePoint{restart, round, iter, obj, cells.average, cells.worst});
        if (iter > 0 && std::abs(obj - prev_obj) < config.conv_tol) {
          segment_converged = true;
          break;
        }
        prev_obj = obj;
      }
      result.converged = result.converged && segment_converged;

      if (cells.worst > best.worst ||
          (cells.worst == best.worst && cells.average > best.average)) {
        best.worst = cells.worst;
        best.average = cells.average;
        best.amps = amps;
        best.povm_e0 = povm_e0;
      }
    }
  }

  std::vector<QracScheme::StateSpec> specs;
  specs.reserve(num_states);
  for (auto& a : best.amps) specs.emplace_back(PureState(std::move(a)));
  std::vector<BinaryPovm> povms;
  povms.reserve(n);
  for (auto& e0 : best.povm_e0) povms.push_back(BinaryPovm::from_e0(std::move(e0)));
  std::ostringstream label;
  label << "seesaw-n" << n << "m" << m << "-seed" << config.seed;
  result.scheme = QracScheme(n, m, std::move(specs), std::move(povms), label.str());
  result.report = evaluate_scheme(result.scheme);
  return result;
}

AscentCheck ascent_trace_check(const SearchResult& result) {
  AscentCheck check;
  for (std::size_t t = 1; t < result.trace.size(); ++t) {
    const TracePoint& prev = result.trace[t - 1];
    const TracePoint& cur = result.trace[t];
    if (cur.restart == prev.restart && cur.round == prev.round &&
        cur.objective < prev.objective - tol::ascent_slack) {
      check.violations.push_back(t);
    }
  }
  check.ok = check.violations.empty();
  return check;
}

}  // namespace qrac
