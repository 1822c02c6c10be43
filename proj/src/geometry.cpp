#include "qrac/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qrac/bloch.hpp"
#include "qrac/eigen.hpp"
#include "qrac/tolerances.hpp"

namespace qrac {

namespace {

double vec_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double e : v) s += e * e;
  return std::sqrt(s);
}

double vec_dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void project_to_ball(std::vector<double>& r) {
  const double n = vec_norm(r);
  if (n > 1.0)
    for (double& e : r) e /= n;
}

struct NormalizedSystem {
  std::vector<std::vector<double>> normals;  // sigma_i * s_i / |s_i|
  std::vector<double> offsets;               // sigma_i * c_i / |s_i|
};

// g_i(r) = normals[i] . r - offsets[i]; the pattern wants every g_i > 0.
double min_margin(const NormalizedSystem& sys, const std::vector<double>& r,
                  std::size_t* active = nullptr) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < sys.normals.size(); ++i) {
    const double g = vec_dot(sys.normals[i], r) - sys.offsets[i];
    if (g < best) {
      best = g;
      if (active) *active = i;
    }
  }
  return best;
}

struct SolveOutcome {
  double margin = -std::numeric_limits<double>::infinity();
  std::vector<double> point;
  bool certified = false;
  bool plateaued = false;
};

// Projected supergradient ascent on min_i g_i over the unit ball, polished by
// alternating projections. Step schedule 0.5 / sqrt(t+1) on unit normals. The
// ascent keeps running while the best margin improves materially, so realized
// witnesses settle near the max-margin point instead of the feasibility edge.
SolveOutcome solve_pattern(const NormalizedSystem& sys, std::size_t dim,
                           double margin_eps, const RegionSolverOptions& opt) {
  constexpr double kMaterialImprovement = 1e-6;
  constexpr std::size_t kConfirmWindow = 300;
  // Alternating projections only have a chance when the ascent got close.
  constexpr double kPolishWindow = 0.05;

  SolveOutcome out;
  std::vector<std::vector<double>> starts;
  starts.emplace_back(dim, 0.0);
  for (const auto& n : sys.normals) starts.push_back(n);

  bool all_plateaued = true;
  for (const auto& start : starts) {
    std::vector<double> r = start;
    std::vector<double> best_point = r;
    double best = min_margin(sys, r);
    std::size_t last_improve = 0;
    bool plateaued = false;
    for (std::size_t t = 0; t < opt.max_iters; ++t) {
      if (best >= margin_eps && t - last_improve > kConfirmWindow) break;
      if (best < margin_eps && t - last_improve > opt.stall_window) {
        plateaued = true;
        break;
      }
      std::size_t active = 0;
      min_margin(sys, r, &active);
      const double step = 0.5 / std::sqrt(static_cast<double>(t + 1));
      for (std::size_t j = 0; j < dim; ++j) r[j] += step * sys.normals[active][j];
      project_to_ball(r);
      const double f = min_margin(sys, r);
      if (f > best) {
        if (f > best + kMaterialImprovement) last_improve = t;
        best = f;
        best_point = r;
      }
    }

    if (best < margin_eps && best >= margin_eps - kPolishWindow) {
      // Alternating-projection polish toward {g_i >= margin_eps} inside the ball.
      r = best_point;
      for (std::size_t cycle = 0; cycle < opt.polish_cycles; ++cycle) {
        for (std::size_t i = 0; i < sys.normals.size(); ++i) {
          const double g = vec_dot(sys.normals[i], r) - sys.offsets[i];
          if (g < margin_eps) {
            const double push = margin_eps - g;
            for (std::size_t j = 0; j < dim; ++j) r[j] += push * sys.normals[i][j];
          }
        }
        project_to_ball(r);
        const double f = min_margin(sys, r);
        if (f > best) {
          best = f;
          best_point = r;
        }
        if (f >= margin_eps) break;
      }
    }

    if (best > out.margin) {
      out.margin = best;
      out.point = best_point;
    }
    if (best >= margin_eps) {
      out.certified = true;
      out.plateaued = false;
      return out;
    }
    all_plateaued = all_plateaued && plateaued;
  }
  out.plateaued = all_plateaued;
  return out;
}

}  // namespace

Halfspace povm_to_halfspace(const BinaryPovm& povm, std::size_t source_index) {
  const std::size_t n = povm.dim();
  const PovmCanonicalForm form = povm_canonical_form(povm);
  Halfspace h;
  h.source_index = source_index;
  h.s.assign(n * n - 1, 0.0);
  double alpha_sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    alpha_sum += form.alphas[j];
    std::vector<Complex> column(n);
    for (std::size_t r = 0; r < n; ++r) column[r] = form.vectors(r, j);
    const BlochVector u = density_to_bloch(DensityMatrix(outer(column)));
    for (std::size_t k = 0; k < h.s.size(); ++k)
      h.s[k] += 0.5 * form.alphas[j] * u.coords[k];
  }
  h.c = 0.5 - alpha_sum / static_cast<double>(n);
  h.degenerate = vec_norm(h.s) < tol::degenerate_normal;
  return h;
}

std::vector<RegionWitness> realized_patterns(const std::vector<Halfspace>& halfspaces,
                                             std::size_t ball_dim, double margin_eps,
                                             const RegionSolverOptions& options) {
  if (ball_dim == 0) throw InvalidArgumentError("realized_patterns: ball_dim must be >= 1");
  if (margin_eps <= 0.0) throw InvalidArgumentError("realized_patterns: margin_eps must be > 0");
  const std::size_t k = halfspaces.size();
  if (k > 24) throw CapacityError("realized_patterns: more than 24 halfspaces");
  for (const Halfspace& h : halfspaces)
    if (h.s.size() != ball_dim)
      throw DimensionError("realized_patterns: halfspace dimension mismatch");

  std::vector<RegionWitness> out;
  if (k == 0) {
    RegionWitness w;
    w.pattern.bits = "";
    w.point = std::vector<double>(ball_dim, 0.0);
    w.margin = std::numeric_limits<double>::infinity();
    w.status = WitnessStatus::Realized;
    out.push_back(std::move(w));
    return out;
  }

  // A degenerate halfspace cannot be strictly decided on either side.
  const bool any_degenerate =
      std::any_of(halfspaces.begin(), halfspaces.end(),
                  [](const Halfspace& h) { return h.degenerate; });

  const std::size_t num_patterns = std::size_t{1} << k;
  out.reserve(num_patterns);
  for (std::size_t w_idx = 0; w_idx < num_patterns; ++w_idx) {
    RegionWitness w;
    w.pattern.bits = index_to_bits(w_idx, k);
    if (any_degenerate) {
      w.margin = -std::numeric_limits<double>::infinity();
      w.status = WitnessStatus::EmptyWithinTolerance;
      out.push_back(std::move(w));
      continue;
    }
    NormalizedSystem sys;
    sys.normals.reserve(k);
    sys.offsets.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      const double sigma = bit_of(w.pattern.bits, i + 1) == 0 ? 1.0 : -1.0;
      const double norm = vec_norm(halfspaces[i].s);
      std::vector<double> n(ball_dim);
      for (std::size_t j = 0; j < ball_dim; ++j) n[j] = sigma * halfspaces[i].s[j] / norm;
      sys.normals.push_back(std::move(n));
      sys.offsets.push_back(sigma * halfspaces[i].c / norm);
    }
    const SolveOutcome sol = solve_pattern(sys, ball_dim, margin_eps, options);
    w.margin = sol.margin;
    if (sol.certified) {
      // Witness re-check: every strict inequality with the demanded margin,
      // and the point inside the ball.
      bool ok = vec_norm(sol.point) <= 1.0 + 1e-12;
      ok = ok && min_margin(sys, sol.point) >= margin_eps;
      if (ok) {
        w.point = sol.point;
        w.status = WitnessStatus::Realized;
      } else {
        w.status = WitnessStatus::Undecided;
      }
    } else {
      w.status = sol.plateaued ? WitnessStatus::EmptyWithinTolerance
                               : WitnessStatus::Undecided;
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::size_t count_realized(const std::vector<RegionWitness>& witnesses) {
  return static_cast<std::size_t>(
      std::count_if(witnesses.begin(), witnesses.end(), [](const RegionWitness& w) {
        return w.status == WitnessStatus::Realized;
      }));
}

std::uint64_t max_regions(std::uint64_t k_hyperplanes, std::uint64_t d) {
  if (d == 0) throw InvalidArgumentError("max_regions: dimension must be >= 1");
  const std::uint64_t top = std::min(k_hyperplanes, d);
  unsigned __int128 total = 0;
  unsigned __int128 binom = 1;  // C(k, 0)
  constexpr unsigned __int128 limit = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t i = 0; i <= top; ++i) {
    if (i > 0) {
      binom = binom * (k_hyperplanes - i + 1);
      binom /= i;
      if (binom > limit) throw CapacityError("max_regions: binomial exceeds 64 bits");
    }
    total += binom;
    if (total > limit) throw CapacityError("max_regions: region count exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(total);
}

NoGoReport no_go_certificate(const QracScheme& scheme, double claimed_p) {
  if (!(claimed_p > 0.5)) {
    throw InvalidArgumentError("no_go_certificate: claimed_p must exceed 1/2");
  }
  NoGoReport report;
  report.claimed_p = claimed_p;
  for (std::size_t i = 1; i <= scheme.n(); ++i)
    report.halfspaces.push_back(povm_to_halfspace(scheme.povm(i), i));

  for (std::size_t x = 0; x < scheme.num_states(); ++x) {
    const std::string bits = index_to_bits(x, scheme.n());
    const BlochVector r = density_to_bloch(scheme.state(x));
    for (std::size_t i = 1; i <= scheme.n(); ++i) {
      const Halfspace& h = report.halfspaces[i - 1];
      const double sigma = bit_of(bits, i) == 0 ? 1.0 : -1.0;
      double lhs = 0.0;
      for (std::size_t j = 0; j < h.s.size(); ++j) lhs += h.s[j] * r.coords[j];
      CellCheck check;
      check.x_index = x;
      check.bit = i;
      check.slack = sigma * (lhs - h.c);
      check.ok = check.slack > tol::strict_slack;
      if (!check.ok && !report.violated) report.violated = check;
      report.checks.push_back(check);
    }
  }

  const std::uint64_t level = std::uint64_t{1} << scheme.m();  // N = 2^m
  report.counting_applicable = scheme.n() == level * level;
  if (report.counting_applicable) {
    report.max_regions_value = max_regions(scheme.n(), level * level - 1);
    report.required_regions = std::uint64_t{1} << scheme.n();
  }
  if (report.violated) {
    report.status = NoGoStatus::Refuted;
  } else {
    report.status = report.counting_applicable ? NoGoStatus::InconsistencyWithTheory
                                               : NoGoStatus::ConsistentAtHalfspaceLevel;
  }
  return report;
}

}  // namespace qrac
