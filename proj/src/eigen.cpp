#include "qrac/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qrac/tolerances.hpp"

namespace qrac {

namespace {

// Full off-diagonal Frobenius mass.
double off_diagonal_mass(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = r + 1; c < a.dim(); ++c) sum += std::norm(a(r, c));
  return std::sqrt(2.0 * sum);
}

// One complex Jacobi rotation zeroing a(p,q). The unitary is identity except
// V(p,p)=c, V(p,q)=s, V(q,p)=-s*conj(w), V(q,q)=c*conj(w) with w the phase of
// a(p,q); a <- V^dagger a V, u <- u V.
void rotate(ComplexMatrix& a, ComplexMatrix& u, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex w = apq / mag;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * mag);
  const double t =
      (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const std::size_t n = a.dim();
  const Complex wc = std::conj(w);
  for (std::size_t k = 0; k < n; ++k) {  // a <- a V
    const Complex akp = a(k, p), akq = a(k, q);
    a(k, p) = c * akp - s * wc * akq;
    a(k, q) = s * akp + c * wc * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {  // a <- V^dagger a
    const Complex apk = a(p, k), aqk = a(q, k);
    a(p, k) = c * apk - s * w * aqk;
    a(q, k) = s * apk + c * w * aqk;
  }
  for (std::size_t k = 0; k < n; ++k) {  // u <- u V
    const Complex ukp = u(k, p), ukq = u(k, q);
    u(k, p) = c * ukp - s * wc * ukq;
    u(k, q) = s * ukp + c * wc * ukq;
  }
}

// Rotate the first sizable component to be real positive.
void fix_phase(ComplexMatrix& vectors, std::size_t col) {
  const std::size_t n = vectors.dim();
  const double pivot = 0.5 / std::sqrt(static_cast<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    const double m = std::abs(vectors(k, col));
    if (m >= pivot) {
      const Complex phase = std::conj(vectors(k, col)) / m;
      for (std::size_t r = 0; r < n; ++r) vectors(r, col) *= phase;
      return;
    }
  }
}

}  // namespace

std::vector<Complex> EigenDecomposition::column(std::size_t j) const {
  std::vector<Complex> v(vectors.dim());
  for (std::size_t r = 0; r < v.size(); ++r) v[r] = vectors(r, j);
  return v;
}

EigenDecomposition hermitian_eigs(const ComplexMatrix& input) {
  const std::size_t n = input.dim();
  if (n == 0) throw DimensionError("hermitian_eigs: empty matrix");

  // Work on the Hermitian part; inputs are Hermitian up to roundoff.
  ComplexMatrix a(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      a(r, c) = 0.5 * (input(r, c) + std::conj(input(c, r)));

  ComplexMatrix u = ComplexMatrix::identity(n);
  const double scale = std::max(1.0, a.frobenius_norm());
  const double target = tol::jacobi_off_mass * scale;
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_mass(a) <= target) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (std::abs(a(p, q)) > target / static_cast<double>(n * n)) rotate(a, u, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&a](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, j) = u(r, order[j]);
  }

  // Deterministic basis inside degenerate blocks: Gram-Schmidt of the block
  // projector applied to canonical coordinates, in index order.
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && out.values[end - 1] - out.values[end] <= tol::eigen_degenerate) ++end;
    const std::size_t block = end - start;
    if (block >= 2) {
      ComplexMatrix proj(n);
      for (std::size_t j = start; j < end; ++j)
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c)
            proj(r, c) += out.vectors(r, j) * std::conj(out.vectors(c, j));

      std::vector<std::vector<Complex>> basis;
      for (std::size_t k = 0; k < n && basis.size() < block; ++k) {
        std::vector<Complex> w(n);
        for (std::size_t r = 0; r < n; ++r) w[r] = proj(r, k);
        for (const auto& b : basis) {
          Complex ip = 0.0;
          for (std::size_t r = 0; r < n; ++r) ip += std::conj(b[r]) * w[r];
          for (std::size_t r = 0; r < n; ++r) w[r] -= ip * b[r];
        }
        double norm = 0.0;
        for (const Complex& e : w) norm += std::norm(e);
        norm = std::sqrt(norm);
        if (norm > 1e-6) {
          for (Complex& e : w) e /= norm;
          basis.push_back(std::move(w));
        }
      }
      if (basis.size() == block) {
        for (std::size_t j = 0; j < block; ++j)
          for (std::size_t r = 0; r < n; ++r) out.vectors(r, start + j) = basis[j][r];
      }
    }
    start = end;
  }

  for (std::size_t j = 0; j < n; ++j) fix_phase(out.vectors, j);
  return out;
}

double min_eigenvalue(const ComplexMatrix& hermitian) {
  return hermitian_eigs(hermitian).values.back();
}

}  // namespace qrac
