#include "qrac/complex_matrix.hpp"

#include <cmath>

namespace qrac {

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw DimensionError("entry count does not match declared dimension");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  entries_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) {
      throw DimensionError("matrix initializer is not square");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const Complex& e : entries_) sum += std::norm(e);
  return std::sqrt(sum);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

bool ComplexMatrix::is_hermitian(double tolerance) const {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r; c < dim_; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tolerance) return false;
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) throw DimensionError("matrix addition: dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) throw DimensionError("matrix subtraction: dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (Complex& e : entries_) e *= scalar;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("matrix product: dimension mismatch");
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{}) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      m = std::max(m, std::abs(a(r, c) - b(r, c)));
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t ra = 0; ra < na; ++ra)
    for (std::size_t ca = 0; ca < na; ++ca) {
      const Complex f = a(ra, ca);
      if (f == Complex{}) continue;
      for (std::size_t rb = 0; rb < nb; ++rb)
        for (std::size_t cb = 0; cb < nb; ++cb)
          out(ra * nb + rb, ca * nb + cb) = f * b(rb, cb);
    }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a,
                            std::size_t dim_b, std::size_t keep) {
  if (dim_a * dim_b != m.dim()) {
    throw DimensionError("partial_trace: dims do not factor the matrix dimension");
  }
  if (keep > 1) throw InvalidArgumentError("partial_trace: keep must be 0 or 1");
  if (keep == 0) {
    ComplexMatrix out(dim_a);
    for (std::size_t i = 0; i < dim_a; ++i)
      for (std::size_t j = 0; j < dim_a; ++j) {
        Complex sum = 0.0;
        for (std::size_t k = 0; k < dim_b; ++k) sum += m(i * dim_b + k, j * dim_b + k);
        out(i, j) = sum;
      }
    return out;
  }
  ComplexMatrix out(dim_b);
  for (std::size_t k = 0; k < dim_b; ++k)
    for (std::size_t l = 0; l < dim_b; ++l) {
      Complex sum = 0.0;
      for (std::size_t i = 0; i < dim_a; ++i) sum += m(i * dim_b + k, i * dim_b + l);
      out(k, l) = sum;
    }
  return out;
}

ComplexMatrix outer(const std::vector<Complex>& v) {
  ComplexMatrix m(v.size());
  for (std::size_t r = 0; r < v.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = v[r] * std::conj(v[c]);
  return m;
}

}  // namespace qrac
