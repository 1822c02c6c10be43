#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qrac/errors.hpp"

namespace qrac {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. Dimensions in this library never
/// exceed 8, so everything is plain loops over contiguous storage.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * dim_ + c];
  }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool is_hermitian(double tolerance) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    a += b;
    return a;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    a -= b;
    return a;
  }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) {
    a *= s;
    return a;
  }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) {
    a *= s;
    return a;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trace out one factor of a bipartite system with dims (dim_a, dim_b);
/// keep = 0 keeps the first factor, keep = 1 the second.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a,
                            std::size_t dim_b, std::size_t keep);

/// |v><v|
ComplexMatrix outer(const std::vector<Complex>& v);

}  // namespace qrac
