#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "rigcert/complex_box.hpp"

namespace rigcert {

/// Dense square matrix, row-major. Scalar is std::complex<double> (fast
/// mode) or ComplexBox (rigorous mode).
template <class Scalar>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  static SquareMatrix identity(std::size_t dim) {
    SquareMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = Scalar(std::complex<double>(1.0, 0.0));
    return m;
  }

  std::size_t dim() const { return dim_; }
  Scalar& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const Scalar& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  std::span<const Scalar> entries() const { return entries_; }

  SquareMatrix& operator+=(const SquareMatrix& rhs) {
    check_same(rhs);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
    return *this;
  }

  SquareMatrix& operator-=(const SquareMatrix& rhs) {
    check_same(rhs);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix lhs, const SquareMatrix& rhs) { return lhs += rhs; }
  friend SquareMatrix operator-(SquareMatrix lhs, const SquareMatrix& rhs) { return lhs -= rhs; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    a.check_same(b);
    const std::size_t n = a.dim_;
    SquareMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& aik = a(i, k);
        if (is_exact_zero(aik)) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (is_exact_zero(b(k, j))) continue;
          out(i, j) += aik * b(k, j);
        }
      }
    }
    return out;
  }

  template <class Factor>
  friend SquareMatrix scaled(const Factor& s, SquareMatrix m) {
    for (Scalar& x : m.entries_) x = s * x;
    return m;
  }

 private:
  static bool is_exact_zero(const std::complex<double>& z) { return z == std::complex<double>(); }
  static bool is_exact_zero(const ComplexBox& z) { return z.re().is_exact_zero() && z.im().is_exact_zero(); }

  void check_same(const SquareMatrix& other) const {
    if (dim_ != other.dim_) throw std::invalid_argument("matrix dimension mismatch");
  }

  std::size_t dim_ = 0;
  std::vector<Scalar> entries_;
};

using FastMatrix = SquareMatrix<std::complex<double>>;
using BoxMatrix = SquareMatrix<ComplexBox>;

/// Kronecker product a (x) b in lexicographic basis order.
template <class Scalar>
SquareMatrix<Scalar> kron(const SquareMatrix<Scalar>& a, const SquareMatrix<Scalar>& b) {
  const std::size_t n = a.dim();
  const std::size_t m = b.dim();
  SquareMatrix<Scalar> out(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) out(i * m + k, j * m + l) = a(i, j) * b(k, l);
  return out;
}

/// Max row sum of |entries| (submultiplicative).
double norm_inf(const FastMatrix& m);
/// Largest entry modulus.
double max_abs(const FastMatrix& m);
std::complex<double> determinant(FastMatrix m);
FastMatrix midpoint(const BoxMatrix& m);

}  // namespace rigcert
