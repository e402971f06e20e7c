#include "rkbch/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace rkbch {

Matrix2& Matrix2::operator+=(const Matrix2& o) {
  for (std::size_t k = 0; k < 4; ++k) m[k] += o.m[k];
  return *this;
}

Matrix2& Matrix2::operator-=(const Matrix2& o) {
  for (std::size_t k = 0; k < 4; ++k) m[k] -= o.m[k];
  return *this;
}

Matrix2& Matrix2::operator*=(Complex s) {
  for (auto& v : m) v *= s;
  return *this;
}

Matrix2 operator+(Matrix2 a, const Matrix2& b) { return a += b; }
Matrix2 operator-(Matrix2 a, const Matrix2& b) { return a -= b; }
Matrix2 operator*(Complex s, Matrix2 a) { return a *= s; }
Matrix2 operator*(Matrix2 a, Complex s) { return a *= s; }

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  Matrix2 c;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) c(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return c;
}

double max_abs(const Matrix2& a) {
  double r = 0.0;
  for (const auto& v : a.m) r = std::max(r, std::abs(v));
  return r;
}

double max_abs_diff(const Matrix2& a, const Matrix2& b) { return max_abs(a - b); }

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < n; ++i) r(i, i) = 1.0;
  return r;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> d) {
  ComplexMatrix r(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) r(i, i) = d[i];
  return r;
}

ComplexMatrix ComplexMatrix::from(const Matrix2& a) {
  ComplexMatrix r(2);
  std::copy(a.m.begin(), a.m.end(), r.data_.begin());
  return r;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

ComplexMatrix ComplexMatrix::top_left(std::size_t k) const {
  assert(k <= n_);
  ComplexMatrix r(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) r(i, j) = (*this)(i, j);
  return r;
}

Matrix2 ComplexMatrix::to_matrix2() const {
  assert(n_ == 2);
  Matrix2 r;
  std::copy(data_.begin(), data_.end(), r.m.begin());
  return r;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  assert(o.n_ == n_);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  assert(o.n_ == n_);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& v : data_) v *= s;
  return *this;
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  });
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

double max_abs(const ComplexMatrix& a) {
  double r = 0.0;
  for (const auto& v : a.data()) r = std::max(r, std::abs(v));
  return r;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  assert(a.dim() == b.dim());
  double r = 0.0;
  const auto x = a.data();
  const auto y = b.data();
  for (std::size_t k = 0; k < x.size(); ++k) r = std::max(r, std::abs(x[k] - y[k]));
  return r;
}

double norm1(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  double best = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < n; ++i) col += std::abs(a(i, j));
    best = std::max(best, col);
  }
  return best;
}

}  // namespace rkbch
