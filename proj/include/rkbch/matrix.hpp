#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "rkbch/types.hpp"

namespace rkbch {

/// Fixed 2×2 complex matrix, row-major.
struct Matrix2 {
  std::array<Complex, 4> m{};

  static Matrix2 identity() { return {{1.0, 0.0, 0.0, 1.0}}; }
  static Matrix2 zero() { return {}; }
  static Matrix2 diag(Complex d0, Complex d1) { return {{d0, 0.0, 0.0, d1}}; }

  Complex& operator()(std::size_t i, std::size_t j) { return m[2 * i + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return m[2 * i + j]; }

  Complex trace() const { return m[0] + m[3]; }
  Complex det() const { return m[0] * m[3] - m[1] * m[2]; }

  Matrix2& operator+=(const Matrix2& o);
  Matrix2& operator-=(const Matrix2& o);
  Matrix2& operator*=(Complex s);
};

Matrix2 operator+(Matrix2 a, const Matrix2& b);
Matrix2 operator-(Matrix2 a, const Matrix2& b);
Matrix2 operator*(const Matrix2& a, const Matrix2& b);
Matrix2 operator*(Complex s, Matrix2 a);
Matrix2 operator*(Matrix2 a, Complex s);

// Standard Pauli convention.
inline const Matrix2 kSigma1{{0.0, 1.0, 1.0, 0.0}};
inline const Matrix2 kSigma2{{0.0, -kI, kI, 0.0}};
inline const Matrix2 kSigma3{{1.0, 0.0, 0.0, -1.0}};

/// Largest absolute entry.
double max_abs(const Matrix2& a);
double max_abs_diff(const Matrix2& a, const Matrix2& b);

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t n) : n_(n), data_(n * n) {}

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> d);
  static ComplexMatrix from(const Matrix2& a);

  std::size_t dim() const { return n_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<Complex> data() { return data_; }
  std::span<const Complex> data() const { return data_; }

  Complex trace() const;
  ComplexMatrix adjoint() const;
  /// Leading k×k block.
  ComplexMatrix top_left(std::size_t k) const;
  Matrix2 to_matrix2() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex s);

  bool all_finite() const;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);

double max_abs(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// Max absolute column sum.
double norm1(const ComplexMatrix& a);

}  // namespace rkbch
