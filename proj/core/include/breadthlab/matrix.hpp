#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "breadthlab/field.hpp"

namespace breadthlab {

class Subspace;

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);

  static Matrix identity(Field f, std::size_t n);
  static Matrix from_rows(Field f, const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_ints(Field f, std::initializer_list<std::initializer_list<std::int64_t>> rows);

  Field field() const { return f_; }
  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool is_square() const { return r_ == c_; }
  bool is_zero() const;

  FieldElem& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const FieldElem& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  FieldElem& at(std::size_t i, std::size_t j);
  const FieldElem& at(std::size_t i, std::size_t j) const;

  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;
  void set_row(std::size_t i, const Vector& v);
  void set_col(std::size_t j, const Vector& v);
  Matrix transpose() const;
  /// M v for a column vector v.
  Vector apply(const Vector& v) const;

  const std::vector<FieldElem>& entries() const { return a_; }
  std::vector<FieldElem>& entries() { return a_; }

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const FieldElem& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  Field f_;
  std::size_t r_ = 0;
  std::size_t c_ = 0;
  std::vector<FieldElem> a_;
};

struct RrefResult {
  Matrix reduced;                   // same shape as the input, zero rows at the bottom
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Subspace kernel(const Matrix& m);
FieldElem det(const Matrix& m);
/// Throws DivisionByZero for singular input.
Matrix inverse(const Matrix& m);
bool is_skew(const Matrix& m);
/// Requires a skew-symmetric matrix of even size.
FieldElem pfaffian(const Matrix& m);

}  // namespace breadthlab
