#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nleib/rational.hpp"

namespace nleib {

using Vector = std::vector<Rat>;

bool is_zero(const Vector& v);
Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);  // 0-based position
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rat& c, const Vector& v);
void add_scaled(Vector& v, const Rat& c, const Vector& w);  // v += c*w
std::string vector_to_string(const Vector& v);  // "2 e1 + 1/3 e4", "0"

/// Dense matrix of exact rationals, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  void set_row(std::size_t r, const Vector& v);

  bool is_zero() const;
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rat& c, const Matrix& a);
Vector operator*(const Matrix& a, const Vector& v);
Matrix transpose(const Matrix& a);
Matrix mat_pow(const Matrix& a, unsigned long e);
Rat trace(const Matrix& a);
Rat det(const Matrix& a);
Matrix commutator(const Matrix& a, const Matrix& b);  // ab - ba

Vector flatten(const Matrix& a);  // row-major
Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols);

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
RrefResult rref(const Matrix& m);

}  // namespace nleib
