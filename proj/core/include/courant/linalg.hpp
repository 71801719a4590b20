#pragma once

#include <optional>
#include <span>
#include <vector>

#include "courant/poly.hpp"
#include "courant/rational.hpp"

namespace courant {

using RationalVector = std::vector<Rational>;
using PolyVector = std::vector<Poly>;

// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}
  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  const Rational& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

  RationalMatrix transpose() const;
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

// Basis of {v : A v = 0} from the reduced row echelon form;
// each basis vector is scaled so its first nonzero entry is 1.
std::vector<RationalVector> nullspace(const RationalMatrix& a);

// A solution of A x = b with every free (non-pivot) variable set to zero, or
// nullopt when the system is inconsistent.
std::optional<RationalVector> solve_free_zero(const RationalMatrix& a, std::span<const Rational> b);

int rank(const RationalMatrix& a);
Rational determinant(const RationalMatrix& a);

// Column indices that carry a pivot in the echelon form of A.
std::vector<int> pivot_columns(const RationalMatrix& a);

// Dense matrix of polynomials in a fixed number of variables.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols, int nvars);
  static PolyMatrix identity(int n, int nvars);
  static PolyMatrix from_rational(const RationalMatrix& m, int nvars);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nvars() const { return nvars_; }
  Poly& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  const Poly& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

  bool is_zero() const;
  bool is_constant() const;
  PolyMatrix transpose() const;
  PolyMatrix derivative(int var) const;
  PolyVector apply(std::span<const Poly> v) const;

  PolyMatrix& operator+=(const PolyMatrix& o);
  PolyMatrix& operator-=(const PolyMatrix& o);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const Rational& c, PolyMatrix a);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  int nvars_ = 0;
  std::vector<Poly> data_;
};

// Cofactor expansion; intended for the small fiber dimensions used here.
Poly determinant(const PolyMatrix& m);
PolyMatrix adjugate(const PolyMatrix& m);

// Inverse of a matrix whose determinant is a nonzero constant; nullopt otherwise.
std::optional<PolyMatrix> inverse_constant_det(const PolyMatrix& m);

}  // namespace courant
