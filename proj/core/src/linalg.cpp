#include "courant/linalg.hpp"

#include <stdexcept>

namespace courant {

namespace {

struct Echelon {
  RationalMatrix m;
  std::vector<int> pivots;
};

// Reduced row echelon form, optionally carrying an augmented column.
Echelon reduce(RationalMatrix m, int ncols) {
  Echelon out;
  int row = 0;
  for (int col = 0; col < ncols && row < m.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (!m(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    Rational inv = Rational(1) / m(row, col);
    for (int c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Rational f = m(r, col);
      for (int c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.m = std::move(m);
  return out;
}

}  // namespace

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  RationalMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::vector<RationalVector> nullspace(const RationalMatrix& a) {
  Echelon e = reduce(a, a.cols());
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<RationalVector> basis;
  for (int free = 0; free < a.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    RationalVector v(static_cast<std::size_t>(a.cols()));
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      v[static_cast<std::size_t>(e.pivots[r])] = -e.m(static_cast<int>(r), free);
    Rational lead;
    for (const auto& x : v)
      if (!x.is_zero()) {
        lead = x;
        break;
      }
    for (auto& x : v) x /= lead;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve_free_zero(const RationalMatrix& a, std::span<const Rational> b) {
  if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve: shape mismatch");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[static_cast<std::size_t>(i)];
  }
  Echelon e = reduce(std::move(aug), a.cols());
  const int rk = static_cast<int>(e.pivots.size());
  for (int r = rk; r < a.rows(); ++r)
    if (!e.m(r, a.cols()).is_zero()) return std::nullopt;
  RationalVector x(static_cast<std::size_t>(a.cols()));
  for (int r = 0; r < rk; ++r) x[static_cast<std::size_t>(e.pivots[static_cast<std::size_t>(r)])] = e.m(r, a.cols());
  return x;
}

int rank(const RationalMatrix& a) { return static_cast<int>(reduce(a, a.cols()).pivots.size()); }

std::vector<int> pivot_columns(const RationalMatrix& a) { return reduce(a, a.cols()).pivots; }

Rational determinant(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  RationalMatrix m = a;
  const int n = m.rows();
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!m(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      Rational f = m(r, col) / m(col, col);
      for (int c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

PolyMatrix::PolyMatrix(int rows, int cols, int nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), data_(static_cast<std::size_t>(rows * cols), Poly(nvars)) {}

PolyMatrix PolyMatrix::identity(int n, int nvars) {
  PolyMatrix m(n, n, nvars);
  for (int i = 0; i < n; ++i) m(i, i) = Poly::constant(nvars, 1);
  return m;
}

PolyMatrix PolyMatrix::from_rational(const RationalMatrix& r, int nvars) {
  PolyMatrix m(r.rows(), r.cols(), nvars);
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j) m(i, j) = Poly::constant(nvars, r(i, j));
  return m;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : data_)
    if (!p.is_zero()) return false;
  return true;
}

bool PolyMatrix::is_constant() const {
  for (const auto& p : data_)
    if (!p.is_constant()) return false;
  return true;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_, nvars_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

PolyMatrix PolyMatrix::derivative(int var) const {
  PolyMatrix d(rows_, cols_, nvars_);
  for (std::size_t k = 0; k < data_.size(); ++k) d.data_[k] = data_[k].derivative(var);
  return d;
}

PolyVector PolyMatrix::apply(std::span<const Poly> v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix apply: shape mismatch");
  PolyVector out(static_cast<std::size_t>(rows_), Poly(nvars_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(i)].add_product((*this)(i, j), v[static_cast<std::size_t>(j)]);
  return out;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  PolyMatrix c(a.rows(), b.cols(), a.nvars());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j).add_product(a(i, k), b(k, j));
    }
  return c;
}

PolyMatrix operator*(const Rational& c, PolyMatrix a) {
  for (auto& p : a.data_) p *= c;
  return a;
}

namespace {

PolyMatrix minor_of(const PolyMatrix& m, int row, int col) {
  PolyMatrix out(m.rows() - 1, m.cols() - 1, m.nvars());
  for (int i = 0, oi = 0; i < m.rows(); ++i) {
    if (i == row) continue;
    for (int j = 0, oj = 0; j < m.cols(); ++j) {
      if (j == col) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

}  // namespace

Poly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const int n = m.rows();
  if (n == 0) return Poly::constant(m.nvars(), 1);
  if (n == 1) return m(0, 0);
  Poly det(m.nvars());
  for (int j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    det.add_product(m(0, j), determinant(minor_of(m, 0, j)), j % 2 == 0 ? 1 : -1);
  }
  return det;
}

PolyMatrix adjugate(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("adjugate: matrix not square");
  const int n = m.rows();
  PolyMatrix adj(n, n, m.nvars());
  if (n == 1) {
    adj(0, 0) = Poly::constant(m.nvars(), 1);
    return adj;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Poly c = determinant(minor_of(m, i, j));
      adj(j, i) = (i + j) % 2 == 0 ? c : -c;
    }
  return adj;
}

std::optional<PolyMatrix> inverse_constant_det(const PolyMatrix& m) {
  Poly det = determinant(m);
  if (det.is_zero() || !det.is_constant()) return std::nullopt;
  return (Rational(1) / det.constant_term()) * adjugate(m);
}

}  // namespace courant
