#include "courant/fiber.hpp"

#include <stdexcept>

namespace courant {

PolyVector zero_vector(int size, int nvars) {
  return PolyVector(static_cast<std::size_t>(size), Poly(nvars));
}

QuadLieAlgebra::QuadLieAlgebra(int dim, std::vector<Rational> constants, RationalMatrix metric)
    : dim_(dim), constants_(std::move(constants)), metric_(std::move(metric)) {
  if (dim < 0) throw std::invalid_argument("fiber dimension must be nonnegative");
  if (constants_.size() != static_cast<std::size_t>(dim * dim * dim))
    throw std::invalid_argument("structure constants: expected dim^3 entries");
  if (metric_.rows() != dim || metric_.cols() != dim)
    throw std::invalid_argument("fiber metric: expected dim x dim matrix");
}

QuadLieAlgebra QuadLieAlgebra::abelian(int dim) {
  return QuadLieAlgebra(dim, std::vector<Rational>(static_cast<std::size_t>(dim * dim * dim)),
                        RationalMatrix::identity(dim));
}

QuadLieAlgebra QuadLieAlgebra::su2() {
  std::vector<Rational> c(27);
  auto set = [&](int i, int j, int k, int v) { c[static_cast<std::size_t>((i * 3 + j) * 3 + k)] = v; };
  set(0, 1, 2, 1);
  set(1, 2, 0, 1);
  set(2, 0, 1, 1);
  set(1, 0, 2, -1);
  set(2, 1, 0, -1);
  set(0, 2, 1, -1);
  return QuadLieAlgebra(3, std::move(c), RationalMatrix::identity(3));
}

QuadLieAlgebra QuadLieAlgebra::direct_sum(const QuadLieAlgebra& a, const QuadLieAlgebra& b) {
  const int m = a.dim() + b.dim();
  std::vector<Rational> c(static_cast<std::size_t>(m * m * m));
  RationalMatrix g(m, m);
  auto at = [m](int i, int j, int k) { return static_cast<std::size_t>((i * m + j) * m + k); };
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      g(i, j) = a.metric()(i, j);
      for (int k = 0; k < a.dim(); ++k) c[at(i, j, k)] = a.c(i, j, k);
    }
  }
  const int o = a.dim();
  for (int i = 0; i < b.dim(); ++i) {
    for (int j = 0; j < b.dim(); ++j) {
      g(o + i, o + j) = b.metric()(i, j);
      for (int k = 0; k < b.dim(); ++k) c[at(o + i, o + j, o + k)] = b.c(i, j, k);
    }
  }
  return QuadLieAlgebra(m, std::move(c), std::move(g));
}

Rational QuadLieAlgebra::b(int i, int j, int k) const {
  Rational s;
  for (int l = 0; l < dim_; ++l)
    if (!c(i, j, l).is_zero()) s += c(i, j, l) * metric_(l, k);
  return s;
}

PolyVector QuadLieAlgebra::bracket(std::span<const Poly> r, std::span<const Poly> s, int nvars) const {
  if (static_cast<int>(r.size()) != dim_ || static_cast<int>(s.size()) != dim_)
    throw std::invalid_argument("fiber bracket: length mismatch");
  PolyVector out = zero_vector(dim_, nvars);
  for (int i = 0; i < dim_; ++i) {
    if (r[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (s[static_cast<std::size_t>(j)].is_zero()) continue;
      Poly rs = r[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j)];
      for (int k = 0; k < dim_; ++k)
        if (!c(i, j, k).is_zero()) out[static_cast<std::size_t>(k)] += rs * c(i, j, k);
    }
  }
  return out;
}

Poly QuadLieAlgebra::inner(std::span<const Poly> r, std::span<const Poly> s, int nvars) const {
  if (static_cast<int>(r.size()) != dim_ || static_cast<int>(s.size()) != dim_)
    throw std::invalid_argument("fiber metric: length mismatch");
  Poly out(nvars);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (!metric_(i, j).is_zero())
        out.add_product(r[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)], metric_(i, j));
  return out;
}

PolyVector QuadLieAlgebra::lower(std::span<const Poly> r, int nvars) const {
  if (static_cast<int>(r.size()) != dim_) throw std::invalid_argument("fiber metric: length mismatch");
  PolyVector out = zero_vector(dim_, nvars);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (!metric_(i, j).is_zero()) out[static_cast<std::size_t>(i)] += metric_(i, j) * r[static_cast<std::size_t>(j)];
  return out;
}

RationalMatrix QuadLieAlgebra::ad(std::span<const Rational> v) const {
  RationalMatrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    if (v[static_cast<std::size_t>(j)].is_zero()) continue;
    for (int i = 0; i < dim_; ++i)
      for (int k = 0; k < dim_; ++k) m(k, i) += v[static_cast<std::size_t>(j)] * c(j, i, k);
  }
  return m;
}

PolyMatrix QuadLieAlgebra::ad(std::span<const Poly> v, int nvars) const {
  PolyMatrix m(dim_, dim_, nvars);
  for (int j = 0; j < dim_; ++j) {
    if (v[static_cast<std::size_t>(j)].is_zero()) continue;
    for (int i = 0; i < dim_; ++i)
      for (int k = 0; k < dim_; ++k)
        if (!c(j, i, k).is_zero()) m(k, i) += v[static_cast<std::size_t>(j)] * c(j, i, k);
  }
  return m;
}

RationalMatrix QuadLieAlgebra::ad_basis(int i) const {
  RationalVector v(static_cast<std::size_t>(dim_));
  v[static_cast<std::size_t>(i)] = 1;
  return ad(v);
}

Report validate_fiber(const QuadLieAlgebra& a) {
  const int m = a.dim();
  Report report;

  CheckBuilder skew("fiber_skew", "c[i][j][k] + c[j][i][k] = 0");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k < m; ++k) skew.expect_zero(a.c(i, j, k) + a.c(j, i, k), {i, j, k});
  skew.finish_into(report);

  CheckBuilder jacobi("fiber_jacobi", "[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0");
  for (int i = 0; i < m && !jacobi.failed(); ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int s = 0; s < m; ++s) {
          Rational sum;
          for (int l = 0; l < m; ++l)
            sum += a.c(i, j, l) * a.c(l, k, s) + a.c(j, k, l) * a.c(l, i, s) + a.c(k, i, l) * a.c(l, j, s);
          jacobi.expect_zero(sum, {i, j, k, s});
        }
  jacobi.finish_into(report);

  CheckBuilder sym("fiber_metric_symmetric", "g[i][j] - g[j][i] = 0");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < i; ++j) sym.expect_zero(a.metric()(i, j) - a.metric()(j, i), {i, j});
  sym.finish_into(report);

  CheckBuilder nondeg("fiber_metric_nondegenerate", "det(g) != 0");
  if (determinant(a.metric()).is_zero()) nondeg.fail({}, "0");
  nondeg.finish_into(report);

  CheckBuilder inv("fiber_ad_invariant", "<[e_i,e_j],e_k> + <e_j,[e_i,e_k]> = 0");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) inv.expect_zero(a.b(i, j, k) + a.b(i, k, j), {i, j, k});
  inv.finish_into(report);
  return report;
}

std::vector<RationalVector> center(const QuadLieAlgebra& a) {
  const int m = a.dim();
  // Row (s,k) of the stacked system: sum_i r^i c[i][s][k] = 0.
  RationalMatrix stacked(m * m, m);
  for (int s = 0; s < m; ++s)
    for (int k = 0; k < m; ++k)
      for (int i = 0; i < m; ++i) stacked(s * m + k, i) = a.c(i, s, k);
  return nullspace(stacked);
}

std::vector<Rational> cartan_three_form(const QuadLieAlgebra& a) {
  const int m = a.dim();
  std::vector<Rational> out(static_cast<std::size_t>(m * m * m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) out[static_cast<std::size_t>((i * m + j) * m + k)] = -a.b(i, j, k);
  return out;
}

}  // namespace courant
