#pragma once

#include <span>
#include <vector>

#include "courant/linalg.hpp"
#include "courant/report.hpp"

namespace courant {

// A vector of nvars-polynomials; helper for the many component vectors below.
PolyVector zero_vector(int size, int nvars);

// Quadratic Lie algebra with constant structure constants.
// c(i,j,k) is the e_k-coefficient of [e_i,e_j]; metric() is <-,->_G.
class QuadLieAlgebra {
 public:
  QuadLieAlgebra() = default;
  QuadLieAlgebra(int dim, std::vector<Rational> constants, RationalMatrix metric);

  static QuadLieAlgebra abelian(int dim);
  // so(3) with [e1,e2]=e3 cyclically and orthonormal metric.
  static QuadLieAlgebra su2();
  static QuadLieAlgebra direct_sum(const QuadLieAlgebra& a, const QuadLieAlgebra& b);

  int dim() const { return dim_; }
  const Rational& c(int i, int j, int k) const { return constants_[index(i, j, k)]; }
  const RationalMatrix& metric() const { return metric_; }
  const std::vector<Rational>& constants() const { return constants_; }

  // B(i,j,k) = <[e_i,e_j], e_k>.
  Rational b(int i, int j, int k) const;

  PolyVector bracket(std::span<const Poly> r, std::span<const Poly> s, int nvars) const;
  Poly inner(std::span<const Poly> r, std::span<const Poly> s, int nvars) const;
  // g r.
  PolyVector lower(std::span<const Poly> r, int nvars) const;

  // Matrix of ad(v): column i is [v, e_i].
  RationalMatrix ad(std::span<const Rational> v) const;
  PolyMatrix ad(std::span<const Poly> v, int nvars) const;
  RationalMatrix ad_basis(int i) const;

  friend bool operator==(const QuadLieAlgebra&, const QuadLieAlgebra&) = default;

 private:
  std::size_t index(int i, int j, int k) const {
    return static_cast<std::size_t>((i * dim_ + j) * dim_ + k);
  }

  int dim_ = 0;
  std::vector<Rational> constants_;
  RationalMatrix metric_;
};

// Checks: fiber_skew, fiber_jacobi, fiber_metric_symmetric,
// fiber_metric_nondegenerate, fiber_ad_invariant.
Report validate_fiber(const QuadLieAlgebra& a);

// Rational basis of {r : [r,s] = 0 for all s}, first nonzero entry 1.
std::vector<RationalVector> center(const QuadLieAlgebra& a);

// C(i,j,k) = -<[e_i,e_j],e_k>, flattened as (i*m + j)*m + k.
std::vector<Rational> cartan_three_form(const QuadLieAlgebra& a);

}  // namespace courant
