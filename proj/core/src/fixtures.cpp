#include "courant/fixtures.hpp"

namespace courant::fixtures {

namespace {

PolyVector basis_vector(int m, int k, int n, const Poly& value) {
  PolyVector v = zero_vector(m, n);
  v[static_cast<std::size_t>(k)] = value;
  return v;
}

Quintuple su2_plane_over(const QuadLieAlgebra& fiber) {
  const Patch patch{2, 2};
  Quintuple q = trivial_quintuple(patch, fiber);
  for (int a = 0; a < 2; ++a)
    q.conn.gamma[static_cast<std::size_t>(a)] = PolyMatrix::from_rational(fiber.ad_basis(a), patch.n);
  q.curv.set({0, 1}, basis_vector(fiber.dim(), 2, patch.n, Poly::constant(patch.n, 1)));
  return q;
}

}  // namespace

Quintuple exact_plane() { return trivial_quintuple(Patch{2, 2}, QuadLieAlgebra::abelian(0)); }

Quintuple point_su2() { return trivial_quintuple(Patch{0, 0}, QuadLieAlgebra::su2()); }

Quintuple abelian_four() {
  const Patch patch{4, 4};
  Quintuple q = trivial_quintuple(patch, QuadLieAlgebra::abelian(1));
  PolyVector e = basis_vector(1, 0, 4, Poly::constant(4, 1));
  q.curv.set({0, 1}, e);
  q.curv.set({2, 3}, e);
  q.hform.set({1, 2, 3}, Rational(2) * Poly::variable(4, 0));
  return q;
}

Quintuple su2_plane() { return su2_plane_over(QuadLieAlgebra::su2()); }

Quintuple su2_plus_line_plane() {
  return su2_plane_over(QuadLieAlgebra::direct_sum(QuadLieAlgebra::su2(), QuadLieAlgebra::abelian(1)));
}

Quintuple product_su2() {
  const Patch patch{3, 3};
  Quintuple q = trivial_quintuple(patch, QuadLieAlgebra::su2());
  q.hform.set({0, 1, 2}, Poly::variable(3, 0));
  return q;
}

}  // namespace courant::fixtures
