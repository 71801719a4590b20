#include "courant/sampling.hpp"

#include <stdexcept>

namespace courant::sampling {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Rational small_rational(Rng& rng, int max_num, int max_den) {
  return Rational(uniform(rng, -max_num, max_num), uniform(rng, 1, max_den));
}

Poly random_poly(Rng& rng, int nvars, int max_degree, int max_terms) {
  const std::vector<Monomial> monos = monomials_up_to(nvars, max_degree);
  Poly out(nvars);
  const int terms = uniform(rng, 1, max_terms);
  for (int t = 0; t < terms; ++t) {
    Monomial mono = monos[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(monos.size()) - 1))];
    out += Poly::monomial(nvars, mono, small_rational(rng));
  }
  return out;
}

GValuedForm random_one_form(Rng& rng, const Quintuple& q, int max_degree) {
  GValuedForm out(1, q.patch, q.fiber.dim());
  for (int a = 0; a < q.patch.p; ++a)
    for (int k = 0; k < q.fiber.dim(); ++k) {
      const int idx[] = {a};
      out.set_entry(idx, k, random_poly(rng, q.patch.n, max_degree));
    }
  return out;
}

PolyMatrix random_matrix(Rng& rng, int rows, int cols, int nvars, int max_degree) {
  PolyMatrix out(rows, cols, nvars);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out(i, j) = random_poly(rng, nvars, max_degree);
  return out;
}

PolyMatrix random_skew(Rng& rng, int size, int nvars, int max_degree) {
  PolyMatrix out(size, size, nvars);
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j) {
      out(i, j) = random_poly(rng, nvars, max_degree);
      out(j, i) = -out(i, j);
    }
  return out;
}

FForm random_form(Rng& rng, int degree, Patch patch, int max_degree) {
  FForm out(degree, patch);
  for (auto& c : out.components()) c = random_poly(rng, patch.n, max_degree);
  return out;
}

RationalMatrix rational_rotation(Rng& rng) {
  RationalMatrix a(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      a(i, j) = small_rational(rng, 2, 3);
      a(j, i) = -a(i, j);
    }
  PolyMatrix plus = PolyMatrix::from_rational(RationalMatrix::identity(3), 0) + PolyMatrix::from_rational(a, 0);
  PolyMatrix minus = PolyMatrix::from_rational(RationalMatrix::identity(3), 0) - PolyMatrix::from_rational(a, 0);
  PolyMatrix rot = minus * *inverse_constant_det(plus);
  RationalMatrix out(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(i, j) = rot(i, j).constant_term();
  return out;
}

IsoData random_iso_su2(Rng& rng, const Quintuple& q, int phi_degree) {
  if (!(q.fiber == QuadLieAlgebra::su2())) throw std::invalid_argument("random_iso_su2 needs an su(2) fiber");
  const int p = q.patch.p, n = q.patch.n;
  IsoData iso{PolyMatrix::from_rational(rational_rotation(rng), n), random_one_form(rng, q, phi_degree),
              random_skew(rng, p, n, phi_degree)};
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) iso.beta(b, a) -= q.fiber.inner(iso.phi.at({a}), iso.phi.at({b}), n);
  return iso;
}

IsoData random_automorphism_su2_plane(Rng& rng, const Quintuple& q) {
  const int p = q.patch.p, n = q.patch.n, m = q.fiber.dim();
  RationalMatrix rot = rational_rotation(rng);
  IsoData iso = identity_iso(q);
  iso.tau = PolyMatrix::from_rational(rot, n);
  for (int a = 0; a < p; ++a) {
    PolyVector v = zero_vector(m, n);
    for (int k = 0; k < m; ++k) v[static_cast<std::size_t>(k)] = Poly::constant(n, rot(k, a) - (k == a ? 1 : 0));
    iso.phi.set({a}, v);
  }
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) iso.beta(b, a) = -q.fiber.inner(iso.phi.at({a}), iso.phi.at({b}), n);
  return iso;
}

}  // namespace courant::sampling
