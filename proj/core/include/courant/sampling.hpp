#pragma once

#include <random>

#include "courant/morphism.hpp"

// Seeded generators for randomized checks. All draws go through Rng, so a
// seed reproduces every value.
namespace courant::sampling {

using Rng = std::mt19937_64;

// p/q with |p| <= max_num and 1 <= q <= max_den.
Rational small_rational(Rng& rng, int max_num = 3, int max_den = 2);
// Up to max_terms monomials of degree <= max_degree.
Poly random_poly(Rng& rng, int nvars, int max_degree, int max_terms = 3);

GValuedForm random_one_form(Rng& rng, const Quintuple& q, int max_degree);
PolyMatrix random_matrix(Rng& rng, int rows, int cols, int nvars, int max_degree);
PolyMatrix random_skew(Rng& rng, int size, int nvars, int max_degree);
FForm random_form(Rng& rng, int degree, Patch patch, int max_degree);

// Rational rotation in SO(3) from the Cayley transform of a random skew matrix.
RationalMatrix rational_rotation(Rng& rng);

// Constant rotation tau, phi of degree <= phi_degree, and beta solving iso1
// plus a random skew part. Requires an su(2) fiber.
IsoData random_iso_su2(Rng& rng, const Quintuple& q, int phi_degree);
// Automorphism of the ample algebroid of su2_plane: tau a rotation and
// phi_a = tau e_a - e_a.
IsoData random_automorphism_su2_plane(Rng& rng, const Quintuple& q);

}  // namespace courant::sampling
