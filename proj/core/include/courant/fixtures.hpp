#pragma once

#include "courant/courant.hpp"

namespace courant::fixtures {

// m = 0, p = n = 2: the exact case (H vanishes for lack of leafwise 3-forms).
Quintuple exact_plane();
// Point base, su(2) fiber.
Quintuple point_su2();
// p = n = 4, abelian G = R, R = (dx1^dx2 + dx3^dx4) e, H = 2 x1 dx2^dx3^dx4.
Quintuple abelian_four();
// p = n = 2, su(2), Gamma_a = ad(e_a), R_12 = e3, H = 0.
Quintuple su2_plane();
// su2_plane with the fiber extended by a central line e4.
Quintuple su2_plus_line_plane();
// Product algebroid G x TM over R^3: flat, R = 0, H = x1 dx1^dx2^dx3.
Quintuple product_su2();

}  // namespace courant::fixtures
