#pragma once

#include <optional>

#include "courant/algebroid.hpp"

namespace courant {

// C^s(r+x, s+y, t+z) = H(x,y,z) - <[r,s],t> + <R(x,y),t> + <R(y,z),r> + <R(z,x),s>.
AForm standard_three_form(const Quintuple& q);

// nabla^E on E induced by a torsion-free connection on F.
Section e_connection(const Quintuple& q, const FConnection& fc, const Section& e1, const Section& e2);
// C_{nabla^E} on all increasing triples of the E-frame.
NaiveTable e_connection_table(const Quintuple& q, const FConnection& fc);
// The same form read on A. Throws if fc has torsion or if the table does not
// vanish on triples containing an F* element.
AForm e_connection_form(const Quintuple& q, const FConnection& fc);

// Hoist kappa(x) = J(x) + x.
struct Hoist {
  GValuedForm J;  // degree 1
  friend bool operator==(const Hoist&, const Hoist&) = default;
};

Hoist standard_hoist(const Quintuple& q);
ASection kappa(const Quintuple& q, const Hoist& h, int a);

struct HoistData {
  GConnection conn;   // nabla^kappa
  GValuedForm curv;   // R^kappa
};
// Uses only the algebroid part (patch, fiber, conn, curv) of q.
HoistData hoist_data(const Quintuple& q, const Hoist& h);

// Quadratic Lie algebroid plus a 3-form; the hform of `algebroid` is unused.
struct CharPair {
  Quintuple algebroid;
  AForm c;
  friend bool operator==(const CharPair&, const CharPair&) = default;
};

// Checks coherent_fiber, coherent_mixed, coherent_curvature, closed.
Report check_coherent(const Quintuple& algebroid, const AForm& c, const Hoist& h);

struct HoistSearch {
  std::optional<Hoist> hoist;
  Report report;
};
// Solves for J from the (2,1) component. Free coordinates of the linear system
// (the center directions when the center is coordinate-aligned) are set to 0.
HoistSearch find_hoist(const Quintuple& algebroid, const AForm& c);

// H(x,y,z) = C(kappa x, kappa y, kappa z) with (nabla^kappa, R^kappa).
// Throws std::domain_error when (C, kappa) is not coherent.
Quintuple build_from_pair(const CharPair& pair, const Hoist& h);

CharPair characteristic_pair_of(const Quintuple& q);

}  // namespace courant
