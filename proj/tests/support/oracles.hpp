#pragma once

// Test-side reference computations. Each one follows a defining formula
// directly and shares no code path with the routine it is compared against,
// beyond the storage types.

#include <vector>

#include "courant/morphism.hpp"

namespace oracle {

using namespace courant;

// Sum over terms of coef * prod x_i^e_i, by repeated multiplication.
Rational evaluate(const Poly& p, const std::vector<Rational>& point);

// (1/4) sum_{S4} sgn <R(s1,s2), R(s3,s4)>, using the metric matrix.
Poly pontryagin_s4(const Quintuple& q, int a, int b, int c, int d);

// (dw)(i0..ik) = sum_j (-1)^j d_{ij} w(..without ij..), on every increasing tuple.
FForm exterior_d(const FForm& w);

// [[e1, e2]] for E-frame indices from the frame table of the standard bracket.
Section frame_dorfman(const Quintuple& q, int u, int v);

// [[f u, g v]] = f g [[u,v]] + f rho(u)(g) v - g rho(v)(f) u + 2 g <u,v> D f.
Section leibniz_dorfman(const Quintuple& q, const Poly& f, int u, const Poly& g, int v);

// C^s on three A-frame indices, straight from its defining formula.
Poly standard_form_value(const Quintuple& q, int u, int v, int w);

// Cartan formula on A-frame tuples with a_bracket and the anchor.
AForm cartan_differential(const Quintuple& q, const AForm& w);

// Theta^{-1}(eta + s + y) = (eta - beta y + 2 phi^* tau r) + r + y with r = tau^{-1}(s - phi y).
Section inverse_iso(const Quintuple& q, const IsoData& iso, const Section& e);

// Target structure read off from Theta [[Theta^{-1} u, Theta^{-1} v]]_1 on frames.
Quintuple transported_by_brackets(const Quintuple& q1, const IsoData& iso);

}  // namespace oracle
