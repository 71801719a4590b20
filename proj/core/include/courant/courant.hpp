#pragma once

#include <span>
#include <string>
#include <vector>

#include "courant/fiber.hpp"
#include "courant/geometry.hpp"
#include "courant/report.hpp"

namespace courant {

// The data (F, G; nabla, R, H) of a standard Courant algebroid.
struct Quintuple {
  Patch patch;
  QuadLieAlgebra fiber;
  GConnection conn;
  GValuedForm curv;  // degree 2
  FForm hform;       // degree 3
  friend bool operator==(const Quintuple&, const Quintuple&) = default;
};

// Quintuple with flat connection, R = 0 and H = 0.
Quintuple trivial_quintuple(Patch patch, const QuadLieAlgebra& fiber);

// Throws std::invalid_argument when component shapes disagree with (n, p, m).
void check_shapes(const Quintuple& q);

// Checks, in order: connection_metric, connection_derivation, bianchi,
// curvature_identity, dF_H_equals_RR.
Report validate_quintuple(const Quintuple& q);

// Section xi + r + x of F* + G + F.
struct Section {
  PolyVector xi;
  PolyVector r;
  PolyVector x;

  Section& operator+=(const Section& o);
  Section& operator-=(const Section& o);
  Section& operator*=(const Poly& f);
  Section& operator*=(const Rational& c);
  friend Section operator+(Section a, const Section& b) { return a += b; }
  friend Section operator-(Section a, const Section& b) { return a -= b; }
  friend Section operator*(const Poly& f, Section a) { return a *= f; }
  friend Section operator*(const Rational& c, Section a) { return a *= c; }
  bool is_zero() const;
  friend bool operator==(const Section&, const Section&) = default;
};

Section zero_section(const Quintuple& q);

// The E-frame: delta^1..delta^p, then e_1..e_m, then d_1..d_p.
int frame_size(const Quintuple& q);
Section frame_section(const Quintuple& q, int index);
std::string frame_label(const Quintuple& q, int index);

Poly pairing(const Quintuple& q, const Section& e1, const Section& e2);
PolyVector anchor(const Section& e);
Section d_operator(const Quintuple& q, const Poly& f);

// H(x, y, -) and R(x, y).
PolyVector h_contract(const Quintuple& q, std::span<const Poly> x, std::span<const Poly> y);
PolyVector r_apply(const Quintuple& q, std::span<const Poly> x, std::span<const Poly> y);

// <P(r1,r2)|d_b> = 2<r2, nabla_b r1>;  <Q(x,r)|d_b> = <r, R(x, d_b)>.
PolyVector p_form(const Quintuple& q, std::span<const Poly> r1, std::span<const Poly> r2);
PolyVector q_form(const Quintuple& q, std::span<const Poly> x, std::span<const Poly> r);

Section dorfman(const Quintuple& q, const Section& e1, const Section& e2);
// Skew part: dorfman(e1, e2) - D<e1, e2>.
Section courant_bracket(const Quintuple& q, const Section& e1, const Section& e2);

// Verifies axioms (1)-(6) on {f u : u in the E-frame, f a monomial of degree <= D}.
// Records: axiom1_jacobi, axiom2_anchor, axiom3_leibniz, axiom4_symmetric_part,
// axiom5_D_kernel, axiom6_metric.
Report axiom_check(const Quintuple& q, int degree_cap);

}  // namespace courant
