#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "courant/charclass.hpp"

namespace courant {

// Theta(xi + r + x) = (xi + beta x - 2 phi^* tau r) + (tau r + phi x) + x,
// with <beta(d_a)|d_b> = beta(b, a) and <phi^* s|x> = <s, phi x>.
struct IsoData {
  PolyMatrix tau;    // m x m
  GValuedForm phi;   // degree 1
  PolyMatrix beta;   // p x p
  friend bool operator==(const IsoData&, const IsoData&) = default;
};

IsoData identity_iso(const Quintuple& q);

// Checks iso1, tau_bracket, tau_metric, tau_det_constant.
Report validate_iso(const IsoData& iso, const QuadLieAlgebra& fiber, Patch patch);

Section apply_iso(const Quintuple& q, const IsoData& iso, const Section& e);
// iota(r + x) = (tau r + phi x) + x on the ample algebroid.
ASection apply_algebroid_map(const IsoData& iso, const ASection& u);

// Target quintuple making Theta an isomorphism. Throws std::domain_error when
// det(tau) is not a nonzero constant and std::invalid_argument when the data
// fail validate_iso.
Quintuple transport(const Quintuple& q1, const IsoData& iso);

// Theta_2 after Theta_1.
IsoData compose(const IsoData& second, const IsoData& first, const QuadLieAlgebra& fiber);

// Phi_J(r+x, s+y) = <r, J y> - <s, J x>.
AForm phi_form(const Quintuple& q, const GValuedForm& j);
// Psi_K(r+x, s+y) = <x|K y> - <y|K x>, with (K y)_b = K(b, a) y^a.
AForm psi_form(const Quintuple& q, const PolyMatrix& k);
// Closed-form differentials on the coordinate frame.
AForm d_phi_closed_form(const Quintuple& q, const GValuedForm& j);
AForm d_psi_closed_form(const Quintuple& q, const PolyMatrix& k);

// (iota^* C)(u, v, w) = C(iota u, iota v, iota w).
AForm pull_back(const IsoData& iso, const AForm& c, const Quintuple& source);

enum class ShiftKind { hoist, omega, central };

// A failed precondition of a canned isomorphism, with its witness.
class HypothesisError : public std::invalid_argument {
 public:
  explicit HypothesisError(CheckResult check)
      : std::invalid_argument("hypothesis " + check.name + " fails"), check_(std::move(check)) {}
  const CheckResult& check() const { return check_; }

 private:
  CheckResult check_;
};

struct CannedIso {
  IsoData iso;
  Quintuple expected;
};

// hoist: tau = id, phi = J, beta = -J^* J; expected target built from
//        (C^s + d Phi_J, kappa_0 - J).
// omega: beta = -omega^sharp; expected H + d^F omega.
// central: phi = J/2, beta = -J^* J / 4; needs J in the center and
//          nabla_a J_b = nabla_b J_a; expected H - <J_a, R_bc> - c.p.
// Throws HypothesisError when a hypothesis fails.
CannedIso hoist_shift(const Quintuple& q, const GValuedForm& j);
CannedIso omega_shift(const Quintuple& q, const FForm& omega);
CannedIso central_shift(const Quintuple& q, const GValuedForm& j);

// Checks iso2/iso3 with source = target (tau is taken from iso, beta ignored).
Report check_automorphism(const Quintuple& q, const IsoData& sigma);
// sigma^* C - C. Throws std::invalid_argument if sigma is not an automorphism.
AForm intrinsic_form(const Quintuple& q, const IsoData& sigma, const AForm& c);

// iota^* C^s_2 - C^s_1 = d(Psi_beta / 2 + Phi_{tau^-1 phi}); record
// coboundary_identity.
Report coboundary_identity_check(const Quintuple& q1, const IsoData& iso);

// Theta [[e1,e2]]_1 = [[Theta e1, Theta e2]]_2 on the degree-capped family;
// record iso_intertwines.
Report intertwining_check(const Quintuple& q1, const Quintuple& q2, const IsoData& iso, int degree_cap);

}  // namespace courant
