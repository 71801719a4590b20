#include <gtest/gtest.h>

#include "courant/fixtures.hpp"
#include "courant/poly_parse.hpp"
#include "courant/sampling.hpp"
#include "oracles.hpp"

using namespace courant;

namespace {

Section random_section(sampling::Rng& rng, const Quintuple& q, int max_degree) {
  Section s = zero_section(q);
  for (auto* part : {&s.xi, &s.r, &s.x})
    for (auto& c : *part) c = sampling::random_poly(rng, q.patch.n, max_degree);
  return s;
}

Quintuple severa_three() {
  Quintuple q = trivial_quintuple(Patch{3, 3}, QuadLieAlgebra::abelian(0));
  q.hform.set({0, 1, 2}, parse_poly("x2^2 + 1", 3));
  return q;
}

}  // namespace

TEST(ValidateIso, SkewBeta) {
  Quintuple q = fixtures::su2_plane();
  IsoData iso = identity_iso(q);
  iso.beta(0, 1) = parse_poly("x1", 2);
  iso.beta(1, 0) = parse_poly("-1*x1", 2);
  EXPECT_TRUE(validate_iso(iso, q.fiber, q.patch).passed());
}

TEST(ValidateIso, Rotation) {
  sampling::Rng rng(51);
  Quintuple q = fixtures::su2_plane();
  IsoData iso = identity_iso(q);
  iso.tau = PolyMatrix::from_rational(sampling::rational_rotation(rng), 2);
  EXPECT_TRUE(validate_iso(iso, q.fiber, q.patch).passed());
}

TEST(ValidateIso, PhiWithoutBeta) {
  Quintuple q = fixtures::su2_plane();
  IsoData iso = identity_iso(q);
  iso.phi.set_entry(std::vector<int>{0}, 1, parse_poly("x2", 2));
  Report r = validate_iso(iso, q.fiber, q.patch);
  const CheckResult* c = r.find("iso1");
  ASSERT_FALSE(c->passed);
  EXPECT_EQ(c->witness->indices, (std::vector<int>{1, 1}));
  EXPECT_EQ(c->witness->residual, "x2^2");
}

TEST(ValidateIso, NonConstantDeterminant) {
  Quintuple q = fixtures::su2_plane();
  IsoData iso = identity_iso(q);
  iso.tau(0, 0) = parse_poly("x1", 2);
  EXPECT_FALSE(validate_iso(iso, q.fiber, q.patch).find("tau_det_constant")->passed);
  EXPECT_THROW(transport(q, iso), std::domain_error);
  iso = identity_iso(q);
  iso.phi.set_entry(std::vector<int>{0}, 1, Poly::constant(2, 1));
  EXPECT_THROW(transport(q, iso), std::invalid_argument);
}

TEST(ApplyIso, Basics) {
  sampling::Rng rng(52);
  Quintuple q = fixtures::su2_plane();
  IsoData iso = sampling::random_iso_su2(rng, q, 1);
  Section xi = zero_section(q);
  xi.xi = {parse_poly("x1", 2), Poly::constant(2, 3)};
  EXPECT_EQ(apply_iso(q, iso, xi), xi);
  Section s = random_section(rng, q, 2);
  EXPECT_EQ(apply_iso(q, identity_iso(q), s), s);
  EXPECT_EQ(oracle::inverse_iso(q, iso, apply_iso(q, iso, s)), s);
  for (int t = 0; t < 5; ++t) {
    Section a = random_section(rng, q, 1), b = random_section(rng, q, 1);
    EXPECT_EQ(pairing(q, apply_iso(q, iso, a), apply_iso(q, iso, b)), pairing(q, a, b));
  }
}

TEST(ApplyIso, SkewBetaOnVectors) {
  Quintuple q = fixtures::su2_plane();
  IsoData iso = identity_iso(q);
  iso.beta(0, 1) = Poly::constant(2, 2);
  iso.beta(1, 0) = Poly::constant(2, -2);
  Section x = frame_section(q, 5);  // d1
  Section out = apply_iso(q, iso, x);
  EXPECT_EQ(out.x, x.x);
  EXPECT_TRUE(out.xi[0].is_zero());
  EXPECT_EQ(out.xi[1], Poly::constant(2, -2));
}

TEST(Transport, Identity) {
  for (const auto& q : {fixtures::su2_plane(), fixtures::abelian_four(), fixtures::product_su2()})
    EXPECT_EQ(transport(q, identity_iso(q)), q);
}

TEST(Transport, MatchesBracketPullback) {
  sampling::Rng rng(53);
  for (const auto& q : {fixtures::su2_plane(), fixtures::product_su2()})
    for (int t = 0; t < 4; ++t) {
      IsoData iso = sampling::random_iso_su2(rng, q, 1);
      ASSERT_TRUE(validate_iso(iso, q.fiber, q.patch).passed());
      Quintuple q2 = transport(q, iso);
      EXPECT_EQ(q2, oracle::transported_by_brackets(q, iso));
      EXPECT_TRUE(validate_quintuple(q2).passed());
      EXPECT_TRUE(intertwining_check(q, q2, iso, 1).passed());
    }
}

TEST(Transport, AbelianFourPullback) {
  sampling::Rng rng(54);
  Quintuple q = fixtures::abelian_four();
  for (int t = 0; t < 3; ++t) {
    IsoData iso = identity_iso(q);
    iso.tau(0, 0) = Poly::constant(4, t % 2 ? -1 : 1);
    iso.phi = sampling::random_one_form(rng, q, 1);
    iso.beta = sampling::random_skew(rng, 4, 4, 1);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) iso.beta(b, a) -= iso.phi.at({a})[0] * iso.phi.at({b})[0];
    Quintuple q2 = transport(q, iso);
    EXPECT_EQ(q2, oracle::transported_by_brackets(q, iso));
    EXPECT_TRUE(validate_quintuple(q2).passed());
  }
}

TEST(Transport, ExactCaseOmega) {
  sampling::Rng rng(55);
  Quintuple q = trivial_quintuple(Patch{4, 4}, QuadLieAlgebra::abelian(0));
  q.hform.set({0, 1, 2}, parse_poly("x4^2", 4));
  FForm omega = sampling::random_form(rng, 2, q.patch, 2);
  CannedIso c = omega_shift(q, omega);
  Quintuple q2 = transport(q, c.iso);
  EXPECT_EQ(q2.hform, q.hform + oracle::exterior_d(omega));
  EXPECT_EQ(q2, c.expected);
}

TEST(Compose, AgreesWithSuccessiveTransport) {
  sampling::Rng rng(56);
  Quintuple q = fixtures::su2_plane();
  IsoData i1 = sampling::random_iso_su2(rng, q, 1);
  Quintuple q1 = transport(q, i1);
  IsoData i2 = sampling::random_iso_su2(rng, q1, 1);
  IsoData both = compose(i2, i1, q.fiber);
  EXPECT_TRUE(validate_iso(both, q.fiber, q.patch).passed());
  EXPECT_EQ(transport(q1, i2), transport(q, both));
  Section s = random_section(rng, q, 1);
  EXPECT_EQ(apply_iso(q, both, s), apply_iso(q1, i2, apply_iso(q, i1, s)));
}

TEST(PhiPsi, ZeroJ) {
  Quintuple q = fixtures::su2_plane();
  GValuedForm j(1, q.patch, 3);
  EXPECT_TRUE(phi_form(q, j).is_zero());
  EXPECT_TRUE(d_phi_closed_form(q, j).is_zero());
}

TEST(PhiPsi, ClosedFormsMatchCE) {
  sampling::Rng rng(57);
  for (const auto& q : {fixtures::su2_plane(), fixtures::abelian_four(), fixtures::product_su2()})
    for (int t = 0; t < 3; ++t) {
      GValuedForm j = sampling::random_one_form(rng, q, t);
      EXPECT_EQ(d_phi_closed_form(q, j), ce_differential(q, phi_form(q, j)));
      PolyMatrix k = sampling::random_matrix(rng, q.patch.p, q.patch.p, q.patch.n, t);
      EXPECT_EQ(d_psi_closed_form(q, k), ce_differential(q, psi_form(q, k)));
    }
}

TEST(PhiPsi, ConstantSkewOnFlatAbelian) {
  Quintuple q = trivial_quintuple(Patch{3, 3}, QuadLieAlgebra::abelian(2));
  PolyMatrix k(3, 3, 3);
  k(0, 1) = Poly::constant(3, 2);
  k(1, 0) = Poly::constant(3, -2);
  k(1, 2) = Poly::constant(3, 5);
  k(2, 1) = Poly::constant(3, -5);
  EXPECT_TRUE(d_psi_closed_form(q, k).is_zero());
  EXPECT_TRUE(ce_differential(q, psi_form(q, k)).is_zero());
  k(0, 2) = parse_poly("x2", 3);
  EXPECT_FALSE(ce_differential(q, psi_form(q, k)).is_zero());
}

TEST(Canned, OmegaShiftOnAbelianFour) {
  Quintuple q = fixtures::abelian_four();
  FForm omega(2, q.patch);
  omega.set({0, 2}, parse_poly("x2", 4));
  CannedIso c = omega_shift(q, omega);
  Quintuple q2 = transport(q, c.iso);
  EXPECT_EQ(q2.hform, q.hform + leafwise_d(omega));
  EXPECT_EQ(q2, c.expected);
}

TEST(Canned, HoistShiftTwoPaths) {
  Quintuple q = fixtures::su2_plane();
  GValuedForm j(1, q.patch, 3);
  j.set_entry(std::vector<int>{0}, 2, Poly::constant(2, 1));
  j.set_entry(std::vector<int>{1}, 0, Poly::constant(2, -2));
  CannedIso c = hoist_shift(q, j);
  Quintuple built = build_from_pair(CharPair{q, standard_three_form(q) + d_phi_closed_form(q, j)},
                                    Hoist{Rational(-1) * j});
  EXPECT_EQ(c.expected, built);
  EXPECT_EQ(transport(q, c.iso), built);
}

TEST(Canned, CentralGate) {
  Quintuple q = fixtures::su2_plane();
  GValuedForm j(1, q.patch, 3);
  j.set_entry(std::vector<int>{0}, 0, Poly::constant(2, 1));
  try {
    central_shift(q, j);
    FAIL() << "accepted a non-central J";
  } catch (const HypothesisError& e) {
    EXPECT_EQ(e.check().name, "central_J");
  }
  Quintuple ext = fixtures::su2_plus_line_plane();
  GValuedForm jc(1, ext.patch, 4);
  jc.set_entry(std::vector<int>{0}, 3, parse_poly("x2", 2));
  jc.set_entry(std::vector<int>{1}, 3, parse_poly("x1", 2));
  CannedIso c = central_shift(ext, jc);
  EXPECT_EQ(transport(ext, c.iso), c.expected);
  GValuedForm curl(1, ext.patch, 4);
  curl.set_entry(std::vector<int>{0}, 3, parse_poly("x2", 2));
  EXPECT_THROW(central_shift(ext, curl), HypothesisError);
}

TEST(Intrinsic, Identity) {
  Quintuple q = fixtures::su2_plane();
  EXPECT_TRUE(intrinsic_form(q, identity_iso(q), standard_three_form(q)).is_zero());
}

TEST(Intrinsic, PlaneAutomorphisms) {
  sampling::Rng rng(58);
  Quintuple q = fixtures::su2_plane();
  for (int t = 0; t < 3; ++t) {
    IsoData sigma = sampling::random_automorphism_su2_plane(rng, q);
    EXPECT_TRUE(check_automorphism(q, sigma).passed());
    AForm w = intrinsic_form(q, sigma, standard_three_form(q));
    EXPECT_TRUE(horizontal_check(w));
    EXPECT_TRUE(ce_differential(q, w).is_zero());
  }
}

TEST(Intrinsic, RejectsNonAutomorphism) {
  sampling::Rng rng(59);
  Quintuple q = fixtures::su2_plane();
  IsoData sigma = identity_iso(q);
  sigma.tau = PolyMatrix::from_rational(sampling::rational_rotation(rng), 2);
  EXPECT_FALSE(check_automorphism(q, sigma).passed());
  EXPECT_THROW(intrinsic_form(q, sigma, standard_three_form(q)), std::invalid_argument);
}

TEST(Coboundary, Identity) {
  Quintuple q = fixtures::su2_plane();
  EXPECT_TRUE(coboundary_identity_check(q, identity_iso(q)).passed());
}

TEST(Coboundary, RandomIsos) {
  sampling::Rng rng(60);
  Quintuple q = fixtures::su2_plane();
  for (int t = 0; t < 3; ++t) EXPECT_TRUE(coboundary_identity_check(q, sampling::random_iso_su2(rng, q, 1)).passed());
}

TEST(Coboundary, ExactCase) {
  sampling::Rng rng(61);
  Quintuple q = severa_three();
  CannedIso c = omega_shift(q, sampling::random_form(rng, 2, q.patch, 2));
  EXPECT_TRUE(coboundary_identity_check(q, c.iso).passed());
  AForm diff = pull_back(c.iso, standard_three_form(transport(q, c.iso)), q) - standard_three_form(q);
  EXPECT_EQ(diff, pull_back_leafwise(transport(q, c.iso).hform - q.hform, 0));
}
