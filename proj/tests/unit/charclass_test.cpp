#include <gtest/gtest.h>

#include "courant/fixtures.hpp"
#include "courant/poly_parse.hpp"
#include "courant/sampling.hpp"
#include "oracles.hpp"

using namespace courant;

namespace {

std::vector<Quintuple> all_fixtures() {
  return {fixtures::exact_plane(), fixtures::point_su2(), fixtures::abelian_four(), fixtures::su2_plane(),
          fixtures::su2_plus_line_plane(), fixtures::product_su2()};
}

FConnection symmetric_connection(sampling::Rng& rng, Patch patch, int max_degree) {
  FConnection fc(patch);
  for (int a = 0; a < patch.p; ++a)
    for (int b = a; b < patch.p; ++b)
      for (int c = 0; c < patch.p; ++c) {
        Poly v = sampling::random_poly(rng, patch.n, max_degree);
        fc.gamma(a, b, c) = v;
        fc.gamma(b, a, c) = v;
      }
  return fc;
}

GValuedForm one_form(const Quintuple& q, std::initializer_list<std::tuple<int, int, const char*>> entries) {
  GValuedForm j(1, q.patch, q.fiber.dim());
  for (const auto& [a, k, text] : entries) j.set_entry(std::vector<int>{a}, k, parse_poly(text, q.patch.n));
  return j;
}

}  // namespace

TEST(StandardForm, MatchesDefinitionOnFrames) {
  for (const auto& q : all_fixtures()) {
    AForm c = standard_three_form(q);
    for (const auto& t : c.tuples()) EXPECT_EQ(c.at(t), oracle::standard_form_value(q, t[0], t[1], t[2]));
  }
}

TEST(StandardForm, PlaneComponents) {
  Quintuple q = fixtures::su2_plane();
  AForm c = standard_three_form(q);
  const int e3[] = {2};
  const int d12[] = {0, 1};
  EXPECT_EQ(c.component(e3, d12), Poly::constant(2, 1));
  EXPECT_EQ(c.at({0, 1, 2}), Poly::constant(2, -1));
}

TEST(StandardForm, PointIsCartan) {
  Quintuple q = fixtures::point_su2();
  AForm c = standard_three_form(q);
  auto cartan = cartan_three_form(q.fiber);
  for (const auto& t : c.tuples())
    EXPECT_EQ(c.at(t), Poly::constant(0, cartan[static_cast<std::size_t>((t[0] * 3 + t[1]) * 3 + t[2])]));
}

TEST(StandardForm, NoFiberIsH) {
  Quintuple q = trivial_quintuple(Patch{3, 3}, QuadLieAlgebra::abelian(0));
  q.hform.set({0, 1, 2}, parse_poly("x1*x3 - 2", 3));
  EXPECT_EQ(standard_three_form(q), pull_back_leafwise(q.hform, 0));
}

TEST(EConnection, IndependentOfTorsionFreeConnection) {
  sampling::Rng rng(41);
  for (const auto& q : {fixtures::su2_plane(), fixtures::abelian_four(), fixtures::product_su2()}) {
    AForm cs = standard_three_form(q);
    EXPECT_EQ(e_connection_form(q, FConnection(q.patch)), cs);
    EXPECT_EQ(e_connection_form(q, symmetric_connection(rng, q.patch, 0)), cs);
    EXPECT_EQ(e_connection_form(q, symmetric_connection(rng, q.patch, 1)), cs);
  }
}

TEST(EConnection, NoFiberIsH) {
  sampling::Rng rng(42);
  Quintuple q = trivial_quintuple(Patch{3, 3}, QuadLieAlgebra::abelian(0));
  q.hform.set({0, 1, 2}, parse_poly("x2^2 + x3", 3));
  EXPECT_EQ(e_connection_form(q, symmetric_connection(rng, q.patch, 1)), pull_back_leafwise(q.hform, 0));
}

TEST(EConnection, RejectsTorsion) {
  Quintuple q = fixtures::su2_plane();
  FConnection fc(q.patch);
  fc.gamma(0, 1, 0) = Poly::constant(2, 1);
  EXPECT_THROW(e_connection_form(q, fc), std::invalid_argument);
}

TEST(HoistData, StandardHoistReproducesData) {
  for (const auto& q : all_fixtures()) {
    HoistData h = hoist_data(q, standard_hoist(q));
    EXPECT_EQ(h.conn, q.conn);
    EXPECT_EQ(h.curv, q.curv);
  }
}

TEST(HoistData, ConstantJOnPlane) {
  Quintuple q = fixtures::su2_plane();
  GValuedForm j = one_form(q, {{0, 2, "1"}});
  HoistData h = hoist_data(q, Hoist{j});
  // [d1 + e3, d2] = R_12 - nabla_2 e3 = e3 - [e2, e3] = e3 - e1.
  PolyVector expect = {Poly::constant(2, -1), Poly(2), Poly::constant(2, 1)};
  EXPECT_EQ(h.curv.at({0, 1}), expect);
  // nabla^kappa_1 = Gamma_1 + ad(e3).
  EXPECT_EQ(h.conn.gamma[0], q.conn.gamma[0] + PolyMatrix::from_rational(q.fiber.ad_basis(2), 2));
}

TEST(HoistData, AbelianCurvatureShift) {
  sampling::Rng rng(43);
  Quintuple q = fixtures::abelian_four();
  GValuedForm j = sampling::random_one_form(rng, q, 2);
  HoistData h = hoist_data(q, Hoist{j});
  for (const auto& t : increasing_tuples(4, 2)) {
    Poly expect = q.curv.at(t)[0] + j.at({t[1]})[0].derivative(t[0]) - j.at({t[0]})[0].derivative(t[1]);
    EXPECT_EQ(h.curv.at(t)[0], expect);
  }
}

TEST(Coherent, StandardPairs) {
  for (const auto& q : all_fixtures()) EXPECT_TRUE(check_coherent(q, standard_three_form(q), standard_hoist(q)).passed());
}

TEST(Coherent, ShiftedByPhi) {
  sampling::Rng rng(44);
  for (const auto& q : {fixtures::su2_plane(), fixtures::abelian_four()}) {
    GValuedForm j = sampling::random_one_form(rng, q, 1);
    AForm c = standard_three_form(q) + d_phi_closed_form(q, j);
    GValuedForm minus_j = Rational(-1) * j;
    EXPECT_TRUE(check_coherent(q, c, Hoist{minus_j}).passed());
  }
}

TEST(Coherent, CartanPartRemoved) {
  Quintuple q = fixtures::su2_plane();
  AForm c = standard_three_form(q);
  c.set({0, 1, 2}, Poly(2));
  Report r = check_coherent(q, c, standard_hoist(q));
  const CheckResult* f = r.find("coherent_fiber");
  ASSERT_FALSE(f->passed);
  EXPECT_EQ(f->witness->indices, (std::vector<int>{1, 2, 3}));
}

TEST(FindHoist, StandardFormGivesZero) {
  for (const auto& q : all_fixtures()) {
    HoistSearch s = find_hoist(q, standard_three_form(q));
    ASSERT_TRUE(s.hoist.has_value());
    EXPECT_TRUE(s.hoist->J.is_zero());
  }
}

TEST(FindHoist, RecoversJWhenCenterTrivial) {
  sampling::Rng rng(45);
  Quintuple q = fixtures::su2_plane();
  for (int t = 0; t < 5; ++t) {
    GValuedForm j0 = sampling::random_one_form(rng, q, 2);
    AForm c = standard_three_form(q) + ce_differential(q, phi_form(q, j0));
    HoistSearch s = find_hoist(q, c);
    ASSERT_TRUE(s.hoist.has_value());
    EXPECT_EQ(s.hoist->J, Rational(-1) * j0);
  }
}

TEST(FindHoist, AbelianMixedPartIsNotCoherent) {
  Quintuple q = trivial_quintuple(Patch{2, 2}, QuadLieAlgebra::abelian(2));
  AForm c = AForm::like(q, 3);
  const int fiber[] = {0, 1};
  const int leaf[] = {0};
  c.set_component(fiber, leaf, Poly::constant(2, 1));
  HoistSearch s = find_hoist(q, c);
  EXPECT_FALSE(s.hoist.has_value());
  EXPECT_FALSE(s.report.find("hoist_solvable")->passed);
}

TEST(Build, ReproducesFixtures) {
  for (const auto& q : all_fixtures())
    EXPECT_EQ(build_from_pair(characteristic_pair_of(q), standard_hoist(q)), q);
}

TEST(Build, PointBase) {
  Quintuple q = fixtures::point_su2();
  AForm c = AForm::like(q, 3);
  auto cartan = cartan_three_form(q.fiber);
  for (const auto& t : c.tuples())
    c.set(t, Poly::constant(0, cartan[static_cast<std::size_t>((t[0] * 3 + t[1]) * 3 + t[2])]));
  Quintuple built = build_from_pair(CharPair{q, c}, standard_hoist(q));
  EXPECT_EQ(built.patch.p, 0);
  EXPECT_EQ(built, q);
}

TEST(Build, ProductAlgebroid) {
  // Flat product data with C = Cartan part + H.
  Quintuple q = fixtures::product_su2();
  Quintuple algebroid = q;
  algebroid.hform = FForm(3, q.patch);
  AForm c = AForm::like(q, 3);
  auto cartan = cartan_three_form(q.fiber);
  for (const auto& t : c.tuples()) {
    if (t[2] < 3) c.set(t, Poly::constant(3, cartan[static_cast<std::size_t>((t[0] * 3 + t[1]) * 3 + t[2])]));
    if (t[0] >= 3) c.set(t, q.hform.at({t[0] - 3, t[1] - 3, t[2] - 3}));
  }
  Quintuple built = build_from_pair(CharPair{algebroid, c}, standard_hoist(q));
  EXPECT_EQ(built, q);
}

TEST(Build, RejectsIncoherent) {
  Quintuple q = fixtures::su2_plane();
  AForm c = standard_three_form(q);
  c.set({0, 1, 2}, Poly(2));
  EXPECT_THROW(build_from_pair(CharPair{q, c}, standard_hoist(q)), std::domain_error);
}

TEST(CharacteristicPair, AbelianFourParts) {
  Quintuple q = fixtures::abelian_four();
  CharPair pair = characteristic_pair_of(q);
  EXPECT_EQ(pair.c.bigraded_part(0), pull_back_leafwise(q.hform, 1));
  const int e[] = {0};
  const int d12[] = {0, 1}, d34[] = {2, 3}, d13[] = {0, 2};
  EXPECT_EQ(pair.c.component(e, d12), Poly::constant(4, 1));
  EXPECT_EQ(pair.c.component(e, d34), Poly::constant(4, 1));
  EXPECT_TRUE(pair.c.component(e, d13).is_zero());
  EXPECT_TRUE(pair.algebroid.hform.is_zero());
}

TEST(CharacteristicPair, NoFiberIsH) {
  Quintuple q = trivial_quintuple(Patch{3, 3}, QuadLieAlgebra::abelian(0));
  q.hform.set({0, 1, 2}, parse_poly("x1^2 - x2*x3", 3));
  EXPECT_EQ(characteristic_pair_of(q).c, pull_back_leafwise(q.hform, 0));
}
