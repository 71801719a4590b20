#include <gtest/gtest.h>

#include "courant/fixtures.hpp"
#include "courant/poly_parse.hpp"
#include "courant/sampling.hpp"
#include "oracles.hpp"

using namespace courant;

TEST(LeafwiseD, OneTermDerivative) {
  FForm w(1, Patch{2, 2});
  w.set({1}, parse_poly("x1", 2));
  FForm d = leafwise_d(w);
  EXPECT_EQ(d.at({0, 1}), Poly::constant(2, 1));
}

TEST(LeafwiseD, TopDegree) {
  Patch patch{4, 4};
  FForm w(3, patch);
  w.set({1, 2, 3}, parse_poly("2*x1", 4));
  FForm d = leafwise_d(w);
  EXPECT_EQ(d.at({0, 1, 2, 3}), Poly::constant(4, 2));
  EXPECT_EQ(d, oracle::exterior_d(w));
}

TEST(LeafwiseD, MatchesAlternatingSumAndSquaresToZero) {
  sampling::Rng rng(11);
  for (int k = 0; k <= 3; ++k)
    for (int t = 0; t < 5; ++t) {
      FForm w = sampling::random_form(rng, k, Patch{5, 4}, 3);
      FForm d = leafwise_d(w);
      EXPECT_EQ(d, oracle::exterior_d(w));
      EXPECT_TRUE(leafwise_d(d).is_zero());
    }
}

TEST(LeafwiseD, LeafIsProperSubspace) {
  // x3 is transverse: derivatives along it never appear.
  FForm f(0, Patch{3, 2});
  f.set(std::vector<int>{}, parse_poly("x1*x3 + x3^2", 3));
  FForm d = leafwise_d(f);
  EXPECT_EQ(d.at({0}), parse_poly("x3", 3));
  EXPECT_TRUE(d.at({1}).is_zero());
}

TEST(FormStorage, AntisymmetricAccess) {
  FForm w(2, Patch{3, 3});
  w.set({2, 0}, parse_poly("x1", 3));
  EXPECT_EQ(w.at({0, 2}), parse_poly("-1*x1", 3));
  EXPECT_TRUE(w.at({1, 1}).is_zero());
}

TEST(Connection, FlatIsPureDerivative) {
  Patch patch{2, 2};
  GConnection c = flat_connection(patch, 3);
  PolyVector r = zero_vector(3, 2);
  r[1] = parse_poly("x1", 2);
  PolyVector out = connection_apply(c, 0, r);
  EXPECT_EQ(out[1], Poly::constant(2, 1));
  EXPECT_TRUE(out[0].is_zero() && out[2].is_zero());
}

TEST(Connection, AdjointGamma) {
  Quintuple q = fixtures::su2_plane();
  PolyVector e2 = zero_vector(3, 2);
  e2[1] = Poly::constant(2, 1);
  PolyVector out = connection_apply(q.conn, 0, e2);
  EXPECT_TRUE(out[0].is_zero());
  EXPECT_TRUE(out[1].is_zero());
  EXPECT_EQ(out[2], Poly::constant(2, 1));
}

TEST(Connection, Leibniz) {
  sampling::Rng rng(12);
  Quintuple q = fixtures::su2_plane();
  for (auto& g : q.conn.gamma) g = g + sampling::random_matrix(rng, 3, 3, 2, 1);
  for (int t = 0; t < 10; ++t) {
    Poly f = sampling::random_poly(rng, 2, 2);
    PolyVector r = {sampling::random_poly(rng, 2, 2), sampling::random_poly(rng, 2, 2), sampling::random_poly(rng, 2, 2)};
    PolyVector fr = r;
    for (auto& c : fr) c = f * c;
    for (int a = 0; a < 2; ++a) {
      PolyVector lhs = connection_apply(q.conn, a, fr);
      PolyVector nr = connection_apply(q.conn, a, r);
      for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(lhs[k], f.derivative(a) * r[k] + f * nr[k]);
    }
  }
}

TEST(Connection, Validation) {
  Quintuple d = fixtures::su2_plane();
  EXPECT_TRUE(validate_connection(d.conn, d.fiber, d.patch).passed());
  EXPECT_TRUE(validate_connection(flat_connection(d.patch, 3), d.fiber, d.patch).passed());
  GConnection bad = flat_connection(d.patch, 3);
  bad.gamma[0] = PolyMatrix::identity(3, 2);
  Report r = validate_connection(bad, d.fiber, d.patch);
  const CheckResult* metric = r.find("connection_metric");
  ASSERT_FALSE(metric->passed);
  EXPECT_EQ(metric->witness->indices, (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(metric->witness->residual, "2");
}

TEST(Pontryagin, AbelianFourMatchesPermutationSum) {
  Quintuple q = fixtures::abelian_four();
  FForm rr = pontryagin_form(q.curv, q.fiber);
  EXPECT_EQ(rr.at({0, 1, 2, 3}), Poly::constant(4, 2));
  EXPECT_EQ(oracle::pontryagin_s4(q, 0, 1, 2, 3), Poly::constant(4, 2));
  EXPECT_EQ(rr, leafwise_d(q.hform));
}

TEST(Pontryagin, RandomCurvatureMatchesPermutationSum) {
  sampling::Rng rng(13);
  Quintuple q = trivial_quintuple(Patch{5, 5}, QuadLieAlgebra::su2());
  for (const auto& t : increasing_tuples(5, 2)) {
    PolyVector v = {sampling::random_poly(rng, 5, 1), sampling::random_poly(rng, 5, 1), sampling::random_poly(rng, 5, 1)};
    q.curv.set(t, v);
  }
  FForm rr = pontryagin_form(q.curv, q.fiber);
  for (const auto& t : increasing_tuples(5, 4)) EXPECT_EQ(rr.at(t), oracle::pontryagin_s4(q, t[0], t[1], t[2], t[3]));
}

TEST(Pontryagin, VanishesBelowFourLeafDirections) {
  Quintuple d = fixtures::su2_plane();
  EXPECT_TRUE(pontryagin_form(d.curv, d.fiber).is_zero());
  Quintuple c = fixtures::abelian_four();
  c.curv = GValuedForm(2, c.patch, 1);
  EXPECT_TRUE(pontryagin_form(c.curv, c.fiber).is_zero());
}

TEST(FConnectionTest, TorsionAndDual) {
  Patch patch{2, 2};
  FConnection fc(patch);
  fc.gamma(0, 1, 0) = parse_poly("x2", 2);
  EXPECT_FALSE(fc.is_torsion_free());
  fc.gamma(1, 0, 0) = parse_poly("x2", 2);
  EXPECT_TRUE(fc.is_torsion_free());
  // <nabla_x eta, y> + <eta, nabla_x y> = x <eta, y>.
  sampling::Rng rng(14);
  PolyVector x = {sampling::random_poly(rng, 2, 2), sampling::random_poly(rng, 2, 2)};
  PolyVector y = {sampling::random_poly(rng, 2, 2), sampling::random_poly(rng, 2, 2)};
  PolyVector eta = {sampling::random_poly(rng, 2, 2), sampling::random_poly(rng, 2, 2)};
  PolyVector ny = fc.apply(x, y), neta = fc.apply_dual(x, eta);
  Poly pair = eta[0] * y[0] + eta[1] * y[1];
  EXPECT_EQ(neta[0] * y[0] + neta[1] * y[1] + eta[0] * ny[0] + eta[1] * ny[1], directional(x, pair));
}
