#include "courant/morphism.hpp"

#include <stdexcept>

namespace courant {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

PolyVector add(PolyVector a, const PolyVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

PolyVector sub(PolyVector a, const PolyVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

// J(x) = sum_a x^a J_a.
PolyVector apply_one_form(const GValuedForm& j, std::span<const Poly> x) {
  PolyVector out = zero_vector(j.fiber_dim(), j.patch().n);
  for (int a = 0; a < j.patch().p; ++a) {
    if (x[sz(a)].is_zero()) continue;
    PolyVector ja = j.at({a});
    for (std::size_t k = 0; k < out.size(); ++k)
      if (!ja[k].is_zero()) out[k].add_product(x[sz(a)], ja[k]);
  }
  return out;
}

PolyMatrix tau_inverse(const IsoData& iso) {
  auto inv = inverse_constant_det(iso.tau);
  if (!inv) throw std::domain_error("det(tau) is not a nonzero constant");
  return *inv;
}

struct AlgebroidPart {
  GConnection conn;
  GValuedForm curv;
};

// Target connection and curvature from iso2 and iso3.
AlgebroidPart transported_algebroid(const Quintuple& q1, const IsoData& iso, const PolyMatrix& inv) {
  const int m = q1.fiber.dim(), p = q1.patch.p, n = q1.patch.n;
  AlgebroidPart out{flat_connection(q1.patch, m), GValuedForm(2, q1.patch, m)};
  for (int a = 0; a < p; ++a) {
    PolyVector phia = iso.phi.at({a});
    out.conn.gamma[sz(a)] = iso.tau * inv.derivative(a) + iso.tau * q1.conn.gamma[sz(a)] * inv - q1.fiber.ad(phia, n);
  }
  for (const auto& ab : increasing_tuples(p, 2)) {
    const int a = ab[0], b = ab[1];
    PolyVector phia = iso.phi.at({a}), phib = iso.phi.at({b});
    PolyVector term = sub(connection_apply(q1.conn, b, inv.apply(phia)), connection_apply(q1.conn, a, inv.apply(phib)));
    PolyVector r2 = add(add(iso.tau.apply(q1.curv.at(ab)), iso.tau.apply(term)), q1.fiber.bracket(phia, phib, n));
    out.curv.set(ab, r2);
  }
  return out;
}

}  // namespace

IsoData identity_iso(const Quintuple& q) {
  return IsoData{PolyMatrix::identity(q.fiber.dim(), q.patch.n), GValuedForm(1, q.patch, q.fiber.dim()),
                 PolyMatrix(q.patch.p, q.patch.p, q.patch.n)};
}

Report validate_iso(const IsoData& iso, const QuadLieAlgebra& fiber, Patch patch) {
  const int m = fiber.dim(), p = patch.p, n = patch.n;
  if (iso.tau.rows() != m || iso.tau.cols() != m || iso.beta.rows() != p || iso.beta.cols() != p ||
      iso.phi.degree() != 1 || iso.phi.fiber_dim() != m || !(iso.phi.patch() == patch))
    throw std::invalid_argument("isomorphism data: shape mismatch");
  Report report;

  CheckBuilder iso1("iso1", "<beta d_a|d_b>/2 + <d_a|beta d_b>/2 + <phi d_a, phi d_b> = 0");
  const Rational half(1, 2);
  for (int a = 0; a < p; ++a)
    for (int b = a; b < p; ++b)
      iso1.expect_zero(half * (iso.beta(b, a) + iso.beta(a, b)) + fiber.inner(iso.phi.at({a}), iso.phi.at({b}), n),
                       {a, b});
  iso1.finish_into(report);

  CheckBuilder bracket("tau_bracket", "tau [e_i,e_j] - [tau e_i, tau e_j] = 0");
  for (int i = 0; i < m && !bracket.failed(); ++i)
    for (int j = i + 1; j < m; ++j) {
      PolyVector ei = zero_vector(m, n), ej = zero_vector(m, n);
      ei[sz(i)] = Poly::constant(n, 1);
      ej[sz(j)] = Poly::constant(n, 1);
      PolyVector res = sub(iso.tau.apply(fiber.bracket(ei, ej, n)),
                           fiber.bracket(iso.tau.apply(ei), iso.tau.apply(ej), n));
      for (int k = 0; k < m; ++k) bracket.expect_zero(res[sz(k)], {i, j, k});
    }
  bracket.finish_into(report);

  CheckBuilder metric("tau_metric", "tau^T g tau - g = 0");
  const PolyMatrix g = PolyMatrix::from_rational(fiber.metric(), n);
  PolyMatrix res = iso.tau.transpose() * g * iso.tau - g;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) metric.expect_zero(res(i, j), {i, j});
  metric.finish_into(report);

  CheckBuilder det("tau_det_constant", "det(tau) is a nonzero constant");
  Poly d = determinant(iso.tau);
  if (d.is_zero() || !d.is_constant()) det.fail({}, d.to_string());
  det.finish_into(report);
  return report;
}

Section apply_iso(const Quintuple& q, const IsoData& iso, const Section& e) {
  const int p = q.patch.p, n = q.patch.n;
  Section out = e;
  PolyVector tr = iso.tau.apply(e.r);
  out.r = add(tr, apply_one_form(iso.phi, e.x));
  for (int b = 0; b < p; ++b) {
    for (int a = 0; a < p; ++a)
      if (!e.x[sz(a)].is_zero() && !iso.beta(b, a).is_zero()) out.xi[sz(b)].add_product(iso.beta(b, a), e.x[sz(a)]);
    out.xi[sz(b)].add_product(q.fiber.inner(tr, iso.phi.at({b}), n), Poly::constant(n, 1), -2);
  }
  return out;
}

ASection apply_algebroid_map(const IsoData& iso, const ASection& u) {
  return ASection{add(iso.tau.apply(u.r), apply_one_form(iso.phi, u.x)), u.x};
}

Quintuple transport(const Quintuple& q1, const IsoData& iso) {
  check_shapes(q1);
  PolyMatrix inv = tau_inverse(iso);
  Report valid = validate_iso(iso, q1.fiber, q1.patch);
  if (!valid.passed()) throw std::invalid_argument("isomorphism data fail " + valid.failures().front());
  const int p = q1.patch.p, n = q1.patch.n;
  AlgebroidPart alg = transported_algebroid(q1, iso, inv);
  Quintuple q2{q1.patch, q1.fiber, std::move(alg.conn), std::move(alg.curv), FForm(3, q1.patch)};

  for (const auto& t : increasing_tuples(p, 3)) {
    const int a = t[0], b = t[1], c = t[2];
    Poly h = q1.hform.at({a, b, c});
    h.add_product(q1.fiber.inner(iso.phi.at({a}), q1.fiber.bracket(iso.phi.at({b}), iso.phi.at({c}), n), n),
                  Poly::constant(n, 1), -2);
    const int cyc[3][3] = {{a, b, c}, {b, c, a}, {c, a, b}};
    for (const auto& [x, y, z] : cyc) {
      PolyVector inner = sub(iso.tau.apply(connection_apply(q1.conn, y, inv.apply(iso.phi.at({z})))),
                             iso.tau.apply(q1.curv.at({y, z})));
      h.add_product(q1.fiber.inner(iso.phi.at({x}), inner, n), Poly::constant(n, 1), 2);
      h += iso.beta(y, z).derivative(x);
    }
    q2.hform.set(t, h);
  }
  return q2;
}

IsoData compose(const IsoData& second, const IsoData& first, const QuadLieAlgebra& fiber) {
  const Patch patch = first.phi.patch();
  const int p = patch.p, n = patch.n;
  IsoData out{second.tau * first.tau, GValuedForm(1, patch, fiber.dim()), first.beta + second.beta};
  for (int a = 0; a < p; ++a) out.phi.set({a}, add(second.tau.apply(first.phi.at({a})), second.phi.at({a})));
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      out.beta(b, a).add_product(fiber.inner(second.tau.apply(first.phi.at({a})), second.phi.at({b}), n),
                                 Poly::constant(n, 1), -2);
  return out;
}

AForm phi_form(const Quintuple& q, const GValuedForm& j) {
  AForm out = AForm::like(q, 2);
  for (int a = 0; a < q.patch.p; ++a) {
    PolyVector low = q.fiber.lower(j.at({a}), q.patch.n);
    for (int i = 0; i < q.fiber.dim(); ++i) out.set({i, q.fiber.dim() + a}, low[sz(i)]);
  }
  return out;
}

AForm psi_form(const Quintuple& q, const PolyMatrix& k) {
  AForm out = AForm::like(q, 2);
  const int m = q.fiber.dim();
  for (const auto& ab : increasing_tuples(q.patch.p, 2))
    out.set({m + ab[0], m + ab[1]}, k(ab[0], ab[1]) - k(ab[1], ab[0]));
  return out;
}

AForm d_phi_closed_form(const Quintuple& q, const GValuedForm& j) {
  const int n = q.patch.n;
  AForm out = AForm::like(q, 3);
  auto term = [&](const ASection& u1, const ASection& u2, const ASection& u3) {
    PolyVector v = sub(connection_apply(q.conn, u3.x, apply_one_form(j, u2.x)),
                       connection_apply(q.conn, u2.x, apply_one_form(j, u3.x)));
    v = add(v, apply_one_form(j, vector_field_bracket(u2.x, u3.x, n)));
    Poly t = q.fiber.inner(u1.r, v, n);
    t -= q.fiber.inner(apply_one_form(j, u1.x), add(r_apply(q, u2.x, u3.x), q.fiber.bracket(u2.r, u3.r, n)), n);
    return t;
  };
  auto ts = out.tuples();
  for (std::size_t t = 0; t < ts.size(); ++t) {
    ASection u[] = {a_frame_section(q, ts[t][0]), a_frame_section(q, ts[t][1]), a_frame_section(q, ts[t][2])};
    out.components()[t] = term(u[0], u[1], u[2]) + term(u[1], u[2], u[0]) + term(u[2], u[0], u[1]);
  }
  return out;
}

AForm d_psi_closed_form(const Quintuple& q, const PolyMatrix& k) {
  AForm out = AForm::like(q, 3);
  for (const auto& t : increasing_tuples(q.patch.p, 3)) {
    const int a = t[0], b = t[1], c = t[2];
    Poly v = k(a, b).derivative(c) - k(a, c).derivative(b) + k(b, c).derivative(a) - k(b, a).derivative(c) +
             k(c, a).derivative(b) - k(c, b).derivative(a);
    out.set_component({}, t, v);
  }
  return out;
}

AForm pull_back(const IsoData& iso, const AForm& c, const Quintuple& source) {
  AForm out = AForm::like(source, c.degree());
  std::vector<ASection> images;
  for (int u = 0; u < out.frame_size(); ++u) images.push_back(apply_algebroid_map(iso, a_frame_section(source, u)));
  auto ts = out.tuples();
  std::vector<ASection> args;
  for (std::size_t t = 0; t < ts.size(); ++t) {
    args.clear();
    for (int u : ts[t]) args.push_back(images[sz(u)]);
    out.components()[t] = evaluate(c, args);
  }
  return out;
}

namespace {

GValuedForm curl(const Quintuple& q, const GValuedForm& j) {
  GValuedForm out(2, q.patch, q.fiber.dim());
  for (const auto& ab : increasing_tuples(q.patch.p, 2))
    out.set(ab, sub(connection_apply(q.conn, ab[0], j.at({ab[1]})), connection_apply(q.conn, ab[1], j.at({ab[0]}))));
  return out;
}

Quintuple with_h(Quintuple q, FForm h) {
  q.hform = std::move(h);
  return q;
}

}  // namespace

CannedIso hoist_shift(const Quintuple& q, const GValuedForm& j) {
  const int p = q.patch.p, n = q.patch.n;
  IsoData iso = identity_iso(q);
  iso.phi = j;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) iso.beta(b, a) = -q.fiber.inner(j.at({a}), j.at({b}), n);
  CharPair pair{with_h(q, FForm(3, q.patch)), standard_three_form(q) + ce_differential(q, phi_form(q, j))};
  Quintuple expected = build_from_pair(pair, Hoist{Rational(-1) * j});
  return CannedIso{std::move(iso), std::move(expected)};
}

CannedIso omega_shift(const Quintuple& q, const FForm& omega) {
  if (omega.degree() != 2 || !(omega.patch() == q.patch)) throw std::invalid_argument("omega: shape mismatch");
  IsoData iso = identity_iso(q);
  for (int a = 0; a < q.patch.p; ++a)
    for (int b = 0; b < q.patch.p; ++b) iso.beta(a, b) = omega.at({a, b});
  return CannedIso{std::move(iso), with_h(q, q.hform + leafwise_d(omega))};
}

CannedIso central_shift(const Quintuple& q, const GValuedForm& j) {
  const int m = q.fiber.dim(), p = q.patch.p, n = q.patch.n;
  CheckBuilder central("central_J", "[J_a, e_i] = 0");
  for (int a = 0; a < p && !central.failed(); ++a) {
    PolyMatrix ad = q.fiber.ad(j.at({a}), n);
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < m; ++k) central.expect_zero(ad(k, i), {a, i, k});
  }
  if (central.failed()) throw HypothesisError(central.finish());
  CheckBuilder curl_free("curl_free_J", "nabla_a J_b - nabla_b J_a = 0");
  GValuedForm c = curl(q, j);
  for (const auto& ab : increasing_tuples(p, 2)) {
    PolyVector v = c.at(ab);
    for (int k = 0; k < m; ++k) curl_free.expect_zero(v[sz(k)], {ab[0], ab[1], k});
  }
  if (curl_free.failed()) throw HypothesisError(curl_free.finish());

  IsoData iso = identity_iso(q);
  iso.phi = Rational(1, 2) * j;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) iso.beta(b, a) = Rational(-1, 4) * q.fiber.inner(j.at({a}), j.at({b}), n);
  FForm h = q.hform;
  for (const auto& t : increasing_tuples(p, 3)) {
    Poly v = h.at(t);
    const int cyc[3][3] = {{t[0], t[1], t[2]}, {t[1], t[2], t[0]}, {t[2], t[0], t[1]}};
    for (const auto& [x, y, z] : cyc) v -= q.fiber.inner(j.at({x}), q.curv.at({y, z}), n);
    h.set(t, v);
  }
  return CannedIso{std::move(iso), with_h(q, std::move(h))};
}

Report check_automorphism(const Quintuple& q, const IsoData& sigma) {
  const int m = q.fiber.dim(), p = q.patch.p;
  IsoData probe = sigma;
  probe.beta = PolyMatrix(p, p, q.patch.n);
  Report report;
  Report fiber = validate_iso(probe, q.fiber, q.patch);
  for (const auto& c : fiber.checks())
    if (c.name != "iso1") report.add(c);
  if (!report.passed()) return report;
  AlgebroidPart alg = transported_algebroid(q, sigma, tau_inverse(sigma));
  CheckBuilder conn("automorphism_connection", "nabla_a tau r - tau nabla_a r - [tau r, phi_a] = 0");
  for (int a = 0; a < p; ++a) {
    PolyMatrix d = alg.conn.gamma[sz(a)] - q.conn.gamma[sz(a)];
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) conn.expect_zero(d(i, j), {a, i, j});
  }
  conn.finish_into(report);
  CheckBuilder curv("automorphism_curvature", "iso3 with source = target");
  for (const auto& ab : increasing_tuples(p, 2)) {
    PolyVector d = sub(alg.curv.at(ab), q.curv.at(ab));
    for (int k = 0; k < m; ++k) curv.expect_zero(d[sz(k)], {ab[0], ab[1], k});
  }
  curv.finish_into(report);
  return report;
}

AForm intrinsic_form(const Quintuple& q, const IsoData& sigma, const AForm& c) {
  Report r = check_automorphism(q, sigma);
  if (!r.passed()) throw std::invalid_argument("not an automorphism: " + r.failures().front());
  return pull_back(sigma, c, q) - c;
}

Report coboundary_identity_check(const Quintuple& q1, const IsoData& iso) {
  Quintuple q2 = transport(q1, iso);
  PolyMatrix inv = tau_inverse(iso);
  GValuedForm j(1, q1.patch, q1.fiber.dim());
  for (int a = 0; a < q1.patch.p; ++a) j.set({a}, inv.apply(iso.phi.at({a})));
  AForm lhs = pull_back(iso, standard_three_form(q2), q1) - standard_three_form(q1);
  AForm rhs = ce_differential(q1, Rational(1, 2) * psi_form(q1, iso.beta) + phi_form(q1, j));
  AForm diff = lhs - rhs;
  CheckBuilder check("coboundary_identity", "iota^* C_2 - C_1 - d(Psi_beta/2 + Phi_{tau^-1 phi}) = 0");
  auto ts = diff.tuples();
  for (std::size_t t = 0; t < ts.size(); ++t) check.expect_zero(diff.components()[t], ts[t]);
  Report report;
  check.finish_into(report);
  return report;
}

Report intertwining_check(const Quintuple& q1, const Quintuple& q2, const IsoData& iso, int degree_cap) {
  const int n = q1.patch.n;
  std::vector<std::pair<int, Section>> family;
  for (int u = 0; u < frame_size(q1); ++u) {
    Section base = frame_section(q1, u);
    for (Monomial mono : monomials_up_to(n, degree_cap)) family.emplace_back(u, Poly::monomial(n, mono) * base);
  }
  std::vector<Section> images;
  for (const auto& [u, s] : family) images.push_back(apply_iso(q1, iso, s));
  CheckBuilder check("iso_intertwines", "Theta [[e1,e2]]_1 - [[Theta e1, Theta e2]]_2 = 0");
  for (std::size_t i = 0; i < family.size() && !check.failed(); ++i)
    for (std::size_t j = 0; j < family.size(); ++j) {
      Section d = apply_iso(q1, iso, dorfman(q1, family[i].second, family[j].second)) -
                  dorfman(q2, images[i], images[j]);
      if (d.is_zero()) continue;
      Poly first;
      for (const auto* v : {&d.xi, &d.r, &d.x})
        for (const auto& c : *v)
          if (first.is_zero() && !c.is_zero()) first = c;
      check.fail({family[i].first, family[j].first}, first.to_string());
      break;
    }
  Report report;
  check.finish_into(report);
  return report;
}

}  // namespace courant
