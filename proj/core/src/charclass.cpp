#include "courant/charclass.hpp"

#include <map>
#include <stdexcept>

namespace courant {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

Rational coefficient(const Poly& p, Monomial mono) {
  for (const auto& t : p.terms())
    if (t.mono == mono) return t.coef;
  return 0;
}

}  // namespace

AForm standard_three_form(const Quintuple& q) {
  check_shapes(q);
  const int m = q.fiber.dim(), p = q.patch.p, n = q.patch.n;
  AForm c = AForm::like(q, 3);
  for (const auto& t : increasing_tuples(m, 3))
    c.set_component(t, {}, Poly::constant(n, -q.fiber.b(t[0], t[1], t[2])));
  for (int k = 0; k < m; ++k)
    for (const auto& ab : increasing_tuples(p, 2)) {
      PolyVector r = q.curv.at(ab);
      Poly v(n);
      for (int l = 0; l < m; ++l)
        if (!q.fiber.metric()(l, k).is_zero()) v += q.fiber.metric()(l, k) * r[sz(l)];
      const int fiber[] = {k};
      c.set_component(fiber, ab, v);
    }
  auto ts = increasing_tuples(p, 3);
  for (std::size_t t = 0; t < ts.size(); ++t) c.set_component({}, ts[t], q.hform.components()[t]);
  return c;
}

Section e_connection(const Quintuple& q, const FConnection& fc, const Section& e1, const Section& e2) {
  const int n = q.patch.n;
  Section out = zero_section(q);
  out.xi = fc.apply_dual(e1.x, e2.xi);
  PolyVector h = h_contract(q, e1.x, e2.x);
  const Rational third(1, 3);
  for (std::size_t c = 0; c < out.xi.size(); ++c) out.xi[c] -= third * h[c];
  out.r = connection_apply(q.conn, e1.x, e2.r);
  PolyVector b = q.fiber.bracket(e1.r, e2.r, n);
  const Rational two_thirds(2, 3);
  for (std::size_t k = 0; k < out.r.size(); ++k) out.r[k] += two_thirds * b[k];
  out.x = fc.apply(e1.x, e2.x);
  return out;
}

NaiveTable e_connection_table(const Quintuple& q, const FConnection& fc) {
  if (!(fc.patch() == q.patch)) throw std::invalid_argument("F-connection patch mismatch");
  if (!fc.is_torsion_free()) throw std::invalid_argument("F-connection has torsion");
  const int frame = frame_size(q);
  std::vector<Section> basis;
  for (int u = 0; u < frame; ++u) basis.push_back(frame_section(q, u));
  std::vector<std::vector<Section>> cb(sz(frame), std::vector<Section>(sz(frame)));
  std::vector<std::vector<Section>> nab(sz(frame), std::vector<Section>(sz(frame)));
  for (int i = 0; i < frame; ++i)
    for (int j = 0; j < frame; ++j) {
      cb[sz(i)][sz(j)] = courant_bracket(q, basis[sz(i)], basis[sz(j)]);
      nab[sz(i)][sz(j)] = e_connection(q, fc, basis[sz(i)], basis[sz(j)]);
    }
  const Rational third(1, 3), half(1, 2);
  NaiveTable table;
  table.tuples = increasing_tuples(frame, 3);
  for (const auto& t : table.tuples) {
    Poly acc(q.patch.n);
    for (int rot = 0; rot < 3; ++rot) {
      const int a = t[sz(rot)], b = t[sz((rot + 1) % 3)], c = t[sz((rot + 2) % 3)];
      acc += third * pairing(q, cb[sz(a)][sz(b)], basis[sz(c)]);
      acc -= half * pairing(q, nab[sz(a)][sz(b)] - nab[sz(b)][sz(a)], basis[sz(c)]);
    }
    table.values.push_back(std::move(acc));
  }
  return table;
}

AForm e_connection_form(const Quintuple& q, const FConnection& fc) {
  NaiveTable table = e_connection_table(q, fc);
  const int p = q.patch.p;
  AForm out = AForm::like(q, 3);
  for (std::size_t t = 0; t < table.tuples.size(); ++t) {
    const auto& tup = table.tuples[t];
    if (tup[0] < p) {
      if (!table.values[t].is_zero()) throw std::logic_error("E-connection form does not descend to A");
      continue;
    }
    out.set({tup[0] - p, tup[1] - p, tup[2] - p}, table.values[t]);
  }
  return out;
}

Hoist standard_hoist(const Quintuple& q) { return Hoist{GValuedForm(1, q.patch, q.fiber.dim())}; }

ASection kappa(const Quintuple& q, const Hoist& h, int a) {
  ASection s = a_frame_section(q, q.fiber.dim() + a);
  s.r = h.J.at({a});
  return s;
}

HoistData hoist_data(const Quintuple& q, const Hoist& h) {
  const int m = q.fiber.dim(), p = q.patch.p;
  HoistData out{flat_connection(q.patch, m), GValuedForm(2, q.patch, m)};
  for (int a = 0; a < p; ++a) {
    ASection ka = kappa(q, h, a);
    for (int i = 0; i < m; ++i) {
      ASection col = a_bracket(q, ka, a_frame_section(q, i));
      for (int k = 0; k < m; ++k) out.conn.gamma[sz(a)](k, i) = col.r[sz(k)];
    }
  }
  for (const auto& ab : increasing_tuples(p, 2)) {
    ASection br = a_bracket(q, kappa(q, h, ab[0]), kappa(q, h, ab[1]));
    out.curv.set(ab, br.r);
  }
  return out;
}

Report check_coherent(const Quintuple& algebroid, const AForm& c, const Hoist& h) {
  const Quintuple& q = algebroid;
  const int m = q.fiber.dim(), p = q.patch.p, n = q.patch.n;
  if (c.degree() != 3 || c.fiber_dim() != m || !(c.patch() == q.patch))
    throw std::invalid_argument("3-form does not match the algebroid");
  Report report;

  CheckBuilder fiber("coherent_fiber", "C(e_i,e_j,e_k) + <[e_i,e_j],e_k> = 0");
  for (const auto& t : increasing_tuples(m, 3))
    fiber.expect_zero(c.component(t, {}) + Poly::constant(n, q.fiber.b(t[0], t[1], t[2])), t);
  fiber.finish_into(report);

  std::vector<ASection> ks;
  for (int a = 0; a < p; ++a) ks.push_back(kappa(q, h, a));

  CheckBuilder mixed("coherent_mixed", "C(e_i,e_j,kappa d_a) = 0");
  for (const auto& ij : increasing_tuples(m, 2))
    for (int a = 0; a < p; ++a) {
      ASection args[] = {a_frame_section(q, ij[0]), a_frame_section(q, ij[1]), ks[sz(a)]};
      mixed.expect_zero(evaluate(c, args), {ij[0], ij[1], a});
    }
  mixed.finish_into(report);

  HoistData hd = hoist_data(q, h);
  CheckBuilder curv("coherent_curvature", "C(e_i,kappa d_a,kappa d_b) - <e_i,R^kappa(d_a,d_b)> = 0");
  for (int i = 0; i < m; ++i)
    for (const auto& ab : increasing_tuples(p, 2)) {
      ASection args[] = {a_frame_section(q, i), ks[sz(ab[0])], ks[sz(ab[1])]};
      PolyVector ei = zero_vector(m, n);
      ei[sz(i)] = Poly::constant(n, 1);
      curv.expect_zero(evaluate(c, args) - q.fiber.inner(ei, hd.curv.at(ab), n), {i, ab[0], ab[1]});
    }
  curv.finish_into(report);

  CheckBuilder closed("closed", "dC = 0");
  AForm dc = ce_differential(q, c);
  auto ts = dc.tuples();
  for (std::size_t t = 0; t < ts.size(); ++t) closed.expect_zero(dc.components()[t], ts[t]);
  closed.finish_into(report);
  return report;
}

HoistSearch find_hoist(const Quintuple& algebroid, const AForm& c) {
  const Quintuple& q = algebroid;
  const int m = q.fiber.dim(), p = q.patch.p, n = q.patch.n;
  HoistSearch out;
  Report pre = check_coherent(q, c, standard_hoist(q));
  const CheckResult* fiber = pre.find("coherent_fiber");
  const CheckResult* closed = pre.find("closed");
  out.report.add(*fiber);
  out.report.add(*closed);
  if (!fiber->passed || !closed->passed) return out;

  const auto pairs = increasing_tuples(m, 2);
  RationalMatrix b(static_cast<int>(pairs.size()), m);
  for (std::size_t r = 0; r < pairs.size(); ++r)
    for (int k = 0; k < m; ++k) b(static_cast<int>(r), k) = q.fiber.b(pairs[r][0], pairs[r][1], k);

  Hoist h = standard_hoist(q);
  CheckBuilder solvable("hoist_solvable", "sum_k <[e_i,e_j],e_k> J_a^k = C(e_i,e_j,d_a)");
  for (int a = 0; a < p && !solvable.failed(); ++a) {
    std::vector<Poly> rhs;
    std::map<std::uint64_t, Monomial> monos;
    for (const auto& ij : pairs) {
      const int leaf[] = {a};
      rhs.push_back(c.component(ij, leaf));
      for (const auto& t : rhs.back().terms()) monos.emplace(t.mono.key(), t.mono);
    }
    PolyVector ja = zero_vector(m, n);
    for (const auto& [key, mono] : monos) {
      RationalVector col;
      for (const auto& r : rhs) col.push_back(coefficient(r, mono));
      auto sol = solve_free_zero(b, col);
      if (!sol) {
        solvable.fail({a}, Poly::monomial(n, mono).to_string());
        break;
      }
      for (int k = 0; k < m; ++k)
        if (!(*sol)[sz(k)].is_zero()) ja[sz(k)] += Poly::monomial(n, mono, (*sol)[sz(k)]);
    }
    h.J.set({a}, ja);
  }
  solvable.finish_into(out.report);
  if (solvable.failed()) return out;

  Report post = check_coherent(q, c, h);
  out.report.add(*post.find("coherent_mixed"));
  out.report.add(*post.find("coherent_curvature"));
  if (out.report.passed()) out.hoist = std::move(h);
  return out;
}

Quintuple build_from_pair(const CharPair& pair, const Hoist& h) {
  const Quintuple& q = pair.algebroid;
  Report coherence = check_coherent(q, pair.c, h);
  if (!coherence.passed()) {
    std::string names;
    for (const auto& f : coherence.failures()) names += (names.empty() ? "" : ", ") + f;
    throw std::domain_error("3-form is not coherent for the hoist: " + names);
  }
  HoistData hd = hoist_data(q, h);
  Quintuple out{q.patch, q.fiber, std::move(hd.conn), std::move(hd.curv), FForm(3, q.patch)};
  for (const auto& t : increasing_tuples(q.patch.p, 3)) {
    ASection args[] = {kappa(q, h, t[0]), kappa(q, h, t[1]), kappa(q, h, t[2])};
    out.hform.set(t, evaluate(pair.c, args));
  }
  return out;
}

CharPair characteristic_pair_of(const Quintuple& q) {
  Quintuple algebroid = q;
  algebroid.hform = FForm(3, q.patch);
  return CharPair{std::move(algebroid), standard_three_form(q)};
}

}  // namespace courant
