#include "courant/courant.hpp"

#include <stdexcept>

namespace courant {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

void scale_add(PolyVector& acc, const PolyVector& v, const Poly& f) {
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (!v[i].is_zero()) acc[i].add_product(v[i], f);
}

// First nonzero component of a section, as (label, value).
std::pair<std::string, Poly> first_nonzero(const Section& s) {
  for (std::size_t a = 0; a < s.xi.size(); ++a)
    if (!s.xi[a].is_zero()) return {"delta" + std::to_string(a + 1), s.xi[a]};
  for (std::size_t i = 0; i < s.r.size(); ++i)
    if (!s.r[i].is_zero()) return {"e" + std::to_string(i + 1), s.r[i]};
  for (std::size_t a = 0; a < s.x.size(); ++a)
    if (!s.x[a].is_zero()) return {"d" + std::to_string(a + 1), s.x[a]};
  return {"", Poly()};
}

}  // namespace

Quintuple trivial_quintuple(Patch patch, const QuadLieAlgebra& fiber) {
  validate_patch(patch);
  return Quintuple{patch, fiber, flat_connection(patch, fiber.dim()), GValuedForm(2, patch, fiber.dim()),
                   FForm(3, patch)};
}

void check_shapes(const Quintuple& q) {
  validate_patch(q.patch);
  const int m = q.fiber.dim();
  if (static_cast<int>(q.conn.gamma.size()) != q.patch.p)
    throw std::invalid_argument("connection: expected one matrix per leaf direction");
  for (const auto& g : q.conn.gamma)
    if (g.rows() != m || g.cols() != m || g.nvars() != q.patch.n)
      throw std::invalid_argument("connection: matrix shape mismatch");
  if (q.curv.degree() != 2 || !(q.curv.patch() == q.patch) || q.curv.fiber_dim() != m)
    throw std::invalid_argument("curvature: shape mismatch");
  if (q.hform.degree() != 3 || !(q.hform.patch() == q.patch)) throw std::invalid_argument("H: shape mismatch");
}

Report validate_quintuple(const Quintuple& q) {
  check_shapes(q);
  const int p = q.patch.p, n = q.patch.n, m = q.fiber.dim();
  Report report = validate_connection(q.conn, q.fiber, q.patch);

  CheckBuilder bianchi("bianchi", "nabla_a R_bc + nabla_b R_ca + nabla_c R_ab = 0");
  for (const auto& t : increasing_tuples(p, 3)) {
    PolyVector sum = zero_vector(m, n);
    for (int rot = 0; rot < 3; ++rot) {
      int a = t[sz(rot)], b = t[sz((rot + 1) % 3)], c = t[sz((rot + 2) % 3)];
      PolyVector d = connection_apply(q.conn, a, q.curv.at({b, c}));
      for (int k = 0; k < m; ++k) sum[sz(k)] += d[sz(k)];
    }
    for (int k = 0; k < m; ++k) bianchi.expect_zero(sum[sz(k)], {t[0], t[1], t[2], k});
  }
  bianchi.finish_into(report);

  CheckBuilder curvature("curvature_identity",
                         "d_a Gamma_b - d_b Gamma_a + [Gamma_a, Gamma_b] - ad(R_ab) = 0");
  for (const auto& t : increasing_tuples(p, 2)) {
    const int a = t[0], b = t[1];
    const PolyMatrix& ga = q.conn.gamma[sz(a)];
    const PolyMatrix& gb = q.conn.gamma[sz(b)];
    PolyMatrix res = gb.derivative(a) - ga.derivative(b) + ga * gb - gb * ga - q.fiber.ad(q.curv.at({a, b}), n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) curvature.expect_zero(res(i, j), {a, b, i, j});
  }
  curvature.finish_into(report);

  CheckBuilder pont("dF_H_equals_RR", "<R^R> - d^F H = 0");
  FForm res = pontryagin_form(q.curv, q.fiber) - leafwise_d(q.hform);
  auto quads = increasing_tuples(p, 4);
  for (std::size_t t = 0; t < quads.size(); ++t) pont.expect_zero(res.components()[t], quads[t]);
  pont.finish_into(report);
  return report;
}

Section& Section::operator+=(const Section& o) {
  for (std::size_t i = 0; i < xi.size(); ++i) xi[i] += o.xi[i];
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.r[i];
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += o.x[i];
  return *this;
}

Section& Section::operator-=(const Section& o) {
  for (std::size_t i = 0; i < xi.size(); ++i) xi[i] -= o.xi[i];
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= o.r[i];
  for (std::size_t i = 0; i < x.size(); ++i) x[i] -= o.x[i];
  return *this;
}

Section& Section::operator*=(const Poly& f) {
  for (auto* v : {&xi, &r, &x})
    for (auto& c : *v)
      if (!c.is_zero()) c *= f;
  return *this;
}

Section& Section::operator*=(const Rational& c) {
  for (auto* v : {&xi, &r, &x})
    for (auto& e : *v) e *= c;
  return *this;
}

bool Section::is_zero() const {
  for (const auto* v : {&xi, &r, &x})
    for (const auto& c : *v)
      if (!c.is_zero()) return false;
  return true;
}

Section zero_section(const Quintuple& q) {
  const int p = q.patch.p, n = q.patch.n;
  return Section{zero_vector(p, n), zero_vector(q.fiber.dim(), n), zero_vector(p, n)};
}

int frame_size(const Quintuple& q) { return 2 * q.patch.p + q.fiber.dim(); }

Section frame_section(const Quintuple& q, int index) {
  const int p = q.patch.p, m = q.fiber.dim(), n = q.patch.n;
  if (index < 0 || index >= 2 * p + m) throw std::out_of_range("frame index out of range");
  Section s = zero_section(q);
  Poly one = Poly::constant(n, 1);
  if (index < p) {
    s.xi[sz(index)] = one;
  } else if (index < p + m) {
    s.r[sz(index - p)] = one;
  } else {
    s.x[sz(index - p - m)] = one;
  }
  return s;
}

std::string frame_label(const Quintuple& q, int index) {
  const int p = q.patch.p, m = q.fiber.dim();
  if (index < p) return "delta" + std::to_string(index + 1);
  if (index < p + m) return "e" + std::to_string(index - p + 1);
  return "d" + std::to_string(index - p - m + 1);
}

Poly pairing(const Quintuple& q, const Section& e1, const Section& e2) {
  const int n = q.patch.n;
  Poly out = q.fiber.inner(e1.r, e2.r, n);
  const Rational half(1, 2);
  for (int a = 0; a < q.patch.p; ++a) {
    out.add_product(e1.xi[sz(a)], e2.x[sz(a)], half);
    out.add_product(e2.xi[sz(a)], e1.x[sz(a)], half);
  }
  return out;
}

PolyVector anchor(const Section& e) { return e.x; }

Section d_operator(const Quintuple& q, const Poly& f) {
  Section s = zero_section(q);
  for (int a = 0; a < q.patch.p; ++a) s.xi[sz(a)] = f.derivative(a);
  return s;
}

PolyVector h_contract(const Quintuple& q, std::span<const Poly> x, std::span<const Poly> y) {
  const int p = q.patch.p, n = q.patch.n;
  PolyVector out = zero_vector(p, n);
  if (p < 3) return out;
  for (int a = 0; a < p; ++a) {
    if (x[sz(a)].is_zero()) continue;
    for (int b = 0; b < p; ++b) {
      if (b == a || y[sz(b)].is_zero()) continue;
      Poly xy = x[sz(a)] * y[sz(b)];
      for (int c = 0; c < p; ++c) {
        if (c == a || c == b) continue;
        Poly h = q.hform.at({a, b, c});
        if (!h.is_zero()) out[sz(c)].add_product(xy, h);
      }
    }
  }
  return out;
}

PolyVector r_apply(const Quintuple& q, std::span<const Poly> x, std::span<const Poly> y) {
  const int p = q.patch.p, n = q.patch.n, m = q.fiber.dim();
  PolyVector out = zero_vector(m, n);
  for (int a = 0; a < p; ++a) {
    if (x[sz(a)].is_zero()) continue;
    for (int b = 0; b < p; ++b) {
      if (b == a || y[sz(b)].is_zero()) continue;
      PolyVector rab = q.curv.at({a, b});
      Poly xy = x[sz(a)] * y[sz(b)];
      scale_add(out, rab, xy);
    }
  }
  return out;
}

PolyVector p_form(const Quintuple& q, std::span<const Poly> r1, std::span<const Poly> r2) {
  const int p = q.patch.p, n = q.patch.n;
  PolyVector out = zero_vector(p, n);
  for (int b = 0; b < p; ++b) {
    PolyVector d = connection_apply(q.conn, b, r1);
    out[sz(b)] = Rational(2) * q.fiber.inner(r2, d, n);
  }
  return out;
}

PolyVector q_form(const Quintuple& q, std::span<const Poly> x, std::span<const Poly> r) {
  const int p = q.patch.p, n = q.patch.n;
  PolyVector out = zero_vector(p, n);
  for (int a = 0; a < p; ++a) {
    if (x[sz(a)].is_zero()) continue;
    for (int b = 0; b < p; ++b) {
      if (a == b) continue;
      Poly v = q.fiber.inner(r, q.curv.at({a, b}), n);
      if (!v.is_zero()) out[sz(b)].add_product(x[sz(a)], v);
    }
  }
  return out;
}

namespace {

bool all_zero(const PolyVector& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

// (L_x xi)_b = x^a d_a xi_b + xi_a d_b x^a.
void add_lie_derivative(PolyVector& acc, std::span<const Poly> x, std::span<const Poly> xi, const Rational& sign) {
  const std::size_t p = acc.size();
  for (std::size_t b = 0; b < p; ++b) {
    for (std::size_t a = 0; a < p; ++a) {
      if (!x[a].is_zero()) acc[b].add_product(x[a], xi[b].derivative(static_cast<int>(a)), sign);
      if (!xi[a].is_zero()) acc[b].add_product(xi[a], x[a].derivative(static_cast<int>(b)), sign);
    }
  }
}

}  // namespace

Section dorfman(const Quintuple& q, const Section& e1, const Section& e2) {
  const int p = q.patch.p, n = q.patch.n, m = q.fiber.dim();
  Section out = zero_section(q);
  const bool x1 = !all_zero(e1.x), x2 = !all_zero(e2.x);
  const bool r1 = !all_zero(e1.r), r2 = !all_zero(e2.r);
  const bool xi1 = !all_zero(e1.xi), xi2 = !all_zero(e2.xi);

  // F part.
  if (x1 || x2) out.x = vector_field_bracket(e1.x, e2.x, n);

  // G part.
  if (x1 && x2) out.r = r_apply(q, e1.x, e2.x);
  if (r1 && r2) {
    PolyVector b = q.fiber.bracket(e1.r, e2.r, n);
    for (int k = 0; k < m; ++k) out.r[sz(k)] += b[sz(k)];
  }
  if (x1 && r2) {
    PolyVector d = connection_apply(q.conn, e1.x, e2.r);
    for (int k = 0; k < m; ++k) out.r[sz(k)] += d[sz(k)];
  }
  if (x2 && r1) {
    PolyVector d = connection_apply(q.conn, e2.x, e1.r);
    for (int k = 0; k < m; ++k) out.r[sz(k)] -= d[sz(k)];
  }

  // F* part.
  if (x1 && x2) out.xi = h_contract(q, e1.x, e2.x);
  if (r1 && r2) {
    PolyVector v = p_form(q, e1.r, e2.r);
    for (int b = 0; b < p; ++b) out.xi[sz(b)] += v[sz(b)];
  }
  if (x1 && r2) {
    PolyVector v = q_form(q, e1.x, e2.r);
    for (int b = 0; b < p; ++b) out.xi[sz(b)] -= Rational(2) * v[sz(b)];
  }
  if (x2 && r1) {
    PolyVector v = q_form(q, e2.x, e1.r);
    for (int b = 0; b < p; ++b) out.xi[sz(b)] += Rational(2) * v[sz(b)];
  }
  if (x1 && xi2) add_lie_derivative(out.xi, e1.x, e2.xi, 1);
  if (x2 && xi1) {
    add_lie_derivative(out.xi, e2.x, e1.xi, -1);
    Poly contraction(n);
    for (int a = 0; a < p; ++a) contraction.add_product(e1.xi[sz(a)], e2.x[sz(a)]);
    for (int b = 0; b < p; ++b) out.xi[sz(b)] += contraction.derivative(b);
  }
  return out;
}

Section courant_bracket(const Quintuple& q, const Section& e1, const Section& e2) {
  return dorfman(q, e1, e2) - d_operator(q, pairing(q, e1, e2));
}

namespace {

struct FamilyMember {
  int frame;
  Monomial mono;
  Section section;
};

std::string describe(const Quintuple& q, const FamilyMember& e) {
  Poly f = Poly::monomial(q.patch.n, e.mono);
  return f.to_string() + "*" + frame_label(q, e.frame);
}

}  // namespace

Report axiom_check(const Quintuple& q, int degree_cap) {
  check_shapes(q);
  const int n = q.patch.n;
  const int frame = frame_size(q);
  std::vector<FamilyMember> family;
  for (int u = 0; u < frame; ++u) {
    Section base = frame_section(q, u);
    for (Monomial mono : monomials_up_to(n, degree_cap))
      family.push_back({u, mono, Poly::monomial(n, mono) * base});
  }
  const std::size_t size = family.size();

  std::vector<Section> bracket(size * size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) bracket[i * size + j] = dorfman(q, family[i].section, family[j].section);
  auto br = [&](std::size_t i, std::size_t j) -> const Section& { return bracket[i * size + j]; };

  Report report;
  // Witness identities name the offending family members and the component.
  auto record = [&](const char* name, const std::string& prefix, const auto& body) {
    std::string identity;
    std::vector<int> indices;
    std::string residual;
    bool failed = body(identity, indices, residual);
    CheckResult r{name, !failed, std::nullopt};
    if (failed) {
      for (int& i : indices) ++i;
      r.witness = Witness{prefix + identity, std::move(indices), std::move(residual)};
    }
    report.add(std::move(r));
  };
  auto fill = [&](const Section& defect, std::string& identity, std::string& residual,
                  const std::vector<const FamilyMember*>& members) {
    auto [label, value] = first_nonzero(defect);
    identity = " at (";
    for (std::size_t k = 0; k < members.size(); ++k) identity += (k ? ", " : "") + describe(q, *members[k]);
    identity += "), component " + label;
    residual = value.to_string();
  };

  record("axiom1_jacobi", "[[e1,[[e2,e3]]]] = [[[[e1,e2]],e3]] + [[e2,[[e1,e3]]]]",
         [&](std::string& identity, std::vector<int>& idx, std::string& residual) {
           for (std::size_t i = 0; i < size; ++i)
             for (std::size_t j = 0; j < size; ++j)
               for (std::size_t k = 0; k < size; ++k) {
                 Section d = dorfman(q, family[i].section, br(j, k));
                 d -= dorfman(q, br(i, j), family[k].section);
                 d -= dorfman(q, family[j].section, br(i, k));
                 if (d.is_zero()) continue;
                 fill(d, identity, residual, {&family[i], &family[j], &family[k]});
                 idx = {family[i].frame, family[j].frame, family[k].frame};
                 return true;
               }
           return false;
         });

  record("axiom2_anchor", "rho([[e1,e2]]) = [rho(e1), rho(e2)]",
         [&](std::string& identity, std::vector<int>& idx, std::string& residual) {
           for (std::size_t i = 0; i < size; ++i)
             for (std::size_t j = 0; j < size; ++j) {
               Section d = zero_section(q);
               d.x = vector_field_bracket(family[i].section.x, family[j].section.x, n);
               for (std::size_t a = 0; a < d.x.size(); ++a) d.x[a] = br(i, j).x[a] - d.x[a];
               if (d.is_zero()) continue;
               fill(d, identity, residual, {&family[i], &family[j]});
               idx = {family[i].frame, family[j].frame};
               return true;
             }
           return false;
         });

  const std::vector<Monomial> monos = monomials_up_to(n, degree_cap);
  record("axiom3_leibniz", "[[e1, f e2]] = (rho(e1) f) e2 + f [[e1,e2]]",
         [&](std::string& identity, std::vector<int>& idx, std::string& residual) {
           for (std::size_t i = 0; i < size; ++i)
             for (std::size_t j = 0; j < size; ++j)
               for (Monomial mono : monos) {
                 Poly f = Poly::monomial(n, mono);
                 Section d = dorfman(q, family[i].section, f * family[j].section);
                 d -= directional(family[i].section.x, f) * family[j].section;
                 d -= f * br(i, j);
                 if (d.is_zero()) continue;
                 fill(d, identity, residual, {&family[i], &family[j]});
                 identity += ", f = " + f.to_string();
                 idx = {family[i].frame, family[j].frame};
                 return true;
               }
           return false;
         });

  record("axiom4_symmetric_part", "[[e1,e2]] + [[e2,e1]] = 2 D<e1,e2>",
         [&](std::string& identity, std::vector<int>& idx, std::string& residual) {
           for (std::size_t i = 0; i < size; ++i)
             for (std::size_t j = i; j < size; ++j) {
               Section d = br(i, j) + br(j, i) - Rational(2) * d_operator(q, pairing(q, family[i].section, family[j].section));
               if (d.is_zero()) continue;
               fill(d, identity, residual, {&family[i], &family[j]});
               idx = {family[i].frame, family[j].frame};
               return true;
             }
           return false;
         });

  record("axiom5_D_kernel", "[[D f, e1]] = 0",
         [&](std::string& identity, std::vector<int>& idx, std::string& residual) {
           for (Monomial mono : monomials_up_to(n, degree_cap + 1)) {
             Poly f = Poly::monomial(n, mono);
             Section df = d_operator(q, f);
             for (std::size_t i = 0; i < size; ++i) {
               Section d = dorfman(q, df, family[i].section);
               if (d.is_zero()) continue;
               fill(d, identity, residual, {&family[i]});
               identity += ", f = " + f.to_string();
               idx = {family[i].frame};
               return true;
             }
           }
           return false;
         });

  record("axiom6_metric", "rho(e1)<e2,e3> = <[[e1,e2]],e3> + <e2,[[e1,e3]]>",
         [&](std::string& identity, std::vector<int>& idx, std::string& residual) {
           std::vector<Poly> pair(size * size);
           for (std::size_t i = 0; i < size; ++i)
             for (std::size_t j = 0; j < size; ++j) pair[i * size + j] = pairing(q, family[i].section, family[j].section);
           for (std::size_t i = 0; i < size; ++i)
             for (std::size_t j = 0; j < size; ++j)
               for (std::size_t k = 0; k < size; ++k) {
                 Poly d = directional(family[i].section.x, pair[j * size + k]);
                 d -= pairing(q, br(i, j), family[k].section);
                 d -= pairing(q, family[j].section, br(i, k));
                 if (d.is_zero()) continue;
                 identity = " at (" + describe(q, family[i]) + ", " + describe(q, family[j]) + ", " +
                            describe(q, family[k]) + ")";
                 residual = d.to_string();
                 idx = {family[i].frame, family[j].frame, family[k].frame};
                 return true;
               }
           return false;
         });
  return report;
}

}  // namespace courant
