#include "oracles.hpp"

#include <algorithm>

namespace oracle {

namespace {

Poly constant(const Quintuple& q, const Rational& c) { return Poly::constant(q.patch.n, c); }

Poly inner(const Quintuple& q, const PolyVector& r, const PolyVector& s) {
  Poly out(q.patch.n);
  const int m = q.fiber.dim();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      out += q.fiber.metric()(i, j) * (r[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j)]);
  return out;
}

PolyVector bracket(const Quintuple& q, const PolyVector& r, const PolyVector& s) {
  const int m = q.fiber.dim();
  PolyVector out(static_cast<std::size_t>(m), Poly(q.patch.n));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        out[static_cast<std::size_t>(k)] +=
            q.fiber.c(i, j, k) * (r[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j)]);
  return out;
}

PolyVector times(const PolyMatrix& a, const PolyVector& v) {
  PolyVector out(static_cast<std::size_t>(a.rows()), Poly(a.nvars()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out[static_cast<std::size_t>(i)] += a(i, j) * v[static_cast<std::size_t>(j)];
  return out;
}

Section blank(const Quintuple& q) {
  const std::size_t p = static_cast<std::size_t>(q.patch.p), m = static_cast<std::size_t>(q.fiber.dim());
  const Poly z(q.patch.n);
  return Section{PolyVector(p, z), PolyVector(m, z), PolyVector(p, z)};
}

Section unit(const Quintuple& q, int index) {
  Section s = blank(q);
  const int p = q.patch.p, m = q.fiber.dim();
  const Poly one = constant(q, 1);
  if (index < p)
    s.xi[static_cast<std::size_t>(index)] = one;
  else if (index < p + m)
    s.r[static_cast<std::size_t>(index - p)] = one;
  else
    s.x[static_cast<std::size_t>(index - p - m)] = one;
  return s;
}

Section scaled(const Section& s, const Poly& f) {
  Section out = s;
  for (auto* part : {&out.xi, &out.r, &out.x})
    for (auto& c : *part) c = c * f;
  return out;
}

void add_into(Section& a, const Section& b) {
  for (std::size_t i = 0; i < a.xi.size(); ++i) a.xi[i] += b.xi[i];
  for (std::size_t i = 0; i < a.r.size(); ++i) a.r[i] += b.r[i];
  for (std::size_t i = 0; i < a.x.size(); ++i) a.x[i] += b.x[i];
}

// Theta(xi + r + x) = (xi + beta x - 2 phi^* tau r) + (tau r + phi x) + x.
Section forward_iso(const Quintuple& q, const IsoData& iso, const Section& e) {
  const int p = q.patch.p;
  Section out = blank(q);
  PolyVector tr = times(iso.tau, e.r);
  out.r = tr;
  for (int a = 0; a < p; ++a) {
    PolyVector phia = iso.phi.at({a});
    for (std::size_t k = 0; k < out.r.size(); ++k) out.r[k] += e.x[static_cast<std::size_t>(a)] * phia[k];
  }
  for (int b = 0; b < p; ++b) {
    Poly v = e.xi[static_cast<std::size_t>(b)];
    for (int a = 0; a < p; ++a) v += iso.beta(b, a) * e.x[static_cast<std::size_t>(a)];
    v -= Rational(2) * inner(q, tr, iso.phi.at({b}));
    out.xi[static_cast<std::size_t>(b)] = v;
  }
  out.x = e.x;
  return out;
}

}  // namespace

Rational evaluate(const Poly& p, const std::vector<Rational>& point) {
  Rational total;
  for (const Term& t : p.terms()) {
    Rational v = t.coef;
    for (int i = 0; i < p.nvars(); ++i)
      for (int e = 0; e < t.mono.exponent(i); ++e) v *= point[static_cast<std::size_t>(i)];
    total += v;
  }
  return total;
}

Poly pontryagin_s4(const Quintuple& q, int a, int b, int c, int d) {
  const int idx[4] = {a, b, c, d};
  Poly sum(q.patch.n);
  std::vector<int> perm = {0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    const int s0 = idx[perm[0]], s1 = idx[perm[1]], s2 = idx[perm[2]], s3 = idx[perm[3]];
    Poly term = inner(q, q.curv.at({s0, s1}), q.curv.at({s2, s3}));
    if (inversions % 2) sum -= term;
    else sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Rational(1, 4) * sum;
}

FForm exterior_d(const FForm& w) {
  const Patch patch = w.patch();
  const int k = w.degree();
  FForm out(k + 1, patch);
  auto tuples = increasing_tuples(patch.p, k + 1);
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    Poly v(patch.n);
    for (int j = 0; j <= k; ++j) {
      std::vector<int> rest;
      for (int i = 0; i <= k; ++i)
        if (i != j) rest.push_back(tuples[t][static_cast<std::size_t>(i)]);
      Poly term = w.at(rest).derivative(tuples[t][static_cast<std::size_t>(j)]);
      if (j % 2) v -= term;
      else v += term;
    }
    out.components()[t] = v;
  }
  return out;
}

Section frame_dorfman(const Quintuple& q, int u, int v) {
  const int p = q.patch.p, m = q.fiber.dim();
  Section out = blank(q);
  auto is_g = [&](int i) { return i >= p && i < p + m; };
  auto is_f = [&](int i) { return i >= p + m; };
  if (is_f(u) && is_f(v)) {
    const int a = u - p - m, b = v - p - m;
    for (int c = 0; c < p; ++c) out.xi[static_cast<std::size_t>(c)] = q.hform.at({a, b, c});
    out.r = q.curv.at({a, b});
  } else if (is_g(u) && is_g(v)) {
    const int i = u - p, j = v - p;
    for (int k = 0; k < m; ++k) out.r[static_cast<std::size_t>(k)] = constant(q, q.fiber.c(i, j, k));
    // <P(e_i, e_j)|d_b> = 2 <e_j, Gamma_b e_i>.
    for (int b = 0; b < p; ++b) {
      Poly s(q.patch.n);
      for (int k = 0; k < m; ++k) s += q.fiber.metric()(j, k) * q.conn.gamma[static_cast<std::size_t>(b)](k, i);
      out.xi[static_cast<std::size_t>(b)] = Rational(2) * s;
    }
  } else if ((is_f(u) && is_g(v)) || (is_g(u) && is_f(v))) {
    const int a = is_f(u) ? u - p - m : v - p - m;
    const int i = is_g(u) ? u - p : v - p;
    for (int k = 0; k < m; ++k) out.r[static_cast<std::size_t>(k)] = q.conn.gamma[static_cast<std::size_t>(a)](k, i);
    // -2 <Q(d_a, e_i)|d_b> = -2 <e_i, R_ab>.
    for (int b = 0; b < p; ++b) {
      PolyVector rab = q.curv.at({a, b});
      Poly s(q.patch.n);
      for (int k = 0; k < m; ++k) s += q.fiber.metric()(i, k) * rab[static_cast<std::size_t>(k)];
      out.xi[static_cast<std::size_t>(b)] = Rational(-2) * s;
    }
    if (is_g(u)) out = scaled(out, constant(q, -1));
  }
  return out;
}

Section leibniz_dorfman(const Quintuple& q, const Poly& f, int u, const Poly& g, int v) {
  const int p = q.patch.p, m = q.fiber.dim();
  Section out = scaled(frame_dorfman(q, u, v), f * g);
  auto rho = [&](int idx, const Poly& h) { return idx >= p + m ? h.derivative(idx - p - m) : Poly(q.patch.n); };
  add_into(out, scaled(unit(q, v), f * rho(u, g)));
  add_into(out, scaled(unit(q, u), -(g * rho(v, f))));
  Rational pair;
  if (u >= p + m && v < p && u - p - m == v) pair = Rational(1, 2);
  if (v >= p + m && u < p && v - p - m == u) pair = Rational(1, 2);
  if (u >= p && u < p + m && v >= p && v < p + m) pair = q.fiber.metric()(u - p, v - p);
  if (!pair.is_zero())
    for (int a = 0; a < p; ++a) out.xi[static_cast<std::size_t>(a)] += Rational(2) * pair * (g * f.derivative(a));
  return out;
}

Poly standard_form_value(const Quintuple& q, int u, int v, int w) {
  const int m = q.fiber.dim();
  const Poly one = constant(q, 1);
  auto g_part = [&](int idx) {
    PolyVector r(static_cast<std::size_t>(m), Poly(q.patch.n));
    if (idx < m) r[static_cast<std::size_t>(idx)] = one;
    return r;
  };
  auto leaf = [&](int idx) { return idx >= m ? idx - m : -1; };
  const PolyVector r = g_part(u), s = g_part(v), t = g_part(w);
  const int x = leaf(u), y = leaf(v), z = leaf(w);
  Poly out(q.patch.n);
  if (x >= 0 && y >= 0 && z >= 0) out += q.hform.at({x, y, z});
  out -= inner(q, bracket(q, r, s), t);
  if (x >= 0 && y >= 0) out += inner(q, q.curv.at({x, y}), t);
  if (y >= 0 && z >= 0) out += inner(q, q.curv.at({y, z}), r);
  if (z >= 0 && x >= 0) out += inner(q, q.curv.at({z, x}), s);
  return out;
}

AForm cartan_differential(const Quintuple& q, const AForm& w) {
  const int k = w.degree(), m = q.fiber.dim();
  AForm out = AForm::like(q, k + 1);
  auto tuples = out.tuples();
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    const auto& u = tuples[t];
    std::vector<ASection> frame;
    for (int idx : u) frame.push_back(a_frame_section(q, idx));
    Poly v(q.patch.n);
    for (int i = 0; i <= k; ++i) {
      if (u[static_cast<std::size_t>(i)] < m) continue;
      std::vector<ASection> rest;
      for (int j = 0; j <= k; ++j)
        if (j != i) rest.push_back(frame[static_cast<std::size_t>(j)]);
      Poly term = evaluate(w, rest).derivative(u[static_cast<std::size_t>(i)] - m);
      if (i % 2) v -= term;
      else v += term;
    }
    for (int i = 0; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        std::vector<ASection> args = {a_bracket(q, frame[static_cast<std::size_t>(i)], frame[static_cast<std::size_t>(j)])};
        for (int l = 0; l <= k; ++l)
          if (l != i && l != j) args.push_back(frame[static_cast<std::size_t>(l)]);
        Poly term = evaluate(w, args);
        if ((i + j) % 2) v -= term;
        else v += term;
      }
    out.components()[t] = v;
  }
  return out;
}

Section inverse_iso(const Quintuple& q, const IsoData& iso, const Section& e) {
  const int p = q.patch.p;
  PolyMatrix tau_inv = *inverse_constant_det(iso.tau);
  PolyVector s = e.r;
  for (int a = 0; a < p; ++a) {
    PolyVector phia = iso.phi.at({a});
    for (std::size_t k = 0; k < s.size(); ++k) s[k] -= e.x[static_cast<std::size_t>(a)] * phia[k];
  }
  Section out = blank(q);
  out.x = e.x;
  out.r = times(tau_inv, s);
  PolyVector tr = times(iso.tau, out.r);
  for (int b = 0; b < p; ++b) {
    Poly v = e.xi[static_cast<std::size_t>(b)];
    for (int a = 0; a < p; ++a) v -= iso.beta(b, a) * e.x[static_cast<std::size_t>(a)];
    v += Rational(2) * inner(q, tr, iso.phi.at({b}));
    out.xi[static_cast<std::size_t>(b)] = v;
  }
  return out;
}

Quintuple transported_by_brackets(const Quintuple& q1, const IsoData& iso) {
  const int p = q1.patch.p, m = q1.fiber.dim();
  Quintuple q2 = trivial_quintuple(q1.patch, q1.fiber);
  auto pulled = [&](int u, int v) {
    Section a = inverse_iso(q1, iso, unit(q1, u));
    Section b = inverse_iso(q1, iso, unit(q1, v));
    return forward_iso(q1, iso, dorfman(q1, a, b));
  };
  for (int a = 0; a < p; ++a)
    for (int i = 0; i < m; ++i) {
      Section s = pulled(p + m + a, p + i);
      for (int k = 0; k < m; ++k) q2.conn.gamma[static_cast<std::size_t>(a)](k, i) = s.r[static_cast<std::size_t>(k)];
    }
  for (const auto& t : increasing_tuples(p, 2)) {
    Section s = pulled(p + m + t[0], p + m + t[1]);
    q2.curv.set(t, s.r);
  }
  for (const auto& t : increasing_tuples(p, 3)) {
    Section s = pulled(p + m + t[0], p + m + t[1]);
    q2.hform.set(t, s.xi[static_cast<std::size_t>(t[2])]);
  }
  return q2;
}

}  // namespace oracle
