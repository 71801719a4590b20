#include "courant/algebroid.hpp"

#include <stdexcept>

namespace courant {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

PolyVector coords(const ASection& s) {
  PolyVector v = s.r;
  v.insert(v.end(), s.x.begin(), s.x.end());
  return v;
}

void evaluate_rec(const AForm& w, const std::vector<PolyVector>& args, std::vector<int>& idx, const Poly& coef,
                  Poly& acc) {
  const std::size_t depth = idx.size();
  if (depth == args.size()) {
    Poly v = w.at(idx);
    if (!v.is_zero()) acc.add_product(coef, v);
    return;
  }
  const PolyVector& u = args[depth];
  for (int i = 0; i < static_cast<int>(u.size()); ++i) {
    if (u[sz(i)].is_zero()) continue;
    bool repeat = false;
    for (int j : idx) repeat = repeat || j == i;
    if (repeat) continue;
    idx.push_back(i);
    evaluate_rec(w, args, idx, coef * u[sz(i)], acc);
    idx.pop_back();
  }
}

}  // namespace

ASection a_zero_section(const Quintuple& q) {
  return ASection{zero_vector(q.fiber.dim(), q.patch.n), zero_vector(q.patch.p, q.patch.n)};
}

ASection a_frame_section(const Quintuple& q, int index) {
  const int m = q.fiber.dim();
  if (index < 0 || index >= m + q.patch.p) throw std::out_of_range("A-frame index out of range");
  ASection s = a_zero_section(q);
  Poly one = Poly::constant(q.patch.n, 1);
  if (index < m) {
    s.r[sz(index)] = one;
  } else {
    s.x[sz(index - m)] = one;
  }
  return s;
}

ASection project(const Section& e) { return ASection{e.r, e.x}; }

AForm::AForm(int degree, Patch patch, int fiber_dim)
    : degree_(degree),
      patch_(patch),
      m_(fiber_dim),
      comps_(static_cast<std::size_t>(binomial(fiber_dim + patch.p, degree)), Poly(patch.n)) {
  if (degree < 0) throw std::invalid_argument("negative form degree");
}

Poly AForm::at(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != degree_) throw std::invalid_argument("form index arity mismatch");
  std::vector<int> sorted(idx.begin(), idx.end());
  for (int i : sorted)
    if (i < 0 || i >= frame_size()) throw std::out_of_range("A-frame index out of range");
  int sign = sort_with_sign(sorted);
  if (sign == 0) return Poly(patch_.n);
  const Poly& v = comps_[static_cast<std::size_t>(tuple_rank(sorted, frame_size()))];
  return sign > 0 ? v : -v;
}

void AForm::set(std::span<const int> idx, const Poly& value) {
  if (static_cast<int>(idx.size()) != degree_) throw std::invalid_argument("form index arity mismatch");
  std::vector<int> sorted(idx.begin(), idx.end());
  for (int i : sorted)
    if (i < 0 || i >= frame_size()) throw std::out_of_range("A-frame index out of range");
  int sign = sort_with_sign(sorted);
  if (sign == 0) {
    if (!value.is_zero()) throw std::invalid_argument("nonzero value on a repeated index");
    return;
  }
  comps_[static_cast<std::size_t>(tuple_rank(sorted, frame_size()))] = sign > 0 ? value : -value;
}

std::vector<int> AForm::merged(std::span<const int> fiber, std::span<const int> leaf) const {
  std::vector<int> idx(fiber.begin(), fiber.end());
  for (int i : fiber)
    if (i < 0 || i >= m_) throw std::out_of_range("fiber index out of range");
  for (int a : leaf) {
    if (a < 0 || a >= patch_.p) throw std::out_of_range("leaf index out of range");
    idx.push_back(m_ + a);
  }
  return idx;
}

Poly AForm::component(std::span<const int> fiber, std::span<const int> leaf) const {
  return at(merged(fiber, leaf));
}

void AForm::set_component(std::span<const int> fiber, std::span<const int> leaf, const Poly& value) {
  set(merged(fiber, leaf), value);
}

std::vector<std::vector<int>> AForm::tuples() const { return increasing_tuples(frame_size(), degree_); }

AForm AForm::bigraded_part(int fiber_count) const {
  AForm out(degree_, patch_, m_);
  auto ts = tuples();
  for (std::size_t t = 0; t < ts.size(); ++t) {
    int count = 0;
    for (int i : ts[t]) count += i < m_ ? 1 : 0;
    if (count == fiber_count) out.comps_[t] = comps_[t];
  }
  return out;
}

bool AForm::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

AForm& AForm::operator+=(const AForm& o) {
  if (degree_ != o.degree_ || m_ != o.m_ || !(patch_ == o.patch_)) throw std::invalid_argument("form sum: shape mismatch");
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
  return *this;
}

AForm& AForm::operator-=(const AForm& o) {
  if (degree_ != o.degree_ || m_ != o.m_ || !(patch_ == o.patch_))
    throw std::invalid_argument("form difference: shape mismatch");
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
  return *this;
}

AForm operator*(const Rational& c, AForm a) {
  for (auto& v : a.comps_) v *= c;
  return a;
}

AForm pull_back_leafwise(const FForm& w, int fiber_dim) {
  AForm out(w.degree(), w.patch(), fiber_dim);
  auto ts = increasing_tuples(w.patch().p, w.degree());
  for (std::size_t t = 0; t < ts.size(); ++t) out.set_component({}, ts[t], w.components()[t]);
  return out;
}

Poly evaluate(const AForm& w, std::span<const ASection> args) {
  if (static_cast<int>(args.size()) != w.degree()) throw std::invalid_argument("form evaluation: arity mismatch");
  const int n = w.patch().n;
  std::vector<PolyVector> cs;
  for (const auto& a : args) {
    if (static_cast<int>(a.r.size()) != w.fiber_dim() || static_cast<int>(a.x.size()) != w.patch().p)
      throw std::invalid_argument("form evaluation: section shape mismatch");
    cs.push_back(coords(a));
  }
  Poly acc(n);
  std::vector<int> idx;
  evaluate_rec(w, cs, idx, Poly::constant(n, 1), acc);
  return acc;
}

ASection a_bracket(const Quintuple& q, const ASection& u, const ASection& v) {
  const int n = q.patch.n;
  ASection out{q.fiber.bracket(u.r, v.r, n), vector_field_bracket(u.x, v.x, n)};
  PolyVector rxy = r_apply(q, u.x, v.x);
  PolyVector dv = connection_apply(q.conn, u.x, v.r);
  PolyVector du = connection_apply(q.conn, v.x, u.r);
  for (std::size_t k = 0; k < out.r.size(); ++k) out.r[k] += rxy[k] + dv[k] - du[k];
  return out;
}

std::vector<std::vector<PolyVector>> a_frame_brackets(const Quintuple& q) {
  const int size = q.fiber.dim() + q.patch.p;
  std::vector<std::vector<PolyVector>> table(sz(size), std::vector<PolyVector>(sz(size)));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      table[sz(i)][sz(j)] = coords(a_bracket(q, a_frame_section(q, i), a_frame_section(q, j)));
  return table;
}

AForm ce_differential(const Quintuple& q, const AForm& w) {
  const int m = q.fiber.dim(), k = w.degree(), size = m + q.patch.p;
  if (w.fiber_dim() != m || !(w.patch() == q.patch)) throw std::invalid_argument("form does not match the algebroid");
  AForm out(k + 1, q.patch, m);
  if (k + 1 > size) return out;
  const auto table = a_frame_brackets(q);
  auto ts = out.tuples();
  std::vector<int> rest;
  for (std::size_t t = 0; t < ts.size(); ++t) {
    const auto& tup = ts[t];
    Poly acc(q.patch.n);
    for (int i = 0; i <= k; ++i) {
      const int xi = tup[sz(i)];
      if (xi < m) continue;  // the anchor kills G
      rest.clear();
      for (int j = 0; j <= k; ++j)
        if (j != i) rest.push_back(tup[sz(j)]);
      Poly d = w.at(rest).derivative(xi - m);
      if (i % 2 == 0) {
        acc += d;
      } else {
        acc -= d;
      }
    }
    for (int i = 0; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        const PolyVector& br = table[sz(tup[sz(i)])][sz(tup[sz(j)])];
        const Rational sign = (i + j) % 2 == 0 ? 1 : -1;
        for (int l = 0; l < size; ++l) {
          if (br[sz(l)].is_zero()) continue;
          rest.assign(1, l);
          for (int s = 0; s <= k; ++s)
            if (s != i && s != j) rest.push_back(tup[sz(s)]);
          Poly v = w.at(rest);
          if (!v.is_zero()) acc.add_product(br[sz(l)], v, sign);
        }
      }
    out.components()[t] = std::move(acc);
  }
  return out;
}

NaiveTable naive_differential(const Quintuple& q, const AForm& w) {
  const int k = w.degree(), frame = frame_size(q);
  NaiveTable table;
  table.tuples = increasing_tuples(frame, k + 1);
  std::vector<Section> basis;
  for (int u = 0; u < frame; ++u) basis.push_back(frame_section(q, u));
  std::vector<std::vector<Section>> cb(sz(frame), std::vector<Section>(sz(frame)));
  for (int i = 0; i < frame; ++i)
    for (int j = 0; j < frame; ++j) cb[sz(i)][sz(j)] = courant_bracket(q, basis[sz(i)], basis[sz(j)]);

  std::vector<ASection> args;
  for (const auto& tup : table.tuples) {
    Poly acc(q.patch.n);
    for (int i = 0; i <= k; ++i) {
      args.clear();
      for (int j = 0; j <= k; ++j)
        if (j != i) args.push_back(project(basis[sz(tup[sz(j)])]));
      Poly d = directional(basis[sz(tup[sz(i)])].x, evaluate(w, args));
      if (i % 2 == 0) {
        acc += d;
      } else {
        acc -= d;
      }
    }
    for (int i = 0; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        args.assign(1, project(cb[sz(tup[sz(i)])][sz(tup[sz(j)])]));
        for (int s = 0; s <= k; ++s)
          if (s != i && s != j) args.push_back(project(basis[sz(tup[sz(s)])]));
        acc.add_product(evaluate(w, args), Poly::constant(q.patch.n, 1), (i + j) % 2 == 0 ? 1 : -1);
      }
    table.values.push_back(std::move(acc));
  }
  return table;
}

NaiveTable identified_table(const Quintuple& q, const AForm& w) {
  const int frame = frame_size(q);
  NaiveTable table;
  table.tuples = increasing_tuples(frame, w.degree());
  std::vector<ASection> args;
  for (const auto& tup : table.tuples) {
    args.clear();
    for (int u : tup) args.push_back(project(frame_section(q, u)));
    table.values.push_back(evaluate(w, args));
  }
  return table;
}

bool horizontal_check(const AForm& w) {
  auto ts = w.tuples();
  for (std::size_t t = 0; t < ts.size(); ++t) {
    bool pure = true;
    for (int i : ts[t]) pure = pure && i < w.fiber_dim();
    if (pure && !w.components()[t].is_zero()) return false;
  }
  return true;
}

}  // namespace courant
