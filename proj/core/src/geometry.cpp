#include "courant/geometry.hpp"

#include <stdexcept>

namespace courant {

namespace {

std::size_t rank_of(std::span<const int> sorted, int p) {
  return static_cast<std::size_t>(tuple_rank(sorted, p));
}

void check_indices(std::span<const int> idx, int p) {
  for (int a : idx)
    if (a < 0 || a >= p) throw std::out_of_range("leaf index out of range");
}

}  // namespace

void validate_patch(const Patch& patch) {
  if (patch.n < 0 || patch.n > kMaxVars)
    throw std::invalid_argument("base dimension must lie in 0.." + std::to_string(kMaxVars));
  if (patch.p < 0 || patch.p > patch.n) throw std::invalid_argument("rank p must satisfy 0 <= p <= n");
}

FForm::FForm(int degree, Patch patch)
    : degree_(degree), patch_(patch), comps_(static_cast<std::size_t>(binomial(patch.p, degree)), Poly(patch.n)) {
  if (degree < 0) throw std::invalid_argument("negative form degree");
}

Poly FForm::at(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != degree_) throw std::invalid_argument("form index arity mismatch");
  check_indices(idx, patch_.p);
  std::vector<int> sorted(idx.begin(), idx.end());
  int sign = sort_with_sign(sorted);
  if (sign == 0) return Poly(patch_.n);
  const Poly& v = comps_[rank_of(sorted, patch_.p)];
  return sign > 0 ? v : -v;
}

void FForm::set(std::span<const int> idx, const Poly& value) {
  if (static_cast<int>(idx.size()) != degree_) throw std::invalid_argument("form index arity mismatch");
  check_indices(idx, patch_.p);
  std::vector<int> sorted(idx.begin(), idx.end());
  int sign = sort_with_sign(sorted);
  if (sign == 0) {
    if (!value.is_zero()) throw std::invalid_argument("nonzero value on a repeated index");
    return;
  }
  comps_[rank_of(sorted, patch_.p)] = sign > 0 ? value : -value;
}

bool FForm::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

FForm& FForm::operator+=(const FForm& o) {
  if (degree_ != o.degree_ || !(patch_ == o.patch_)) throw std::invalid_argument("form sum: shape mismatch");
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
  return *this;
}

FForm& FForm::operator-=(const FForm& o) {
  if (degree_ != o.degree_ || !(patch_ == o.patch_)) throw std::invalid_argument("form difference: shape mismatch");
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
  return *this;
}

FForm operator*(const Rational& c, FForm a) {
  for (auto& v : a.comps_) v *= c;
  return a;
}

FForm leafwise_d(const FForm& w) {
  const Patch patch = w.patch();
  const int k = w.degree();
  FForm out(k + 1, patch);
  auto tuples = increasing_tuples(patch.p, k + 1);
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    const auto& tup = tuples[t];
    Poly acc(patch.n);
    std::vector<int> rest(static_cast<std::size_t>(k));
    for (int i = 0; i <= k; ++i) {
      for (int j = 0, o = 0; j <= k; ++j)
        if (j != i) rest[static_cast<std::size_t>(o++)] = tup[static_cast<std::size_t>(j)];
      Poly term = w.components()[rank_of(rest, patch.p)].derivative(tup[static_cast<std::size_t>(i)]);
      if (i % 2 == 0) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    out.components()[t] = std::move(acc);
  }
  return out;
}

GValuedForm::GValuedForm(int degree, Patch patch, int fiber_dim)
    : degree_(degree),
      patch_(patch),
      m_(fiber_dim),
      comps_(static_cast<std::size_t>(binomial(patch.p, degree)), zero_vector(fiber_dim, patch.n)) {}

PolyVector GValuedForm::at(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != degree_) throw std::invalid_argument("form index arity mismatch");
  check_indices(idx, patch_.p);
  std::vector<int> sorted(idx.begin(), idx.end());
  int sign = sort_with_sign(sorted);
  if (sign == 0) return zero_vector(m_, patch_.n);
  PolyVector v = comps_[rank_of(sorted, patch_.p)];
  if (sign < 0)
    for (auto& x : v) x = -x;
  return v;
}

void GValuedForm::set(std::span<const int> idx, std::span<const Poly> value) {
  if (static_cast<int>(value.size()) != m_) throw std::invalid_argument("fiber vector length mismatch");
  for (int k = 0; k < m_; ++k) set_entry(idx, k, value[static_cast<std::size_t>(k)]);
}

void GValuedForm::set_entry(std::span<const int> idx, int k, const Poly& value) {
  if (static_cast<int>(idx.size()) != degree_) throw std::invalid_argument("form index arity mismatch");
  if (k < 0 || k >= m_) throw std::out_of_range("fiber index out of range");
  check_indices(idx, patch_.p);
  std::vector<int> sorted(idx.begin(), idx.end());
  int sign = sort_with_sign(sorted);
  if (sign == 0) {
    if (!value.is_zero()) throw std::invalid_argument("nonzero value on a repeated index");
    return;
  }
  comps_[rank_of(sorted, patch_.p)][static_cast<std::size_t>(k)] = sign > 0 ? value : -value;
}

bool GValuedForm::is_zero() const {
  for (const auto& v : comps_)
    for (const auto& x : v)
      if (!x.is_zero()) return false;
  return true;
}

GValuedForm& GValuedForm::operator+=(const GValuedForm& o) {
  if (degree_ != o.degree_ || m_ != o.m_ || !(patch_ == o.patch_))
    throw std::invalid_argument("form sum: shape mismatch");
  for (std::size_t i = 0; i < comps_.size(); ++i)
    for (std::size_t k = 0; k < comps_[i].size(); ++k) comps_[i][k] += o.comps_[i][k];
  return *this;
}

GValuedForm& GValuedForm::operator-=(const GValuedForm& o) {
  if (degree_ != o.degree_ || m_ != o.m_ || !(patch_ == o.patch_))
    throw std::invalid_argument("form difference: shape mismatch");
  for (std::size_t i = 0; i < comps_.size(); ++i)
    for (std::size_t k = 0; k < comps_[i].size(); ++k) comps_[i][k] -= o.comps_[i][k];
  return *this;
}

GValuedForm operator*(const Rational& c, GValuedForm a) {
  for (auto& v : a.comps_)
    for (auto& x : v) x *= c;
  return a;
}

GConnection flat_connection(Patch patch, int fiber_dim) {
  return GConnection{std::vector<PolyMatrix>(static_cast<std::size_t>(patch.p), PolyMatrix(fiber_dim, fiber_dim, patch.n))};
}

PolyVector connection_apply(const GConnection& c, int a, std::span<const Poly> r) {
  if (a < 0 || a >= static_cast<int>(c.gamma.size())) throw std::out_of_range("leaf direction out of range");
  PolyVector out = c.gamma[static_cast<std::size_t>(a)].apply(r);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += r[i].derivative(a);
  return out;
}

PolyVector connection_apply(const GConnection& c, std::span<const Poly> x, std::span<const Poly> r) {
  if (x.size() != c.gamma.size()) throw std::invalid_argument("vector field length mismatch");
  const int nvars = r.empty() ? (x.empty() ? 0 : x[0].nvars()) : r[0].nvars();
  PolyVector out = zero_vector(static_cast<int>(r.size()), nvars);
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a].is_zero()) continue;
    PolyVector d = connection_apply(c, static_cast<int>(a), r);
    for (std::size_t i = 0; i < out.size(); ++i) out[i].add_product(x[a], d[i]);
  }
  return out;
}

Report validate_connection(const GConnection& c, const QuadLieAlgebra& fiber, Patch patch) {
  const int m = fiber.dim();
  if (static_cast<int>(c.gamma.size()) != patch.p) throw std::invalid_argument("connection: expected p matrices");
  const PolyMatrix g = PolyMatrix::from_rational(fiber.metric(), patch.n);
  Report report;

  CheckBuilder metric("connection_metric", "g Gamma_a + Gamma_a^T g = 0");
  for (int a = 0; a < patch.p; ++a) {
    const PolyMatrix& ga = c.gamma[static_cast<std::size_t>(a)];
    PolyMatrix s = g * ga + ga.transpose() * g;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) metric.expect_zero(s(i, j), {a, i, j});
  }
  metric.finish_into(report);

  CheckBuilder deriv("connection_derivation",
                     "Gamma_a [e_i,e_j] - [Gamma_a e_i, e_j] - [e_i, Gamma_a e_j] = 0");
  for (int a = 0; a < patch.p && !deriv.failed(); ++a) {
    const PolyMatrix& ga = c.gamma[static_cast<std::size_t>(a)];
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) {
          Poly res(patch.n);
          for (int l = 0; l < m; ++l) {
            res += fiber.c(i, j, l) * ga(k, l);
            res -= fiber.c(l, j, k) * ga(l, i);
            res -= fiber.c(i, l, k) * ga(l, j);
          }
          deriv.expect_zero(res, {a, i, j, k});
        }
  }
  deriv.finish_into(report);
  return report;
}

FConnection::FConnection(Patch patch)
    : patch_(patch), gamma_(static_cast<std::size_t>(patch.p * patch.p * patch.p), Poly(patch.n)) {}

bool FConnection::is_torsion_free() const {
  for (int a = 0; a < patch_.p; ++a)
    for (int b = 0; b < a; ++b)
      for (int c = 0; c < patch_.p; ++c)
        if (!(gamma(a, b, c) == gamma(b, a, c))) return false;
  return true;
}

PolyVector FConnection::apply(std::span<const Poly> x, std::span<const Poly> y) const {
  const int p = patch_.p;
  PolyVector out = zero_vector(p, patch_.n);
  for (int a = 0; a < p; ++a) {
    const Poly& xa = x[static_cast<std::size_t>(a)];
    if (xa.is_zero()) continue;
    for (int c = 0; c < p; ++c) {
      out[static_cast<std::size_t>(c)].add_product(xa, y[static_cast<std::size_t>(c)].derivative(a));
      for (int b = 0; b < p; ++b)
        if (!gamma(a, b, c).is_zero())
          out[static_cast<std::size_t>(c)].add_product(xa * y[static_cast<std::size_t>(b)], gamma(a, b, c));
    }
  }
  return out;
}

PolyVector FConnection::apply_dual(std::span<const Poly> x, std::span<const Poly> eta) const {
  const int p = patch_.p;
  PolyVector out = zero_vector(p, patch_.n);
  for (int a = 0; a < p; ++a) {
    const Poly& xa = x[static_cast<std::size_t>(a)];
    if (xa.is_zero()) continue;
    for (int c = 0; c < p; ++c) {
      out[static_cast<std::size_t>(c)].add_product(xa, eta[static_cast<std::size_t>(c)].derivative(a));
      for (int b = 0; b < p; ++b)
        if (!gamma(a, c, b).is_zero())
          out[static_cast<std::size_t>(c)].add_product(xa * eta[static_cast<std::size_t>(b)], gamma(a, c, b), -1);
    }
  }
  return out;
}

FForm pontryagin_form(const GValuedForm& r, const QuadLieAlgebra& fiber) {
  const Patch patch = r.patch();
  FForm out(4, patch);
  const int n = patch.n;
  auto tuples = increasing_tuples(patch.p, 4);
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    const int a = tuples[t][0], b = tuples[t][1], c = tuples[t][2], d = tuples[t][3];
    Poly v = fiber.inner(r.at({a, b}), r.at({c, d}), n) - fiber.inner(r.at({a, c}), r.at({b, d}), n) +
             fiber.inner(r.at({a, d}), r.at({b, c}), n);
    out.components()[t] = Rational(2) * v;
  }
  return out;
}

PolyVector vector_field_bracket(std::span<const Poly> x, std::span<const Poly> y, int nvars) {
  PolyVector out = zero_vector(static_cast<int>(x.size()), nvars);
  for (std::size_t b = 0; b < x.size(); ++b) {
    out[b] += directional(x, y[b]);
    out[b] -= directional(y, x[b]);
  }
  return out;
}

Poly directional(std::span<const Poly> x, const Poly& f) {
  Poly out(f.nvars());
  for (std::size_t a = 0; a < x.size(); ++a)
    if (!x[a].is_zero()) out.add_product(x[a], f.derivative(static_cast<int>(a)));
  return out;
}

}  // namespace courant
