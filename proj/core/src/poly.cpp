#include "courant/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace courant {

namespace {

constexpr int shift_of(int index) { return 8 * (kMaxVars - 1 - index); }

void check_nvars(int nvars) {
  if (nvars < 0 || nvars > kMaxVars)
    throw std::invalid_argument("Poly: nvars must be in [0, " + std::to_string(kMaxVars) + "]");
}

// Merges terms with equal monomials in a vector sorted by decreasing monomial
// and drops zero coefficients.
void normalize_sorted(std::vector<Term>& terms) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational sum = std::move(terms[i].coef);
    while (j < terms.size() && terms[j].mono == terms[i].mono) {
      sum += terms[j].coef;
      ++j;
    }
    if (!sum.is_zero()) {
      terms[out].mono = terms[i].mono;
      terms[out].coef = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

Monomial Monomial::from_exponents(std::span<const int> exponents) {
  if (static_cast<int>(exponents.size()) > kMaxVars)
    throw std::invalid_argument("Monomial: too many variables");
  std::uint64_t key = 0;
  int degree = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    int e = exponents[i];
    if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
    degree += e;
    if (degree > kMaxDegree) throw std::overflow_error("Monomial: degree too large");
    key |= static_cast<std::uint64_t>(e) << shift_of(static_cast<int>(i));
  }
  key |= static_cast<std::uint64_t>(degree) << 56;
  return Monomial(key);
}

Monomial Monomial::variable(int index) {
  if (index < 0 || index >= kMaxVars) throw std::out_of_range("Monomial: variable index");
  return Monomial((std::uint64_t{1} << 56) | (std::uint64_t{1} << shift_of(index)));
}

Monomial operator*(Monomial a, Monomial b) {
  if (a.degree() + b.degree() > kMaxDegree)
    throw std::overflow_error("Monomial: degree too large");
  // No byte can carry because every exponent is bounded by the total degree.
  return Monomial(a.key_ + b.key_);
}

Poly::Poly(int nvars) : nvars_(nvars) { check_nvars(nvars); }

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
  return p;
}

Poly Poly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::out_of_range("Poly::variable: index out of range");
  Poly p(nvars);
  p.terms_.push_back({Monomial::variable(index), Rational(1)});
  return p;
}

Poly Poly::monomial(int nvars, std::span<const int> exponents, const Rational& c) {
  if (static_cast<int>(exponents.size()) != nvars)
    throw std::invalid_argument("Poly::monomial: exponent count must equal nvars");
  return monomial(nvars, Monomial::from_exponents(exponents), c);
}

Poly Poly::monomial(int nvars, Monomial m, const Rational& c) {
  Poly p(nvars);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.degree() == 0) return terms_.back().coef;
  return Rational(0);
}

void Poly::check_same(const Poly& o) const {
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("Poly: variable-count mismatch (" + std::to_string(nvars_) +
                                " vs " + std::to_string(o.nvars_) + ")");
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

void Poly::add_scaled(const Poly& o, const Rational& scale) {
  check_same(o);
  if (o.terms_.empty() || scale.is_zero()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].mono > o.terms_[j].mono)) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].mono > terms_[i].mono) {
      merged.push_back({o.terms_[j].mono, o.terms_[j].coef * scale});
      ++j;
    } else {
      Rational c = terms_[i].coef + o.terms_[j].coef * scale;
      if (!c.is_zero()) merged.push_back({terms_[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
}

Poly& Poly::operator+=(const Poly& o) {
  add_scaled(o, Rational(1));
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  add_scaled(o, Rational(-1));
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else if (!c.is_one()) {
    for (auto& t : terms_) t.coef *= c;
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same(b);
  Poly r(a.nvars_);
  if (a.is_zero() || b.is_zero()) return r;
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) r.terms_.push_back({ta.mono * tb.mono, ta.coef * tb.coef});
  if (a.terms_.size() > 1 && b.terms_.size() > 1) {
    std::stable_sort(r.terms_.begin(), r.terms_.end(),
                     [](const Term& x, const Term& y) { return x.mono > y.mono; });
    normalize_sorted(r.terms_);
  }
  return r;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

void Poly::add_product(const Poly& a, const Poly& b, const Rational& c) {
  if (a.is_zero() || b.is_zero() || c.is_zero()) {
    check_same(a);
    check_same(b);
    return;
  }
  if (b.is_constant()) {
    add_scaled(a, b.constant_term() * c);
  } else if (a.is_constant()) {
    add_scaled(b, a.constant_term() * c);
  } else {
    add_scaled(a * b, c);
  }
}

Poly Poly::derivative(int index) const {
  if (index < 0 || index >= nvars_)
    throw std::out_of_range("Poly::derivative: index " + std::to_string(index) +
                            " out of range for " + std::to_string(nvars_) + " variables");
  Poly r(nvars_);
  Monomial step = Monomial::variable(index);
  for (const auto& t : terms_) {
    int e = t.mono.exponent(index);
    if (e == 0) continue;
    // Subtracting the packed unit lowers both the exponent and the degree byte.
    r.terms_.push_back({Monomial(t.mono.key() - step.key()), t.coef * Rational(e)});
  }
  // Differentiation preserves the relative graded-lex order of the survivors.
  return r;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("Poly::evaluate: point dimension mismatch");
  Rational sum;
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (int i = 0; i < nvars_; ++i)
      for (int e = t.mono.exponent(i); e > 0; --e) v *= point[i];
    sum += v;
  }
  return sum;
}

bool operator==(const Poly& a, const Poly& b) {
  return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational mag = t.coef.sign() < 0 ? -t.coef : t.coef;
    bool has_vars = t.mono.degree() > 0;
    if (first) {
      if (t.coef.sign() < 0) {
        // A bare leading "-x1" is not in the grammar; the sign rides on the rational.
        os << '-' << mag;
        if (has_vars) os << '*';
      } else if (!has_vars || !mag.is_one()) {
        os << mag;
        if (has_vars) os << '*';
      }
    } else {
      os << (t.coef.sign() < 0 ? " - " : " + ");
      if (!has_vars || !mag.is_one()) {
        os << mag;
        if (has_vars) os << '*';
      }
    }
    bool first_var = true;
    for (int i = 0; i < nvars_; ++i) {
      int e = t.mono.exponent(i);
      if (e == 0) continue;
      if (!first_var) os << '*';
      os << 'x' << (i + 1);
      if (e > 1) os << '^' << e;
      first_var = false;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

std::vector<Monomial> monomials_up_to(int nvars, int max_degree) {
  check_nvars(nvars);
  std::vector<Monomial> out;
  std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
  // Enumerate exponent vectors with total degree <= max_degree.
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars) {
      out.push_back(Monomial::from_exponents(exps));
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      exps[static_cast<std::size_t>(var)] = e;
      self(self, var + 1, remaining - e);
    }
    exps[static_cast<std::size_t>(var)] = 0;
  };
  rec(rec, 0, max_degree);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace courant
