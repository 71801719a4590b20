#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "courant/rational.hpp"

namespace courant {

// Upper bound on the number of base coordinates x1..xn.
inline constexpr int kMaxVars = 7;
// Upper bound on the total degree of a single monomial.
inline constexpr int kMaxDegree = 255;

class Poly;

// Exponent vector packed into one word: the top byte holds the total degree,
// then one byte per variable with x1 most significant. Integer comparison of
// keys is therefore graded-lexicographic comparison of monomials.
class Monomial {
 public:
  constexpr Monomial() = default;
  static Monomial from_exponents(std::span<const int> exponents);
  static Monomial variable(int index);

  int exponent(int index) const {
    return static_cast<int>((key_ >> (8 * (kMaxVars - 1 - index))) & 0xffu);
  }
  int degree() const { return static_cast<int>(key_ >> 56); }
  std::uint64_t key() const { return key_; }

  // Throws std::overflow_error past kMaxDegree.
  friend Monomial operator*(Monomial a, Monomial b);

  friend constexpr bool operator==(Monomial a, Monomial b) = default;
  friend constexpr auto operator<=>(Monomial a, Monomial b) { return a.key_ <=> b.key_; }

 private:
  friend class Poly;
  explicit constexpr Monomial(std::uint64_t key) : key_(key) {}
  std::uint64_t key_ = 0;
};

struct Term {
  Monomial mono;
  Rational coef;
  friend bool operator==(const Term&, const Term&) = default;
};

// Multivariate polynomial over Q in nvars variables. Terms are kept sorted in
// strictly decreasing graded-lex order with no zero coefficients, so structural
// equality is polynomial equality.
class Poly {
 public:
  Poly() = default;
  explicit Poly(int nvars);

  static Poly constant(int nvars, const Rational& c);
  // x_{index+1}; index is 0-based.
  static Poly variable(int nvars, int index);
  static Poly monomial(int nvars, std::span<const int> exponents, const Rational& c = 1);
  static Poly monomial(int nvars, Monomial m, const Rational& c = 1);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree() == 0);
  }
  Rational constant_term() const;
  // Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  // Adds c * a * b into *this without materializing the product.
  void add_product(const Poly& a, const Poly& b, const Rational& c = 1);

  // d/dx_{index+1}.
  Poly derivative(int index) const;
  Rational evaluate(std::span<const Rational> point) const;

  friend bool operator==(const Poly& a, const Poly& b);

  // Canonical text form, re-parseable by parse_poly.
  std::string to_string() const;

 private:
  void check_same(const Poly& o) const;
  void add_scaled(const Poly& o, const Rational& scale);

  int nvars_ = 0;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

// Every monomial in nvars variables of total degree <= max_degree, in
// increasing graded-lex order.
std::vector<Monomial> monomials_up_to(int nvars, int max_degree);

}  // namespace courant
