#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "courant/combinatorics.hpp"
#include "courant/fiber.hpp"
#include "courant/linalg.hpp"
#include "courant/report.hpp"

namespace courant {

// Coordinate patch with n coordinates; F is spanned by d/dx1..d/dxp.
struct Patch {
  int n = 0;
  int p = 0;
  friend bool operator==(const Patch&, const Patch&) = default;
};

void validate_patch(const Patch& patch);

// Leafwise k-form, stored on strictly increasing index tuples of {0..p-1}.
class FForm {
 public:
  FForm() = default;
  FForm(int degree, Patch patch);

  int degree() const { return degree_; }
  const Patch& patch() const { return patch_; }
  std::size_t size() const { return comps_.size(); }

  // Component on an arbitrary index tuple (antisymmetry applied).
  Poly at(std::span<const int> idx) const;
  Poly at(std::initializer_list<int> idx) const { return at(std::span<const int>(idx.begin(), idx.size())); }
  // Assigns on an arbitrary tuple; the value is stored with the sorting sign.
  void set(std::span<const int> idx, const Poly& value);
  void set(std::initializer_list<int> idx, const Poly& value) {
    set(std::span<const int>(idx.begin(), idx.size()), value);
  }

  // Components in increasing_tuples(p, k) order.
  const std::vector<Poly>& components() const { return comps_; }
  std::vector<Poly>& components() { return comps_; }

  bool is_zero() const;
  FForm& operator+=(const FForm& o);
  FForm& operator-=(const FForm& o);
  friend FForm operator+(FForm a, const FForm& b) { return a += b; }
  friend FForm operator-(FForm a, const FForm& b) { return a -= b; }
  friend FForm operator*(const Rational& c, FForm a);
  friend bool operator==(const FForm&, const FForm&) = default;

 private:
  int degree_ = 0;
  Patch patch_;
  std::vector<Poly> comps_;
};

// d^F. When k = p the result is the (empty) zero (p+1)-form.
FForm leafwise_d(const FForm& w);

// Leafwise form with values in the fiber: each component is an m-vector.
class GValuedForm {
 public:
  GValuedForm() = default;
  GValuedForm(int degree, Patch patch, int fiber_dim);

  int degree() const { return degree_; }
  const Patch& patch() const { return patch_; }
  int fiber_dim() const { return m_; }

  PolyVector at(std::span<const int> idx) const;
  PolyVector at(std::initializer_list<int> idx) const { return at(std::span<const int>(idx.begin(), idx.size())); }
  void set(std::span<const int> idx, std::span<const Poly> value);
  void set(std::initializer_list<int> idx, std::span<const Poly> value) {
    set(std::span<const int>(idx.begin(), idx.size()), value);
  }
  // Single fiber coordinate of the component on idx.
  void set_entry(std::span<const int> idx, int k, const Poly& value);

  const std::vector<PolyVector>& components() const { return comps_; }
  bool is_zero() const;
  GValuedForm& operator+=(const GValuedForm& o);
  GValuedForm& operator-=(const GValuedForm& o);
  friend GValuedForm operator*(const Rational& c, GValuedForm a);
  friend bool operator==(const GValuedForm&, const GValuedForm&) = default;

 private:
  int degree_ = 0;
  Patch patch_;
  int m_ = 0;
  std::vector<PolyVector> comps_;
};

// Connection on the trivial bundle G along F: nabla_a r = d_a r + gamma[a] r.
struct GConnection {
  std::vector<PolyMatrix> gamma;
  friend bool operator==(const GConnection&, const GConnection&) = default;
};

GConnection flat_connection(Patch patch, int fiber_dim);
PolyVector connection_apply(const GConnection& c, int a, std::span<const Poly> r);
// nabla_x r for a leafwise vector field x.
PolyVector connection_apply(const GConnection& c, std::span<const Poly> x, std::span<const Poly> r);

// Checks connection_metric and connection_derivation.
Report validate_connection(const GConnection& c, const QuadLieAlgebra& fiber, Patch patch);

// Connection on F given by Christoffel symbols gamma(a,b,c): nabla_a d_b = gamma(a,b,c) d_c.
class FConnection {
 public:
  FConnection() = default;
  explicit FConnection(Patch patch);

  const Patch& patch() const { return patch_; }
  const Poly& gamma(int a, int b, int c) const { return gamma_[index(a, b, c)]; }
  Poly& gamma(int a, int b, int c) { return gamma_[index(a, b, c)]; }
  bool is_torsion_free() const;

  // Covariant derivative of a vector field and of a leafwise 1-form.
  PolyVector apply(std::span<const Poly> x, std::span<const Poly> y) const;
  PolyVector apply_dual(std::span<const Poly> x, std::span<const Poly> eta) const;

  friend bool operator==(const FConnection&, const FConnection&) = default;

 private:
  std::size_t index(int a, int b, int c) const {
    return static_cast<std::size_t>((a * patch_.p + b) * patch_.p + c);
  }
  Patch patch_;
  std::vector<Poly> gamma_;
};

// <R^R>(a,b,c,d) = 2(<R_ab,R_cd> - <R_ac,R_bd> + <R_ad,R_bc>).
FForm pontryagin_form(const GValuedForm& r, const QuadLieAlgebra& fiber);

// Lie bracket of leafwise vector fields.
PolyVector vector_field_bracket(std::span<const Poly> x, std::span<const Poly> y, int nvars);
// sum_a x^a d_a f.
Poly directional(std::span<const Poly> x, const Poly& f);

}  // namespace courant
