#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "courant/courant.hpp"

namespace courant {

// Section r + x of A = G + F.
struct ASection {
  PolyVector r;
  PolyVector x;
  friend bool operator==(const ASection&, const ASection&) = default;
};

// The A-frame: e_1..e_m, then d_1..d_p.
ASection a_frame_section(const Quintuple& q, int index);
ASection a_zero_section(const Quintuple& q);
// Projection E -> A, xi + r + x -> r + x.
ASection project(const Section& e);

// Form on A stored on increasing tuples of A-frame indices. Since fiber
// indices precede leaf indices, a tuple splits as (i fiber, j leaf) and the
// storage is the bigraded decomposition.
class AForm {
 public:
  AForm() = default;
  AForm(int degree, Patch patch, int fiber_dim);
  static AForm like(const Quintuple& q, int degree) { return AForm(degree, q.patch, q.fiber.dim()); }

  int degree() const { return degree_; }
  const Patch& patch() const { return patch_; }
  int fiber_dim() const { return m_; }
  int frame_size() const { return m_ + patch_.p; }

  Poly at(std::span<const int> idx) const;
  Poly at(std::initializer_list<int> idx) const { return at(std::span<const int>(idx.begin(), idx.size())); }
  void set(std::span<const int> idx, const Poly& value);
  void set(std::initializer_list<int> idx, const Poly& value) {
    set(std::span<const int>(idx.begin(), idx.size()), value);
  }

  // Bigraded access: fiber indices 0..m-1, leaf indices 0..p-1.
  Poly component(std::span<const int> fiber, std::span<const int> leaf) const;
  void set_component(std::span<const int> fiber, std::span<const int> leaf, const Poly& value);

  const std::vector<Poly>& components() const { return comps_; }
  std::vector<Poly>& components() { return comps_; }
  // Tuples matching components(), in order.
  std::vector<std::vector<int>> tuples() const;

  // Copy keeping only components with exactly `fiber_count` fiber indices.
  AForm bigraded_part(int fiber_count) const;

  bool is_zero() const;
  AForm& operator+=(const AForm& o);
  AForm& operator-=(const AForm& o);
  friend AForm operator+(AForm a, const AForm& b) { return a += b; }
  friend AForm operator-(AForm a, const AForm& b) { return a -= b; }
  friend AForm operator*(const Rational& c, AForm a);
  friend bool operator==(const AForm&, const AForm&) = default;

 private:
  std::vector<int> merged(std::span<const int> fiber, std::span<const int> leaf) const;

  int degree_ = 0;
  Patch patch_;
  int m_ = 0;
  std::vector<Poly> comps_;
};

// Leafwise form as a form on A (zero on G).
AForm pull_back_leafwise(const FForm& w, int fiber_dim);

// Multilinear evaluation on arbitrary sections.
Poly evaluate(const AForm& w, std::span<const ASection> args);

ASection a_bracket(const Quintuple& q, const ASection& u, const ASection& v);

// Brackets of A-frame elements, as A-coordinate vectors; entry [i][j].
std::vector<std::vector<PolyVector>> a_frame_brackets(const Quintuple& q);

AForm ce_differential(const Quintuple& q, const AForm& w);

// Values of a (k+1)-cochain on increasing tuples of the E-frame.
struct NaiveTable {
  std::vector<std::vector<int>> tuples;
  std::vector<Poly> values;
  friend bool operator==(const NaiveTable&, const NaiveTable&) = default;
};

// <d s, E_0 ^ .. ^ E_k> from the naive formula with the Courant bracket, where
// s corresponds to w via <s, E_1 ^ .. ^ E_k> = w(q E_1, .., q E_k).
NaiveTable naive_differential(const Quintuple& q, const AForm& w);
// Table of w(q E_0, .., q E_k) on the same tuples.
NaiveTable identified_table(const Quintuple& q, const AForm& w);

// True iff the pure-fiber component vanishes.
bool horizontal_check(const AForm& w);

}  // namespace courant
