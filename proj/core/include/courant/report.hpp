#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "courant/poly.hpp"
#include "courant/rational.hpp"

namespace courant {

// Location of the first failure of a check. Indices are 1-based.
struct Witness {
  std::string identity;
  std::vector<int> indices;
  std::string residual;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::optional<Witness> witness;
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

class Report {
 public:
  void add(CheckResult r) { checks_.push_back(std::move(r)); }
  void append(const Report& other);

  bool passed() const;
  const std::vector<CheckResult>& checks() const { return checks_; }
  const CheckResult* find(std::string_view name) const;
  // Names of the failing checks, in order.
  std::vector<std::string> failures() const;

 private:
  std::vector<CheckResult> checks_;
};

// Accumulates one named check. The first nonzero residual becomes the witness;
// later ones are ignored.
class CheckBuilder {
 public:
  CheckBuilder(std::string name, std::string identity) : identity_(std::move(identity)) {
    result_.name = std::move(name);
  }

  // Indices are given 0-based and reported 1-based.
  bool expect_zero(const Poly& residual, std::vector<int> indices);
  bool expect_zero(const Rational& residual, std::vector<int> indices);
  void fail(std::vector<int> indices, std::string residual);
  bool failed() const { return !result_.passed; }

  CheckResult finish() const { return result_; }
  void finish_into(Report& r) const { r.add(result_); }

 private:
  std::string identity_;
  CheckResult result_;
};

}  // namespace courant
