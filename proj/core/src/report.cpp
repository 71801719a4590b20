#include "courant/report.hpp"

namespace courant {

void Report::append(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool Report::passed() const {
  for (const auto& c : checks_)
    if (!c.passed) return false;
  return true;
}

const CheckResult* Report::find(std::string_view name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<std::string> Report::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks_)
    if (!c.passed) out.push_back(c.name);
  return out;
}

bool CheckBuilder::expect_zero(const Poly& residual, std::vector<int> indices) {
  if (residual.is_zero()) return true;
  fail(std::move(indices), residual.to_string());
  return false;
}

bool CheckBuilder::expect_zero(const Rational& residual, std::vector<int> indices) {
  if (residual.is_zero()) return true;
  fail(std::move(indices), residual.to_string());
  return false;
}

void CheckBuilder::fail(std::vector<int> indices, std::string residual) {
  if (!result_.passed) return;
  for (int& i : indices) ++i;
  result_.passed = false;
  result_.witness = Witness{identity_, std::move(indices), std::move(residual)};
}

}  // namespace courant
