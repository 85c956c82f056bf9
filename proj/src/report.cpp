#include "ifscheck/report.hpp"

#include <algorithm>
#include <ostream>

namespace ifscheck {

Check check_equal(std::string name, const Rational& lhs, const Rational& rhs) {
  return Check{std::move(name), lhs.to_string(), rhs.to_string(), "==", lhs == rhs};
}

Check check_equal(std::string name, const RatPoint& lhs, const RatPoint& rhs) {
  return Check{std::move(name), lhs.to_string(), rhs.to_string(), "==", lhs == rhs};
}

Check check_at_most(std::string name, const Rational& lhs, const Rational& rhs) {
  return Check{std::move(name), lhs.to_string(), rhs.to_string(), "<=", lhs <= rhs};
}

Check check_true(std::string name, bool condition, std::string detail) {
  return Check{std::move(name), std::move(detail), condition ? "true" : "false", "is", condition};
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks) {
    Check copy = c;
    if (!prefix.empty()) copy.name = prefix + c.name;
    checks.push_back(std::move(copy));
  }
}

nlohmann::json Report::to_json() const {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& c : checks) {
    items.push_back({{"name", c.name}, {"lhs", c.lhs}, {"relation", c.relation}, {"rhs", c.rhs}, {"pass", c.passed}});
  }
  return {{"title", title}, {"pass", passed()}, {"checks", items}};
}

void Report::print(std::ostream& os, bool verbose) const {
  os << title << ": " << (passed() ? "PASS" : "FAIL") << " (" << checks.size() - failures() << "/"
     << checks.size() << " checks)\n";
  for (const auto& c : checks) {
    if (!verbose && c.passed) continue;
    os << "  " << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.lhs << " " << c.relation << " "
       << c.rhs << "\n";
  }
}

}  // namespace ifscheck
