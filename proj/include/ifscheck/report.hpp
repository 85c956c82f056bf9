#pragma once

// Verification outcomes. Each check carries both sides as exact "p/q"
// strings so reports can be diffed and re-verified outside this library.

#include "ifscheck/geometry.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace ifscheck {

struct Check {
  std::string name;
  std::string lhs;
  std::string rhs;
  std::string relation = "==";
  bool passed = false;

  explicit operator bool() const { return passed; }
};

Check check_equal(std::string name, const Rational& lhs, const Rational& rhs);
Check check_equal(std::string name, const RatPoint& lhs, const RatPoint& rhs);
/// lhs <= rhs.
Check check_at_most(std::string name, const Rational& lhs, const Rational& rhs);
Check check_true(std::string name, bool condition, std::string detail = {});

struct Report {
  std::string title;
  std::vector<Check> checks;

  bool passed() const;
  std::size_t failures() const;
  void add(Check c) { checks.push_back(std::move(c)); }
  /// Appends another report's checks, prefixing their names.
  void merge(const Report& other, const std::string& prefix = {});

  nlohmann::json to_json() const;
  /// One line per check: "PASS name: lhs == rhs".
  void print(std::ostream& os, bool verbose = true) const;
};

}  // namespace ifscheck
