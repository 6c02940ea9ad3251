#pragma once

#include <string>
#include <vector>

namespace lightsector {

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// Ordered list of named checks; overall() holds iff every check passes.
class VerificationReport {
 public:
  void add(std::string name, std::string expected, std::string actual, bool pass) {
    checks_.push_back({std::move(name), std::move(expected), std::move(actual), pass});
  }
  void add(std::string name, std::string expected, std::string actual) {
    const bool pass = expected == actual;
    add(std::move(name), std::move(expected), std::move(actual), pass);
  }
  void append(const VerificationReport& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  }

  const std::vector<Check>& checks() const { return checks_; }
  bool overall() const {
    for (const auto& c : checks_)
      if (!c.pass) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks_) n += c.pass ? 0 : 1;
    return n;
  }

 private:
  std::vector<Check> checks_;
};

}  // namespace lightsector
