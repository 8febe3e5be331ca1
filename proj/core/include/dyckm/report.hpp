#pragma once

#include <cstddef>
#include <string>

namespace dyckm {

// Outcome of an exhaustive check; only the first counterexample is kept.
struct VerifyReport {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string failure;

  void fail(const std::string& message) {
    if (passed) failure = message;
    passed = false;
  }

  void absorb(const VerifyReport& other) {
    cases += other.cases;
    if (!other.passed) fail(other.name.empty() ? other.failure : other.name + ": " + other.failure);
  }
};

}  // namespace dyckm
