#pragma once

#include <string>
#include <vector>

namespace stiffpress {

struct SelfTestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelfTestReport {
  std::vector<SelfTestCheck> checks;
  bool ok() const;
  std::string text() const;
};

/// Quick checks of the closed-form examples and the small dense oracles.
SelfTestReport selftest();

}  // namespace stiffpress
