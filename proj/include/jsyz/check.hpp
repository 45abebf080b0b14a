#pragma once

#include <string>

namespace jsyz {

/// One named comparison in a report. Values are rendered as text so tuples
/// and scalars print the same way.
struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
  /// A failure here contradicts an equivalence the engine relies on.
  bool consistency = false;
};

}  // namespace jsyz
