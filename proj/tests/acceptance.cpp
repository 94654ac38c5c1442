// One line per acceptance criterion; exits nonzero if any fails.

#include <iostream>

#include "gogkit/verify.hpp"

int main() {
  bool ok = true;
  for (auto const& r : gogkit::verify_all()) {
    std::cout << gogkit::format_result(r) << std::endl;
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}
