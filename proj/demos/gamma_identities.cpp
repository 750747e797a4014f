// Minimal tour: build the generator matrices, print the identity report, and
// show the exact entries for the first few dimensions.

#include <diracidx/gamma.hpp>

#include <iostream>

int main() {
  using namespace diracidx;

  for (int n = 1; n <= 4; ++n) {
    GammaSet g = build_gamma(n);
    std::cout << "n = " << n << "  (matrices are " << g.dim() << "x" << g.dim()
              << ")\n";
    for (int j = 0; j < n; ++j)
      std::cout << "E" << j + 1 << " =\n" << g.generators[j] << "\n";
    std::cout << "\n";
  }

  std::cout << verify_gamma(build_gamma(8)).render_text() << "\n";
  return 0;
}
