// Cohomology of sl2 with coefficients in the simple modules V_m.
#include <iostream>

#include "tspec/tspec.hpp"

int main() {
  using namespace tspec;
  for (unsigned m = 0; m <= 6; ++m) {
    std::cout << "V" << m << ":";
    for (auto b : betti_cohomology(sl2_irrep(m)).values) std::cout << " " << b;
    std::cout << "\n";
  }
}
