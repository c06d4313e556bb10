// Spectrum of the trivial module over [e1,e2] = e2, [e1,e3] = λ e3 for a few λ.
#include <iostream>

#include "tspec/tspec.hpp"

int main(int argc, char** argv) {
  using namespace tspec;
  const std::string lambda = argc > 1 ? argv[1] : "5/3";
  const CatalogEntry e = catalog_get("solvable3", {parse_rational(lambda)});
  const Representation trivial = e.module("trivial");

  std::cout << "Jordan-Holder values:";
  for (const auto& a : jordan_holder_values(e.algebra)) std::cout << " " << to_string(a[0]);
  std::cout << "\n2rho(e1) = " << to_string(two_rho(*e.algebra)[0]) << "\n";

  const SpectrumReport r = spectrum_solvable(trivial);
  std::cout << "spectrum of C (" << r.candidates_tested << " candidates):\n";
  for (const auto& el : r.elements) {
    std::cout << "  " << to_string((*el.character)[0]) << "   H_* =";
    for (auto b : el.evidence->values) std::cout << " " << b;
    std::cout << "\n";
  }
  std::cout << "2rho symmetry: " << (check_two_rho_symmetry(e.algebra).ok ? "holds" : "fails") << "\n";
}
