// Spectrum of the adjoint sl3-module restricted to the Borel subalgebra, two ways.
#include <iostream>

#include "tspec/tspec.hpp"

int main() {
  using namespace tspec;
  const CatalogEntry b = catalog_get("borel_sl3", {});
  const RatVector highest_root{1, 1};
  const BorelSpectrumReport r = check_borel_spectrum(b, highest_root);

  std::cout << "rho + w(lambda + rho):\n";
  for (const auto& x : r.formula) std::cout << "  " << to_string(x) << "\n";
  std::cout << "from homology:\n";
  for (const auto& x : r.computed) std::cout << "  " << to_string(x) << "\n";
  std::cout << (r.ok ? "agree" : "DISAGREE") << "\n";

  const KostantReport k = check_kostant(b, highest_root);
  for (std::size_t q = 0; q < k.computed.size(); ++q) {
    std::cout << "H^" << q << "(n, V) weights:";
    for (const auto& w : k.computed[q]) std::cout << " " << to_string(w);
    std::cout << "\n";
  }
  return r.ok && k.ok ? 0 : 1;
}
