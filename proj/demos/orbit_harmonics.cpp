#include <iostream>

#include "csp/harmonics.hpp"
#include "csp/sieving.hpp"

int main() {
  using namespace csp;
  const LocusSpec spec = LocusSpec::z(3, 2);
  const Locus locus = enumerate_locus(spec);

  std::cout << spec.to_string() << " has " << locus.size() << " points:";
  for (const auto& w : locus.elements()) std::cout << "  " << w.to_string();
  std::cout << "\n\n";

  const HarmonicsResult h = run_harmonics(locus);
  std::cout << "I(X), reduced grevlex basis:\n";
  for (const auto& g : h.ideal.generators()) std::cout << "  " << g.to_string() << "\n";
  std::cout << "T(X):\n";
  for (const auto& g : h.graded.generators()) std::cout << "  " << g.to_string() << "\n";

  std::cout << "\nHilb(q)   = " << h.quotient.hilbert() << "\n";
  const SchurVector frob = graded_frobenius(locus);
  std::cout << "grFrob    = " << frob.to_string() << "\n";
  std::cout << "stated    = " << stated_frobenius(spec).to_string() << "\n";
  std::cout << "Sn-orbits = " << oracle_csp_poly(locus, Subgroup::Sn) << "  (compositions: "
            << sieving_polynomial(Family::CompCsp, SievingParams::nk(3, 2)) << ")\n";
}
