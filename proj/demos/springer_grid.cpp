// Fixed points of (left, right) multiplication by the long cycle on S_3,
// against the bimahonian polynomial at pairs of cube roots of unity.
#include <iostream>

#include "csp/sieving.hpp"

int main() {
  using namespace csp;
  const Report rep = verify(Family::SpringerBicsp, SievingParams::nk(3, 0));
  std::cout << sieving_polynomial(Family::SpringerBicsp, SievingParams::nk(3, 0)) << "\n\n";
  std::cout << rep.to_pretty();
  return rep.all_ok ? 0 : 1;
}
