// Counts necklaces of length n in k colors that are fixed by rotating colors,
// and compares each count with the necklace polynomial at a root of unity.

#include <iostream>

#include "csp/sieving.hpp"

int main() {
  using namespace csp;
  const int n = 4, k = 3;
  const auto inst = make_instance(Family::NecklaceX, SievingParams::nk(n, k));
  std::cout << "necklaces of length " << n << " in " << k << " colors: " << inst.set_size() << "\n";
  std::cout << "N(q) = " << inst.polynomial << "\n\n";
  std::cout << verify(inst).to_pretty();
}
