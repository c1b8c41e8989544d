// Grades a few derivations of C[H] for the discrete Heisenberg group H by
// H/H' = Z + Z and checks the bracket of two components.
#include <iostream>
#include <memory>

#include <dergrade/dergrade.hpp>

using namespace dergrade;

int main() {
  auto H = std::make_shared<const Heisenberg>();
  const auto setup = GradingSetup<Heisenberg>::derived(H);
  using A = AlgebraElement<HeisenbergElement>;

  const HeisenbergElement x{1, 0, 0}, y{0, 1, 0}, z{0, 0, 1};
  const auto d = inner_derivation(H, A{{1, x}, {1, y}}) + central_derivation(H, {2, 3}, z);

  const auto dec = decompose(d, setup);
  std::cout << "d decomposes into " << dec.components.size() << " components\n";
  for (const auto& [key, component] : dec.components) {
    std::cout << "  key " << key << ": d(x) = " << component.image(0) << ", d(y) = " << component.image(1) << "\n";
  }

  const auto report = check_bracket_closure(inner_derivation(H, A(x)), inner_derivation(H, A(y)), setup);
  for (const auto& e : report.entries)
    std::cout << "[Der_" << e.left << ", Der_" << e.right << "] lands in " << e.expected << ": "
              << (e.closed ? "yes" : "no") << "\n";
  std::cout << "H is " << (is_stem(*H) ? "" : "not ") << "a stem group\n";
}
