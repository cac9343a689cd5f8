// Prints a few shuffle identities over F_3[t] and checks each one against the
// truncated zeta values.

#include <iostream>

#include "fqzeta/fqzeta.hpp"

int main() {
  using namespace fqzeta;
  const FieldPtr field = make_field_q(3);
  PowerSums ps(field);
  const std::int64_t precision = 40;
  for (auto [a, b] : {std::pair<int, int>{3, 2}, {5, 1}, {4, 4}, {7, 3}}) {
    const RelationSet rs = solve_initial(ps, a, b);
    const ShuffleIdentity id = shuffle_identity(rs);
    std::cout << id.to_string() << "\n";
    std::cout << "  depth 2: " << (verify_depth(ps, rs, 2) ? "ok" : "fails")
              << ", zeta through t^-" << precision << ": " << (verify_zeta(ps, id, precision) ? "ok" : "fails") << "\n";
  }
  std::cout << "g_t for a = 17 over F_9: " << g_poly(17, make_field_q(9)).to_string() << "\n";
  return 0;
}
