#pragma once

#include <vector>

#include "zefc/demand_function.hpp"

namespace zefc::testing {

// Ternary demand function with asymmetric slice structure; the richest of
// the bundled fixtures. Slice x3=0 is a latin square, slice x3=1 is almost
// constant, slice x3=2 is its mirror image.
inline DemandFunction gf3_fixture() {
  const int slice0[3][3] = {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
  const int slice1[3][3] = {{0, 0, 0}, {0, 0, 0}, {1, 0, 0}};
  const int slice2[3][3] = {{1, 1, 0}, {1, 1, 1}, {1, 1, 1}};
  std::vector<Symbol> table(27);
  for (Symbol x1 = 0; x1 < 3; ++x1)
    for (Symbol x2 = 0; x2 < 3; ++x2) {
      table[static_cast<std::size_t>(x1 * 9 + x2 * 3 + 0)] = slice0[x1][x2];
      table[static_cast<std::size_t>(x1 * 9 + x2 * 3 + 1)] = slice1[x1][x2];
      table[static_cast<std::size_t>(x1 * 9 + x2 * 3 + 2)] = slice2[x1][x2];
    }
  return DemandFunction(3, 3, table, "gf3-mixed");
}

// Integer sum of three bits.
inline DemandFunction arith_fixture() {
  std::vector<Symbol> table(8);
  for (Symbol x1 = 0; x1 < 2; ++x1)
    for (Symbol x2 = 0; x2 < 2; ++x2)
      for (Symbol x3 = 0; x3 < 2; ++x3)
        table[static_cast<std::size_t>(x1 * 4 + x2 * 2 + x3)] = x1 + x2 + x3;
  return DemandFunction(2, 4, table, "arithmetic-sum");
}

// Mod-2 sum of three bits.
inline DemandFunction gf2_fixture() {
  std::vector<Symbol> table(8);
  for (Symbol x1 = 0; x1 < 2; ++x1)
    for (Symbol x2 = 0; x2 < 2; ++x2)
      for (Symbol x3 = 0; x3 < 2; ++x3)
        table[static_cast<std::size_t>(x1 * 4 + x2 * 2 + x3)] = x1 ^ x2 ^ x3;
  return DemandFunction(2, 2, table, "gf2-sum");
}

}  // namespace zefc::testing
