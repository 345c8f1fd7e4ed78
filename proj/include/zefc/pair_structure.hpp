#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "zefc/demand_function.hpp"
#include "zefc/equivalence.hpp"
#include "zefc/errors.hpp"
#include "zefc/pmf.hpp"

namespace zefc {

// One compatible pair of class indices (into the side-1 and side-2 scalar
// partitions at a3) together with the number h of message pairs it covers.
struct PairEntry {
  int v = 0;
  int w = 0;
  std::uint64_t h = 0;

  bool operator==(const PairEntry& other) const = default;
};

// The set of class-index pairs that can produce function value b when
// x3 = a3. Pairs are listed in lexicographic (v, w) order.
struct PairIndexSet {
  Symbol a3 = 0;
  Symbol b = 0;
  std::vector<PairEntry> pairs;

  bool operator==(const PairIndexSet& other) const = default;
};

// h-counts of a pair index set sorted non-increasing; total is the size of
// the (b, a3) pre-image slice.
struct HVector {
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;

  bool operator==(const HVector& other) const = default;
};

namespace detail {
inline void check_b(const DemandFunction& f, Symbol b) {
  if (b < 0 || b >= f.b_size()) throw ValidationError("b out of range");
}
}  // namespace detail

// Number of message pairs (x1, x2) with f(x1, x2, a3) = b.
inline std::uint64_t preimage_count_given_a3(const DemandFunction& f, Symbol b,
                                             Symbol a3) {
  detail::check_b(f, b);
  detail::check_a3(f, a3);
  std::uint64_t n = 0;
  for (Symbol x1 = 0; x1 < f.a_size(); ++x1)
    for (Symbol x2 = 0; x2 < f.a_size(); ++x2) n += (f(x1, x2, a3) == b);
  return n;
}

// Realizations of x3 under which the function value b is reachable.
inline std::vector<Symbol> a3_support(const DemandFunction& f, Symbol b) {
  detail::check_b(f, b);
  std::vector<Symbol> support;
  for (Symbol a3 = 0; a3 < f.a_size(); ++a3)
    if (preimage_count_given_a3(f, b, a3) > 0) support.push_back(a3);
  return support;
}

// The joint class structure of one a3 slice. Both members of a class pair
// can be swapped for other members without changing the function value, so
// each (v, w) cell carries exactly one b; the constructor re-derives this
// from the table in one pass and rejects conflicts, so that ingestion bugs
// surface immediately.
struct SlicePairTable {
  Symbol a3 = 0;
  Partition side1, side2;
  std::vector<std::vector<Symbol>> value;  // [v][w] -> b

  SlicePairTable(const DemandFunction& f, Symbol a3_in)
      : a3(a3_in),
        side1(scalar_partition(f, 1, a3_in)),
        side2(scalar_partition(f, 2, a3_in)),
        value(side1.classes.size(),
              std::vector<Symbol>(side2.classes.size(), -1)) {
    std::vector<int> class1(static_cast<std::size_t>(f.a_size()));
    std::vector<int> class2(static_cast<std::size_t>(f.a_size()));
    for (Symbol x = 0; x < f.a_size(); ++x) {
      class1[static_cast<std::size_t>(x)] = side1.class_of(x);
      class2[static_cast<std::size_t>(x)] = side2.class_of(x);
    }
    for (Symbol x1 = 0; x1 < f.a_size(); ++x1)
      for (Symbol x2 = 0; x2 < f.a_size(); ++x2) {
        Symbol& cell = value[static_cast<std::size_t>(class1[static_cast<std::size_t>(x1)])]
                            [static_cast<std::size_t>(class2[static_cast<std::size_t>(x2)])];
        const Symbol b = f(x1, x2, a3);
        detail::internal_check(cell == -1 || cell == b,
                               "slice pair table: class pair spans two "
                               "function values");
        cell = b;
      }
  }

  std::uint64_t pair_size(std::size_t v, std::size_t w) const {
    return static_cast<std::uint64_t>(side1.classes[v].size()) *
           static_cast<std::uint64_t>(side2.classes[w].size());
  }
};

// Builds the pair index set at (a3, b): all class pairs whose cell in the
// slice table carries b, with h the product of the two class sizes.
inline PairIndexSet pair_index_set(const DemandFunction& f, Symbol a3,
                                   Symbol b) {
  detail::check_b(f, b);
  detail::check_a3(f, a3);
  const SlicePairTable table(f, a3);
  PairIndexSet set;
  set.a3 = a3;
  set.b = b;
  for (std::size_t v = 0; v < table.side1.classes.size(); ++v)
    for (std::size_t w = 0; w < table.side2.classes.size(); ++w)
      if (table.value[v][w] == b)
        set.pairs.push_back(
            PairEntry{static_cast<int>(v), static_cast<int>(w), table.pair_size(v, w)});
  if (set.pairs.empty())
    throw ValidationError("pair_index_set: a3=" + std::to_string(a3) +
                          " is not in the support of b=" + std::to_string(b));
  return set;
}

inline HVector h_vector(const DemandFunction& f, Symbol a3, Symbol b) {
  const PairIndexSet set = pair_index_set(f, a3, b);
  HVector h;
  for (const PairEntry& e : set.pairs) {
    h.counts.push_back(e.h);
    h.total += e.h;
  }
  std::sort(h.counts.begin(), h.counts.end(), std::greater<>());
  return h;
}

// Conditional distribution of x3 given function value b, one weight per
// element of a3_support(f, b) in ascending a3 order.
inline Pmf a3_conditional_pmf(const DemandFunction& f, Symbol b) {
  detail::check_b(f, b);
  const std::uint64_t total = preimage_count(f, b);
  if (total == 0)
    throw ValidationError("a3_conditional_pmf: b=" + std::to_string(b) +
                          " has zero probability");
  std::vector<Rational> weights;
  for (Symbol a3 : a3_support(f, b))
    weights.emplace_back(preimage_count_given_a3(f, b, a3), total);
  return Pmf(std::move(weights));
}

}  // namespace zefc
