#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "zefc/demand_function.hpp"
#include "zefc/errors.hpp"

namespace zefc {

// An ordered partition of the message alphabet into disjoint classes,
// largest class first; ties are broken by the smallest contained symbol so
// that class indices are deterministic.
struct Partition {
  std::vector<std::vector<Symbol>> classes;

  int class_count() const { return static_cast<int>(classes.size()); }

  // Class index of a symbol. The alphabet is small; a linear scan is fine.
  int class_of(Symbol x) const {
    for (std::size_t j = 0; j < classes.size(); ++j)
      for (Symbol m : classes[j])
        if (m == x) return static_cast<int>(j);
    throw ValidationError("partition: symbol " + std::to_string(x) +
                          " not covered");
  }

  bool operator==(const Partition& other) const = default;
};

// Class sizes in non-increasing order together with the alphabet size they
// partition. Normalizing by `total` gives the entropy-minimizing member of
// the family of valid conditional label distributions.
struct ClassSizeVector {
  std::vector<std::uint64_t> sizes;
  std::uint64_t total = 0;

  bool operator==(const ClassSizeVector& other) const = default;
};

namespace detail {

inline void check_side(int u) {
  if (u != 1 && u != 2) throw ValidationError("side must be 1 or 2");
}

inline void check_a3(const DemandFunction& f, Symbol a3) {
  if (a3 < 0 || a3 >= f.a_size()) throw ValidationError("a3 out of range");
}

// Groups symbols by a canonical key and returns classes sorted by
// (size descending, smallest member ascending).
inline Partition group_by_key(int a_size,
                              const std::vector<std::vector<Symbol>>& keys) {
  std::map<std::vector<Symbol>, std::vector<Symbol>> groups;
  for (Symbol x = 0; x < a_size; ++x) groups[keys[static_cast<std::size_t>(x)]].push_back(x);
  Partition p;
  for (auto& [key, members] : groups) p.classes.push_back(std::move(members));
  std::stable_sort(p.classes.begin(), p.classes.end(),
                   [](const auto& a, const auto& b) {
                     if (a.size() != b.size()) return a.size() > b.size();
                     return a.front() < b.front();
                   });
  return p;
}

}  // namespace detail

// Two values of the side-u message are equivalent given x3 = a3 when the
// function agrees on them for every value of the other message. The key of a
// symbol is therefore the row (u = 1) or column (u = 2) of the slice
// f(., ., a3) it indexes.
inline Partition scalar_partition(const DemandFunction& f, int u, Symbol a3) {
  detail::check_side(u);
  detail::check_a3(f, a3);
  const int n = f.a_size();
  std::vector<std::vector<Symbol>> keys(static_cast<std::size_t>(n));
  for (Symbol x = 0; x < n; ++x) {
    auto& key = keys[static_cast<std::size_t>(x)];
    key.reserve(static_cast<std::size_t>(n));
    for (Symbol other = 0; other < n; ++other)
      key.push_back(u == 1 ? f(x, other, a3) : f(other, x, a3));
  }
  return detail::group_by_key(n, keys);
}

// Number of classes induced on the side-u alphabet given x3 = a3.
inline int v_count(const DemandFunction& f, int u, Symbol a3) {
  return scalar_partition(f, u, a3).class_count();
}

inline ClassSizeVector d_vector(const DemandFunction& f, int u, Symbol a3) {
  const Partition p = scalar_partition(f, u, a3);
  ClassSizeVector d;
  d.total = static_cast<std::uint64_t>(f.a_size());
  d.sizes.reserve(p.classes.size());
  for (const auto& cls : p.classes) d.sizes.push_back(cls.size());
  return d;
}

// Partition of the x3 alphabet: x3 and x3' are equivalent when the whole
// slices f(., ., x3) and f(., ., x3') coincide.
inline Partition x3_partition(const DemandFunction& f) {
  const int n = f.a_size();
  std::vector<std::vector<Symbol>> keys(static_cast<std::size_t>(n));
  for (Symbol x3 = 0; x3 < n; ++x3) {
    auto& key = keys[static_cast<std::size_t>(x3)];
    key.reserve(static_cast<std::size_t>(n) * n);
    for (Symbol x1 = 0; x1 < n; ++x1)
      for (Symbol x2 = 0; x2 < n; ++x2) key.push_back(f(x1, x2, x3));
  }
  return detail::group_by_key(n, keys);
}

// Class sizes of the product partition of A^k induced componentwise by
// a3_vec: every k-fold product of per-component class sizes, sorted
// non-increasing. Intended for oracle use with small k; refuses when the
// class count would exceed `cap`.
inline ClassSizeVector block_d_vector(const DemandFunction& f, int u,
                                      std::span<const Symbol> a3_vec,
                                      std::uint64_t cap = 10'000'000) {
  if (a3_vec.empty()) throw ValidationError("block_d_vector: empty block");
  std::vector<std::uint64_t> products{1};
  for (Symbol a3 : a3_vec) {
    const ClassSizeVector d = d_vector(f, u, a3);
    if (products.size() * d.sizes.size() > cap)
      throw ResourceCapError("block_d_vector: class count exceeds cap");
    std::vector<std::uint64_t> next;
    next.reserve(products.size() * d.sizes.size());
    for (std::uint64_t p : products)
      for (std::uint64_t s : d.sizes) next.push_back(p * s);
    products = std::move(next);
  }
  std::sort(products.begin(), products.end(), std::greater<>());
  ClassSizeVector d;
  d.total = 1;
  for (std::size_t i = 0; i < a3_vec.size(); ++i)
    d.total *= static_cast<std::uint64_t>(f.a_size());
  d.sizes = std::move(products);
  return d;
}

}  // namespace zefc
