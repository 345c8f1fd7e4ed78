#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "zefc/bounds.hpp"
#include "zefc/demand_function.hpp"
#include "zefc/equivalence.hpp"
#include "zefc/errors.hpp"
#include "zefc/majorization.hpp"
#include "zefc/pair_structure.hpp"

// Brute-force k-block verification engine. Everything here recomputes the
// bound ingredients literally, by enumeration over message blocks, so that
// the single-letter computation path in bounds.hpp can be checked against it
// rather than trusted.
namespace zefc {

struct OracleConfig {
  int k = 2;
  std::uint64_t enumeration_cap = 10'000'000;
  int z_size = 2;
};

namespace detail {

// Advances a base-`radix` odometer; returns false after the last tuple.
inline bool next_tuple(std::vector<Symbol>& t, int radix) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < radix) return true;
    t[i] = 0;
  }
  return false;
}

// Spends enumeration budget; throws once the configured cap is exhausted.
class WorkMeter {
 public:
  explicit WorkMeter(std::uint64_t cap) : remaining_(cap) {}
  void spend(std::uint64_t units) {
    if (units > remaining_)
      throw ResourceCapError("block oracle: enumeration cap exceeded");
    remaining_ -= units;
  }

 private:
  std::uint64_t remaining_;
};

// Value -> multiplicity map for block count vectors built as k-fold products.
using CountMultiset = std::map<std::uint64_t, std::uint64_t>;

inline CountMultiset product_extend(const CountMultiset& acc,
                                    std::span<const std::uint64_t> factors,
                                    WorkMeter& meter) {
  CountMultiset next;
  for (const auto& [value, mult] : acc)
    for (std::uint64_t factor : factors) {
      meter.spend(1);
      next[value * factor] += mult;
    }
  return next;
}

inline double entropy_of_multiset(const CountMultiset& counts, std::uint64_t total,
                                  int base) {
  double weighted_logs = 0.0;
  for (const auto& [value, mult] : counts)
    if (value > 1)
      weighted_logs += static_cast<double>(mult) * static_cast<double>(value) *
                       std::log(static_cast<double>(value));
  return (std::log(static_cast<double>(total)) -
          weighted_logs / static_cast<double>(total)) /
         std::log(static_cast<double>(base));
}

inline void check_block_config(const OracleConfig& cfg) {
  if (cfg.k < 1) throw ValidationError("block oracle: k must be >= 1");
  check_base(cfg.z_size);
}

}  // namespace detail

// Literal block form of the per-edge bound: the average over all a3 blocks
// in A^k of the entropy of the product class-size vector, divided by k.
inline double gamma_block(const DemandFunction& f, int u, const OracleConfig& cfg) {
  detail::check_side(u);
  detail::check_block_config(cfg);
  detail::WorkMeter meter(cfg.enumeration_cap);

  std::vector<ClassSizeVector> scalar_d;
  for (Symbol a3 = 0; a3 < f.a_size(); ++a3) scalar_d.push_back(d_vector(f, u, a3));

  std::vector<Symbol> a3_vec(static_cast<std::size_t>(cfg.k), 0);
  double sum = 0.0;
  std::uint64_t block_count = 0;
  do {
    detail::CountMultiset counts{{1, 1}};
    std::uint64_t total = 1;
    for (Symbol a3 : a3_vec) {
      const ClassSizeVector& d = scalar_d[static_cast<std::size_t>(a3)];
      counts = detail::product_extend(counts, d.sizes, meter);
      total *= d.total;
    }
    sum += detail::entropy_of_multiset(counts, total, cfg.z_size);
    ++block_count;
  } while (detail::next_tuple(a3_vec, f.a_size()));
  return sum / (static_cast<double>(block_count) * static_cast<double>(cfg.k));
}

// Literal block form of the pair-label bound: iterates over every function
// value block b in B^k and every a3 block in its support, building the block
// h-vector by per-component products.
inline double alpha_block(const DemandFunction& f, const OracleConfig& cfg) {
  detail::check_block_config(cfg);
  detail::WorkMeter meter(cfg.enumeration_cap);

  // Scalar ingredients, indexed [b][a3].
  const int A = f.a_size(), B = f.b_size();
  std::vector<std::vector<std::uint64_t>> n_scalar(
      static_cast<std::size_t>(B), std::vector<std::uint64_t>(static_cast<std::size_t>(A), 0));
  std::vector<std::vector<std::vector<std::uint64_t>>> h_scalar(
      static_cast<std::size_t>(B),
      std::vector<std::vector<std::uint64_t>>(static_cast<std::size_t>(A)));
  for (Symbol b = 0; b < B; ++b)
    for (Symbol a3 = 0; a3 < A; ++a3) {
      const std::uint64_t n = preimage_count_given_a3(f, b, a3);
      n_scalar[static_cast<std::size_t>(b)][static_cast<std::size_t>(a3)] = n;
      if (n > 0)
        h_scalar[static_cast<std::size_t>(b)][static_cast<std::size_t>(a3)] =
            h_vector(f, a3, b).counts;
    }

  BigInt cube_block = 1;  // |A|^{3k}
  for (int i = 0; i < 3 * cfg.k; ++i) cube_block *= A;

  double sum = 0.0;
  std::vector<Symbol> b_vec(static_cast<std::size_t>(cfg.k), 0);
  do {
    meter.spend(1);
    bool reachable = true;
    for (Symbol b : b_vec)
      if (preimage_count(f, b) == 0) reachable = false;
    if (!reachable) continue;

    std::vector<Symbol> a3_vec(static_cast<std::size_t>(cfg.k), 0);
    do {
      meter.spend(1);
      std::uint64_t n_block = 1;
      for (int i = 0; i < cfg.k && n_block > 0; ++i)
        n_block *= n_scalar[static_cast<std::size_t>(b_vec[static_cast<std::size_t>(i)])]
                           [static_cast<std::size_t>(a3_vec[static_cast<std::size_t>(i)])];
      if (n_block == 0) continue;  // a3 block outside the support of b block

      detail::CountMultiset counts{{1, 1}};
      for (int i = 0; i < cfg.k; ++i)
        counts = detail::product_extend(
            counts,
            h_scalar[static_cast<std::size_t>(b_vec[static_cast<std::size_t>(i)])]
                    [static_cast<std::size_t>(a3_vec[static_cast<std::size_t>(i)])],
            meter);

      // P(b) * P(a3 | b) = n_block / |A|^{3k}, exactly.
      const double weight = to_double(Rational(BigInt(n_block), cube_block));
      sum += weight * detail::entropy_of_multiset(counts, n_block, cfg.z_size);
    } while (detail::next_tuple(a3_vec, A));
  } while (detail::next_tuple(b_vec, B));
  return sum / static_cast<double>(cfg.k);
}

// Checks that the product-form block h-vector at (b_vec, a3_vec) equals the
// h-vector obtained by direct enumeration of all (x1, x2) block pairs.
inline bool h_block_check(const DemandFunction& f, std::span<const Symbol> b_vec,
                          std::span<const Symbol> a3_vec,
                          std::uint64_t cap = 10'000'000) {
  if (b_vec.size() != a3_vec.size() || b_vec.empty())
    throw ValidationError("h_block_check: block length mismatch");
  const int k = static_cast<int>(b_vec.size());
  const int A = f.a_size();
  std::uint64_t pair_sweep = 1;
  for (int i = 0; i < 2 * k; ++i) {
    pair_sweep *= static_cast<std::uint64_t>(A);
    if (pair_sweep > cap) throw ResourceCapError("h_block_check: sweep exceeds cap");
  }
  detail::WorkMeter meter(cap);

  // Product form: the componentwise cartesian product of the scalar pair
  // sets, with h the product of the per-component h-counts.
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::uint64_t> product;
  product[{{}, {}}] = 1;
  bool empty = false;
  for (int i = 0; i < k && !empty; ++i) {
    const Symbol b = b_vec[static_cast<std::size_t>(i)];
    const Symbol a3 = a3_vec[static_cast<std::size_t>(i)];
    detail::check_b(f, b);
    detail::check_a3(f, a3);
    if (preimage_count_given_a3(f, b, a3) == 0) {
      empty = true;
      break;
    }
    const PairIndexSet scalar = pair_index_set(f, a3, b);
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::uint64_t> next;
    for (const auto& [vw, h] : product)
      for (const PairEntry& e : scalar.pairs) {
        meter.spend(1);
        std::vector<int> v = vw.first, w = vw.second;
        v.push_back(e.v);
        w.push_back(e.w);
        next[{std::move(v), std::move(w)}] = h * e.h;
      }
    product = std::move(next);
  }

  // Direct enumeration: tally message pairs per block class-index pair.
  std::vector<Partition> p1, p2;
  for (Symbol a3 = 0; a3 < A; ++a3) {
    p1.push_back(scalar_partition(f, 1, a3));
    p2.push_back(scalar_partition(f, 2, a3));
  }
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::uint64_t> tally;
  std::vector<Symbol> x1(static_cast<std::size_t>(k), 0);
  do {
    std::vector<Symbol> x2(static_cast<std::size_t>(k), 0);
    do {
      meter.spend(1);
      bool match = true;
      for (int i = 0; i < k && match; ++i)
        match = f(x1[static_cast<std::size_t>(i)], x2[static_cast<std::size_t>(i)],
                  a3_vec[static_cast<std::size_t>(i)]) == b_vec[static_cast<std::size_t>(i)];
      if (!match) continue;
      std::vector<int> v(static_cast<std::size_t>(k)), w(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) {
        v[static_cast<std::size_t>(i)] =
            p1[static_cast<std::size_t>(a3_vec[static_cast<std::size_t>(i)])].class_of(
                x1[static_cast<std::size_t>(i)]);
        w[static_cast<std::size_t>(i)] =
            p2[static_cast<std::size_t>(a3_vec[static_cast<std::size_t>(i)])].class_of(
                x2[static_cast<std::size_t>(i)]);
      }
      ++tally[{std::move(v), std::move(w)}];
    } while (detail::next_tuple(x2, A));
  } while (detail::next_tuple(x1, A));

  if (empty) return tally.empty();
  return tally == product;
}

// Exhaustively finds the minimum number of labels L such that some
// assignment of L labels to the side-u alphabet still lets the terminal
// decode with zero error when x3 = a3 is known and the other source is sent
// in the clear. An assignment fails when two symbols share a label but an
// adversarial value of the other message separates their function values.
inline int min_labels_search(const DemandFunction& f, int u, Symbol a3) {
  detail::check_side(u);
  detail::check_a3(f, a3);
  const int A = f.a_size();
  if (A > 4)
    throw ResourceCapError("min_labels_search: alphabet too large for label sweep");

  const auto value = [&](Symbol x, Symbol other) {
    return u == 1 ? f(x, other, a3) : f(other, x, a3);
  };
  for (int labels = 1; labels <= A; ++labels) {
    std::vector<Symbol> assign(static_cast<std::size_t>(A), 0);
    do {
      bool valid = true;
      for (Symbol x = 0; x < A && valid; ++x)
        for (Symbol y = x + 1; y < A && valid; ++y) {
          if (assign[static_cast<std::size_t>(x)] != assign[static_cast<std::size_t>(y)])
            continue;
          for (Symbol other = 0; other < A; ++other)
            if (value(x, other) != value(y, other)) {
              valid = false;  // the other source can expose the merge
              break;
            }
        }
      if (valid) return labels;
    } while (detail::next_tuple(assign, labels));
  }
  throw InternalError("min_labels_search: identity labeling rejected");
}

}  // namespace zefc
