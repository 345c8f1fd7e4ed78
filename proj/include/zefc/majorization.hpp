#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "zefc/equivalence.hpp"
#include "zefc/errors.hpp"
#include "zefc/pmf.hpp"
#include "zefc/rational.hpp"

namespace zefc {

namespace detail {
inline void check_base(int base) {
  if (base < 2) throw ValidationError("entropy base must be >= 2");
}
}  // namespace detail

// p is majorized by q when every descending prefix sum of p is dominated by
// the corresponding prefix sum of q and the totals agree exactly. Vectors of
// unequal length are compared after zero-padding the shorter one. All
// comparisons are exact rational arithmetic.
inline bool is_majorized(std::vector<Rational> p, std::vector<Rational> q) {
  const std::size_t n = std::max(p.size(), q.size());
  if (n == 0) return true;
  p.resize(n, Rational(0));
  q.resize(n, Rational(0));
  std::sort(p.begin(), p.end(), std::greater<>());
  std::sort(q.begin(), q.end(), std::greater<>());
  Rational sum_p = 0, sum_q = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    sum_p += p[i];
    sum_q += q[i];
    if (sum_p > sum_q) return false;
  }
  sum_p += p[n - 1];
  sum_q += q[n - 1];
  return sum_p == sum_q;
}

// Entropy -sum p_i log p_i of exact rational weights, evaluated in the given
// base. The logarithm is the only floating-point step.
inline double entropy(const std::vector<Rational>& weights, int base) {
  detail::check_base(base);
  double nats = 0.0;
  for (const Rational& w : weights) {
    if (w == 0) continue;
    const double wd = to_double(w);
    if (wd == 0.0) continue;  // underflow; the exact term is negligible
    nats -= wd * log_rational(w);
  }
  return nats / std::log(static_cast<double>(base));
}

inline double entropy(const Pmf& p, int base) { return entropy(p.weights(), base); }

// Entropy of the distribution (c_1/total, ..., c_n/total) given as integer
// counts: log(total) - (1/total) sum c_i log c_i. Grouping the integer counts
// keeps the evaluation exact up to the final logs.
inline double entropy_of_counts(std::span<const std::uint64_t> counts,
                                std::uint64_t total, int base) {
  detail::check_base(base);
  if (total == 0) throw ValidationError("entropy_of_counts: zero total");
  double weighted_logs = 0.0;
  for (std::uint64_t c : counts) {
    if (c > 1) weighted_logs += static_cast<double>(c) * std::log(static_cast<double>(c));
  }
  const double nats =
      std::log(static_cast<double>(total)) - weighted_logs / static_cast<double>(total);
  return nats / std::log(static_cast<double>(base));
}

// Minimum entropy over all valid conditional label distributions, attained
// at the class-size distribution itself: every valid p satisfies
// p majorized-by d/total, and entropy is Schur-concave.
inline double entropy_lower_bound(const ClassSizeVector& d, int base) {
  return entropy_of_counts(d.sizes, d.total, base);
}

}  // namespace zefc
