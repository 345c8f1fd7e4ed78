#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "zefc/demand_function.hpp"
#include "zefc/equivalence.hpp"
#include "zefc/errors.hpp"
#include "zefc/majorization.hpp"
#include "zefc/pair_structure.hpp"
#include "zefc/pmf.hpp"

namespace zefc {

// Rate-region outer bound for one demand function. Rates are normalized the
// usual way (codeword symbols from Z per message symbol from A), so a bound
// of 1 on an edge means one full A-symbol of information per instance.
// gamma_u lower-bounds H(Z_u | X3)/k, alpha lower-bounds
// H(Z_1, Z_2 | f, X3)/k, and h_f is the per-instance entropy of the function
// value, all in base z_size.
struct RateBoundReport {
  int a_size = 0;
  int b_size = 0;
  int z_size = 0;
  double r3_sum_lb = 0.0;       // bound on R31 + R32
  double r1_lb = 0.0;           // bound on R1
  double r2_lb = 0.0;           // bound on R2
  double sum_rate_avg_lb = 0.0; // bound on (R1 + R2) / 2
  double gamma_1 = 0.0;
  double gamma_2 = 0.0;
  double alpha = 0.0;
  double h_f = 0.0;
  std::string note;
};

// Per-edge conditional-entropy bound: the average over a3 of the minimum
// label entropy forced by the side-u class structure.
inline double gamma(const DemandFunction& f, int u, int z_size) {
  detail::check_side(u);
  detail::check_base(z_size);
  double sum = 0.0;
  for (Symbol a3 = 0; a3 < f.a_size(); ++a3)
    sum += entropy_lower_bound(d_vector(f, u, a3), z_size);
  return sum / static_cast<double>(f.a_size());
}

// Pair-label conditional-entropy bound: expectation over (b, a3) of the
// minimum entropy of the pair-label distribution, weights taken from the
// exact pre-image counts. One slice table per a3 covers every b at once:
// P(b) * P(a3 | b) = |pre-image of (b, a3)| / |A|^3.
inline double alpha(const DemandFunction& f, int z_size) {
  detail::check_base(z_size);
  const std::uint64_t cube = static_cast<std::uint64_t>(f.a_size()) *
                             static_cast<std::uint64_t>(f.a_size()) *
                             static_cast<std::uint64_t>(f.a_size());
  double sum = 0.0;
  std::vector<std::vector<std::uint64_t>> counts_by_b(
      static_cast<std::size_t>(f.b_size()));
  for (Symbol a3 = 0; a3 < f.a_size(); ++a3) {
    const SlicePairTable table(f, a3);
    for (auto& counts : counts_by_b) counts.clear();
    for (std::size_t v = 0; v < table.side1.classes.size(); ++v)
      for (std::size_t w = 0; w < table.side2.classes.size(); ++w)
        counts_by_b[static_cast<std::size_t>(table.value[v][w])].push_back(
            table.pair_size(v, w));
    for (const auto& counts : counts_by_b) {
      if (counts.empty()) continue;
      std::uint64_t slice_total = 0;
      for (std::uint64_t c : counts) slice_total += c;
      const double weight =
          static_cast<double>(slice_total) / static_cast<double>(cube);
      sum += weight * entropy_of_counts(counts, slice_total, z_size);
    }
  }
  return sum;
}

// Bound on R31 + R32: entropy, in base |A|, of the class distribution of the
// x3 partition. A relay pair that cannot reconstruct the class would force a
// decoding error for some message pair.
inline double r3_sum_bound(const DemandFunction& f) {
  const Partition p = x3_partition(f);
  std::vector<std::uint64_t> sizes;
  sizes.reserve(p.classes.size());
  for (const auto& cls : p.classes) sizes.push_back(cls.size());
  return entropy_of_counts(sizes, static_cast<std::uint64_t>(f.a_size()),
                           f.a_size());
}

// Expected-length bound for the best non-singular code of a source with
// entropy h (base z_size): h - 2 log(h + z). May be negative, in which case
// it is vacuous; it is reported as-is, never clamped.
inline double ns_code_length_lower_bound(double h, int z_size) {
  detail::check_base(z_size);
  if (h < 0) throw ValidationError("ns_code_length_lower_bound: negative entropy");
  return h - 2.0 * std::log(h + static_cast<double>(z_size)) /
                 std::log(static_cast<double>(z_size));
}

// Exact expected length of the best non-singular code: sort the weights in
// non-increasing order and hand out all z strings of length 1, then all z^2
// strings of length 2, and so on. The empty string is excluded.
inline Rational best_ns_code_expected_length(const Pmf& p, int z_size) {
  detail::check_base(z_size);
  std::vector<Rational> weights = p.weights();
  std::sort(weights.begin(), weights.end(), std::greater<>());
  Rational expected = 0;
  std::uint64_t length = 1;
  BigInt remaining_at_length = z_size;
  for (const Rational& w : weights) {
    if (remaining_at_length == 0) {
      ++length;
      remaining_at_length = BigInt(1);
      for (std::uint64_t i = 0; i < length; ++i) remaining_at_length *= z_size;
    }
    expected += w * length;
    --remaining_at_length;
  }
  return expected;
}

// Assembles the full outer bound. All bounds are stated in the large-block
// limit: the epsilon slack of the rate definition and the logarithmic
// correction of the non-singular-code bound vanish per instance and are
// omitted.
inline RateBoundReport rate_report(const DemandFunction& f, int z_size) {
  detail::check_base(z_size);
  RateBoundReport r;
  r.a_size = f.a_size();
  r.b_size = f.b_size();
  r.z_size = z_size;
  r.gamma_1 = gamma(f, 1, z_size);
  r.gamma_2 = gamma(f, 2, z_size);
  r.alpha = alpha(f, z_size);
  r.h_f = entropy(function_pmf(f), z_size);
  r.r3_sum_lb = r3_sum_bound(f);
  const double log_z_a =
      std::log(static_cast<double>(f.a_size())) / std::log(static_cast<double>(z_size));
  r.r1_lb = r.gamma_1 / log_z_a;
  r.r2_lb = r.gamma_2 / log_z_a;
  r.sum_rate_avg_lb = (r.alpha + r.h_f) / (2.0 * log_z_a);
  r.note = "asymptotic form: epsilon slack and log-length correction terms omitted";
  return r;
}

}  // namespace zefc
