#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "zefc/errors.hpp"
#include "zefc/rational.hpp"

namespace zefc {

// Probability mass function with exact rational weights. Weights must be
// non-negative and sum to exactly one; zero entries are allowed.
class Pmf {
 public:
  explicit Pmf(std::vector<Rational> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw ValidationError("pmf: no weights");
    Rational sum = 0;
    for (const Rational& w : weights_) {
      if (w < 0) throw ValidationError("pmf: negative weight");
      sum += w;
    }
    if (sum != 1) throw ValidationError("pmf: weights do not sum to 1");
  }

  Pmf(std::initializer_list<Rational> weights)
      : Pmf(std::vector<Rational>(weights)) {}

  // Normalizes a vector of non-negative integer counts by its sum.
  static Pmf from_counts(const std::vector<std::uint64_t>& counts) {
    BigInt total = 0;
    for (std::uint64_t c : counts) total += c;
    if (total == 0) throw ValidationError("pmf: all counts are zero");
    std::vector<Rational> w;
    w.reserve(counts.size());
    for (std::uint64_t c : counts) w.emplace_back(BigInt(c), total);
    return Pmf(std::move(w));
  }

  std::size_t size() const { return weights_.size(); }
  const Rational& operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<Rational>& weights() const { return weights_; }

  bool operator==(const Pmf& other) const = default;

 private:
  std::vector<Rational> weights_;
};

}  // namespace zefc
