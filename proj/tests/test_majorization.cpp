#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "zefc/majorization.hpp"

using namespace zefc;

namespace {

std::vector<Rational> random_pmf(std::mt19937_64& rng, int max_support = 16) {
  std::uniform_int_distribution<int> support(1, max_support);
  std::uniform_int_distribution<int> count(0, 20);
  const int n = support(rng);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
  std::uint64_t total = 0;
  for (auto& c : counts) {
    c = static_cast<std::uint64_t>(count(rng));
    total += c;
  }
  if (total == 0) {
    counts[0] = 1;
    total = 1;
  }
  std::vector<Rational> w;
  for (std::uint64_t c : counts) w.emplace_back(BigInt(c), BigInt(total));
  return w;
}

// One transfer from a strictly larger entry to a strictly smaller one keeps
// the total fixed and produces a vector majorized by the input.
std::vector<Rational> robin_hood(std::mt19937_64& rng, std::vector<Rational> v,
                                 int transfers) {
  std::uniform_int_distribution<std::size_t> pick(0, v.size() - 1);
  std::uniform_int_distribution<int> denom(2, 5);
  for (int t = 0; t < transfers; ++t) {
    const std::size_t i = pick(rng), j = pick(rng);
    if (v[i] <= v[j]) continue;
    const Rational delta = (v[i] - v[j]) / denom(rng);
    v[i] -= delta;
    v[j] += delta;
  }
  return v;
}

}  // namespace

TEST_CASE("majorization on small vectors") {
  CHECK(is_majorized({Rational(1, 2), Rational(1, 2)},
                     {Rational(1, 4), Rational(3, 4)}));
  CHECK_FALSE(is_majorized({Rational(7, 10), Rational(3, 10)},
                           {Rational(3, 5), Rational(2, 5)}));
  // Unequal totals never compare.
  CHECK_FALSE(is_majorized({Rational(1, 2)}, {Rational(1, 4), Rational(3, 4)}));
}

TEST_CASE("majorization is reflexive and zero-padding insensitive") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const std::vector<Rational> p = random_pmf(rng);
    CHECK(is_majorized(p, p));
    std::vector<Rational> padded = p;
    padded.push_back(Rational(0));
    padded.push_back(Rational(0));
    CHECK(is_majorized(p, padded));
    CHECK(is_majorized(padded, p));
  }
}

TEST_CASE("mutual majorization is sorted equality") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> p = random_pmf(rng, 6);
    std::vector<Rational> q = random_pmf(rng, 6);
    const bool mutual = is_majorized(p, q) && is_majorized(q, p);
    const std::size_t n = std::max(p.size(), q.size());
    p.resize(n, Rational(0));
    q.resize(n, Rational(0));
    std::sort(p.begin(), p.end());
    std::sort(q.begin(), q.end());
    CHECK(mutual == (p == q));
  }
}

TEST_CASE("entropy of small distributions") {
  CHECK(entropy(Pmf{Rational(1, 2), Rational(1, 2)}, 2) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(entropy(Pmf{Rational(1, 4), Rational(1, 2), Rational(1, 4)}, 2) ==
        doctest::Approx(1.5).epsilon(1e-12));
  // 1 - (2/3) log_3 2, frozen from direct evaluation.
  CHECK(entropy(Pmf{Rational(2, 3), Rational(1, 3)}, 3) ==
        doctest::Approx(0.579380164285695).epsilon(1e-12));
  CHECK_THROWS_AS(entropy(Pmf{Rational(1)}, 1), ValidationError);
}

TEST_CASE("entropy ignores zero atoms and permutations") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> p = random_pmf(rng);
    const double h = entropy(p, 2);
    std::shuffle(p.begin(), p.end(), rng);
    p.push_back(Rational(0));
    CHECK(entropy(p, 2) == doctest::Approx(h).epsilon(1e-12));
  }
}

TEST_CASE("entropy_lower_bound evaluates the class-size distribution") {
  CHECK(entropy_lower_bound(ClassSizeVector{{2, 1}, 3}, 3) ==
        doctest::Approx(1.0 - (2.0 / 3.0) * std::log(2.0) / std::log(3.0)).epsilon(1e-12));
  CHECK(entropy_lower_bound(ClassSizeVector{{1, 1, 1, 1, 1}, 5}, 5) ==
        doctest::Approx(1.0).epsilon(1e-12));
  // Frozen from direct evaluation of (4/9)log(9/4) + (4/9)log(9/2) + (1/9)log 9.
  CHECK(entropy_lower_bound(ClassSizeVector{{4, 2, 2, 1}, 9}, 2) ==
        doctest::Approx(1.836591668108979).epsilon(1e-12));
}

TEST_CASE("entropy respects the majorization order (weak form)") {
  std::mt19937_64 rng(37);
  int compared = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::vector<Rational> q = random_pmf(rng);
    const std::vector<Rational> p = robin_hood(rng, q, 1 + trial % 8);
    REQUIRE(is_majorized(p, q));
    CHECK(entropy(p, 2) >= entropy(q, 2) - 1e-12);
    ++compared;
  }
  CHECK(compared == 500);
}

TEST_CASE("entropy_lower_bound is a true minimum over sampled valid pmfs") {
  std::mt19937_64 rng(41);
  const std::vector<ClassSizeVector> ds{{{4, 2, 2, 1}, 9},
                                        {{2, 1}, 3},
                                        {{8, 4, 2, 2, 1, 1}, 18},
                                        {{5, 5, 5, 1}, 16}};
  for (const ClassSizeVector& d : ds) {
    std::vector<Rational> base;
    for (std::uint64_t s : d.sizes) base.emplace_back(BigInt(s), BigInt(d.total));
    const double bound = entropy_lower_bound(d, 2);
    for (int trial = 0; trial < 100; ++trial) {
      const std::vector<Rational> p = robin_hood(rng, base, 1 + trial % 10);
      REQUIRE(is_majorized(p, base));
      CHECK(entropy(p, 2) >= bound - 1e-12);
    }
  }
}
