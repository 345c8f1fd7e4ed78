#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "fixtures.hpp"
#include "zefc/equivalence.hpp"
#include "zefc/errors.hpp"

using namespace zefc;
using testing::arith_fixture;
using testing::gf2_fixture;
using testing::gf3_fixture;

namespace {

using Classes = std::vector<std::vector<Symbol>>;

// Independent partition construction by pairwise comparison, no key grouping.
Classes pairwise_partition(const DemandFunction& f, int u, Symbol a3) {
  const int n = f.a_size();
  const auto equivalent = [&](Symbol x, Symbol y) {
    for (Symbol other = 0; other < n; ++other) {
      const Symbol fx = u == 1 ? f(x, other, a3) : f(other, x, a3);
      const Symbol fy = u == 1 ? f(y, other, a3) : f(other, y, a3);
      if (fx != fy) return false;
    }
    return true;
  };
  Classes classes;
  for (Symbol x = 0; x < n; ++x) {
    bool placed = false;
    for (auto& cls : classes)
      if (equivalent(cls.front(), x)) {
        cls.push_back(x);
        placed = true;
        break;
      }
    if (!placed) classes.push_back({x});
  }
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  return classes;
}

// Direct block partition of A^k under the componentwise relation.
std::vector<std::uint64_t> direct_block_class_sizes(const DemandFunction& f, int u,
                                                    const std::vector<Symbol>& a3_vec) {
  const int n = f.a_size();
  const int k = static_cast<int>(a3_vec.size());
  std::vector<Partition> parts;
  for (Symbol a3 = 0; a3 < n; ++a3) parts.push_back(scalar_partition(f, u, a3));
  std::map<std::vector<int>, std::uint64_t> tally;
  std::vector<Symbol> x(static_cast<std::size_t>(k), 0);
  for (;;) {
    std::vector<int> key(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
      key[static_cast<std::size_t>(i)] =
          parts[static_cast<std::size_t>(a3_vec[static_cast<std::size_t>(i)])].class_of(
              x[static_cast<std::size_t>(i)]);
    ++tally[key];
    int i = k - 1;
    while (i >= 0 && ++x[static_cast<std::size_t>(i)] == n) x[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
  }
  std::vector<std::uint64_t> sizes;
  for (const auto& [key, count] : tally) sizes.push_back(count);
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

DemandFunction random_function(std::mt19937_64& rng, int a_size, int b_size) {
  std::uniform_int_distribution<Symbol> sym(0, b_size - 1);
  for (;;) {
    std::vector<Symbol> table(static_cast<std::size_t>(a_size) * a_size * a_size);
    for (Symbol& v : table) v = sym(rng);
    try {
      return DemandFunction(a_size, b_size, table);
    } catch (const ValidationError&) {
    }
  }
}

}  // namespace

TEST_CASE("scalar partitions of the ternary fixture") {
  const DemandFunction f = gf3_fixture();
  CHECK(scalar_partition(f, 1, 0).classes == Classes{{0}, {1}, {2}});
  CHECK(scalar_partition(f, 1, 1).classes == Classes{{0, 1}, {2}});
  CHECK(scalar_partition(f, 1, 2).classes == Classes{{1, 2}, {0}});
  CHECK(scalar_partition(f, 2, 0).classes == Classes{{0}, {1}, {2}});
  CHECK(scalar_partition(f, 2, 1).classes == Classes{{1, 2}, {0}});
  CHECK(scalar_partition(f, 2, 2).classes == Classes{{0, 1}, {2}});
}

TEST_CASE("scalar partitions of the binary fixtures") {
  const DemandFunction arith = arith_fixture();
  CHECK(scalar_partition(arith, 1, 0).classes == Classes{{0}, {1}});
  CHECK(scalar_partition(arith, 2, 1).classes == Classes{{0}, {1}});
  const DemandFunction gf2 = gf2_fixture();
  CHECK(v_count(gf2, 1, 0) == 2);
  CHECK(v_count(gf2, 2, 1) == 2);
}

TEST_CASE("class counts of the ternary fixture") {
  const DemandFunction f = gf3_fixture();
  for (int u : {1, 2}) {
    CHECK(v_count(f, u, 0) == 3);
    CHECK(v_count(f, u, 1) == 2);
    CHECK(v_count(f, u, 2) == 2);
  }
}

TEST_CASE("d_vector sizes and totals") {
  const DemandFunction f = gf3_fixture();
  CHECK(d_vector(f, 1, 1) == ClassSizeVector{{2, 1}, 3});
  CHECK(d_vector(f, 1, 0) == ClassSizeVector{{1, 1, 1}, 3});
  CHECK(d_vector(arith_fixture(), 1, 0) == ClassSizeVector{{1, 1}, 2});
  CHECK(d_vector(arith_fixture(), 2, 1) == ClassSizeVector{{1, 1}, 2});
}

TEST_CASE("x3 partition separates distinguishable relay values") {
  // Pairwise comparison of the three slices: all distinct.
  CHECK(x3_partition(gf3_fixture()).classes == Classes{{0}, {1}, {2}});
  CHECK(x3_partition(gf2_fixture()).classes == Classes{{0}, {1}});
  // A function ignoring x3 never reaches x3_partition: construction rejects it.
  std::vector<Symbol> product(8);
  for (Symbol x1 = 0; x1 < 2; ++x1)
    for (Symbol x2 = 0; x2 < 2; ++x2)
      for (Symbol x3 = 0; x3 < 2; ++x3)
        product[static_cast<std::size_t>(x1 * 4 + x2 * 2 + x3)] = x1 * x2;
  CHECK_THROWS_AS(DemandFunction(2, 2, product), ValidationError);
}

TEST_CASE("block_d_vector is the sorted product multiset") {
  const DemandFunction f = gf3_fixture();
  const std::vector<Symbol> ones{1, 1};
  // Products of (2,1) x (2,1), sorted.
  CHECK(block_d_vector(f, 1, ones) == ClassSizeVector{{4, 2, 2, 1}, 9});

  const std::vector<Symbol> mixed{0, 1};
  CHECK(block_d_vector(arith_fixture(), 1, mixed) == ClassSizeVector{{1, 1, 1, 1}, 4});
}

TEST_CASE("block_d_vector degenerates to d_vector at k=1") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const DemandFunction f = random_function(rng, 3, 3);
    for (int u : {1, 2})
      for (Symbol a3 = 0; a3 < f.a_size(); ++a3) {
        const std::vector<Symbol> block{a3};
        CHECK(block_d_vector(f, u, block) == d_vector(f, u, a3));
      }
  }
}

TEST_CASE("block_d_vector matches direct enumeration of block classes") {
  std::mt19937_64 rng(5);
  std::vector<DemandFunction> functions{gf3_fixture(), arith_fixture(), gf2_fixture()};
  for (int trial = 0; trial < 5; ++trial) functions.push_back(random_function(rng, 3, 2));

  for (const DemandFunction& f : functions)
    for (int u : {1, 2})
      for (int k = 1; k <= 3; ++k) {
        std::uniform_int_distribution<Symbol> sym(0, f.a_size() - 1);
        std::vector<Symbol> a3_vec(static_cast<std::size_t>(k));
        for (Symbol& a : a3_vec) a = sym(rng);
        const ClassSizeVector block = block_d_vector(f, u, a3_vec);
        CHECK(block.sizes == direct_block_class_sizes(f, u, a3_vec));
      }
}

TEST_CASE("partitions agree with pairwise construction on random functions") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const DemandFunction f = random_function(rng, 2 + trial % 4, 2 + trial % 3);
    for (int u : {1, 2})
      for (Symbol a3 = 0; a3 < f.a_size(); ++a3) {
        const Partition p = scalar_partition(f, u, a3);
        CHECK(p.classes == pairwise_partition(f, u, a3));
        std::uint64_t covered = 0;
        for (const auto& cls : p.classes) covered += cls.size();
        CHECK(covered == static_cast<std::uint64_t>(f.a_size()));
        CHECK(p.class_count() >= 1);
        CHECK(p.class_count() <= f.a_size());
      }
  }
}

TEST_CASE("argument-symmetric functions have matching side partitions") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<Symbol> sym(0, 2);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Symbol> table(27);
    for (Symbol x1 = 0; x1 < 3; ++x1)
      for (Symbol x2 = 0; x2 <= x1; ++x2)
        for (Symbol x3 = 0; x3 < 3; ++x3) {
          const Symbol v = sym(rng);
          table[static_cast<std::size_t>(x1 * 9 + x2 * 3 + x3)] = v;
          table[static_cast<std::size_t>(x2 * 9 + x1 * 3 + x3)] = v;
        }
    try {
      const DemandFunction f(3, 3, table);
      for (Symbol a3 = 0; a3 < 3; ++a3)
        CHECK(scalar_partition(f, 1, a3) == scalar_partition(f, 2, a3));
    } catch (const ValidationError&) {
      // constant draws are skipped
    }
  }
}

TEST_CASE("block_d_vector refuses oversized blocks") {
  const std::vector<Symbol> block(12, 0);
  CHECK_THROWS_AS(block_d_vector(gf3_fixture(), 1, block, 1000), ResourceCapError);
}
