#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <vector>

#include "zefc/demand_function.hpp"
#include "zefc/errors.hpp"
#include "zefc/huffman.hpp"
#include "zefc/pmf.hpp"
#include "zefc/rational.hpp"

namespace zefc {

// A string of codeword symbols over the alphabet {0, ..., z_size-1}.
using SymbolString = std::vector<int>;
// A block of k message symbols over {0, ..., a_size-1}.
using MessageBlock = std::vector<Symbol>;

// Executable variable-length code on the three-source relay network: the
// relay source feeds both neighbors, each neighbor encodes its own message
// together with what it received, and the terminal decodes the function
// block from the two edge strings.
struct SourceNetworkCode {
  int k = 1;
  int z_size = 2;
  std::function<SymbolString(const MessageBlock&)> enc_31;
  std::function<SymbolString(const MessageBlock&)> enc_32;
  std::function<SymbolString(const MessageBlock&, const SymbolString&)> enc_1;
  std::function<SymbolString(const MessageBlock&, const SymbolString&)> enc_2;
  std::function<std::vector<Symbol>(const SymbolString&, const SymbolString&)> dec;
};

// Exact per-edge expected codeword lengths over uniform i.i.d. messages and
// the rate tuple they imply. `max_based_rate` is the scalar
// k log|A| / (log|Z| max_e E len_e), the single-number convention that
// normalizes by the busiest edge.
struct ExpectedLengthReport {
  int k = 1;
  int a_size = 2;
  int z_size = 2;
  Rational e_len_31, e_len_32, e_len_1, e_len_2;
  double r31 = 0, r32 = 0, r1 = 0, r2 = 0;
  double max_based_rate = 0;
};

namespace detail {

inline BigInt int_pow(int base, int exp) {
  BigInt v = 1;
  for (int i = 0; i < exp; ++i) v *= base;
  return v;
}

inline void fill_rates(ExpectedLengthReport& r) {
  const double scale = std::log(static_cast<double>(r.z_size)) /
                       (static_cast<double>(r.k) * std::log(static_cast<double>(r.a_size)));
  r.r31 = to_double(r.e_len_31) * scale;
  r.r32 = to_double(r.e_len_32) * scale;
  r.r1 = to_double(r.e_len_1) * scale;
  r.r2 = to_double(r.e_len_2) * scale;
  const Rational longest =
      std::max({r.e_len_31, r.e_len_32, r.e_len_1, r.e_len_2});
  r.max_based_rate = longest == 0 ? 0.0 : 1.0 / (to_double(longest) * scale);
}

// Enumerates A^k blocks in lexicographic order.
inline bool next_block(MessageBlock& t, int radix) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < radix) return true;
    t[i] = 0;
  }
  return false;
}

inline void check_sweep(std::uint64_t states, std::uint64_t cap, const char* what) {
  if (states > cap) throw ResourceCapError(std::string(what) + ": sweep exceeds cap");
}

inline std::uint64_t checked_pow(int base, int exp, std::uint64_t cap, const char* what) {
  std::uint64_t v = 1;
  for (int i = 0; i < exp; ++i) {
    v *= static_cast<std::uint64_t>(base);
    check_sweep(v, cap, what);
  }
  return v;
}

}  // namespace detail

// True iff the decoder reproduces the componentwise function block on every
// message tuple. Exhaustive over |A|^{3k} tuples.
inline bool check_zero_error(const SourceNetworkCode& code, const DemandFunction& f,
                             std::uint64_t cap = 10'000'000) {
  const int A = f.a_size();
  detail::checked_pow(A, 3 * code.k, cap, "check_zero_error");

  MessageBlock x3(static_cast<std::size_t>(code.k), 0);
  do {
    const SymbolString z31 = code.enc_31(x3);
    const SymbolString z32 = code.enc_32(x3);
    MessageBlock x1(static_cast<std::size_t>(code.k), 0);
    do {
      const SymbolString z1 = code.enc_1(x1, z31);
      MessageBlock x2(static_cast<std::size_t>(code.k), 0);
      do {
        const SymbolString z2 = code.enc_2(x2, z32);
        const std::vector<Symbol> decoded = code.dec(z1, z2);
        if (decoded.size() != static_cast<std::size_t>(code.k)) return false;
        for (int i = 0; i < code.k; ++i)
          if (decoded[static_cast<std::size_t>(i)] !=
              f(x1[static_cast<std::size_t>(i)], x2[static_cast<std::size_t>(i)],
                x3[static_cast<std::size_t>(i)]))
            return false;
      } while (detail::next_block(x2, A));
    } while (detail::next_block(x1, A));
  } while (detail::next_block(x3, A));
  return true;
}

// Exact expected string length per edge over the uniform product measure.
// Should only be read for codes that passed the zero-error check.
inline ExpectedLengthReport expected_lengths(const SourceNetworkCode& code,
                                             const DemandFunction& f,
                                             std::uint64_t cap = 10'000'000) {
  const int A = f.a_size();
  detail::checked_pow(A, 2 * code.k, cap, "expected_lengths");

  BigInt len31 = 0, len32 = 0, len1 = 0, len2 = 0;
  MessageBlock x3(static_cast<std::size_t>(code.k), 0);
  do {
    const SymbolString z31 = code.enc_31(x3);
    const SymbolString z32 = code.enc_32(x3);
    len31 += z31.size();
    len32 += z32.size();
    MessageBlock xu(static_cast<std::size_t>(code.k), 0);
    do {
      len1 += code.enc_1(xu, z31).size();
      len2 += code.enc_2(xu, z32).size();
    } while (detail::next_block(xu, A));
  } while (detail::next_block(x3, A));

  const BigInt blocks = detail::int_pow(A, code.k);
  ExpectedLengthReport r;
  r.k = code.k;
  r.a_size = A;
  r.z_size = code.z_size;
  r.e_len_31 = Rational(len31, blocks);
  r.e_len_32 = Rational(len32, blocks);
  r.e_len_1 = Rational(len1, blocks * blocks);
  r.e_len_2 = Rational(len2, blocks * blocks);
  detail::fill_rates(r);
  return r;
}

// --- binary-sum scheme -----------------------------------------------------
//
// For the mod-2 sum of three bits the relay splits its block: the first c
// components go to side 1 and the rest to side 2. Each side adds what it
// received into its own message componentwise and the terminal adds the two
// edge strings. Achieves (c/k, 1-c/k, 1, 1), which meets the outer bound.

inline SourceNetworkCode gf2_scheme(int k, int c) {
  if (k < 1) throw ValidationError("gf2_scheme: k must be >= 1");
  if (c < 0 || c > k) throw ValidationError("gf2_scheme: need 0 <= c <= k");
  SourceNetworkCode code;
  code.k = k;
  code.z_size = 2;
  code.enc_31 = [c](const MessageBlock& x3) {
    return SymbolString(x3.begin(), x3.begin() + c);
  };
  code.enc_32 = [c](const MessageBlock& x3) {
    return SymbolString(x3.begin() + c, x3.end());
  };
  code.enc_1 = [c](const MessageBlock& x1, const SymbolString& z31) {
    SymbolString z(x1.begin(), x1.end());
    for (int i = 0; i < c; ++i)
      z[static_cast<std::size_t>(i)] ^= z31[static_cast<std::size_t>(i)];
    return z;
  };
  code.enc_2 = [k, c](const MessageBlock& x2, const SymbolString& z32) {
    SymbolString z(x2.begin(), x2.end());
    for (int i = c; i < k; ++i)
      z[static_cast<std::size_t>(i)] ^= z32[static_cast<std::size_t>(i - c)];
    return z;
  };
  code.dec = [](const SymbolString& z1, const SymbolString& z2) {
    if (z1.size() != z2.size())
      throw ValidationError("gf2 decode: edge string length mismatch");
    std::vector<Symbol> out(z1.size());
    for (std::size_t i = 0; i < z1.size(); ++i) out[i] = z1[i] ^ z2[i];
    return out;
  };
  return code;
}

inline ExpectedLengthReport gf2_scheme_expected_lengths(int k, int c) {
  if (k < 1 || c < 0 || c > k) throw ValidationError("gf2_scheme: bad parameters");
  ExpectedLengthReport r;
  r.k = k;
  r.a_size = 2;
  r.z_size = 2;
  r.e_len_31 = c;
  r.e_len_32 = k - c;
  r.e_len_1 = k;
  r.e_len_2 = k;
  detail::fill_rates(r);
  return r;
}

// Every edge string of the scheme has fixed length and the decode identity
// x1 + x3 + x2 + x3 = x1 + x2 + x3 holds componentwise over GF(2); checking
// it on all scalar triples for both split cases proves zero error at any k.
inline bool verify_gf2_scheme_structure() {
  for (int side = 0; side < 2; ++side)  // component handled via edge 31 or 32
    for (Symbol x1 = 0; x1 < 2; ++x1)
      for (Symbol x2 = 0; x2 < 2; ++x2)
        for (Symbol x3 = 0; x3 < 2; ++x3) {
          const Symbol z1 = side == 0 ? (x1 ^ x3) : x1;
          const Symbol z2 = side == 0 ? x2 : (x2 ^ x3);
          if ((z1 ^ z2) != (x1 ^ x2 ^ x3)) return false;
        }
  return true;
}

// --- arithmetic-sum scheme -------------------------------------------------
//
// For the integer sum of three bits the relay forwards its block to both
// sides. Side 1 sends the componentwise sums x1 + x3 of the first half-block
// compressed as one Huffman supersymbol (the sums are biased: 0,1,2 with
// probabilities 1/4, 1/2, 1/4) followed by its raw second half; side 2
// mirrors this. The terminal adds the missing raw message into each
// decompressed half.

namespace detail {

struct ArithCodebook {
  int k = 0;
  int half = 0;
  std::shared_ptr<const HuffmanCode> huffman;

  std::size_t index_of(const std::vector<int>& sums) const {
    std::size_t idx = 0;
    for (int s : sums) idx = idx * 3 + static_cast<std::size_t>(s);
    return idx;
  }
  std::vector<int> sums_of(std::size_t idx) const {
    std::vector<int> sums(static_cast<std::size_t>(half));
    for (int i = half; i-- > 0;) {
      sums[static_cast<std::size_t>(i)] = static_cast<int>(idx % 3);
      idx /= 3;
    }
    return sums;
  }
};

inline Pmf half_block_sum_pmf(int half) {
  const Rational base[3] = {Rational(1, 4), Rational(1, 2), Rational(1, 4)};
  std::vector<Rational> probs{Rational(1)};
  for (int i = 0; i < half; ++i) {
    std::vector<Rational> next;
    next.reserve(probs.size() * 3);
    for (const Rational& p : probs)
      for (const Rational& b : base) next.push_back(p * b);
    probs = std::move(next);
  }
  return Pmf(std::move(probs));
}

inline ArithCodebook make_arith_codebook(int k, std::uint64_t cap) {
  if (k < 2 || k % 2 != 0)
    throw ValidationError("arith_scheme: k must be even and >= 2");
  const int half = k / 2;
  checked_pow(3, half, cap, "arith_scheme codebook");
  ArithCodebook cb;
  cb.k = k;
  cb.half = half;
  cb.huffman = std::make_shared<HuffmanCode>(half_block_sum_pmf(half));
  return cb;
}

}  // namespace detail

inline SourceNetworkCode arith_scheme(int k, std::uint64_t cap = 10'000'000) {
  const detail::ArithCodebook cb = detail::make_arith_codebook(k, cap);
  SourceNetworkCode code;
  code.k = k;
  code.z_size = 2;
  code.enc_31 = [](const MessageBlock& x3) {
    return SymbolString(x3.begin(), x3.end());
  };
  code.enc_32 = code.enc_31;
  code.enc_1 = [cb](const MessageBlock& x1, const SymbolString& z31) {
    std::vector<int> sums(static_cast<std::size_t>(cb.half));
    for (int i = 0; i < cb.half; ++i)
      sums[static_cast<std::size_t>(i)] =
          x1[static_cast<std::size_t>(i)] + z31[static_cast<std::size_t>(i)];
    SymbolString z = cb.huffman->codewords()[cb.index_of(sums)];
    z.insert(z.end(), x1.begin() + cb.half, x1.end());
    return z;
  };
  code.enc_2 = [cb](const MessageBlock& x2, const SymbolString& z32) {
    SymbolString z(x2.begin(), x2.begin() + cb.half);
    std::vector<int> sums(static_cast<std::size_t>(cb.half));
    for (int i = 0; i < cb.half; ++i)
      sums[static_cast<std::size_t>(i)] = x2[static_cast<std::size_t>(i + cb.half)] +
                                          z32[static_cast<std::size_t>(i + cb.half)];
    const SymbolString& cw = cb.huffman->codewords()[cb.index_of(sums)];
    z.insert(z.end(), cw.begin(), cw.end());
    return z;
  };
  code.dec = [cb](const SymbolString& z1, const SymbolString& z2) {
    std::size_t pos = 0;
    const std::vector<int> first_sums =
        cb.sums_of(static_cast<std::size_t>(cb.huffman->decode(z1, pos)));
    if (z1.size() - pos != static_cast<std::size_t>(cb.half))
      throw ValidationError("arith decode: bad raw tail on edge 1");
    const SymbolString x1_second(z1.begin() + static_cast<std::ptrdiff_t>(pos), z1.end());

    const SymbolString x2_first(z2.begin(), z2.begin() + cb.half);
    std::size_t pos2 = static_cast<std::size_t>(cb.half);
    const std::vector<int> second_sums =
        cb.sums_of(static_cast<std::size_t>(cb.huffman->decode(z2, pos2)));
    if (pos2 != z2.size())
      throw ValidationError("arith decode: trailing symbols on edge 2");

    std::vector<Symbol> out(static_cast<std::size_t>(cb.k));
    for (int i = 0; i < cb.half; ++i) {
      out[static_cast<std::size_t>(i)] =
          first_sums[static_cast<std::size_t>(i)] + x2_first[static_cast<std::size_t>(i)];
      out[static_cast<std::size_t>(i + cb.half)] =
          x1_second[static_cast<std::size_t>(i)] + second_sums[static_cast<std::size_t>(i)];
    }
    return out;
  };
  return code;
}

inline ExpectedLengthReport arith_scheme_expected_lengths(int k,
                                                          std::uint64_t cap = 10'000'000) {
  const detail::ArithCodebook cb = detail::make_arith_codebook(k, cap);
  const Rational e_huffman = huffman_expected_length(detail::half_block_sum_pmf(cb.half));
  ExpectedLengthReport r;
  r.k = k;
  r.a_size = 2;
  r.z_size = 2;
  r.e_len_31 = k;
  r.e_len_32 = k;
  r.e_len_1 = e_huffman + cb.half;
  r.e_len_2 = r.e_len_1;
  detail::fill_rates(r);
  return r;
}

// Zero-error proof path that does not sweep the 2^{3k} message space:
// the Huffman layer must round-trip every supersymbol and satisfy Kraft with
// equality, and the terminal's reconstruction identity must hold on every
// scalar triple for both halves. A random end-to-end sample guards the glue.
inline bool verify_arith_scheme_structure(int k, std::uint64_t cap = 10'000'000) {
  const detail::ArithCodebook cb = detail::make_arith_codebook(k, cap);
  const std::size_t outcomes = static_cast<std::size_t>(
      detail::checked_pow(3, cb.half, cap, "arith_scheme verify"));

  for (std::size_t idx = 0; idx < outcomes; ++idx) {
    const SymbolString& cw = cb.huffman->codewords()[idx];
    std::size_t pos = 0;
    if (static_cast<std::size_t>(cb.huffman->decode(cw, pos)) != idx) return false;
    if (pos != cw.size()) return false;
  }
  if (cb.huffman->kraft_sum() != 1) return false;

  for (Symbol x1 = 0; x1 < 2; ++x1)
    for (Symbol x2 = 0; x2 < 2; ++x2)
      for (Symbol x3 = 0; x3 < 2; ++x3) {
        if ((x1 + x3) + x2 != x1 + x2 + x3) return false;  // first half
        if (x1 + (x2 + x3) != x1 + x2 + x3) return false;  // second half
      }

  const SourceNetworkCode code = arith_scheme(k, cap);
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 1000; ++trial) {
    MessageBlock x1(static_cast<std::size_t>(k)), x2(static_cast<std::size_t>(k)),
        x3(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      x1[static_cast<std::size_t>(i)] = bit(rng);
      x2[static_cast<std::size_t>(i)] = bit(rng);
      x3[static_cast<std::size_t>(i)] = bit(rng);
    }
    const std::vector<Symbol> decoded =
        code.dec(code.enc_1(x1, code.enc_31(x3)), code.enc_2(x2, code.enc_32(x3)));
    for (int i = 0; i < k; ++i)
      if (decoded[static_cast<std::size_t>(i)] !=
          x1[static_cast<std::size_t>(i)] + x2[static_cast<std::size_t>(i)] +
              x3[static_cast<std::size_t>(i)])
        return false;
  }
  return true;
}

}  // namespace zefc
