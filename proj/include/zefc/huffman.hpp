#pragma once

#include <cstdint>
#include <queue>
#include <tuple>
#include <vector>

#include "zefc/errors.hpp"
#include "zefc/pmf.hpp"
#include "zefc/rational.hpp"

namespace zefc {

// Optimal prefix-free binary code for an exact pmf. Ties in the merge order
// are broken toward the node created earliest (leaves first, in input
// order), which makes the codebook deterministic.
class HuffmanCode {
 public:
  explicit HuffmanCode(const Pmf& p) {
    const std::size_t n = p.size();
    nodes_.resize(n);
    for (std::size_t i = 0; i < n; ++i) nodes_[i].symbol = static_cast<int>(i);
    if (n == 1) {
      root_ = 0;
      codewords_.resize(1);  // a known single symbol costs no bits
      return;
    }

    using Entry = std::tuple<Rational, int, int>;  // (prob, tie index, node)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (std::size_t i = 0; i < n; ++i)
      heap.emplace(p[i], static_cast<int>(i), static_cast<int>(i));
    int next_index = static_cast<int>(n);
    while (heap.size() > 1) {
      auto [p0, i0, n0] = heap.top();
      heap.pop();
      auto [p1, i1, n1] = heap.top();
      heap.pop();
      Node parent;
      parent.child[0] = n0;
      parent.child[1] = n1;
      nodes_.push_back(parent);
      heap.emplace(p0 + p1, next_index, static_cast<int>(nodes_.size()) - 1);
      ++next_index;
    }
    root_ = std::get<2>(heap.top());

    codewords_.resize(n);
    std::vector<int> path;
    assign_codewords(root_, path);
  }

  const std::vector<std::vector<int>>& codewords() const { return codewords_; }

  // Decodes one symbol starting at `pos`, advancing `pos` past the codeword.
  int decode(const std::vector<int>& bits, std::size_t& pos) const {
    int node = root_;
    while (nodes_[static_cast<std::size_t>(node)].symbol < 0) {
      if (pos >= bits.size())
        throw ValidationError("huffman decode: truncated codeword");
      const int bit = bits[pos++];
      if (bit != 0 && bit != 1)
        throw ValidationError("huffman decode: non-binary symbol");
      node = nodes_[static_cast<std::size_t>(node)].child[static_cast<std::size_t>(bit)];
    }
    return nodes_[static_cast<std::size_t>(node)].symbol;
  }

  // Exact sum_i 2^{-len_i}; equals 1 for any complete code on >= 2 symbols.
  Rational kraft_sum() const {
    Rational sum = 0;
    for (const auto& cw : codewords_) {
      BigInt den = 1;
      den <<= cw.size();
      sum += Rational(BigInt(1), den);
    }
    return sum;
  }

 private:
  struct Node {
    int child[2] = {-1, -1};
    int symbol = -1;
  };

  void assign_codewords(int node, std::vector<int>& path) {
    const Node& nd = nodes_[static_cast<std::size_t>(node)];
    if (nd.symbol >= 0) {
      codewords_[static_cast<std::size_t>(nd.symbol)] = path;
      return;
    }
    for (int bit = 0; bit < 2; ++bit) {
      path.push_back(bit);
      assign_codewords(nd.child[bit], path);
      path.pop_back();
    }
  }

  std::vector<Node> nodes_;
  std::vector<std::vector<int>> codewords_;
  int root_ = 0;
};

// Expected codeword length of the optimal prefix-free binary code, exact.
inline Rational huffman_expected_length(const Pmf& p, int z_size = 2) {
  if (z_size != 2)
    throw ValidationError("huffman_expected_length: only binary codes supported");
  const HuffmanCode code(p);
  Rational expected = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    expected += p[i] * code.codewords()[i].size();
  return expected;
}

}  // namespace zefc
