#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "zefc/errors.hpp"
#include "zefc/pmf.hpp"

namespace zefc {

// A symbol is an index into a finite alphabet {0, ..., n-1}.
using Symbol = int;

// The function table f(x1, x2, x3) the terminal must compute, stored densely
// in row-major (x1, x2, x3) order. Both message symbols and function values
// are alphabet indices. A valid table is not constant in any argument.
class DemandFunction {
 public:
  DemandFunction(int a_size, int b_size, std::vector<Symbol> table,
                 std::string name = "")
      : a_size_(a_size),
        b_size_(b_size),
        table_(std::move(table)),
        name_(std::move(name)) {
    validate();
  }

  int a_size() const { return a_size_; }
  int b_size() const { return b_size_; }
  const std::string& name() const { return name_; }
  const std::vector<Symbol>& table() const { return table_; }

  Symbol operator()(Symbol x1, Symbol x2, Symbol x3) const {
    return table_[static_cast<std::size_t>((x1 * a_size_ + x2) * a_size_ +
                                            x3)];
  }

  bool operator==(const DemandFunction& other) const {
    return a_size_ == other.a_size_ && b_size_ == other.b_size_ &&
           table_ == other.table_ && name_ == other.name_;
  }

 private:
  void validate() {
    if (a_size_ < 2) throw ValidationError("demand function: a_size must be > 1");
    if (b_size_ < 2) throw ValidationError("demand function: b_size must be > 1");
    const std::size_t want = static_cast<std::size_t>(a_size_) * a_size_ * a_size_;
    if (table_.size() != want)
      throw ValidationError("demand function: table has " +
                            std::to_string(table_.size()) + " entries, expected " +
                            std::to_string(want));
    for (Symbol b : table_)
      if (b < 0 || b >= b_size_)
        throw ValidationError("demand function: table entry " +
                              std::to_string(b) + " out of range [0, " +
                              std::to_string(b_size_) + ")");
    for (int u = 1; u <= 3; ++u)
      if (constant_in_argument(u))
        throw ValidationError("demand function: constant in argument " +
                              std::to_string(u));
  }

  bool constant_in_argument(int u) const {
    for (Symbol x1 = 0; x1 < a_size_; ++x1)
      for (Symbol x2 = 0; x2 < a_size_; ++x2)
        for (Symbol x3 = 0; x3 < a_size_; ++x3) {
          const Symbol ref = u == 1   ? (*this)(0, x2, x3)
                             : u == 2 ? (*this)(x1, 0, x3)
                                      : (*this)(x1, x2, 0);
          if ((*this)(x1, x2, x3) != ref) return false;
        }
    return true;
  }

  int a_size_;
  int b_size_;
  std::vector<Symbol> table_;
  std::string name_;
};

// Parses the demand-function file format: a JSON object with integer fields
// `a_size`, `b_size`, a flat `table` array of length a_size^3 indexed by
// x1*a_size^2 + x2*a_size + x3, and an optional `name` string.
inline DemandFunction load_demand_function(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("demand function: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("demand function: not a JSON object");
  if (!doc.contains("a_size") || !doc["a_size"].is_number_integer())
    throw ParseError("demand function: missing integer field a_size");
  if (!doc.contains("b_size") || !doc["b_size"].is_number_integer())
    throw ParseError("demand function: missing integer field b_size");
  if (!doc.contains("table") || !doc["table"].is_array())
    throw ParseError("demand function: missing array field table");
  std::vector<Symbol> table;
  table.reserve(doc["table"].size());
  for (const auto& entry : doc["table"]) {
    if (!entry.is_number_integer())
      throw ParseError("demand function: non-integer table entry");
    table.push_back(entry.get<Symbol>());
  }
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string())
      throw ParseError("demand function: name must be a string");
    name = doc["name"].get<std::string>();
  }
  return DemandFunction(doc["a_size"].get<int>(), doc["b_size"].get<int>(),
                        std::move(table), std::move(name));
}

// Emits the canonical file form of a demand function. load(emit(f)) == f.
inline std::string emit_demand_function(const DemandFunction& f) {
  nlohmann::json doc;
  doc["a_size"] = f.a_size();
  doc["b_size"] = f.b_size();
  doc["table"] = f.table();
  if (!f.name().empty()) doc["name"] = f.name();
  return doc.dump();
}

// Number of message tuples (x1, x2, x3) mapped to function value b.
inline std::uint64_t preimage_count(const DemandFunction& f, Symbol b) {
  if (b < 0 || b >= f.b_size())
    throw ValidationError("preimage_count: b out of range");
  std::uint64_t n = 0;
  for (Symbol v : f.table()) n += (v == b);
  return n;
}

// Distribution of the function value under uniform i.i.d. messages.
inline Pmf function_pmf(const DemandFunction& f) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(f.b_size()), 0);
  for (Symbol v : f.table()) ++counts[static_cast<std::size_t>(v)];
  return Pmf::from_counts(counts);
}

}  // namespace zefc
