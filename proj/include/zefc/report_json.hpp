#pragma once

#include <cstdint>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "zefc/bounds.hpp"
#include "zefc/coding_schemes.hpp"
#include "zefc/demand_function.hpp"
#include "zefc/equivalence.hpp"
#include "zefc/pair_structure.hpp"

// Deterministic JSON report rendering. Keys come out sorted (nlohmann keeps
// objects ordered), and every floating-point value is rounded to 12
// significant digits before it is stored so that identical inputs produce
// byte-identical output.
namespace zefc {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchemaVersion = "v1";

inline double round_to_significant(double value, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
  return std::strtod(buf, nullptr);
}

inline std::string rational_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

// FNV-1a 64-bit over the canonical emitted form of the input.
inline std::string input_digest_hex(const DemandFunction& f) {
  const std::string canonical = emit_demand_function(f);
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : canonical) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

inline nlohmann::json to_json(const RateBoundReport& r) {
  nlohmann::json j;
  j["a_size"] = r.a_size;
  j["b_size"] = r.b_size;
  j["z_size"] = r.z_size;
  j["r3_sum_lb"] = round_to_significant(r.r3_sum_lb);
  j["r1_lb"] = round_to_significant(r.r1_lb);
  j["r2_lb"] = round_to_significant(r.r2_lb);
  j["sum_rate_avg_lb"] = round_to_significant(r.sum_rate_avg_lb);
  j["gamma_1"] = round_to_significant(r.gamma_1);
  j["gamma_2"] = round_to_significant(r.gamma_2);
  j["alpha"] = round_to_significant(r.alpha);
  j["h_f"] = round_to_significant(r.h_f);
  j["note"] = r.note;
  return j;
}

inline nlohmann::json to_json(const ExpectedLengthReport& r) {
  nlohmann::json j;
  j["k"] = r.k;
  j["a_size"] = r.a_size;
  j["z_size"] = r.z_size;
  j["e_len_31"] = rational_to_string(r.e_len_31);
  j["e_len_32"] = rational_to_string(r.e_len_32);
  j["e_len_1"] = rational_to_string(r.e_len_1);
  j["e_len_2"] = rational_to_string(r.e_len_2);
  j["r31"] = round_to_significant(r.r31);
  j["r32"] = round_to_significant(r.r32);
  j["r1"] = round_to_significant(r.r1);
  j["r2"] = round_to_significant(r.r2);
  j["max_based_rate"] = round_to_significant(r.max_based_rate);
  return j;
}

inline nlohmann::json to_json(const Partition& p) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& cls : p.classes) classes.push_back(cls);
  return classes;
}

inline nlohmann::json to_json(const PairIndexSet& set) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const PairEntry& e : set.pairs) {
    nlohmann::json p;
    p["v"] = e.v;
    p["w"] = e.w;
    p["h"] = e.h;
    pairs.push_back(p);
  }
  nlohmann::json j;
  j["a3"] = set.a3;
  j["b"] = set.b;
  j["pairs"] = pairs;
  return j;
}

inline nlohmann::json make_envelope(const std::string& command,
                                    const std::string& input_digest,
                                    nlohmann::json payload) {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  j["input_digest"] = input_digest;
  j["payload"] = std::move(payload);
  return j;
}

inline std::string render_report(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace zefc
