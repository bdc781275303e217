// Copyright 2026 The bcnobs Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BCNOBS_IO_HPP
#define BCNOBS_IO_HPP

// BCN document format (JSON). Matrix form:
//
//   { "name": "bcn5", "n": 2, "m": 1, "q": 1,
//     "ordering": "state-first",
//     "L": [1,1,2,1,2,4,1,1], "H": [1,2,2,2] }
//
// "ordering" is mandatory whenever "L" is present: "state-first" means
// column (i-1)M + j holds the successor of state i under input j,
// "input-first" means column (j-1)N + i does.
//
// Truth-table form replaces "L"/"H" (and "ordering"):
//
//   "truth_table": {
//     "transition": { "10|1": "01", ... },   // state bits | input bits -> next state bits
//     "output":     { "10": "0", ... }        // state bits -> output bits
//   }
//
// Bits are written most significant variable first, '1' for true.

#include <bcnobs/bcn.hpp>

#include "json.hpp"

#include <bit>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bcnobs {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TruthTableBlock {
  std::map<Valuation, Valuation> transition;  // (state bits ++ input bits) -> next state bits
  std::map<Valuation, Valuation> output;      // state bits -> output bits

  friend bool operator==(const TruthTableBlock&, const TruthTableBlock&) = default;
};

struct BcnDocument {
  std::optional<std::string> name;
  unsigned n = 0;  // state nodes, N = 2^n
  unsigned m = 0;  // input nodes, M = 2^m
  unsigned q = 0;  // output nodes, Q = 2^q
  std::optional<ColumnOrder> ordering;
  std::vector<index_t> l_columns;
  std::vector<index_t> h_columns;
  std::optional<TruthTableBlock> truth_table;

  friend bool operator==(const BcnDocument&, const BcnDocument&) = default;
};

namespace detail {

inline std::string_view ordering_name(ColumnOrder o) {
  return o == ColumnOrder::StateFirst ? "state-first" : "input-first";
}

inline Valuation parse_bits(const std::string& s, std::size_t width, const char* what) {
  if (s.size() != width) {
    throw ParseError(std::string(what) + " '" + s + "' should have " + std::to_string(width) +
                     " bits");
  }
  Valuation v;
  for (char c : s) {
    if (c != '0' && c != '1') throw ParseError(std::string(what) + " '" + s + "' is not binary");
    v.push_back(c == '1');
  }
  return v;
}

inline std::string format_bits(const Valuation& v) {
  std::string s;
  for (bool b : v) s += b ? '1' : '0';
  return s;
}

inline unsigned node_count(const nlohmann::json& j, const char* lower, const char* upper) {
  if (j.contains(lower)) {
    const auto& f = j.at(lower);
    if (!f.is_number_unsigned() || f.get<unsigned>() > 20) {
      throw ParseError(std::string("field '") + lower + "' must be an integer in [0, 20]");
    }
    return f.get<unsigned>();
  }
  if (j.contains(upper)) {
    const auto& f = j.at(upper);
    if (!f.is_number_unsigned()) throw ParseError(std::string("field '") + upper + "' must be a positive integer");
    const auto v = f.get<std::uint64_t>();
    if (v == 0 || !std::has_single_bit(v) || v > (1u << 20)) {
      throw ParseError(std::string("dimension ") + upper + " = " + std::to_string(v) +
                       " is not a power of two");
    }
    return static_cast<unsigned>(std::countr_zero(v));
  }
  throw ParseError(std::string("missing field '") + lower + "'");
}

inline std::vector<index_t> columns(const nlohmann::json& j, const char* key, std::size_t len,
                                    index_t range) {
  const auto& a = j.at(key);
  if (!a.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  if (a.size() != len) {
    throw ParseError(std::string("field '") + key + "' has length " + std::to_string(a.size()) +
                     ", expected " + std::to_string(len));
  }
  std::vector<index_t> out;
  for (const auto& e : a) {
    if (!e.is_number_integer() || e.get<long long>() < 1 || e.get<long long>() > range) {
      throw ParseError(std::string("field '") + key + "' entry " + e.dump() + " outside [1, " +
                       std::to_string(range) + "]");
    }
    out.push_back(e.get<index_t>());
  }
  return out;
}

inline BcnDocument read_document(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("document must be a JSON object");

  BcnDocument doc;
  if (j.contains("name")) doc.name = j.at("name").get<std::string>();
  doc.n = detail::node_count(j, "n", "N");
  doc.m = detail::node_count(j, "m", "M");
  doc.q = detail::node_count(j, "q", "Q");
  if (doc.n == 0) throw ParseError("a network needs at least one state node");
  const index_t big_n = index_t{1} << doc.n;
  const index_t big_m = index_t{1} << doc.m;
  const index_t big_q = index_t{1} << doc.q;

  const bool has_matrix = j.contains("L") || j.contains("H");
  const bool has_table = j.contains("truth_table");
  if (has_matrix == has_table) {
    throw ParseError("document needs exactly one of L/H columns or a truth_table block");
  }

  if (has_matrix) {
    if (!j.contains("L") || !j.contains("H")) throw ParseError("both L and H are required");
    if (!j.contains("ordering")) {
      throw ParseError("missing field 'ordering' (state-first or input-first)");
    }
    const auto ord = j.at("ordering").get<std::string>();
    if (ord == "state-first") {
      doc.ordering = ColumnOrder::StateFirst;
    } else if (ord == "input-first") {
      doc.ordering = ColumnOrder::InputFirst;
    } else {
      throw ParseError("unknown ordering '" + ord + "'");
    }
    doc.l_columns = detail::columns(j, "L", std::size_t{big_n} * big_m, big_n);
    doc.h_columns = detail::columns(j, "H", big_n, big_q);
    return doc;
  }

  const auto& tt = j.at("truth_table");
  if (!tt.contains("transition") || !tt.contains("output")) {
    throw ParseError("truth_table needs 'transition' and 'output'");
  }
  TruthTableBlock block;
  for (const auto& [key, val] : tt.at("transition").items()) {
    const auto bar = key.find('|');
    if (bar == std::string::npos) throw ParseError("transition key '" + key + "' lacks '|'");
    auto in = detail::parse_bits(key.substr(0, bar), doc.n, "state valuation");
    const auto u = detail::parse_bits(key.substr(bar + 1), doc.m, "input valuation");
    in.insert(in.end(), u.begin(), u.end());
    block.transition[in] = detail::parse_bits(val.get<std::string>(), doc.n, "next-state valuation");
  }
  for (const auto& [key, val] : tt.at("output").items()) {
    block.output[detail::parse_bits(key, doc.n, "state valuation")] =
        detail::parse_bits(val.get<std::string>(), doc.q, "output valuation");
  }
  doc.truth_table = std::move(block);
  return doc;
}

}  // namespace detail

inline BcnDocument parse_document(std::string_view text) {
  try {
    return detail::read_document(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

inline Bcn to_bcn(const BcnDocument& doc) {
  const index_t big_m = index_t{1} << doc.m;
  try {
    if (doc.truth_table) {
      // Input valuations are state bits followed by input bits, so the
      // compiled matrix is in state-first order.
      auto l = from_truth_table(doc.n + doc.m, doc.n, doc.truth_table->transition);
      auto h = doc.q == 0 ? LogicalMatrix(1, std::vector<index_t>(index_t{1} << doc.n, 1))
                          : from_truth_table(doc.n, doc.q, doc.truth_table->output);
      return Bcn(std::move(l), std::move(h), big_m, ColumnOrder::StateFirst);
    }
    if (!doc.ordering) throw ParseError("missing field 'ordering'");
    return Bcn(LogicalMatrix(index_t{1} << doc.n, doc.l_columns),
               LogicalMatrix(index_t{1} << doc.q, doc.h_columns), big_m, *doc.ordering);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
}

inline Bcn parse_bcn(std::string_view text) { return to_bcn(parse_document(text)); }

inline Bcn load_bcn(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_bcn(ss.str());
}

inline nlohmann::json to_json(const BcnDocument& doc) {
  nlohmann::json j;
  if (doc.name) j["name"] = *doc.name;
  j["n"] = doc.n;
  j["m"] = doc.m;
  j["q"] = doc.q;
  if (doc.truth_table) {
    nlohmann::json tr = nlohmann::json::object();
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [in, next] : doc.truth_table->transition) {
      const Valuation x(in.begin(), in.begin() + doc.n);
      const Valuation u(in.begin() + doc.n, in.end());
      tr[detail::format_bits(x) + "|" + detail::format_bits(u)] = detail::format_bits(next);
    }
    for (const auto& [x, y] : doc.truth_table->output) out[detail::format_bits(x)] = detail::format_bits(y);
    j["truth_table"] = {{"transition", tr}, {"output", out}};
    return j;
  }
  if (doc.ordering) j["ordering"] = detail::ordering_name(*doc.ordering);
  j["L"] = doc.l_columns;
  j["H"] = doc.h_columns;
  return j;
}

inline std::string serialize_document(const BcnDocument& doc) { return to_json(doc).dump(2); }

/// Matrix-form document for a network, in the requested column order.
inline BcnDocument to_document(const Bcn& bcn, ColumnOrder order = ColumnOrder::StateFirst,
                               std::optional<std::string> name = std::nullopt) {
  BcnDocument doc;
  doc.name = std::move(name);
  doc.n = static_cast<unsigned>(std::countr_zero(bcn.state_count()));
  doc.m = static_cast<unsigned>(std::countr_zero(bcn.input_count()));
  doc.q = static_cast<unsigned>(std::countr_zero(bcn.output_count()));
  doc.ordering = order;
  doc.l_columns = reorder_columns(bcn.transition(), bcn.state_count(), bcn.input_count(),
                                  ColumnOrder::InputFirst, order)
                      .col_index();
  doc.h_columns = bcn.output_matrix().col_index();
  return doc;
}

}  // namespace bcnobs

#endif  // BCNOBS_IO_HPP
