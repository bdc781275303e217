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

#ifndef BCNOBS_REPORT_HPP
#define BCNOBS_REPORT_HPP

// JSON verdict report, schema "bcnobs.report/1". See docs/report-schema.md.

#include <bcnobs/observability.hpp>
#include <bcnobs/oracle.hpp>

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bcnobs {

inline constexpr const char* kReportSchema = "bcnobs.report/1";

struct TypeResult {
  Verdict verdict;
  double millis = 0.0;
  std::optional<CrossCheck> check;
  /// Set instead of `check` when enumeration would exceed the budget.
  std::optional<std::string> check_skipped;
};

struct VerdictReport {
  std::optional<std::string> name;
  index_t n_states = 0;
  index_t n_inputs = 0;
  index_t n_outputs = 0;
  std::size_t n_nd = 0;
  std::vector<TypeResult> results;
};

inline nlohmann::json word_json(const Word& w) {
  auto j = nlohmann::json::array();
  for (auto u : w) j.push_back(to_int(u));
  return j;
}

inline nlohmann::json pair_json(const PairVertex& v) {
  return nlohmann::json::array({to_int(v.lo), to_int(v.hi)});
}

inline nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j;
  j["observable"] = v.observable;
  switch (v.type) {
    case ObservabilityType::I: {
      auto ws = nlohmann::json::array();
      for (const auto& [x, w] : v.state_witnesses)
        ws.push_back({{"state", to_int(x)}, {"word", word_json(w)}});
      j["witnesses"] = ws;
      auto triv = nlohmann::json::array();
      for (auto x : v.trivially_determined) triv.push_back(to_int(x));
      j["trivially_determined"] = triv;
      j["offending_state"] =
          v.offending_state ? nlohmann::json(to_int(*v.offending_state)) : nlohmann::json();
      break;
    }
    case ObservabilityType::II: {
      auto ws = nlohmann::json::array();
      for (const auto& [p, w] : v.pair_witnesses)
        ws.push_back({{"pair", pair_json(p)}, {"word", word_json(w)}});
      j["witnesses"] = ws;
      j["offending_pair"] = v.offending_pair ? pair_json(*v.offending_pair) : nlohmann::json();
      break;
    }
    case ObservabilityType::III:
      j["word"] = v.universal_word ? word_json(*v.universal_word) : nlohmann::json();
      break;
    case ObservabilityType::IV:
      if (v.lasso) {
        j["lasso"] = {{"pair", pair_json(v.lasso->source)},
                      {"prefix", word_json(v.lasso->prefix)},
                      {"cycle", word_json(v.lasso->cycle)}};
      } else {
        j["lasso"] = nullptr;
      }
      break;
  }
  auto autos = nlohmann::json::array();
  for (const auto& a : v.automata)
    autos.push_back({{"label", a.label}, {"states", a.states}, {"complete", a.complete}});
  j["automata"] = autos;
  return j;
}

inline nlohmann::json to_json(const VerdictReport& r) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["name"] = r.name ? nlohmann::json(*r.name) : nlohmann::json();
  j["N"] = r.n_states;
  j["M"] = r.n_inputs;
  j["Q"] = r.n_outputs;
  j["n_nd"] = r.n_nd;
  nlohmann::json verdicts = nlohmann::json::object();
  for (const auto& t : r.results) {
    auto vj = to_json(t.verdict);
    vj["time_ms"] = t.millis;
    if (t.check) {
      vj["oracle"] = {{"horizon", t.check->oracle.horizon},
                      {"observable", t.check->oracle.observable},
                      {"exact", t.check->oracle.exact},
                      {"agrees", t.check->agrees},
                      {"witnesses_verified", t.check->witnesses_verified},
                      {"offending_confirmed", t.check->offending_confirmed}};
    } else if (t.check_skipped) {
      vj["oracle"] = {{"skipped", *t.check_skipped}, {"exact", false}};
    }
    verdicts[std::string(to_string(t.verdict.type))] = vj;
  }
  j["verdicts"] = verdicts;
  return j;
}

}  // namespace bcnobs

#endif  // BCNOBS_REPORT_HPP
