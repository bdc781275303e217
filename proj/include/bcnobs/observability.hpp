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

#ifndef BCNOBS_OBSERVABILITY_HPP
#define BCNOBS_OBSERVABILITY_HPP

#include <bcnobs/automata.hpp>

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bcnobs {

/// The four observability notions:
///   I   - every initial state is determined by some input word;
///   II  - every confusable pair is distinguished by some input word;
///   III - one input word distinguishes every confusable pair;
///   IV  - every infinite input sequence distinguishes every confusable pair.
/// "Confusable" means distinct states with equal initial output.
enum class ObservabilityType { I, II, III, IV };

inline constexpr std::array<ObservabilityType, 4> kAllTypes{
    ObservabilityType::I, ObservabilityType::II, ObservabilityType::III, ObservabilityType::IV};

inline std::string_view to_string(ObservabilityType t) {
  switch (t) {
    case ObservabilityType::I: return "I";
    case ObservabilityType::II: return "II";
    case ObservabilityType::III: return "III";
    case ObservabilityType::IV: return "IV";
  }
  return "?";
}

inline ObservabilityType parse_type(std::string_view s) {
  for (auto t : kAllTypes)
    if (to_string(t) == s) return t;
  throw std::invalid_argument("unknown observability type '" + std::string(s) + "'");
}

struct AutomatonStats {
  std::string label;
  std::size_t states = 0;
  bool complete = false;
};

/// Result of one decider. Which witness fields are populated depends on
/// the type:
///   I   - state_witnesses / trivially_determined, or offending_state;
///   II  - pair_witnesses, or offending_pair;
///   III - universal_word when observable;
///   IV  - lasso (with offending_pair) when not observable.
struct Verdict {
  ObservabilityType type = ObservabilityType::I;
  bool observable = false;

  std::map<StateIdx, Word> state_witnesses;
  std::vector<StateIdx> trivially_determined;
  std::optional<StateIdx> offending_state;

  std::map<PairVertex, Word> pair_witnesses;
  std::optional<PairVertex> offending_pair;

  std::optional<Word> universal_word;
  std::optional<Lasso> lasso;

  std::vector<AutomatonStats> automata;
};

/// Non-diagonal vertices containing state x: the initial payload of A_x.
inline VertexSet determining_payload(const PairGraph& g, StateIdx x) {
  VertexSet out;
  for (const auto& v : g.vertices())
    if (!v.diagonal() && v.contains(x)) out.insert(v);
  return out;
}

inline std::string state_automaton_label(StateIdx x) { return "A_x" + std::to_string(to_int(x)); }
inline std::string pair_automaton_label(const PairVertex& v) { return "A_" + v.label(); }

inline Verdict decide_I(const Bcn& bcn, const PairGraph& g) {
  Verdict v;
  v.type = ObservabilityType::I;
  v.observable = true;
  for (index_t i = 1; i <= bcn.state_count(); ++i) {
    const StateIdx x{i};
    const auto s0 = determining_payload(g, x);
    if (s0.empty()) {
      v.trivially_determined.push_back(x);
      continue;
    }
    const auto dfa = subset_automaton(g, s0);
    const bool complete = is_complete(dfa);
    v.automata.push_back({state_automaton_label(x), dfa.state_count(), complete});
    if (complete) {
      v.observable = false;
      v.offending_state = x;
      v.state_witnesses.clear();
      return v;
    }
    v.state_witnesses.emplace(x, *shortest_undefined_word(dfa));
  }
  return v;
}

inline Verdict decide_II(const Bcn&, const PairGraph& g) {
  Verdict v;
  v.type = ObservabilityType::II;
  v.observable = true;
  for (const auto& pair : g.non_diagonal_vertices()) {
    const auto dfa = vertex_automaton(g, pair);
    const bool complete = is_complete(dfa);
    v.automata.push_back({pair_automaton_label(pair), dfa.state_count(), complete});
    if (complete) {
      v.observable = false;
      v.offending_pair = pair;
      v.pair_witnesses.clear();
      return v;
    }
    v.pair_witnesses.emplace(pair, *shortest_undefined_word(dfa));
  }
  return v;
}

inline Verdict decide_III(const Bcn&, const PairGraph& g) {
  Verdict v;
  v.type = ObservabilityType::III;
  const auto nd = g.non_diagonal_vertices();
  if (nd.empty()) {
    v.observable = true;
    return v;
  }
  const auto dfa = subset_automaton(g, nd);
  const bool complete = is_complete(dfa);
  v.automata.push_back({"A_Vn", dfa.state_count(), complete});
  v.observable = !complete;
  if (v.observable) v.universal_word = shortest_undefined_word(dfa);
  return v;
}

inline Verdict decide_IV(const Bcn&, const PairGraph& g) {
  Verdict v;
  v.type = ObservabilityType::IV;
  const auto nd = g.non_diagonal_vertices();
  v.lasso = has_reachable_cycle(g, nd);
  v.observable = !v.lasso.has_value();
  if (v.lasso) v.offending_pair = v.lasso->source;
  return v;
}

inline Verdict decide(const Bcn& bcn, const PairGraph& g, ObservabilityType t) {
  switch (t) {
    case ObservabilityType::I: return decide_I(bcn, g);
    case ObservabilityType::II: return decide_II(bcn, g);
    case ObservabilityType::III: return decide_III(bcn, g);
    case ObservabilityType::IV: return decide_IV(bcn, g);
  }
  throw std::logic_error("unreachable");
}

inline Verdict decide(const Bcn& bcn, ObservabilityType t) {
  return decide(bcn, PairGraph::build(bcn), t);
}
inline Verdict decide_I(const Bcn& bcn) { return decide_I(bcn, PairGraph::build(bcn)); }
inline Verdict decide_II(const Bcn& bcn) { return decide_II(bcn, PairGraph::build(bcn)); }
inline Verdict decide_III(const Bcn& bcn) { return decide_III(bcn, PairGraph::build(bcn)); }
inline Verdict decide_IV(const Bcn& bcn) { return decide_IV(bcn, PairGraph::build(bcn)); }

constexpr std::size_t type_slot(ObservabilityType t) noexcept { return static_cast<std::size_t>(t); }

/// Verdicts of all four deciders plus the implication check
/// IV => III => I => II (and the transitive IV => I, IV => II, III => II).
struct ImplicationReport {
  std::array<Verdict, 4> verdicts;
  /// holds[a][b]: "observable in sense a implies observable in sense b" is
  /// satisfied by this network. Only meaningful where expected[a][b].
  std::array<std::array<bool, 4>, 4> holds{};
  bool violation = false;

  const Verdict& operator[](ObservabilityType t) const { return verdicts[type_slot(t)]; }

  static constexpr bool expected(ObservabilityType stronger, ObservabilityType weaker) {
    // Rank along the chain IV > III > I > II.
    auto rank = [](ObservabilityType t) {
      switch (t) {
        case ObservabilityType::IV: return 3;
        case ObservabilityType::III: return 2;
        case ObservabilityType::I: return 1;
        case ObservabilityType::II: return 0;
      }
      return -1;
    };
    return rank(stronger) >= rank(weaker);
  }
};

inline ImplicationReport implication_matrix(const Bcn& bcn) {
  const auto g = PairGraph::build(bcn);
  ImplicationReport r;
  for (auto t : kAllTypes) r.verdicts[type_slot(t)] = decide(bcn, g, t);
  for (auto a : kAllTypes)
    for (auto b : kAllTypes) {
      const bool ok = !r[a].observable || r[b].observable;
      r.holds[type_slot(a)][type_slot(b)] = ok;
      if (ImplicationReport::expected(a, b) && !ok) r.violation = true;
    }
  return r;
}

/// Horizon at which exhaustive enumeration decides each type exactly:
/// N_nd for II and IV, and one more than the largest BFS depth of the
/// relevant subset automata for I and III (no shortest undefined word is
/// longer than that).
/// Never less than 1.
inline std::size_t exact_horizon(const PairGraph& g, ObservabilityType t) {
  std::size_t h = 1;
  switch (t) {
    case ObservabilityType::II:
    case ObservabilityType::IV:
      h = std::max(h, g.non_diagonal_vertices().size());
      break;
    case ObservabilityType::I: {
      StateIdx last{0};
      for (const auto& v : g.vertices()) last = std::max({last, v.hi});
      for (index_t i = 1; i <= to_int(last); ++i) {
        const auto s0 = determining_payload(g, StateIdx{i});
        if (!s0.empty()) h = std::max(h, depth(subset_automaton(g, s0)) + 1);
      }
      break;
    }
    case ObservabilityType::III: {
      const auto nd = g.non_diagonal_vertices();
      if (!nd.empty()) h = std::max(h, depth(subset_automaton(g, nd)) + 1);
      break;
    }
  }
  return h;
}

}  // namespace bcnobs

#endif  // BCNOBS_OBSERVABILITY_HPP
