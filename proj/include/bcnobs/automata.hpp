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

#ifndef BCNOBS_AUTOMATA_HPP
#define BCNOBS_AUTOMATA_HPP

#include <bcnobs/pair_graph.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bcnobs {

/// Deterministic partial automaton over the input alphabet [1, M].
///
/// Every state carries a payload of pair vertices: a single vertex for
/// vertex automata, a nonempty vertex set for subset automata. State 0 is
/// initial and all states are reachable from it by construction.
class Dfa {
 public:
  using state_id = std::size_t;
  static constexpr state_id npos = static_cast<state_id>(-1);

  enum class Kind { Vertex, Subset };

  Dfa(Kind kind, index_t alphabet_size) : kind_(kind), m_(alphabet_size) {}

  Kind kind() const noexcept { return kind_; }
  index_t alphabet_size() const noexcept { return m_; }
  std::size_t state_count() const noexcept { return payloads_.size(); }
  state_id initial() const noexcept { return 0; }
  bool is_final(state_id s) const { return finals_.at(s); }

  /// Sorted vertex list carried by state s.
  const std::vector<PairVertex>& payload(state_id s) const { return payloads_.at(s); }

  std::optional<state_id> next(state_id s, InputIdx u) const {
    if (to_int(u) < 1 || to_int(u) > m_) {
      throw std::out_of_range("letter " + std::to_string(to_int(u)) + " outside alphabet [1, " +
                              std::to_string(m_) + "]");
    }
    const auto t = delta_.at(s * m_ + (to_int(u) - 1));
    if (t == npos) return std::nullopt;
    return t;
  }

  /// Finds the state whose payload equals `payload`, if any.
  std::optional<state_id> find(const std::vector<PairVertex>& payload) const {
    auto it = by_payload_.find(payload);
    if (it == by_payload_.end()) return std::nullopt;
    return it->second;
  }

  /// Adds a state (hash-consed on payload); returns its id.
  state_id add_state(std::vector<PairVertex> payload, bool final = true) {
    std::sort(payload.begin(), payload.end());
    if (auto hit = find(payload)) return *hit;
    const state_id id = payloads_.size();
    by_payload_.emplace(payload, id);
    payloads_.push_back(std::move(payload));
    finals_.push_back(final);
    delta_.resize(payloads_.size() * m_, npos);
    return id;
  }

  void set_transition(state_id s, InputIdx u, state_id t) {
    delta_.at(s * m_ + (to_int(u) - 1)) = t;
  }

  std::string state_label(state_id s) const {
    std::string out;
    for (const auto& v : payload(s)) {
      if (!out.empty()) out += ',';
      out += v.label();
    }
    return out;
  }

 private:
  Kind kind_;
  index_t m_;
  std::vector<std::vector<PairVertex>> payloads_;
  std::map<std::vector<PairVertex>, state_id> by_payload_;
  std::vector<bool> finals_;
  std::vector<state_id> delta_;
};

/// Subset construction over the pair graph starting from payload s0. For a
/// state s and letter j, the successor payload is every vertex reached from
/// some member of s along an edge whose weight contains j; the transition
/// is undefined when that set is empty.
inline Dfa subset_automaton(const PairGraph& g, const VertexSet& s0) {
  if (s0.empty()) throw std::invalid_argument("subset_automaton: initial payload is empty");
  const index_t m = g.input_count();
  Dfa dfa(Dfa::Kind::Subset, m);
  std::vector<std::vector<std::size_t>> members;  // payload as pair-graph ids

  auto intern = [&](std::vector<std::size_t> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<PairVertex> payload;
    payload.reserve(ids.size());
    for (auto id : ids) payload.push_back(g.vertex(id));
    const auto before = dfa.state_count();
    const auto s = dfa.add_state(std::move(payload));
    if (dfa.state_count() != before) members.push_back(std::move(ids));
    return s;
  };

  std::vector<std::size_t> init;
  for (const auto& v : s0) init.push_back(g.id_of(v));
  intern(std::move(init));

  for (Dfa::state_id s = 0; s < dfa.state_count(); ++s) {
    for (index_t j = 1; j <= m; ++j) {
      std::vector<std::size_t> targets;
      for (auto id : members[s]) {
        const auto t = g.successor(id, InputIdx{j});
        if (t != PairGraph::npos) targets.push_back(t);
      }
      if (targets.empty()) continue;
      const auto t = intern(std::move(targets));
      dfa.set_transition(s, InputIdx{j}, t);
    }
  }
  return dfa;
}

/// The reachable part of the pair graph from v0, read as an automaton whose
/// states are single vertices.
inline Dfa vertex_automaton(const PairGraph& g, const PairVertex& v0) {
  const index_t m = g.input_count();
  Dfa dfa(Dfa::Kind::Vertex, m);
  const auto order = g.reachable_ids({v0});
  std::map<std::size_t, Dfa::state_id> state_of;
  for (auto id : order) state_of[id] = dfa.add_state({g.vertex(id)});
  for (auto id : order)
    for (index_t u = 1; u <= m; ++u) {
      const auto t = g.successor(id, InputIdx{u});
      if (t != PairGraph::npos) dfa.set_transition(state_of[id], InputIdx{u}, state_of.at(t));
    }
  return dfa;
}

inline bool is_complete(const Dfa& a) {
  for (Dfa::state_id s = 0; s < a.state_count(); ++s)
    for (index_t u = 1; u <= a.alphabet_size(); ++u)
      if (!a.next(s, InputIdx{u})) return false;
  return true;
}

/// Largest BFS distance from the initial state to a state. Every state has
/// an access word of at most this length, so an undefined transition, if
/// any, is hit by a word of length <= depth + 1.
inline std::size_t depth(const Dfa& a) {
  constexpr auto unseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(a.state_count(), unseen);
  std::queue<Dfa::state_id> work;
  dist[a.initial()] = 0;
  work.push(a.initial());
  std::size_t deepest = 0;
  while (!work.empty()) {
    const auto s = work.front();
    work.pop();
    deepest = std::max(deepest, dist[s]);
    for (index_t u = 1; u <= a.alphabet_size(); ++u) {
      const auto t = a.next(s, InputIdx{u});
      if (t && dist[*t] == unseen) {
        dist[*t] = dist[s] + 1;
        work.push(*t);
      }
    }
  }
  return deepest;
}

/// Shortest word that runs into an undefined transition from the initial
/// state; among those, the lexicographically smallest. Absent iff complete.
inline std::optional<Word> shortest_undefined_word(const Dfa& a) {
  const auto n = a.state_count();
  std::vector<Dfa::state_id> parent(n, Dfa::npos);
  std::vector<InputIdx> via(n, InputIdx{0});
  std::vector<char> seen(n, 0);
  std::queue<Dfa::state_id> work;
  seen[a.initial()] = 1;
  work.push(a.initial());

  auto path_to = [&](Dfa::state_id s) {
    Word w;
    for (; s != a.initial(); s = parent[s]) w.push_back(via[s]);
    std::reverse(w.begin(), w.end());
    return w;
  };

  // FIFO order with ascending letters visits each BFS level in
  // lexicographic order of access words.
  while (!work.empty()) {
    const auto s = work.front();
    work.pop();
    for (index_t u = 1; u <= a.alphabet_size(); ++u) {
      const auto t = a.next(s, InputIdx{u});
      if (!t) {
        Word w = path_to(s);
        w.push_back(InputIdx{u});
        return w;
      }
    }
    for (index_t u = 1; u <= a.alphabet_size(); ++u) {
      const auto t = *a.next(s, InputIdx{u});
      if (!seen[t]) {
        seen[t] = 1;
        parent[t] = s;
        via[t] = InputIdx{u};
        work.push(t);
      }
    }
  }
  return std::nullopt;
}

inline bool accepts(const Dfa& a, const Word& w) {
  Dfa::state_id s = a.initial();
  for (InputIdx u : w) {
    const auto t = a.next(s, u);
    if (!t) return false;
    s = *t;
  }
  return a.is_final(s);
}

/// Input-labelled lasso in the pair graph: from `source`, follow `prefix`
/// to a vertex, then `cycle` returns to that same vertex.
struct Lasso {
  PairVertex source;
  Word prefix;
  Word cycle;
};

/// Looks for a cycle (self-loops included) among the vertices reachable from
/// `sources`. Sources are tried in order; for each, the first reachable vertex
/// in BFS order lying on a cycle is used, with shortest prefix and cycle.
inline std::optional<Lasso> has_reachable_cycle(const PairGraph& g, const VertexSet& sources) {
  const index_t m = g.input_count();
  const auto n = g.vertex_count();

  // BFS from `from`; returns per-vertex (parent, letter) for path recovery.
  auto bfs = [&](std::size_t from, std::vector<std::size_t>& parent, std::vector<InputIdx>& via,
                 std::vector<std::size_t>& order) {
    parent.assign(n, PairGraph::npos);
    via.assign(n, InputIdx{0});
    order.clear();
    std::vector<char> seen(n, 0);
    std::queue<std::size_t> work;
    seen[from] = 1;
    work.push(from);
    while (!work.empty()) {
      const auto id = work.front();
      work.pop();
      order.push_back(id);
      for (index_t u = 1; u <= m; ++u) {
        const auto t = g.successor(id, InputIdx{u});
        if (t != PairGraph::npos && !seen[t]) {
          seen[t] = 1;
          parent[t] = id;
          via[t] = InputIdx{u};
          work.push(t);
        }
      }
    }
  };
  auto path = [](std::size_t from, std::size_t to, const std::vector<std::size_t>& parent,
                 const std::vector<InputIdx>& via) {
    Word w;
    for (auto s = to; s != from; s = parent[s]) w.push_back(via[s]);
    std::reverse(w.begin(), w.end());
    return w;
  };

  std::vector<std::size_t> parent, inner_parent, order, inner_order;
  std::vector<InputIdx> via, inner_via;
  for (const auto& src : sources) {
    const auto sid = g.id_of(src);
    bfs(sid, parent, via, order);
    for (auto w : order) {
      // Shortest closed walk through w: one step to a successor t, then
      // the shortest path from t back to w.
      std::optional<Word> best;
      for (index_t u = 1; u <= m; ++u) {
        const auto t = g.successor(w, InputIdx{u});
        if (t == PairGraph::npos) continue;
        bfs(t, inner_parent, inner_via, inner_order);
        if (t != w && inner_parent[w] == PairGraph::npos) continue;
        Word cyc{InputIdx{u}};
        auto back = path(t, w, inner_parent, inner_via);
        cyc.insert(cyc.end(), back.begin(), back.end());
        if (!best || cyc.size() < best->size()) best = std::move(cyc);
      }
      if (best) return Lasso{src, path(sid, w, parent, via), std::move(*best)};
    }
  }
  return std::nullopt;
}

}  // namespace bcnobs

#endif  // BCNOBS_AUTOMATA_HPP
