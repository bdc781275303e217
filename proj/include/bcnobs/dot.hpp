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

#ifndef BCNOBS_DOT_HPP
#define BCNOBS_DOT_HPP

#include <bcnobs/automata.hpp>
#include <bcnobs/pair_graph.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace bcnobs {

namespace detail {
inline std::string join_inputs(const std::vector<InputIdx>& us) {
  std::string out;
  for (auto u : us) {
    if (!out.empty()) out += ',';
    out += std::to_string(to_int(u));
  }
  return out;
}
}  // namespace detail

/// Pair graph as DOT. Nodes are labelled "ij" and emitted in sorted order;
/// edge labels list the inputs of the weight.
inline std::string emit_dot(const PairGraph& g, const std::string& name = "pair_graph") {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  os << "  node [shape=circle];\n";
  for (const auto& v : g.vertices()) os << "  \"" << v.label() << "\";\n";
  for (const auto& [ends, weight] : g.edges()) {
    os << "  \"" << ends.first.label() << "\" -> \"" << ends.second.label() << "\" [label=\""
       << detail::join_inputs(weight) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

/// Automaton as DOT: final states double-circled, a point node `__start`
/// with an arrow into the initial state, subset states labelled by their
/// comma-joined pair labels. States are emitted sorted by payload.
inline std::string emit_dot(const Dfa& a, const std::string& name = "dfa") {
  std::vector<Dfa::state_id> order(a.state_count());
  for (Dfa::state_id s = 0; s < order.size(); ++s) order[s] = s;
  std::sort(order.begin(), order.end(),
            [&](auto l, auto r) { return a.payload(l) < a.payload(r); });

  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  os << "  __start [shape=point];\n";
  for (auto s : order) {
    os << "  \"" << a.state_label(s) << "\"";
    if (a.is_final(s)) os << " [shape=doublecircle]";
    os << ";\n";
  }
  os << "  __start -> \"" << a.state_label(a.initial()) << "\";\n";
  for (auto s : order) {
    std::map<std::vector<PairVertex>, std::pair<Dfa::state_id, std::vector<InputIdx>>> out;
    for (index_t u = 1; u <= a.alphabet_size(); ++u) {
      if (auto t = a.next(s, InputIdx{u})) {
        auto& slot = out[a.payload(*t)];
        slot.first = *t;
        slot.second.push_back(InputIdx{u});
      }
    }
    for (const auto& [payload, edge] : out) {
      os << "  \"" << a.state_label(s) << "\" -> \"" << a.state_label(edge.first)
         << "\" [label=\"" << detail::join_inputs(edge.second) << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace bcnobs

#endif  // BCNOBS_DOT_HPP
