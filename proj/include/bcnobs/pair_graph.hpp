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

#ifndef BCNOBS_PAIR_GRAPH_HPP
#define BCNOBS_PAIR_GRAPH_HPP

#include <bcnobs/bcn.hpp>

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bcnobs {

/// Unordered state pair (lo, hi), lo <= hi.
struct PairVertex {
  StateIdx lo;
  StateIdx hi;

  static PairVertex make(StateIdx a, StateIdx b) {
    return to_int(a) <= to_int(b) ? PairVertex{a, b} : PairVertex{b, a};
  }
  static PairVertex make(index_t a, index_t b) { return make(StateIdx{a}, StateIdx{b}); }

  bool diagonal() const noexcept { return lo == hi; }
  bool contains(StateIdx x) const noexcept { return lo == x || hi == x; }

  /// "ij"; states beyond 9 are separated by '-'.
  std::string label() const {
    const auto a = std::to_string(to_int(lo));
    const auto b = std::to_string(to_int(hi));
    return (a.size() == 1 && b.size() == 1) ? a + b : a + "-" + b;
  }

  friend auto operator<=>(const PairVertex&, const PairVertex&) = default;
};

using VertexSet = std::set<PairVertex>;

/// Weighted pair graph: vertices are unordered state pairs with equal
/// output (diagonal included); an input u labels the edge v -> v' iff
/// stepping both components of v under u gives v'.
///
/// Vertices are kept sorted lexicographically; adjacency is stored per
/// (vertex, input) so successors are O(1).
class PairGraph {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  static PairGraph build(const Bcn& bcn) {
    PairGraph g;
    g.m_ = bcn.input_count();
    const index_t n = bcn.state_count();
    for (index_t i = 1; i <= n; ++i)
      for (index_t j = i; j <= n; ++j)
        if (bcn.output(StateIdx{i}) == bcn.output(StateIdx{j}))
          g.vertices_.push_back(PairVertex::make(i, j));
    g.index_ids();
    g.succ_.assign(g.vertices_.size() * g.m_, npos);
    for (std::size_t id = 0; id < g.vertices_.size(); ++id) {
      const auto v = g.vertices_[id];
      for (index_t u = 1; u <= g.m_; ++u) {
        const auto a = bcn.step(v.lo, InputIdx{u});
        const auto b = bcn.step(v.hi, InputIdx{u});
        if (bcn.output(a) != bcn.output(b)) continue;
        g.succ_[id * g.m_ + (u - 1)] = g.id_of(PairVertex::make(a, b));
      }
    }
    return g;
  }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  index_t input_count() const noexcept { return m_; }
  const std::vector<PairVertex>& vertices() const noexcept { return vertices_; }
  const PairVertex& vertex(std::size_t id) const { return vertices_.at(id); }

  bool contains(const PairVertex& v) const { return ids_.contains(v); }

  std::size_t id_of(const PairVertex& v) const {
    auto it = ids_.find(v);
    if (it == ids_.end()) {
      throw std::invalid_argument("pair (" + std::to_string(to_int(v.lo)) + "," +
                                  std::to_string(to_int(v.hi)) + ") is not a vertex");
    }
    return it->second;
  }

  /// Successor id under input u, or npos when the edge is absent.
  std::size_t successor(std::size_t id, InputIdx u) const {
    return succ_[id * m_ + (to_int(u) - 1)];
  }

  std::optional<PairVertex> successor(const PairVertex& v, InputIdx u) const {
    if (to_int(u) < 1 || to_int(u) > m_) throw std::out_of_range("input index out of range");
    const auto s = successor(id_of(v), u);
    if (s == npos) return std::nullopt;
    return vertices_[s];
  }

  /// Edge weights, grouping inputs by common target.
  std::map<std::pair<PairVertex, PairVertex>, std::vector<InputIdx>> edges() const {
    std::map<std::pair<PairVertex, PairVertex>, std::vector<InputIdx>> out;
    for (std::size_t id = 0; id < vertices_.size(); ++id)
      for (index_t u = 1; u <= m_; ++u) {
        const auto s = successor(id, InputIdx{u});
        if (s != npos) out[{vertices_[id], vertices_[s]}].push_back(InputIdx{u});
      }
    return out;
  }

  std::size_t edge_count() const { return edges().size(); }

  VertexSet non_diagonal_vertices() const {
    VertexSet out;
    for (const auto& v : vertices_)
      if (!v.diagonal()) out.insert(v);
    return out;
  }

  /// Subgraph generated by `keep`: vertices in `keep` and the edges
  /// among them.
  PairGraph induced(const VertexSet& keep) const {
    PairGraph g;
    g.m_ = m_;
    for (const auto& v : keep) {
      id_of(v);
      g.vertices_.push_back(v);
    }
    g.index_ids();
    g.succ_.assign(g.vertices_.size() * m_, npos);
    for (std::size_t id = 0; id < g.vertices_.size(); ++id) {
      const auto src = id_of(g.vertices_[id]);
      for (index_t u = 1; u <= m_; ++u) {
        const auto s = successor(src, InputIdx{u});
        if (s == npos) continue;
        auto it = g.ids_.find(vertices_[s]);
        if (it != g.ids_.end()) g.succ_[id * m_ + (u - 1)] = it->second;
      }
    }
    return g;
  }

  /// Vertex ids reachable from `sources` in zero or more steps, in BFS order.
  std::vector<std::size_t> reachable_ids(const VertexSet& sources) const {
    std::vector<char> seen(vertices_.size(), 0);
    std::vector<std::size_t> order;
    std::queue<std::size_t> work;
    for (const auto& v : sources) {
      const auto id = id_of(v);
      if (!seen[id]) {
        seen[id] = 1;
        work.push(id);
      }
    }
    while (!work.empty()) {
      const auto id = work.front();
      work.pop();
      order.push_back(id);
      for (index_t u = 1; u <= m_; ++u) {
        const auto s = successor(id, InputIdx{u});
        if (s != npos && !seen[s]) {
          seen[s] = 1;
          work.push(s);
        }
      }
    }
    return order;
  }

  friend bool operator==(const PairGraph& a, const PairGraph& b) {
    return a.m_ == b.m_ && a.vertices_ == b.vertices_ && a.succ_ == b.succ_;
  }

 private:
  void index_ids() {
    std::sort(vertices_.begin(), vertices_.end());
    ids_.clear();
    for (std::size_t id = 0; id < vertices_.size(); ++id) ids_.emplace(vertices_[id], id);
  }

  index_t m_ = 0;
  std::vector<PairVertex> vertices_;
  std::map<PairVertex, std::size_t> ids_;
  std::vector<std::size_t> succ_;
};

inline PairGraph build_pair_graph(const Bcn& bcn) { return PairGraph::build(bcn); }

/// Single-step edge relation computed from the network itself; agrees with
/// g.successor(v, u).
inline std::optional<PairVertex> pair_successor(const PairGraph& g, const Bcn& bcn,
                                                const PairVertex& v, InputIdx u) {
  if (!g.contains(v)) g.id_of(v);  // throws
  const auto a = bcn.step(v.lo, u);
  const auto b = bcn.step(v.hi, u);
  if (bcn.output(a) != bcn.output(b)) return std::nullopt;
  return PairVertex::make(a, b);
}

inline VertexSet non_diagonal_vertices(const PairGraph& g) { return g.non_diagonal_vertices(); }

/// Subgraph generated by v0 and everything reachable from it.
inline PairGraph reachable_subgraph(const PairGraph& g, const PairVertex& v0) {
  VertexSet keep;
  for (auto id : g.reachable_ids({v0})) keep.insert(g.vertex(id));
  return g.induced(keep);
}

}  // namespace bcnobs

#endif  // BCNOBS_PAIR_GRAPH_HPP
