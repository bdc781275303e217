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


#ifndef BCNOBS_TESTS_FIXTURES_HPP
#define BCNOBS_TESTS_FIXTURES_HPP

#include <bcnobs/bcn.hpp>
#include <bcnobs/pair_graph.hpp>

#include <string>
#include <vector>

namespace bcnobs::testing {

inline Bcn make_bcn(index_t n, index_t m, index_t q, std::vector<index_t> l_state_first,
                    std::vector<index_t> h) {
  return Bcn(LogicalMatrix(n, std::move(l_state_first)), LogicalMatrix(q, std::move(h)), m,
             ColumnOrder::StateFirst);
}

// x(t+1) = delta_4[1,1,2,1,2,4,1,1] x(t)u(t),  y(t) = delta_2[1,2,2,2] x(t)
inline Bcn bcn5() { return make_bcn(4, 2, 2, {1, 1, 2, 1, 2, 4, 1, 1}, {1, 2, 2, 2}); }

// x(t+1) = delta_4[1,1,3,3,1,2,3,2] x(t)u(t),  y(t) = delta_2[1,1,2,2] x(t)
inline Bcn bcn6() { return make_bcn(4, 2, 2, {1, 1, 3, 3, 1, 2, 3, 2}, {1, 1, 2, 2}); }

// x(t+1) = delta_4[1,1,1,3,1,2,3,2] x(t)u(t),  y(t) = delta_2[1,1,2,2] x(t)
inline Bcn bcn7() { return make_bcn(4, 2, 2, {1, 1, 1, 3, 1, 2, 3, 2}, {1, 1, 2, 2}); }

inline PairVertex pv(index_t a, index_t b) { return PairVertex::make(a, b); }
inline StateIdx sx(index_t i) { return StateIdx{i}; }
inline InputIdx in(index_t u) { return InputIdx{u}; }

inline Word all_words_next(Word w, index_t m) {
  std::size_t k = w.size();
  while (k > 0 && to_int(w[k - 1]) == m) w[--k] = InputIdx{1};
  if (k == 0) return {};
  w[k - 1] = InputIdx{to_int(w[k - 1]) + 1};
  return w;
}

/// Every word over [1, m] with length in [0, max_len], shortest first.
inline std::vector<Word> words_up_to(index_t m, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    Word w(len, InputIdx{1});
    while (!w.empty()) {
      out.push_back(w);
      w = all_words_next(w, m);
    }
  }
  return out;
}

/// Output trajectory y_0 y_1 ... y_p computed step by step, for oracles
/// that must not share code with the library's trajectory().
inline std::vector<OutputIdx> outputs_from(const Bcn& bcn, StateIdx x, const Word& w) {
  std::vector<OutputIdx> ys{bcn.output(x)};
  for (auto u : w) {
    x = bcn.step(x, u);
    ys.push_back(bcn.output(x));
  }
  return ys;
}

}  // namespace bcnobs::testing

#endif  // BCNOBS_TESTS_FIXTURES_HPP
