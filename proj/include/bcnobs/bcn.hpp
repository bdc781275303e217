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

#ifndef BCNOBS_BCN_HPP
#define BCNOBS_BCN_HPP

#include <bcnobs/stp.hpp>

#include <bit>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bcnobs {

// 1-based indices into Delta_N, Delta_M and Delta_Q.
enum class StateIdx : index_t {};
enum class InputIdx : index_t {};
enum class OutputIdx : index_t {};

constexpr index_t to_int(StateIdx x) noexcept { return static_cast<index_t>(x); }
constexpr index_t to_int(InputIdx u) noexcept { return static_cast<index_t>(u); }
constexpr index_t to_int(OutputIdx y) noexcept { return static_cast<index_t>(y); }

/// A finite input sequence u_0 u_1 ... u_{p-1}.
using Word = std::vector<InputIdx>;

inline Word make_word(std::initializer_list<index_t> letters) {
  Word w;
  w.reserve(letters.size());
  for (auto l : letters) w.push_back(InputIdx{l});
  return w;
}

/// Boolean control network in algebraic form:
///   x(t+1) = L u(t) x(t),   y(t) = H x(t).
/// L is stored in input-first column order: column (u-1)N + x.
class Bcn {
 public:
  Bcn(LogicalMatrix l, LogicalMatrix h, index_t n_inputs, ColumnOrder order)
      : n_(l.rows()), m_(n_inputs), q_(h.rows()), h_(std::move(h)) {
    if (m_ == 0) throw std::invalid_argument("Bcn: input count must be positive");
    if (static_cast<std::size_t>(l.cols()) != static_cast<std::size_t>(n_) * m_) {
      throw std::invalid_argument("Bcn: L must have N*M = " + std::to_string(n_ * m_) +
                                  " columns, got " + std::to_string(l.cols()));
    }
    if (h_.cols() != n_) {
      throw std::invalid_argument("Bcn: H must have N = " + std::to_string(n_) +
                                  " columns, got " + std::to_string(h_.cols()));
    }
    if (!std::has_single_bit(n_) || !std::has_single_bit(m_) || !std::has_single_bit(q_)) {
      throw std::invalid_argument("Bcn: N, M, Q must be powers of two");
    }
    l_ = reorder_columns(l, n_, m_, order, ColumnOrder::InputFirst);
  }

  index_t state_count() const noexcept { return n_; }
  index_t input_count() const noexcept { return m_; }
  index_t output_count() const noexcept { return q_; }

  /// Transition matrix, input-first column order.
  const LogicalMatrix& transition() const noexcept { return l_; }
  const LogicalMatrix& output_matrix() const noexcept { return h_; }

  StateIdx step(StateIdx x, InputIdx u) const {
    check(x);
    check(u);
    return StateIdx{l_[(to_int(u) - 1) * n_ + to_int(x)]};
  }

  OutputIdx output(StateIdx x) const {
    check(x);
    return OutputIdx{h_[to_int(x)]};
  }

  void check(StateIdx x) const {
    if (to_int(x) < 1 || to_int(x) > n_) {
      throw std::out_of_range("state index " + std::to_string(to_int(x)) + " outside [1, " +
                              std::to_string(n_) + "]");
    }
  }
  void check(InputIdx u) const {
    if (to_int(u) < 1 || to_int(u) > m_) {
      throw std::out_of_range("input index " + std::to_string(to_int(u)) + " outside [1, " +
                              std::to_string(m_) + "]");
    }
  }

  friend bool operator==(const Bcn&, const Bcn&) = default;

 private:
  index_t n_;
  index_t m_;
  index_t q_;
  LogicalMatrix l_;
  LogicalMatrix h_;
};

inline StateIdx step(const Bcn& bcn, StateIdx x, InputIdx u) { return bcn.step(x, u); }
inline OutputIdx output(const Bcn& bcn, StateIdx x) { return bcn.output(x); }

struct Trajectory {
  std::vector<StateIdx> states;    // x_1 ... x_p
  std::vector<OutputIdx> outputs;  // y_1 ... y_p; y_0 is not included
};

/// L_{x0}^p and (HL)_{x0}^p applied to `word`.
inline Trajectory trajectory(const Bcn& bcn, StateIdx x0, const Word& word) {
  if (word.empty()) throw std::invalid_argument("trajectory: input word must be nonempty");
  Trajectory t;
  t.states.reserve(word.size());
  t.outputs.reserve(word.size());
  StateIdx x = x0;
  for (InputIdx u : word) {
    x = bcn.step(x, u);
    t.states.push_back(x);
    t.outputs.push_back(bcn.output(x));
  }
  return t;
}

}  // namespace bcnobs

#endif  // BCNOBS_BCN_HPP
