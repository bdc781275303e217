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

#ifndef BCNOBS_ORACLE_HPP
#define BCNOBS_ORACLE_HPP

// Brute-force checks by direct simulation of the network. Nothing in here
// touches the pair graph or the automata, except that observability.hpp
// is included for the shared ObservabilityType/Verdict vocabulary.

#include <bcnobs/bcn.hpp>
#include <bcnobs/observability.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bcnobs {

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 20;

/// Budget from BCNOBS_ENUM_BUDGET when set to a positive integer, else the
/// default of 2^20 words per check.
inline std::uint64_t enumeration_budget_from_env() {
  if (const char* env = std::getenv("BCNOBS_ENUM_BUDGET")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultEnumerationBudget;
}

class EnumerationBudgetExceeded : public std::runtime_error {
 public:
  EnumerationBudgetExceeded(std::uint64_t words, std::uint64_t budget)
      : std::runtime_error("enumeration of " + std::to_string(words) +
                           " words exceeds budget of " + std::to_string(budget)),
        words_(words),
        budget_(budget) {}
  std::uint64_t words() const noexcept { return words_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t words_;
  std::uint64_t budget_;
};

/// x and x' are distinguished by U when their initial outputs differ or
/// their output trajectories under U differ at some step.
inline bool distinguishes(const Bcn& bcn, StateIdx x, StateIdx xp, const Word& word) {
  if (bcn.output(x) != bcn.output(xp)) return true;
  for (InputIdx u : word) {
    x = bcn.step(x, u);
    xp = bcn.step(xp, u);
    if (bcn.output(x) != bcn.output(xp)) return true;
  }
  return false;
}

/// Distinct state pairs (i < j) with equal initial output.
inline std::vector<std::pair<StateIdx, StateIdx>> confusable_pairs(const Bcn& bcn) {
  std::vector<std::pair<StateIdx, StateIdx>> out;
  for (index_t i = 1; i <= bcn.state_count(); ++i)
    for (index_t j = i + 1; j <= bcn.state_count(); ++j)
      if (bcn.output(StateIdx{i}) == bcn.output(StateIdx{j}))
        out.emplace_back(StateIdx{i}, StateIdx{j});
  return out;
}

/// Calls fn on every word of exactly `length` letters over [1, M], in
/// lexicographic order, until fn returns true. Returns whether it stopped.
inline bool for_each_word(index_t alphabet, std::size_t length, std::uint64_t budget,
                          const std::function<bool(const Word&)>& fn) {
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < length; ++k) {
    if (total > budget / alphabet) throw EnumerationBudgetExceeded(total * alphabet, budget);
    total *= alphabet;
  }
  Word w(length, InputIdx{1});
  while (true) {
    if (fn(w)) return true;
    std::size_t k = length;
    while (k > 0 && to_int(w[k - 1]) == alphabet) {
      w[k - 1] = InputIdx{1};
      --k;
    }
    if (k == 0) return false;
    w[k - 1] = InputIdx{to_int(w[k - 1]) + 1};
  }
}

struct OracleVerdict {
  ObservabilityType type = ObservabilityType::I;
  std::size_t horizon = 0;
  bool observable = false;
  bool exact = false;
};

struct OracleOptions {
  std::uint64_t budget = kDefaultEnumerationBudget;
  /// Horizon known to decide types I and III exactly (taken from the size
  /// of the corresponding subset automaton). Types II and IV compute theirs.
  std::optional<std::size_t> sufficient_horizon;
};

/// Evaluates the definition of `type` by enumerating input words of length
/// `horizon`. A word that distinguishes a pair keeps doing so when extended,
/// so for I, II and III words of exactly `horizon` letters cover all shorter
/// ones. Type IV quantifies over all words of that length.
inline OracleVerdict brute_force(const Bcn& bcn, ObservabilityType type, std::size_t horizon,
                                 const OracleOptions& opts = {}) {
  if (horizon < 1) throw std::invalid_argument("brute_force: horizon must be at least 1");
  const index_t m = bcn.input_count();
  const auto pairs = confusable_pairs(bcn);
  OracleVerdict r{.type = type, .horizon = horizon};

  switch (type) {
    case ObservabilityType::I: {
      r.observable = true;
      for (index_t i = 1; i <= bcn.state_count() && r.observable; ++i) {
        const StateIdx x{i};
        std::vector<StateIdx> rivals;
        for (const auto& [a, b] : pairs) {
          if (a == x) rivals.push_back(b);
          if (b == x) rivals.push_back(a);
        }
        if (rivals.empty()) continue;
        r.observable = for_each_word(m, horizon, opts.budget, [&](const Word& w) {
          for (auto xb : rivals)
            if (!distinguishes(bcn, x, xb, w)) return false;
          return true;
        });
      }
      r.exact = pairs.empty() || (opts.sufficient_horizon && horizon >= *opts.sufficient_horizon);
      break;
    }
    case ObservabilityType::II: {
      r.observable = true;
      for (const auto& [a, b] : pairs) {
        if (!for_each_word(m, horizon, opts.budget,
                           [&](const Word& w) { return distinguishes(bcn, a, b, w); })) {
          r.observable = false;
          break;
        }
      }
      r.exact = horizon >= pairs.size();
      break;
    }
    case ObservabilityType::III: {
      r.observable = pairs.empty() || for_each_word(m, horizon, opts.budget, [&](const Word& w) {
                       for (const auto& [a, b] : pairs)
                         if (!distinguishes(bcn, a, b, w)) return false;
                       return true;
                     });
      r.exact = pairs.empty() || (opts.sufficient_horizon && horizon >= *opts.sufficient_horizon);
      break;
    }
    case ObservabilityType::IV: {
      const bool counterexample = for_each_word(m, horizon, opts.budget, [&](const Word& w) {
        for (const auto& [a, b] : pairs)
          if (!distinguishes(bcn, a, b, w)) return true;
        return false;
      });
      r.observable = !counterexample;
      r.exact = horizon >= pairs.size();
      break;
    }
  }
  return r;
}

/// Number of confusable pairs; equals the count of non-diagonal pair-graph
/// vertices but is computed from the network alone.
inline std::size_t confusable_pair_count(const Bcn& bcn) { return confusable_pairs(bcn).size(); }

namespace detail {
inline void check_word(const Bcn& bcn, const Word& w) {
  if (w.empty()) throw std::invalid_argument("malformed witness: empty word");
  for (auto u : w) bcn.check(u);
}
}  // namespace detail

/// Determining word for x: distinguishes x from every confusable rival.
inline bool verify_state_witness(const Bcn& bcn, StateIdx x, const Word& w) {
  detail::check_word(bcn, w);
  bcn.check(x);
  for (index_t j = 1; j <= bcn.state_count(); ++j) {
    const StateIdx xb{j};
    if (xb == x) continue;
    if (!distinguishes(bcn, x, xb, w)) return false;
  }
  return true;
}

inline bool verify_pair_witness(const Bcn& bcn, StateIdx x, StateIdx xp, const Word& w) {
  detail::check_word(bcn, w);
  if (x == xp) throw std::invalid_argument("malformed witness: pair is diagonal");
  return distinguishes(bcn, x, xp, w);
}

inline bool verify_universal_witness(const Bcn& bcn, const Word& w) {
  detail::check_word(bcn, w);
  for (const auto& [a, b] : confusable_pairs(bcn))
    if (!distinguishes(bcn, a, b, w)) return false;
  return true;
}

/// The lasso's source pair must be confusable and stay undistinguished
/// along prefix . cycle^k for k = 1..unroll.
inline bool verify_lasso(const Bcn& bcn, StateIdx x, StateIdx xp, const Word& prefix,
                         const Word& cycle, std::size_t unroll = 3) {
  if (cycle.empty()) throw std::invalid_argument("malformed witness: empty cycle");
  if (x == xp) throw std::invalid_argument("malformed witness: pair is diagonal");
  for (auto u : prefix) bcn.check(u);
  for (auto u : cycle) bcn.check(u);
  Word w = prefix;
  for (std::size_t k = 0; k < unroll; ++k) w.insert(w.end(), cycle.begin(), cycle.end());
  return !distinguishes(bcn, x, xp, w);
}

/// Re-checks every witness of a verdict by simulation. States recorded as
/// trivially determined are checked against the one-letter word (1).
inline bool verify_witness(const Bcn& bcn, const Verdict& v) {
  switch (v.type) {
    case ObservabilityType::I:
      for (const auto& [x, w] : v.state_witnesses)
        if (!verify_state_witness(bcn, x, w)) return false;
      for (auto x : v.trivially_determined)
        if (!verify_state_witness(bcn, x, Word{InputIdx{1}})) return false;
      return true;
    case ObservabilityType::II:
      for (const auto& [p, w] : v.pair_witnesses)
        if (!verify_pair_witness(bcn, p.lo, p.hi, w)) return false;
      return true;
    case ObservabilityType::III:
      return !v.universal_word || verify_universal_witness(bcn, *v.universal_word);
    case ObservabilityType::IV:
      return !v.lasso ||
             verify_lasso(bcn, v.lasso->source.lo, v.lasso->source.hi, v.lasso->prefix,
                          v.lasso->cycle);
  }
  return false;
}

/// True when no word of length `horizon` distinguishes x and x'.
inline bool never_distinguished(const Bcn& bcn, StateIdx x, StateIdx xp, std::size_t horizon,
                                std::uint64_t budget = kDefaultEnumerationBudget) {
  return !for_each_word(bcn.input_count(), horizon, budget,
                        [&](const Word& w) { return distinguishes(bcn, x, xp, w); });
}

/// True when some word of length `horizon` fails to distinguish x and x'.
inline bool sometimes_confused(const Bcn& bcn, StateIdx x, StateIdx xp, std::size_t horizon,
                               std::uint64_t budget = kDefaultEnumerationBudget) {
  return for_each_word(bcn.input_count(), horizon, budget,
                       [&](const Word& w) { return !distinguishes(bcn, x, xp, w); });
}

/// Outcome of re-checking one decider verdict by simulation.
struct CrossCheck {
  OracleVerdict oracle;
  bool agrees = true;               // decider vs. enumeration, see cross_check
  bool witnesses_verified = true;   // verify_witness on the verdict
  bool offending_confirmed = true;  // offending pair survives enumeration (II, IV)
  bool ok() const noexcept { return agrees && witnesses_verified && offending_confirmed; }
};

/// Compares a verdict with brute_force at `horizon`, defaulting to the exact
/// horizon of the type. At an inexact horizon only the sound direction is
/// checked: observable-within-horizon implies observable for I, II, III, and
/// a non-observable IV verdict implies some word of any length confuses a pair.
inline CrossCheck cross_check(const Bcn& bcn, const PairGraph& g, const Verdict& v,
                              std::optional<std::size_t> horizon = std::nullopt,
                              std::uint64_t budget = kDefaultEnumerationBudget) {
  const auto exact_h = exact_horizon(g, v.type);
  const auto h = horizon.value_or(exact_h);
  OracleOptions opts;
  opts.budget = budget;
  if (v.type == ObservabilityType::I || v.type == ObservabilityType::III) {
    opts.sufficient_horizon = exact_h;
  }
  CrossCheck c;
  c.oracle = brute_force(bcn, v.type, h, opts);
  if (c.oracle.exact) {
    c.agrees = c.oracle.observable == v.observable;
  } else if (v.type == ObservabilityType::IV) {
    c.agrees = v.observable || !c.oracle.observable;
  } else {
    c.agrees = !c.oracle.observable || v.observable;
  }
  c.witnesses_verified = verify_witness(bcn, v);
  const auto n_nd = std::max<std::size_t>(confusable_pair_count(bcn), 1);
  if (v.offending_pair && v.type == ObservabilityType::II) {
    c.offending_confirmed = never_distinguished(bcn, v.offending_pair->lo, v.offending_pair->hi,
                                                n_nd, budget);
  } else if (v.offending_pair && v.type == ObservabilityType::IV) {
    c.offending_confirmed = sometimes_confused(bcn, v.offending_pair->lo, v.offending_pair->hi,
                                               n_nd, budget);
  }
  return c;
}

}  // namespace bcnobs

#endif  // BCNOBS_ORACLE_HPP
