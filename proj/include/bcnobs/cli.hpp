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

#ifndef BCNOBS_CLI_HPP
#define BCNOBS_CLI_HPP

#include <bcnobs/dot.hpp>
#include <bcnobs/io.hpp>
#include <bcnobs/observability.hpp>
#include <bcnobs/oracle.hpp>
#include <bcnobs/random.hpp>
#include <bcnobs/report.hpp>

#include "CLI11.hpp"

#include <array>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace bcnobs {

enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitInputError = 2 };

namespace detail {

inline std::string format_word(const Word& w) {
  std::string s = "[";
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(to_int(w[k]));
  }
  return s + "]";
}

inline std::vector<ObservabilityType> selected_types(const std::string& arg) {
  if (arg == "all") return {kAllTypes.begin(), kAllTypes.end()};
  return {parse_type(arg)};
}

inline void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << text;
}

inline void print_verdict(std::ostream& out, const TypeResult& r, bool witness) {
  const auto& v = r.verdict;
  out << "type " << to_string(v.type) << ": " << (v.observable ? "observable" : "not observable");
  if (!v.observable) {
    if (v.offending_state) out << " (state " << to_int(*v.offending_state) << " undetermined)";
    if (v.type == ObservabilityType::II && v.offending_pair)
      out << " (pair " << v.offending_pair->label() << " never distinguished)";
  }
  out << '\n';
  if (witness) {
    for (const auto& [x, w] : v.state_witnesses)
      out << "  state " << to_int(x) << ": " << format_word(w) << '\n';
    for (auto x : v.trivially_determined)
      out << "  state " << to_int(x) << ": any word (no confusable partner)\n";
    for (const auto& [p, w] : v.pair_witnesses)
      out << "  pair " << p.label() << ": " << format_word(w) << '\n';
    if (v.universal_word) out << "  word: " << format_word(*v.universal_word) << '\n';
    if (v.lasso) {
      out << "  lasso from pair " << v.lasso->source.label() << ": prefix "
          << format_word(v.lasso->prefix) << ", cycle " << format_word(v.lasso->cycle) << '\n';
    }
  }
  if (r.check) {
    const auto& c = *r.check;
    out << "  oracle: horizon " << c.oracle.horizon << (c.oracle.exact ? " (exact)" : " (inexact)")
        << ", " << (c.oracle.observable ? "observable" : "not observable") << ", "
        << (c.ok() ? "agrees" : "DISAGREES") << '\n';
  } else if (r.check_skipped) {
    out << "  oracle: skipped, " << *r.check_skipped << '\n';
  }
}

/// Runs the deciders (and optional cross-checks); returns whether any
/// cross-check failed.
inline bool run_decisions(const Bcn& bcn, const PairGraph& g,
                          const std::vector<ObservabilityType>& types, bool oracle,
                          std::optional<std::size_t> horizon, VerdictReport& report) {
  bool violation = false;
  const auto budget = enumeration_budget_from_env();
  for (auto t : types) {
    TypeResult r;
    const auto start = std::chrono::steady_clock::now();
    r.verdict = decide(bcn, g, t);
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                   .count();
    if (oracle) {
      try {
        r.check = cross_check(bcn, g, r.verdict, horizon, budget);
        violation |= !r.check->ok();
      } catch (const EnumerationBudgetExceeded& e) {
        r.check_skipped = e.what();
      }
    }
    report.results.push_back(std::move(r));
  }
  return violation;
}

inline int cmd_decide(const std::string& file, const std::string& type_arg, bool witness,
                      bool oracle, std::optional<std::size_t> horizon, const std::string& json_out,
                      std::ostream& out) {
  const auto bcn = load_bcn(file);
  const auto doc_name = std::filesystem::path(file).stem().string();
  const auto types = selected_types(type_arg);
  const auto g = PairGraph::build(bcn);

  VerdictReport report;
  report.name = doc_name;
  report.n_states = bcn.state_count();
  report.n_inputs = bcn.input_count();
  report.n_outputs = bcn.output_count();
  report.n_nd = g.non_diagonal_vertices().size();
  const bool violation = run_decisions(bcn, g, types, oracle, horizon, report);

  if (json_out == "-") {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << doc_name << ": N=" << report.n_states << " M=" << report.n_inputs
        << " Q=" << report.n_outputs << " N_nd=" << report.n_nd << '\n';
    for (const auto& r : report.results) print_verdict(out, r, witness);
    if (!json_out.empty()) write_text(json_out, to_json(report).dump(2) + "\n", out);
  }
  return violation ? kExitViolation : kExitOk;
}

inline int cmd_graph(const std::string& file, const std::string& dot_out, std::ostream& out) {
  const auto bcn = load_bcn(file);
  write_text(dot_out, emit_dot(PairGraph::build(bcn)), out);
  return kExitOk;
}

inline int cmd_automata(const std::string& file, const std::string& type_arg,
                        const std::string& dot_dir, std::ostream& out) {
  const auto bcn = load_bcn(file);
  const auto g = PairGraph::build(bcn);
  const auto type = parse_type(type_arg);

  std::vector<std::pair<std::string, Dfa>> autos;
  switch (type) {
    case ObservabilityType::I:
      for (index_t i = 1; i <= bcn.state_count(); ++i) {
        const auto s0 = determining_payload(g, StateIdx{i});
        if (!s0.empty()) autos.emplace_back(state_automaton_label(StateIdx{i}), subset_automaton(g, s0));
      }
      break;
    case ObservabilityType::II:
    case ObservabilityType::IV:
      for (const auto& v : g.non_diagonal_vertices())
        autos.emplace_back(pair_automaton_label(v), vertex_automaton(g, v));
      break;
    case ObservabilityType::III: {
      const auto nd = g.non_diagonal_vertices();
      if (!nd.empty()) autos.emplace_back("A_Vn", subset_automaton(g, nd));
      break;
    }
  }
  if (!dot_dir.empty()) std::filesystem::create_directories(dot_dir);
  for (const auto& [label, a] : autos) {
    out << label << ": " << a.state_count() << " states, "
        << (is_complete(a) ? "complete" : "incomplete") << '\n';
    if (!dot_dir.empty()) {
      write_text((std::filesystem::path(dot_dir) / (label + ".dot")).string(), emit_dot(a, label),
                 out);
    }
  }
  if (autos.empty()) out << "no automata: no non-diagonal vertices\n";
  return kExitOk;
}

inline int cmd_random(std::uint64_t seed, std::size_t count, unsigned n, unsigned m, unsigned q,
                      bool check_implications, bool oracle, std::ostream& out) {
  std::size_t violations = 0, skipped = 0;
  std::array<std::size_t, 4> observable{};
  const auto budget = enumeration_budget_from_env();
  for (std::size_t k = 0; k < count; ++k) {
    const auto bcn = gen_random_bcn(seed + k, n, m, q);
    const auto rep = implication_matrix(bcn);
    for (auto t : kAllTypes) observable[type_slot(t)] += rep[t].observable ? 1 : 0;
    bool bad = check_implications && rep.violation;
    if (oracle) {
      const auto g = PairGraph::build(bcn);
      for (auto t : kAllTypes) {
        try {
          bad |= !cross_check(bcn, g, rep[t], std::nullopt, budget).ok();
        } catch (const EnumerationBudgetExceeded&) {
          ++skipped;
        }
      }
    }
    if (bad) {
      ++violations;
      out << "violation at seed " << (seed + k) << '\n';
    }
  }
  out << "networks: " << count << " (n=" << n << ", m=" << m << ", q=" << q << ", seeds " << seed
      << ".." << (seed + count - (count ? 1 : 0)) << ")\n";
  for (auto t : kAllTypes)
    out << "observable type " << to_string(t) << ": " << observable[type_slot(t)] << '\n';
  if (oracle) out << "oracle checks skipped (budget): " << skipped << '\n';
  out << "violations: " << violations << '\n';
  return violations ? kExitViolation : kExitOk;
}

}  // namespace detail

/// Command-line entry point. Exit codes: 0 success, 1 a violation was found
/// (oracle disagreement or broken implication), 2 input error.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide the four observability notions of Boolean control networks", "bcnobs"};
  app.require_subcommand(1);

  std::string file, type_arg = "all", json_out, dot_out, dot_dir;
  bool witness = false, oracle = false, check_impl = false;
  std::optional<std::size_t> horizon;
  std::uint64_t seed = 0;
  std::size_t count = 1;
  unsigned n = 2, m = 1, q = 1;

  auto* decide = app.add_subcommand("decide", "Decide observability of a network");
  decide->add_option("file", file, "BCN document")->required();
  decide->add_option("--type", type_arg, "I, II, III, IV or all")
      ->check(CLI::IsMember({"I", "II", "III", "IV", "all"}));
  decide->add_flag("--witness", witness, "Print witness words");
  auto* oracle_flag = decide->add_flag("--oracle-check", oracle, "Cross-check by enumeration");
  decide->add_option("--horizon", horizon, "Enumeration horizon (default: exact)")
      ->needs(oracle_flag)
      ->check(CLI::PositiveNumber);
  decide->add_option("--json", json_out, "Write JSON report to file ('-' for stdout)");

  auto* graph = app.add_subcommand("graph", "Emit the weighted pair graph");
  graph->add_option("file", file, "BCN document")->required();
  graph->add_option("--dot", dot_out, "DOT output file (default stdout)");

  auto* automata = app.add_subcommand("automata", "Build the automata used by one decider");
  automata->add_option("file", file, "BCN document")->required();
  automata->add_option("--type", type_arg, "I, II, III or IV")
      ->required()
      ->check(CLI::IsMember({"I", "II", "III", "IV"}));
  automata->add_option("--dot-dir", dot_dir, "Directory for one DOT file per automaton");

  auto* random = app.add_subcommand("random", "Run deciders over seeded random networks");
  random->add_option("--seed", seed, "First seed")->required();
  random->add_option("--count", count, "Number of networks")->required();
  random->add_option("--n", n, "State nodes")->check(CLI::Range(1u, kMaxRandomStateNodes));
  random->add_option("--m", m, "Input nodes")->check(CLI::Range(1u, kMaxRandomInputNodes));
  random->add_option("--q", q, "Output nodes")->check(CLI::Range(1u, kMaxRandomStateNodes));
  random->add_flag("--check-implications", check_impl, "Check IV => III => I => II");
  random->add_flag("--oracle-check", oracle, "Cross-check every verdict by enumeration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (*decide) return detail::cmd_decide(file, type_arg, witness, oracle, horizon, json_out, out);
    if (*graph) return detail::cmd_graph(file, dot_out, out);
    if (*automata) return detail::cmd_automata(file, type_arg, dot_dir, out);
    if (*random) {
      if (q > n) throw std::invalid_argument("--q must not exceed --n");
      return detail::cmd_random(seed, count, n, m, q, check_impl, oracle, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace bcnobs

#endif  // BCNOBS_CLI_HPP
