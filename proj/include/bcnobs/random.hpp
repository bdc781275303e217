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

#ifndef BCNOBS_RANDOM_HPP
#define BCNOBS_RANDOM_HPP

#include <bcnobs/bcn.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace bcnobs {

inline constexpr unsigned kMaxRandomStateNodes = 8;
inline constexpr unsigned kMaxRandomInputNodes = 4;

/// Network with n state, m input and q output nodes whose L and H columns
/// are i.i.d. uniform. Deterministic in `seed`.
inline Bcn gen_random_bcn(std::uint64_t seed, unsigned n, unsigned m, unsigned q) {
  if (n < 1 || m < 1 || q < 1) throw std::invalid_argument("gen_random_bcn: n, m, q must be >= 1");
  if (n > kMaxRandomStateNodes || m > kMaxRandomInputNodes || q > n) {
    throw std::invalid_argument("gen_random_bcn: requires n <= 8, m <= 4, q <= n");
  }
  const index_t big_n = index_t{1} << n;
  const index_t big_m = index_t{1} << m;
  const index_t big_q = index_t{1} << q;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<index_t> state(1, big_n);
  std::uniform_int_distribution<index_t> out(1, big_q);
  std::vector<index_t> l(static_cast<std::size_t>(big_n) * big_m);
  for (auto& c : l) c = state(rng);
  std::vector<index_t> h(big_n);
  for (auto& c : h) c = out(rng);
  return Bcn(LogicalMatrix(big_n, std::move(l)), LogicalMatrix(big_q, std::move(h)), big_m,
             ColumnOrder::InputFirst);
}

}  // namespace bcnobs

#endif  // BCNOBS_RANDOM_HPP
