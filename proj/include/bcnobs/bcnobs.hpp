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

#ifndef BCNOBS_BCNOBS_HPP
#define BCNOBS_BCNOBS_HPP

#include <bcnobs/automata.hpp>
#include <bcnobs/bcn.hpp>
#include <bcnobs/dot.hpp>
#include <bcnobs/io.hpp>
#include <bcnobs/observability.hpp>
#include <bcnobs/oracle.hpp>
#include <bcnobs/pair_graph.hpp>
#include <bcnobs/random.hpp>
#include <bcnobs/report.hpp>
#include <bcnobs/stp.hpp>

#endif  // BCNOBS_BCNOBS_HPP
