// Copyright 2026 The FrugalSim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "frugal/mechanisms.hpp"
#include "frugal/types.hpp"

namespace frugal {

// Two hand-worked reference instances with fully known traces. Both use
// L = 8, T = 8, beta = 5, delta = 2 and five users with capacity 4.
// Instance 1 collapses every window to the arrival step; instance 2 keeps
// user 1 online over [1, 5].
std::vector<UserProfile> reference_instance_1();
std::vector<UserProfile> reference_instance_2();
MechanismParams reference_params();

// FNV-1a over the golden text, guarding against a corrupted embedding.
std::uint64_t fnv1a(const std::string& text);

struct GoldenCheck {
  bool integrity_ok = true;
  bool match = true;
  // First divergent line: "step <t>, field <...>" style description.
  std::string first_mismatch;
};

GoldenCheck verify_reference_trace_1();
GoldenCheck verify_reference_trace_2();

// Replays both reference instances, diffs the full decision logs against the
// embedded goldens, and reports per-line mismatches. Returns a CLI exit
// code: 0 pass, 1 mismatch, 4 embedded-golden integrity failure.
int verify_examples(std::ostream& out);

}  // namespace frugal
