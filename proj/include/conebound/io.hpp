// Copyright 2026 The conebound Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "conebound/compressor.hpp"
#include "conebound/instance_gen.hpp"
#include "conebound/model.hpp"
#include "conebound/verifier.hpp"

namespace conebound {

inline constexpr int kTraceVersion = 1;

// Malformed JSON, a missing or mistyped field, or a non-decimal number.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HiddenSection {
  Matrix matrix;
  std::vector<BigInt> planted;
  std::uint64_t seed = 0;
  BigInt scale = 1;

  friend bool operator==(const HiddenSection&, const HiddenSection&) = default;
};

// {"n": int, "d": int, "y": [dec...], "hidden"?: {"matrix", "planted", "seed", "scale"}}
// All vector entries, seed and scale are decimal strings.
struct InstanceFile {
  ProblemInput problem;
  std::optional<HiddenSection> hidden;

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

// Compression result plus the serialized trace. `perm` maps sorted positions
// to original ones so the trace (sorted coordinates) can be replayed into x.
struct ResultFile {
  int trace_version = kTraceVersion;
  std::vector<BigInt> x;
  Ratio bound;
  BigInt max_x;
  std::vector<std::size_t> perm;
  std::vector<StepRecord> steps;

  friend bool operator==(const ResultFile&, const ResultFile&) = default;
};

std::string emit_instance(const InstanceFile& f);
// Structural parse only; see load_instance for the validating variant.
InstanceFile parse_instance(std::string_view text);
// parse_instance + validate(); with a hidden section also validate_instance().
InstanceFile load_instance(std::string_view text);

InstanceFile to_instance_file(const HiddenInstance& inst);
// Requires f.hidden.
HiddenInstance to_hidden_instance(const InstanceFile& f);

ResultFile make_result(const CompressOutput& out);
std::string emit_result(const ResultFile& f);
ResultFile parse_result(std::string_view text);

// Rebuilds x from the steps alone: start at x(n) = 1, then per step rescale
// and assign x(level). Throws std::invalid_argument if any recorded partial
// disagrees with the replay or the steps are out of order.
std::vector<BigInt> replay(const ResultFile& f);

// Reads the "x" array of a result file or of a bare {"x": [...]} object.
std::vector<BigInt> parse_solution(std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace conebound
