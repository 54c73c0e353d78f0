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

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "conebound/compressor.hpp"
#include "conebound/model.hpp"
#include "conebound/verifier.hpp"

namespace conebound {

// A public problem together with the matrix it was drawn against. Only
// `problem` is ever handed to the compressor.
struct HiddenInstance {
  ProblemInput problem;
  Matrix hidden_matrix;
  std::vector<BigInt> planted;
  std::uint64_t seed = 0;
  BigInt scale = 1;

  friend bool operator==(const HiddenInstance&, const HiddenInstance&) = default;
};

struct GeneratorOptions {
  std::size_t n = 1;
  std::uint64_t d = 1;
  std::size_t m = 1;
  std::uint64_t seed = 0;
  BigInt scale = 1'000'000;
  std::uint64_t max_entry = 30;
  std::uint64_t retry_cap = 10'000;
};

class RejectionCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Uniform integer in [0, bound) from raw 64-bit engine output by rejection,
// so sequences do not depend on the standard library's distributions.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// Draws the planted vector uniformly from the non-zero points of
// [0, max_entry]^n, then each row uniformly from {-d..d}^n, redrawing rows
// with row.planted > 0. The engine is std::mt19937_64 seeded with `seed`.
// Throws std::invalid_argument on bad options, RejectionCapExceeded when a
// row needs more than retry_cap draws.
HiddenInstance generate(const GeneratorOptions& options);

// Checks every HiddenInstance invariant; throws ValidationError
// (kInvalidHiddenInstance) or whatever validate() raises for the public part.
void validate_instance(const HiddenInstance& inst);

struct EndToEndReport {
  CompressOutput output;
  Verdict solution;  // non-zero, non-negative
  Verdict matrix;
  std::optional<Verdict> lambda;  // nullopt when the scan exceeds verify_budget
  Verdict bound;
  std::chrono::nanoseconds elapsed{0};

  bool all_ok() const {
    return solution.ok && matrix.ok && (!lambda || lambda->ok) && bound.ok;
  }
};

EndToEndReport end_to_end(const HiddenInstance& inst,
                          std::uint64_t compress_budget = kDefaultCompressBudget,
                          std::uint64_t verify_budget = kDefaultVerifyBudget);

}  // namespace conebound
