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
#include <span>
#include <vector>

#include "conebound/compressor.hpp"
#include "conebound/model.hpp"
#include "conebound/numeric.hpp"

namespace conebound {

inline constexpr std::uint64_t kDefaultVerifyBudget = 10'000'000;

using Matrix = std::vector<std::vector<BigInt>>;

// Outcome of a membership or bound check. For cone scans the certificate is
// an admissible c with c.x > 0; for matrix checks it is the violating row.
// `index` names the offending row (matrix) or entry (bound).
struct Verdict {
  bool ok = true;
  std::optional<Constraint> certificate;
  std::optional<std::size_t> index;

  static Verdict pass() { return {}; }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Brute force over every c in {-d..d}^n with c.y <= 0. The first violation in
// lexicographic order (from (-d, ..., -d)) is returned. Throws BudgetExceeded
// when (2d + 1)^n > budget.
Verdict lambda_membership(std::span<const BigInt> x, std::span<const BigInt> y, const BigInt& d,
                          std::uint64_t budget = kDefaultVerifyBudget);

// Same scan restricted to coordinates level..n of the sorted witness, with
// the level's coefficient cap.
Verdict level_membership(const PartialSolution& p, const SortedWitness& w, const BigInt& d,
                         std::uint64_t budget = kDefaultVerifyBudget);

// Row-wise a.x <= 0. Throws std::invalid_argument on a column-count mismatch
// or an entry outside [-d, d].
Verdict matrix_check(const Matrix& a, std::span<const BigInt> x, const BigInt& d);

// max x <= bound_value(n, d), inclusive.
Verdict bound_check(std::span<const BigInt> x, std::size_t n, const BigInt& d);

}  // namespace conebound
