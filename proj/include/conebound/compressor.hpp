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
#include <vector>

#include "conebound/model.hpp"
#include "conebound/numeric.hpp"

namespace conebound {

inline constexpr std::uint64_t kDefaultCompressBudget = 100'000'000;

// Raised before any enumeration starts when the number of coefficient
// vectors a scan would visit exceeds the caller's budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(BigInt required, std::uint64_t budget);
  const BigInt& required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  BigInt required_;
  std::uint64_t budget_;
};

// Lower bound above upper bound at some level. The construction rules this
// out, so seeing it means a bug.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Integral assignment to x(level..n) in sorted coordinates.
struct PartialSolution {
  std::size_t level = 1;
  std::vector<BigInt> x;

  friend bool operator==(const PartialSolution&, const PartialSolution&) = default;
};

struct BoundResult {
  Ratio value;
  Constraint achieving;

  friend bool operator==(const BoundResult&, const BoundResult&) = default;
};

// Audit record for one level of the construction.
struct StepRecord {
  std::size_t level = 1;
  BigInt cap;
  BoundResult upper;
  BoundResult lower;
  Ratio chosen;
  BigInt scale;
  PartialSolution partial_after;

  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

struct CompressOutput {
  std::vector<BigInt> x;  // original coordinate order
  std::vector<StepRecord> trace;  // levels n-1 down to 1, sorted coordinates
  Ratio bound;
  SortedWitness witness;

  friend bool operator==(const CompressOutput&, const CompressOutput&) = default;
};

enum class BoundSide { kUpper, kLower };

struct CjChoice {
  BigInt cj;
  Ratio value;

  friend bool operator==(const CjChoice&, const CjChoice&) = default;
};

// Best leading coefficient for one fixed tail. With S = -sum_{i>j} c_i x(i)
// and T = -sum_{i>j} c_i y(i), c_j is feasible iff c_j * y_j <= T. Upper side
// ranges over c_j in [1, cap] minimising S / c_j; lower side over
// [-cap, -1] maximising S / c_j. Among equal values the smallest |c_j| wins.
// nullopt when no c_j on that side is feasible.
std::optional<CjChoice> inner_optimize_cj(BoundSide side, const BigInt& s, const BigInt& t,
                                          const BigInt& y_j, const BigInt& cap);

// Number of coefficient vectors tightest_upper/lower visit at level j.
BigInt enumeration_count(std::size_t j, std::size_t n, const BigInt& cap);

// Minimum over all admissible constraints with c_j >= 1 of the implied upper
// bound on x(j). Ties go to the smallest |c_j|, then the lexicographically
// smallest tail. `tail` is the partial solution at level j + 1.
BoundResult tightest_upper(std::size_t j, const SortedWitness& w, const PartialSolution& tail,
                           const BigInt& cap, std::uint64_t budget = kDefaultCompressBudget);

// Maximum over all admissible constraints with c_j <= -1 of the implied
// lower bound on x(j). Same tie rule.
BoundResult tightest_lower(std::size_t j, const SortedWitness& w, const PartialSolution& tail,
                           const BigInt& cap, std::uint64_t budget = kDefaultCompressBudget);

// Extends `tail` (level j + 1) to level j: x(j) takes the tightest upper
// bound and the whole partial solution is multiplied by its denominator.
StepRecord step(std::size_t j, const SortedWitness& w, const BigInt& d,
                const PartialSolution& tail, std::uint64_t budget = kDefaultCompressBudget);

// Full construction. Deterministic; throws ValidationError, BudgetExceeded.
CompressOutput compress(const ProblemInput& input, std::uint64_t budget = kDefaultCompressBudget);

}  // namespace conebound
