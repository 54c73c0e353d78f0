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
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "conebound/numeric.hpp"

namespace conebound {

// The public data of a problem: dimension, coefficient cap of the unknown
// matrix, and the known non-negative integral witness.
struct ProblemInput {
  std::size_t n = 0;
  BigInt d = 0;
  std::vector<BigInt> y;

  friend bool operator==(const ProblemInput&, const ProblemInput&) = default;
};

enum class ValidationFailure {
  kDimensionTooSmall,
  kCapTooSmall,
  kLengthMismatch,
  kNegativeEntry,
  kZeroWitness,
  kInvalidHiddenInstance,
};

const char* to_string(ValidationFailure f);

class ValidationError : public std::invalid_argument {
 public:
  ValidationError(ValidationFailure kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}
  ValidationFailure kind() const { return kind_; }

 private:
  ValidationFailure kind_;
};

// Witness sorted ascending. perm[k] is the original position of sorted
// entry k, so y[perm[k]] == y_sorted[k].
struct SortedWitness {
  std::vector<BigInt> y_sorted;
  std::vector<std::size_t> perm;

  std::size_t n() const { return y_sorted.size(); }

  friend bool operator==(const SortedWitness&, const SortedWitness&) = default;
};

// Throws ValidationError. Sorting is stable.
SortedWitness validate(const ProblemInput& input);

// Coefficient cap of level j (1-based): d, 2d^2, 8d^4, ...
BigInt upsilon(const BigInt& d, std::size_t j);

// (2d)^(2^(n-1)-1) / 2^(n-1), the largest entry the compressed vector may have.
Ratio bound_value(std::size_t n, const BigInt& d);

// Inverse of the witness sort. Throws std::invalid_argument when perm is not
// a permutation of 0..size-1 or the lengths differ.
std::vector<BigInt> unsort(std::span<const BigInt> x_sorted, std::span<const std::size_t> perm);

// Implicit cone over x(level..n): every c with |c_i| <= cap and
// sum c_i y(i) <= 0 defines one inequality sum c_i x(i) <= 0. The inequality
// list is only ever traversed, never stored.
struct LevelCone {
  std::size_t level = 1;
  BigInt cap = 0;
  std::span<const BigInt> y;  // y_sorted[level-1 .. n-1]
};

LevelCone level_cone(const SortedWitness& w, const BigInt& d, std::size_t level);

// One inequality of a LevelCone: coeffs[k] multiplies x(level + k).
struct Constraint {
  std::size_t level = 1;
  std::vector<BigInt> coeffs;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

// |c_i| <= cap and c . y <= 0.
bool admits(const LevelCone& cone, const Constraint& c);

}  // namespace conebound
