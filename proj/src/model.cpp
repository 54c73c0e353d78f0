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


#include "conebound/model.hpp"

#include <algorithm>
#include <numeric>

namespace conebound {

const char* to_string(ValidationFailure f) {
  switch (f) {
    case ValidationFailure::kDimensionTooSmall: return "dimension_too_small";
    case ValidationFailure::kCapTooSmall: return "cap_too_small";
    case ValidationFailure::kLengthMismatch: return "length_mismatch";
    case ValidationFailure::kNegativeEntry: return "negative_entry";
    case ValidationFailure::kZeroWitness: return "zero_witness";
    case ValidationFailure::kInvalidHiddenInstance: return "invalid_hidden_instance";
  }
  return "unknown";
}

SortedWitness validate(const ProblemInput& input) {
  if (input.n < 1) {
    throw ValidationError(ValidationFailure::kDimensionTooSmall, "n must be at least 1");
  }
  if (input.d < 1) {
    throw ValidationError(ValidationFailure::kCapTooSmall, "d must be at least 1");
  }
  if (input.y.size() != input.n) {
    throw ValidationError(ValidationFailure::kLengthMismatch,
                          "witness has " + std::to_string(input.y.size()) +
                              " entries, expected n = " + std::to_string(input.n));
  }
  bool any_positive = false;
  for (std::size_t i = 0; i < input.n; ++i) {
    if (input.y[i] < 0) {
      throw ValidationError(ValidationFailure::kNegativeEntry,
                            "witness entry " + std::to_string(i) + " is negative");
    }
    any_positive = any_positive || input.y[i] > 0;
  }
  if (!any_positive) {
    throw ValidationError(ValidationFailure::kZeroWitness, "witness must be non-zero");
  }

  SortedWitness w;
  w.perm.resize(input.n);
  std::iota(w.perm.begin(), w.perm.end(), std::size_t{0});
  std::stable_sort(w.perm.begin(), w.perm.end(),
                   [&](std::size_t a, std::size_t b) { return input.y[a] < input.y[b]; });
  w.y_sorted.reserve(input.n);
  for (std::size_t k : w.perm) w.y_sorted.push_back(input.y[k]);
  return w;
}

BigInt upsilon(const BigInt& d, std::size_t j) {
  BigInt u = d;
  for (std::size_t i = 1; i < j; ++i) u = 2 * u * u;
  return u;
}

Ratio bound_value(std::size_t n, const BigInt& d) {
  if (n < 1) throw std::invalid_argument("bound_value: n must be at least 1");
  // Beyond this the numerator alone has more than 2^31 bits.
  if (n > 32) throw std::out_of_range("bound_value: n too large to represent");
  const auto halvings = static_cast<unsigned>(n - 1);
  const unsigned exponent = (1u << halvings) - 1u;
  BigInt num = boost::multiprecision::pow(BigInt(2 * d), exponent);
  BigInt den = BigInt(1) << halvings;
  return Ratio(std::move(num), std::move(den));
}

std::vector<BigInt> unsort(std::span<const BigInt> x_sorted, std::span<const std::size_t> perm) {
  if (x_sorted.size() != perm.size()) {
    throw std::invalid_argument("unsort: length mismatch");
  }
  std::vector<bool> seen(perm.size(), false);
  std::vector<BigInt> out(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    const std::size_t dst = perm[k];
    if (dst >= perm.size() || seen[dst]) {
      throw std::invalid_argument("unsort: malformed permutation");
    }
    seen[dst] = true;
    out[dst] = x_sorted[k];
  }
  return out;
}

LevelCone level_cone(const SortedWitness& w, const BigInt& d, std::size_t level) {
  if (level < 1 || level > w.n()) throw std::out_of_range("level_cone: level out of range");
  return LevelCone{level, upsilon(d, level),
                   std::span<const BigInt>(w.y_sorted).subspan(level - 1)};
}

bool admits(const LevelCone& cone, const Constraint& c) {
  if (c.level != cone.level || c.coeffs.size() != cone.y.size()) return false;
  for (const BigInt& ci : c.coeffs) {
    if (abs(ci) > cone.cap) return false;
  }
  return dot(c.coeffs, cone.y) <= 0;
}

}  // namespace conebound
