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


#include "conebound/verifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace conebound {

namespace {

Verdict scan_cone(std::span<const BigInt> x, std::span<const BigInt> y, const BigInt& cap,
                  std::size_t level, std::uint64_t budget) {
  if (x.size() != y.size()) throw std::invalid_argument("membership: length mismatch");
  BigInt required = boost::multiprecision::pow(BigInt(2 * cap + 1), static_cast<unsigned>(x.size()));
  if (required > budget) throw BudgetExceeded(std::move(required), budget);

  std::vector<BigInt> c(x.size(), BigInt(-cap));
  for (;;) {
    if (dot(c, y) <= 0 && dot(c, x) > 0) {
      Verdict v;
      v.ok = false;
      v.certificate = Constraint{level, c};
      return v;
    }
    std::size_t k = c.size();
    while (k > 0 && c[k - 1] == cap) c[--k] = -cap;
    if (k == 0) break;
    ++c[k - 1];
  }
  return Verdict::pass();
}

}  // namespace

Verdict lambda_membership(std::span<const BigInt> x, std::span<const BigInt> y, const BigInt& d,
                          std::uint64_t budget) {
  return scan_cone(x, y, d, 1, budget);
}

Verdict level_membership(const PartialSolution& p, const SortedWitness& w, const BigInt& d,
                         std::uint64_t budget) {
  if (p.level < 1 || p.level > w.n() || p.x.size() != w.n() - p.level + 1) {
    throw std::invalid_argument("level_membership: partial solution does not match witness");
  }
  const LevelCone cone = level_cone(w, d, p.level);
  return scan_cone(p.x, cone.y, cone.cap, p.level, budget);
}

Verdict matrix_check(const Matrix& a, std::span<const BigInt> x, const BigInt& d) {
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a[r].size() != x.size()) {
      throw std::invalid_argument("matrix_check: row " + std::to_string(r) + " has " +
                                  std::to_string(a[r].size()) + " columns, expected " +
                                  std::to_string(x.size()));
    }
    for (const BigInt& e : a[r]) {
      if (abs(e) > d) {
        throw std::invalid_argument("matrix_check: entry " + e.str() + " in row " +
                                    std::to_string(r) + " outside [-d, d]");
      }
    }
  }
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (dot(a[r], x) > 0) {
      Verdict v;
      v.ok = false;
      v.certificate = Constraint{1, a[r]};
      v.index = r;
      return v;
    }
  }
  return Verdict::pass();
}

Verdict bound_check(std::span<const BigInt> x, std::size_t n, const BigInt& d) {
  const Ratio bound = bound_value(n, d);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (Ratio(x[i]) > bound) {
      Verdict v;
      v.ok = false;
      v.index = i;
      return v;
    }
  }
  return Verdict::pass();
}

}  // namespace conebound
