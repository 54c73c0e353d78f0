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


#include "conebound/compressor.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace conebound {

BudgetExceeded::BudgetExceeded(BigInt required, std::uint64_t budget)
    : std::runtime_error("enumeration needs " + required.str() +
                         " coefficient vectors, budget is " + std::to_string(budget)),
      required_(std::move(required)),
      budget_(budget) {}

namespace {

// Candidate bound value num / den with den = |c_j| > 0, kept unreduced so the
// tie rule can compare |c_j| directly.
struct Candidate {
  BigInt num;
  BigInt den;
};

// True when (num, den) should replace `best` on the given side.
bool improves(BoundSide side, const BigInt& num, const BigInt& den, const Candidate& best) {
  const auto c = fraction_cmp(num, den, best.num, best.den);
  if (c == 0) return den < best.den;
  return side == BoundSide::kUpper ? c < 0 : c > 0;
}

// Magnitude of the best c_j for one tail, or false when infeasible.
bool resolve_cj(BoundSide side, const BigInt& s, const BigInt& t, const BigInt& y_j,
                const BigInt& cap, BigInt& magnitude) {
  if (side == BoundSide::kUpper) {
    BigInt hi;
    if (y_j == 0) {
      if (t < 0) return false;
      hi = cap;
    } else {
      hi = t >= cap * y_j ? cap : floor_div(t, y_j);
      if (hi < 1) return false;
    }
    magnitude = s > 0 ? hi : BigInt(1);
    return true;
  }
  // c_j = -a with a in [lo, cap]; -a * y_j <= t.
  BigInt lo = 1;
  if (y_j == 0) {
    if (t < 0) return false;
  } else if (t < 0) {
    lo = ceil_div(-t, y_j);
    if (lo > cap) return false;
  }
  magnitude = s > 0 ? cap : lo;
  return true;
}

Constraint make_constraint(std::size_t j, BigInt cj, const std::vector<BigInt>& tail) {
  Constraint c{j, {}};
  c.coeffs.reserve(tail.size() + 1);
  c.coeffs.push_back(std::move(cj));
  c.coeffs.insert(c.coeffs.end(), tail.begin(), tail.end());
  return c;
}

void check_inputs(std::size_t j, const SortedWitness& w, const PartialSolution& tail,
                  const BigInt& cap) {
  const std::size_t n = w.n();
  if (j < 1 || j >= n) throw std::invalid_argument("bound: level out of range");
  if (tail.level != j + 1 || tail.x.size() != n - j) {
    throw std::invalid_argument("bound: tail does not start at level j + 1");
  }
  if (cap < 1) throw std::invalid_argument("bound: cap must be positive");
  if (w.y_sorted.back() <= 0) throw std::invalid_argument("bound: witness is zero");
}

// Last level: walk c_j and resolve c_n in closed form. Every c_n feasible for
// a given c_j yields a distinct value, so the first strict optimum over
// ascending |c_j| already respects the tie rule.
BoundResult two_variable_bound(BoundSide side, std::size_t j, const SortedWitness& w,
                               const PartialSolution& tail, const BigInt& cap) {
  const BigInt& y_j = w.y_sorted[j - 1];
  const BigInt& y_n = w.y_sorted.back();
  const BigInt& x_n = tail.x.front();

  bool have = false;
  Candidate best;
  BigInt best_cn;
  for (BigInt a = 1; a <= cap; ++a) {
    BigInt cn;
    if (x_n == 0) {
      cn = -cap;
    } else if (side == BoundSide::kUpper) {
      cn = std::min(cap, floor_div(-a * y_j, y_n));
      if (cn < -cap) break;  // stays infeasible for every larger a
    } else {
      cn = std::min(cap, floor_div(a * y_j, y_n));
    }
    // Upper: x(j) <= -cn*x_n / a. Lower: x(j) >= cn*x_n / a.
    BigInt num = side == BoundSide::kUpper ? BigInt(-cn * x_n) : BigInt(cn * x_n);
    if (!have || improves(side, num, a, best)) {
      best = Candidate{std::move(num), a};
      best_cn = cn;
      have = true;
    }
  }
  if (!have) throw InternalInconsistency("no feasible constraint at the last level");

  BigInt cj = side == BoundSide::kUpper ? best.den : BigInt(-best.den);
  return BoundResult{Ratio(best.num, best.den), make_constraint(j, std::move(cj), {best_cn})};
}

// General level: odometer over tails in lexicographic order with S and T
// updated incrementally, c_j resolved per tail.
BoundResult enumerated_bound(BoundSide side, std::size_t j, const SortedWitness& w,
                             const PartialSolution& tail, const BigInt& cap) {
  const std::size_t len = tail.x.size();
  const BigInt& y_j = w.y_sorted[j - 1];
  const std::span<const BigInt> ys = std::span<const BigInt>(w.y_sorted).subspan(j);
  const std::vector<BigInt>& xs = tail.x;

  std::vector<BigInt> digits(len, BigInt(-cap));
  std::vector<BigInt> wrap_x(len), wrap_y(len);
  BigInt s = 0, t = 0;
  for (std::size_t k = 0; k < len; ++k) {
    s += cap * xs[k];
    t += cap * ys[k];
    wrap_x[k] = 2 * cap * xs[k];
    wrap_y[k] = 2 * cap * ys[k];
  }

  bool have = false;
  Candidate best;
  std::vector<BigInt> best_tail;
  BigInt magnitude;
  for (;;) {
    if (resolve_cj(side, s, t, y_j, cap, magnitude)) {
      BigInt num = side == BoundSide::kUpper ? s : BigInt(-s);
      if (!have || improves(side, num, magnitude, best)) {
        best = Candidate{std::move(num), magnitude};
        best_tail = digits;
        have = true;
      }
    }
    bool advanced = false;
    for (std::size_t k = len; k-- > 0;) {
      if (digits[k] < cap) {
        ++digits[k];
        s -= xs[k];
        t -= ys[k];
        advanced = true;
        break;
      }
      digits[k] = -cap;
      s += wrap_x[k];
      t += wrap_y[k];
    }
    if (!advanced) break;
  }
  if (!have) throw InternalInconsistency("no feasible constraint at level " + std::to_string(j));

  BigInt cj = side == BoundSide::kUpper ? best.den : BigInt(-best.den);
  return BoundResult{Ratio(best.num, best.den), make_constraint(j, std::move(cj), best_tail)};
}

BoundResult tightest(BoundSide side, std::size_t j, const SortedWitness& w,
                     const PartialSolution& tail, const BigInt& cap, std::uint64_t budget) {
  check_inputs(j, w, tail, cap);
  BigInt required = enumeration_count(j, w.n(), cap);
  if (required > budget) throw BudgetExceeded(std::move(required), budget);
  if (j + 1 == w.n()) return two_variable_bound(side, j, w, tail, cap);
  return enumerated_bound(side, j, w, tail, cap);
}

}  // namespace

std::optional<CjChoice> inner_optimize_cj(BoundSide side, const BigInt& s, const BigInt& t,
                                          const BigInt& y_j, const BigInt& cap) {
  if (cap < 1) throw std::invalid_argument("inner_optimize_cj: cap must be positive");
  BigInt magnitude;
  if (!resolve_cj(side, s, t, y_j, cap, magnitude)) return std::nullopt;
  if (side == BoundSide::kUpper) return CjChoice{magnitude, Ratio(s, magnitude)};
  return CjChoice{BigInt(-magnitude), Ratio(-s, magnitude)};
}

BigInt enumeration_count(std::size_t j, std::size_t n, const BigInt& cap) {
  if (j + 1 == n) return cap;
  return boost::multiprecision::pow(BigInt(2 * cap + 1), static_cast<unsigned>(n - j));
}

BoundResult tightest_upper(std::size_t j, const SortedWitness& w, const PartialSolution& tail,
                           const BigInt& cap, std::uint64_t budget) {
  return tightest(BoundSide::kUpper, j, w, tail, cap, budget);
}

BoundResult tightest_lower(std::size_t j, const SortedWitness& w, const PartialSolution& tail,
                           const BigInt& cap, std::uint64_t budget) {
  return tightest(BoundSide::kLower, j, w, tail, cap, budget);
}

StepRecord step(std::size_t j, const SortedWitness& w, const BigInt& d,
                const PartialSolution& tail, std::uint64_t budget) {
  StepRecord rec;
  rec.level = j;
  rec.cap = upsilon(d, j);
  rec.upper = tightest_upper(j, w, tail, rec.cap, budget);
  rec.lower = tightest_lower(j, w, tail, rec.cap, budget);
  if (rec.lower.value > rec.upper.value) {
    throw InternalInconsistency("level " + std::to_string(j) + ": lower bound " +
                                rec.lower.value.str() + " exceeds upper bound " +
                                rec.upper.value.str());
  }
  rec.chosen = rec.upper.value;
  rec.scale = rec.chosen.den();
  rec.partial_after.level = j;
  rec.partial_after.x.reserve(tail.x.size() + 1);
  rec.partial_after.x.push_back(rec.chosen.num());
  for (const BigInt& v : tail.x) rec.partial_after.x.push_back(v * rec.scale);
  return rec;
}

CompressOutput compress(const ProblemInput& input, std::uint64_t budget) {
  CompressOutput out;
  out.witness = validate(input);
  out.bound = bound_value(input.n, input.d);

  PartialSolution partial{input.n, {BigInt(1)}};
  for (std::size_t j = input.n - 1; j >= 1; --j) {
    StepRecord rec = step(j, out.witness, input.d, partial, budget);
    partial = rec.partial_after;
    out.trace.push_back(std::move(rec));
  }
  out.x = unsort(partial.x, out.witness.perm);

  const BigInt& largest = *std::max_element(out.x.begin(), out.x.end());
  if (Ratio(largest) > out.bound) {
    throw InternalInconsistency("result exceeds the bound " + out.bound.str());
  }
  return out;
}

}  // namespace conebound
