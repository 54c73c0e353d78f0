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


#include "conebound/instance_gen.hpp"

#include <limits>
#include <string>

namespace conebound {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  // Values below `threshold` would bias the modulo; 2^64 mod bound of them.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

HiddenInstance generate(const GeneratorOptions& options) {
  if (options.n < 1 || options.d < 1 || options.m < 1 || options.scale < 1 ||
      options.max_entry < 1 || options.retry_cap < 1) {
    throw std::invalid_argument("generate: n, d, m, scale, max_entry, retry_cap must be >= 1");
  }
  if (options.d > std::numeric_limits<std::uint64_t>::max() / 2 ||
      options.max_entry == std::numeric_limits<std::uint64_t>::max()) {
    throw std::invalid_argument("generate: range too large");
  }
  std::mt19937_64 rng(options.seed);
  const std::size_t n = options.n;

  HiddenInstance inst;
  inst.seed = options.seed;
  inst.scale = options.scale;
  inst.planted.resize(n);
  for (;;) {
    bool nonzero = false;
    for (auto& v : inst.planted) {
      v = uniform_below(rng, options.max_entry + 1);
      nonzero = nonzero || v != 0;
    }
    if (nonzero) break;
  }

  const std::uint64_t width = 2 * options.d + 1;
  const BigInt d(options.d);
  std::vector<BigInt> row(n);
  for (std::size_t r = 0; r < options.m; ++r) {
    std::uint64_t attempts = 0;
    for (;;) {
      if (attempts++ == options.retry_cap) {
        throw RejectionCapExceeded("generate: row " + std::to_string(r) + " rejected " +
                                   std::to_string(options.retry_cap) + " times");
      }
      for (auto& e : row) e = BigInt(uniform_below(rng, width)) - d;
      if (dot(row, inst.planted) <= 0) break;
    }
    inst.hidden_matrix.push_back(row);
  }

  inst.problem.n = n;
  inst.problem.d = d;
  inst.problem.y.reserve(n);
  for (const BigInt& v : inst.planted) inst.problem.y.push_back(v * options.scale);
  return inst;
}

void validate_instance(const HiddenInstance& inst) {
  validate(inst.problem);
  const auto fail = [](const std::string& what) {
    throw ValidationError(ValidationFailure::kInvalidHiddenInstance, what);
  };
  const std::size_t n = inst.problem.n;
  if (inst.scale < 1) fail("scale must be at least 1");
  if (inst.planted.size() != n) fail("planted vector has the wrong length");
  bool nonzero = false;
  for (const BigInt& v : inst.planted) {
    if (v < 0) fail("planted vector has a negative entry");
    nonzero = nonzero || v != 0;
  }
  if (!nonzero) fail("planted vector is zero");
  for (std::size_t i = 0; i < n; ++i) {
    if (inst.problem.y[i] != inst.scale * inst.planted[i]) {
      fail("witness is not scale * planted at entry " + std::to_string(i));
    }
  }
  for (std::size_t r = 0; r < inst.hidden_matrix.size(); ++r) {
    const auto& row = inst.hidden_matrix[r];
    if (row.size() != n) fail("hidden row " + std::to_string(r) + " has the wrong length");
    for (const BigInt& e : row) {
      if (abs(e) > inst.problem.d) fail("hidden row " + std::to_string(r) + " exceeds d");
    }
    if (dot(row, inst.planted) > 0) {
      fail("hidden row " + std::to_string(r) + " rejects the planted vector");
    }
    if (dot(row, inst.problem.y) > 0) {
      fail("hidden row " + std::to_string(r) + " rejects the witness");
    }
  }
}

EndToEndReport end_to_end(const HiddenInstance& inst, std::uint64_t compress_budget,
                          std::uint64_t verify_budget) {
  validate_instance(inst);
  const auto start = std::chrono::steady_clock::now();

  EndToEndReport report;
  report.output = compress(inst.problem, compress_budget);
  const auto& x = report.output.x;

  bool nonzero = false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0) {
      report.solution.ok = false;
      report.solution.index = i;
      break;
    }
    nonzero = nonzero || x[i] != 0;
  }
  if (report.solution.ok && !nonzero) report.solution.ok = false;

  report.matrix = matrix_check(inst.hidden_matrix, x, inst.problem.d);
  try {
    report.lambda = lambda_membership(x, inst.problem.y, inst.problem.d, verify_budget);
  } catch (const BudgetExceeded&) {
    report.lambda.reset();
  }
  report.bound = bound_check(x, inst.problem.n, inst.problem.d);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace conebound
