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


// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "conebound/compressor.hpp"
#include "conebound/instance_gen.hpp"
#include "conebound/io.hpp"
#include "conebound/model.hpp"
#include "conebound/verifier.hpp"
#include "oracles.hpp"

namespace {

using namespace conebound;
using Clock = std::chrono::steady_clock;

constexpr double kGoldenSeconds = 1.0;
constexpr double kEndToEndSeconds = 120.0;
constexpr double kPartialSeconds = 30.0;
constexpr int kEndToEndInstances = 200;
constexpr int kPartialInstances = 50;
constexpr int kClosedFormConfigs = 100;
constexpr int kDeterminismInstances = 20;
constexpr int kFuzzCases = 1000;
constexpr std::uint64_t kLambdaLimit = 10'000'000;

std::vector<BigInt> ints(std::initializer_list<long long> v) {
  std::vector<BigInt> out;
  for (long long e : v) out.emplace_back(e);
  return out;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Check {
  bool ok = true;
  std::ostringstream why;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

// Structural checks on a trace that every compressor run must satisfy:
// lower <= upper, the combined constraint holds on the previous partial, and
// its coefficients stay within 2 * cap^2.
void check_trace_structure(const CompressOutput& out, Check& c) {
  const std::size_t n = out.witness.n();
  PartialSolution tail{n, ints({1})};
  for (const auto& s : out.trace) {
    c.expect(s.lower.value <= s.upper.value, "lower > upper at level " + std::to_string(s.level));
    const auto& cu = s.upper.achieving.coeffs;
    const auto& cl = s.lower.achieving.coeffs;
    const BigInt limit = 2 * s.cap * s.cap;
    BigInt combined = 0;
    for (std::size_t k = 1; k < cu.size(); ++k) {
      const BigInt coeff = cl[k] * cu[0] - cu[k] * cl[0];
      c.expect(abs(coeff) <= limit, "combined coefficient over limit");
      combined += coeff * tail.x[k - 1];
    }
    c.expect(combined <= 0, "combined constraint violated at level " + std::to_string(s.level));
    tail = s.partial_after;
  }
}

HiddenInstance generated(std::size_t n, std::uint64_t d, std::uint64_t seed, BigInt scale) {
  GeneratorOptions g;
  g.n = n;
  g.d = d;
  g.m = n;
  g.seed = seed;
  g.scale = std::move(scale);
  return generate(g);
}

bool criterion_golden(std::string& detail) {
  Check c;
  const auto start = Clock::now();
  const CompressOutput out = compress({4, 1, ints({2, 3, 7, 29})});
  const double t = seconds_since(start);
  c.expect(out.x == ints({1, 1, 2, 8}), "x != [1,1,2,8]");
  c.expect(out.bound == Ratio(16), "bound != 16");
  c.expect(out.trace.size() == 3, "trace length != 3");
  if (out.trace.size() == 3) {
    const auto& s = out.trace;
    c.expect(s[0].upper.value == Ratio(1, 4) && s[0].lower.value == Ratio(1, 5), "level 3 bounds");
    c.expect(s[0].upper.achieving.coeffs == ints({4, -1}), "level 3 upper constraint");
    c.expect(s[0].lower.achieving.coeffs == ints({-5, 1}), "level 3 lower constraint");
    c.expect(s[0].scale == 4 && s[0].partial_after.x == ints({1, 4}), "level 3 partial");
    c.expect(s[1].upper.value == Ratio(1, 2) && s[1].lower.value == Ratio(0), "level 2 bounds");
    c.expect(s[1].scale == 2 && s[1].partial_after.x == ints({1, 2, 8}), "level 2 partial");
    c.expect(s[2].upper.value == Ratio(1) && s[2].scale == 1, "level 1 choice");
  }
  for (const auto& v : out.x) c.expect(v <= 16, "entry above bound");
  c.expect(t < kGoldenSeconds, "runtime " + std::to_string(t) + "s");
  detail = c.ok ? "x=[1,1,2,8] in " + std::to_string(t) + "s" : c.why.str();
  return c.ok;
}

bool criterion_bound_table(std::string& detail) {
  Check c;
  c.expect(bound_value(4, 1) == Ratio(16), "bound(4,1) != 16");
  c.expect(upsilon(1, 1) == 1 && upsilon(1, 2) == 2 && upsilon(1, 3) == 8, "upsilon(1, 1..3)");
  for (int d = 1; d <= 3; ++d) {
    for (std::size_t j = 1; j <= 8; ++j) {
      c.expect(upsilon(d, j) == testing::upsilon_closed_form(d, j),
               "recurrence != closed form at d=" + std::to_string(d) + " j=" + std::to_string(j));
    }
    for (std::size_t n = 1; n <= 8; ++n) {
      BigInt product = 1;
      for (std::size_t i = 1; i < n; ++i) product *= upsilon(d, i);
      c.expect(bound_value(n, d) == Ratio(product), "bound != product of upsilon(1..n-1)");
    }
  }
  detail = c.ok ? "table matches for d<=3, j<=8" : c.why.str();
  return c.ok;
}

bool criterion_end_to_end(std::string& detail, std::vector<CompressOutput>& traces) {
  Check c;
  int lambda_checked = 0;
  const auto start = Clock::now();
  for (int seed = 0; seed < kEndToEndInstances && c.ok; ++seed) {
    const std::size_t n = 2 + seed % 4;
    const std::uint64_t d = 1 + (seed / 4) % 2;
    const BigInt scale = seed % 2 == 0 ? BigInt(1) : BigInt(1'000'000);
    const HiddenInstance inst = generated(n, d, seed, scale);
    const EndToEndReport r = end_to_end(inst, kDefaultCompressBudget, kLambdaLimit);
    const std::string tag = " (seed " + std::to_string(seed) + ")";
    c.expect(r.solution.ok, "sanity" + tag);
    c.expect(r.matrix.ok, "matrix" + tag);
    c.expect(r.bound.ok, "bound" + tag);
    BigInt scan = boost::multiprecision::pow(BigInt(2 * d + 1), static_cast<unsigned>(n));
    if (scan <= kLambdaLimit) {
      c.expect(r.lambda.has_value() && r.lambda->ok, "lambda" + tag);
      ++lambda_checked;
    }
    traces.push_back(r.output);
  }
  const double t = seconds_since(start);
  c.expect(t < kEndToEndSeconds, "runtime " + std::to_string(t) + "s");
  detail = c.ok ? std::to_string(kEndToEndInstances) + " instances, " + std::to_string(lambda_checked) +
                      " lambda scans, " + std::to_string(t) + "s"
                : c.why.str();
  return c.ok;
}

bool criterion_partials(std::string& detail, std::vector<CompressOutput>& traces) {
  Check c;
  int partials = 0;
  const auto start = Clock::now();
  for (int seed = 0; seed < kPartialInstances && c.ok; ++seed) {
    const std::size_t n = 2 + seed % 3;
    const HiddenInstance inst = generated(n, 1, 1000 + seed, 1);
    const CompressOutput out = compress(inst.problem);
    const BigInt d = inst.problem.d;
    c.expect(level_membership({n, ints({1})}, out.witness, d).ok, "initial partial");
    for (const auto& s : out.trace) {
      ++partials;
      const Verdict v = level_membership(s.partial_after, out.witness, d);
      c.expect(v.ok, "partial at level " + std::to_string(s.level) + " (seed " +
                         std::to_string(1000 + seed) + ")");
    }
    traces.push_back(out);
  }
  const double t = seconds_since(start);
  c.expect(t < kPartialSeconds, "runtime " + std::to_string(t) + "s");
  detail = c.ok ? std::to_string(partials) + " partials in " + std::to_string(t) + "s" : c.why.str();
  return c.ok;
}

bool criterion_closed_form(std::string& detail) {
  Check c;
  std::mt19937_64 rng(8080);
  for (int i = 0; i < kClosedFormConfigs && c.ok; ++i) {
    const std::size_t n = 2 + rng() % 3;
    const int d = 1 + static_cast<int>(rng() % 2);
    const SortedWitness w = validate({n, d, testing::random_witness(rng, n, 40)});
    const std::size_t j = 1 + rng() % (n - 1);
    const BigInt cap = upsilon(d, j);
    std::vector<BigInt> tail_x(n - j);
    for (auto& v : tail_x) v = rng() % 10;
    tail_x.back() = 1 + rng() % 9;
    const PartialSolution tail{j + 1, tail_x};
    for (BoundSide side : {BoundSide::kUpper, BoundSide::kLower}) {
      const BoundResult fast = side == BoundSide::kUpper ? tightest_upper(j, w, tail, cap)
                                                         : tightest_lower(j, w, tail, cap);
      const BoundResult slow = testing::naive_tightest(side, j, w.y_sorted, tail_x, cap);
      c.expect(fast == slow, "mismatch at config " + std::to_string(i));
    }
  }
  detail = c.ok ? std::to_string(kClosedFormConfigs) + " configurations agree" : c.why.str();
  return c.ok;
}

bool criterion_structure(std::string& detail, const std::vector<CompressOutput>& traces) {
  Check c;
  std::size_t steps = 0;
  for (const auto& out : traces) {
    check_trace_structure(out, c);
    steps += out.trace.size();
  }
  detail = c.ok ? std::to_string(steps) + " steps over " + std::to_string(traces.size()) + " traces"
                : c.why.str();
  return c.ok;
}

bool criterion_determinism(std::string& detail) {
  Check c;
  for (int seed = 0; seed < kDeterminismInstances && c.ok; ++seed) {
    const HiddenInstance inst = generated(2 + seed % 4, 1 + seed % 2, 500 + seed, 1);
    const ProblemInput& p = inst.problem;
    const CompressOutput a = compress(p);
    c.expect(emit_result(make_result(a)) == emit_result(make_result(compress(p))), "rerun differs");
    for (BigInt k : {BigInt(2), BigInt(1'000'000)}) {
      ProblemInput scaled = p;
      for (auto& v : scaled.y) v *= k;
      const CompressOutput b = compress(scaled);
      c.expect(a.x == b.x && a.trace == b.trace, "scaled witness differs (seed " +
                                                      std::to_string(500 + seed) + ")");
    }
  }
  detail = c.ok ? std::to_string(kDeterminismInstances) + " instances, k in {2, 10^6}" : c.why.str();
  return c.ok;
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(CONEBOUND_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool criterion_files_and_cli(std::string& detail) {
  Check c;
  std::mt19937_64 rng(9090);
  for (int i = 0; i < kFuzzCases && c.ok; ++i) {
    GeneratorOptions g;
    g.n = 1 + rng() % 4;
    g.d = 1 + rng() % 2;
    g.m = 1 + rng() % 4;
    g.seed = rng();
    g.scale = 1 + rng() % 1000;
    const InstanceFile f = to_instance_file(generate(g));
    const std::string text = emit_instance(f);
    const InstanceFile back = load_instance(text);
    c.expect(back == f && emit_instance(back) == text, "instance round trip " + std::to_string(i));
    if (i % 10 == 0) {
      const ResultFile r = make_result(compress(f.problem));
      const std::string rt = emit_result(r);
      const ResultFile rb = parse_result(rt);
      c.expect(rb == r && emit_result(rb) == rt, "result round trip " + std::to_string(i));
      c.expect(replay(rb) == r.x, "replay " + std::to_string(i));
    }
  }

  const auto dir = std::filesystem::temp_directory_path() /
                   ("conebound_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  auto file = [&](const std::string& name, const std::string& contents) {
    const std::string p = (dir / name).string();
    write_text_file(p, contents);
    return p;
  };
  const std::string worked = file("worked.json", R"({"n": 4, "d": 1, "y": ["2", "3", "7", "29"]})");
  const std::string hidden = file("hidden.json", R"({"n": 4, "d": 1, "y": ["2", "3", "7", "29"],
    "hidden": {"matrix": [["1", "-1", "0", "0"], ["1", "1", "-1", "0"], ["0", "1", "1", "-1"]],
               "planted": ["2", "3", "7", "29"], "seed": "0", "scale": "1"}})");
  const std::string good = file("good.json", R"({"x": ["1", "1", "2", "8"]})");
  const std::string bad = file("bad.json", R"({"x": ["2", "1", "2", "8"]})");
  const std::string result = (dir / "result.json").string();
  const std::pair<std::string, int> cases[] = {
      {"compress " + hidden + " --out " + result, 0},
      {"verify " + hidden + " " + good, 0},
      {"verify " + hidden + " " + bad + " --mode lambda", 1},
      {"generate --n 0 --d 1", 2},
      {"compress " + file("bad_json.json", "{oops"), 2},
      {"compress " + file("zero.json", R"({"n": 2, "d": 1, "y": ["0", "0"]})"), 3},
      {"compress " + file("big.json", R"({"n": 6, "d": 2, "y": ["1","2","3","4","5","6"]})") +
           " --budget 10",
       4},
      {"verify " + worked + " " + good + " --mode matrix", 5},
      {"generate --n 1 --d 1 --m 1 --seed 0 --retry-cap 1", 6},
  };
  for (const auto& [args, want] : cases) {
    const int got = run_binary(args);
    c.expect(got == want, "'" + args + "' exited " + std::to_string(got) + ", want " +
                              std::to_string(want));
  }
  try {
    const ResultFile r = parse_result(read_text_file(result));
    c.expect(replay(r) == ints({1, 1, 2, 8}), "CLI trace replay");
  } catch (const std::exception& e) {
    c.expect(false, std::string("CLI result unreadable: ") + e.what());
  }
  std::filesystem::remove_all(dir);
  detail = c.ok ? std::to_string(kFuzzCases) + " round trips, exit codes 0-6, replay ok" : c.why.str();
  return c.ok;
}

}  // namespace

int main() {
  std::vector<CompressOutput> traces;
  const std::vector<std::pair<std::string, std::function<bool(std::string&)>>> criteria = {
      {"golden reproduction", criterion_golden},
      {"bound and upsilon table", criterion_bound_table},
      {"end-to-end generated instances", [&](std::string& d) { return criterion_end_to_end(d, traces); }},
      {"partial solutions in level cones", [&](std::string& d) { return criterion_partials(d, traces); }},
      {"closed-form enumeration matches naive scan", criterion_closed_form},
      {"per-step structural invariants", [&](std::string& d) { return criterion_structure(d, traces); }},
      {"determinism and scale invariance", criterion_determinism},
      {"file round trips, CLI exit codes, replay", criterion_files_and_cli},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    std::string detail;
    bool ok = false;
    try {
      ok = fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << index << ": " << name << " - " << detail
              << std::endl;
    failures += ok ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
