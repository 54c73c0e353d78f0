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


#include "conebound/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace conebound {

namespace {

using Json = nlohmann::ordered_json;

const Json& field(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

BigInt decimal(const Json& v, const char* what) {
  if (!v.is_string()) throw ParseError(std::string(what) + ": expected a decimal string");
  try {
    return parse_decimal(v.get_ref<const std::string&>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

std::vector<BigInt> decimal_list(const Json& v, const char* what) {
  if (!v.is_array()) throw ParseError(std::string(what) + ": expected an array");
  std::vector<BigInt> out;
  out.reserve(v.size());
  for (const Json& e : v) out.push_back(decimal(e, what));
  return out;
}

Json to_json(std::span<const BigInt> values) {
  Json arr = Json::array();
  for (const BigInt& v : values) arr.push_back(to_decimal(v));
  return arr;
}

// JSON integer field that must be non-negative and fit in 64 bits.
std::uint64_t unsigned_field(const Json& v, const char* what) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  throw ParseError(std::string(what) + ": expected a non-negative integer");
}

BigInt integer_field(const Json& v, const char* what) {
  if (v.is_number_unsigned()) return BigInt(v.get<std::uint64_t>());
  if (v.is_number_integer()) return BigInt(v.get<std::int64_t>());
  throw ParseError(std::string(what) + ": expected an integer");
}

Json integer_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) {
    return Json(v.convert_to<std::uint64_t>());
  }
  if (v < 0 && v >= std::numeric_limits<std::int64_t>::min()) {
    return Json(v.convert_to<std::int64_t>());
  }
  throw std::invalid_argument("value " + v.str() + " does not fit a JSON integer field");
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json bound_json(const BoundResult& b) {
  Json o;
  o["num"] = to_decimal(b.value.num());
  o["den"] = to_decimal(b.value.den());
  o["constraint"] = to_json(b.achieving.coeffs);
  return o;
}

BoundResult parse_bound(const Json& o, std::size_t level) {
  if (!o.is_object()) throw ParseError("bound: expected an object");
  BigInt den = decimal(field(o, "den"), "den");
  if (den == 0) throw ParseError("bound: zero denominator");
  BoundResult b;
  b.value = Ratio(decimal(field(o, "num"), "num"), std::move(den));
  b.achieving = Constraint{level, decimal_list(field(o, "constraint"), "constraint")};
  return b;
}

}  // namespace

std::string emit_instance(const InstanceFile& f) {
  Json j;
  j["n"] = f.problem.n;
  j["d"] = integer_json(f.problem.d);
  j["y"] = to_json(f.problem.y);
  if (f.hidden) {
    Json h;
    Json rows = Json::array();
    for (const auto& row : f.hidden->matrix) rows.push_back(to_json(row));
    h["matrix"] = std::move(rows);
    h["planted"] = to_json(f.hidden->planted);
    h["seed"] = std::to_string(f.hidden->seed);
    h["scale"] = to_decimal(f.hidden->scale);
    j["hidden"] = std::move(h);
  }
  return j.dump(2) + "\n";
}

InstanceFile parse_instance(std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_object()) throw ParseError("instance: expected a JSON object");
  InstanceFile f;
  const Json& n = field(j, "n");
  if (n.is_number_integer() && !n.is_number_unsigned()) {
    throw ValidationError(ValidationFailure::kDimensionTooSmall, "n must be at least 1");
  }
  f.problem.n = unsigned_field(n, "n");
  f.problem.d = integer_field(field(j, "d"), "d");
  f.problem.y = decimal_list(field(j, "y"), "y");
  if (auto it = j.find("hidden"); it != j.end()) {
    const Json& h = *it;
    if (!h.is_object()) throw ParseError("hidden: expected an object");
    HiddenSection hs;
    const Json& rows = field(h, "matrix");
    if (!rows.is_array()) throw ParseError("matrix: expected an array of rows");
    for (const Json& row : rows) hs.matrix.push_back(decimal_list(row, "matrix"));
    hs.planted = decimal_list(field(h, "planted"), "planted");
    const BigInt seed = decimal(field(h, "seed"), "seed");
    if (seed < 0 || seed > std::numeric_limits<std::uint64_t>::max()) {
      throw ParseError("seed: outside the unsigned 64-bit range");
    }
    hs.seed = seed.convert_to<std::uint64_t>();
    hs.scale = decimal(field(h, "scale"), "scale");
    f.hidden = std::move(hs);
  }
  return f;
}

InstanceFile load_instance(std::string_view text) {
  InstanceFile f = parse_instance(text);
  validate(f.problem);
  if (f.hidden) validate_instance(to_hidden_instance(f));
  return f;
}

InstanceFile to_instance_file(const HiddenInstance& inst) {
  return InstanceFile{inst.problem,
                      HiddenSection{inst.hidden_matrix, inst.planted, inst.seed, inst.scale}};
}

HiddenInstance to_hidden_instance(const InstanceFile& f) {
  if (!f.hidden) throw std::invalid_argument("instance has no hidden section");
  return HiddenInstance{f.problem, f.hidden->matrix, f.hidden->planted, f.hidden->seed,
                        f.hidden->scale};
}

ResultFile make_result(const CompressOutput& out) {
  ResultFile f;
  f.x = out.x;
  f.bound = out.bound;
  f.max_x = *std::max_element(out.x.begin(), out.x.end());
  f.perm = out.witness.perm;
  f.steps = out.trace;
  return f;
}

std::string emit_result(const ResultFile& f) {
  Json j;
  j["trace_version"] = f.trace_version;
  j["x"] = to_json(f.x);
  j["bound"] = Json{{"num", to_decimal(f.bound.num())}, {"den", to_decimal(f.bound.den())}};
  j["max_x"] = to_decimal(f.max_x);
  j["perm"] = f.perm;
  Json steps = Json::array();
  for (const StepRecord& s : f.steps) {
    Json o;
    o["level"] = s.level;
    o["cap"] = to_decimal(s.cap);
    o["upper"] = bound_json(s.upper);
    o["lower"] = bound_json(s.lower);
    o["scale"] = to_decimal(s.scale);
    o["partial"] = to_json(s.partial_after.x);
    steps.push_back(std::move(o));
  }
  j["steps"] = std::move(steps);
  return j.dump(2) + "\n";
}

ResultFile parse_result(std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_object()) throw ParseError("result: expected a JSON object");
  ResultFile f;
  const Json& version = field(j, "trace_version");
  if (!version.is_number_integer()) throw ParseError("trace_version: expected an integer");
  f.trace_version = version.get<int>();
  if (f.trace_version != kTraceVersion) {
    throw ParseError("unsupported trace_version " + std::to_string(f.trace_version));
  }
  f.x = decimal_list(field(j, "x"), "x");
  const Json& bound = field(j, "bound");
  if (!bound.is_object()) throw ParseError("bound: expected an object");
  BigInt den = decimal(field(bound, "den"), "bound.den");
  if (den == 0) throw ParseError("bound: zero denominator");
  f.bound = Ratio(decimal(field(bound, "num"), "bound.num"), std::move(den));
  f.max_x = decimal(field(j, "max_x"), "max_x");
  const Json& perm = field(j, "perm");
  if (!perm.is_array()) throw ParseError("perm: expected an array");
  for (const Json& p : perm) {
    if (!p.is_number_unsigned()) throw ParseError("perm: expected non-negative integers");
    f.perm.push_back(p.get<std::size_t>());
  }
  const Json& steps = field(j, "steps");
  if (!steps.is_array()) throw ParseError("steps: expected an array");
  for (const Json& o : steps) {
    if (!o.is_object()) throw ParseError("step: expected an object");
    StepRecord s;
    s.level = unsigned_field(field(o, "level"), "level");
    s.cap = decimal(field(o, "cap"), "cap");
    s.upper = parse_bound(field(o, "upper"), s.level);
    s.lower = parse_bound(field(o, "lower"), s.level);
    s.chosen = s.upper.value;
    s.scale = decimal(field(o, "scale"), "scale");
    s.partial_after = PartialSolution{s.level, decimal_list(field(o, "partial"), "partial")};
    f.steps.push_back(std::move(s));
  }
  return f;
}

std::vector<BigInt> replay(const ResultFile& f) {
  const std::size_t n = f.perm.size();
  if (n == 0) throw std::invalid_argument("replay: empty permutation");
  if (f.steps.size() != n - 1) throw std::invalid_argument("replay: expected n - 1 steps");
  std::vector<BigInt> partial{BigInt(1)};
  for (std::size_t k = 0; k < f.steps.size(); ++k) {
    const StepRecord& s = f.steps[k];
    if (s.level != n - 1 - k) throw std::invalid_argument("replay: levels out of order");
    const Ratio& chosen = s.upper.value;
    if (s.scale < 1 || (chosen.num() * s.scale) % chosen.den() != 0) {
      throw std::invalid_argument("replay: scale does not clear the denominator");
    }
    std::vector<BigInt> next;
    next.reserve(partial.size() + 1);
    next.push_back(chosen.num() * s.scale / chosen.den());
    for (const BigInt& v : partial) next.push_back(v * s.scale);
    if (next != s.partial_after.x) {
      throw std::invalid_argument("replay: level " + std::to_string(s.level) +
                                  " partial does not match the recorded one");
    }
    partial = std::move(next);
  }
  return unsort(partial, f.perm);
}

std::vector<BigInt> parse_solution(std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_object()) throw ParseError("solution: expected a JSON object");
  return decimal_list(field(j, "x"), "x");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace conebound
