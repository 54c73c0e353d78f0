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


#include "conebound/trace_text.hpp"

#include <sstream>

namespace conebound {

namespace {

std::string term(const BigInt& magnitude, std::size_t index) {
  std::string var = "x(" + std::to_string(index) + ")";
  return magnitude == 1 ? var : magnitude.str() + var;
}

std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string s = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) s += " + " + terms[i];
  return s;
}

std::string assignment(const PartialSolution& p) {
  std::string s;
  for (std::size_t k = 0; k < p.x.size(); ++k) {
    if (k) s += ", ";
    s += "x(" + std::to_string(p.level + k) + ")=" + p.x[k].str();
  }
  return s;
}

}  // namespace

std::string format_inequality(const Constraint& c, bool flip) {
  std::vector<std::string> pos, neg;
  for (std::size_t k = 0; k < c.coeffs.size(); ++k) {
    const BigInt& v = c.coeffs[k];
    if (v > 0) pos.push_back(term(v, c.level + k));
    if (v < 0) neg.push_back(term(BigInt(-v), c.level + k));
  }
  if (flip) return join_terms(neg) + " >= " + join_terms(pos);
  return join_terms(pos) + " <= " + join_terms(neg);
}

std::string narrate(const CompressOutput& out) {
  std::ostringstream os;
  const std::size_t n = out.witness.n();
  int item = 1;
  bool sorted_order = true;
  for (std::size_t k = 0; k < n; ++k) sorted_order = sorted_order && out.witness.perm[k] == k;
  if (!sorted_order) {
    os << "Working in sorted coordinates, y = [";
    for (std::size_t k = 0; k < n; ++k) os << (k ? "," : "") << out.witness.y_sorted[k];
    os << "].\n";
  }
  os << item++ << ". Initialize x(" << n << ")=1.\n";
  for (const StepRecord& s : out.trace) {
    const std::string var = "x(" + std::to_string(s.level) + ")";
    os << item++ << ". Level " << s.level << " (coefficient cap " << s.cap
       << "): tightest upper bound " << format_inequality(s.upper.achieving) << " gives " << var
       << " <= " << s.upper.value << "; tightest lower bound "
       << format_inequality(s.lower.achieving, true) << " gives " << var << " >= "
       << s.lower.value << ".\n";
    if (s.scale == 1) {
      os << item++ << ". Choose " << var << "=" << s.chosen
         << "; no rescaling needed, partial solution " << assignment(s.partial_after) << ".\n";
    } else {
      os << item++ << ". Initialize " << var << "=" << s.chosen << ". Multiply by " << s.scale
         << " to obtain the integral partial solution " << assignment(s.partial_after) << ".\n";
    }
  }
  os << (sorted_order ? "Result: X=[" : "Result in original order: X=[");
  for (std::size_t i = 0; i < out.x.size(); ++i) os << (i ? "," : "") << out.x[i];
  os << "], bound " << out.bound << ".\n";
  return os.str();
}

}  // namespace conebound
