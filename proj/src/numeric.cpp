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


#include "conebound/numeric.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace conebound {

Ratio::Ratio(BigInt num) : num_(std::move(num)), den_(1) {}

Ratio::Ratio(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("ratio: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
  } else {
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g < 0) g = -g;
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }
  assert(den_ >= 1);
}

std::string Ratio::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.str(); }

std::strong_ordering fraction_cmp(const BigInt& a, const BigInt& b, const BigInt& c,
                                  const BigInt& d) {
  const BigInt lhs = a * d;
  const BigInt rhs = c * b;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
  return fraction_cmp(a.num_, a.den_, b.num_, b.den_);
}

std::strong_ordering ratio_cmp(const Ratio& a, const Ratio& b) { return a <=> b; }

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b <= 0) throw std::domain_error("floor_div: divisor must be positive");
  BigInt q = a / b;  // truncates toward zero
  if (a < 0 && q * b != a) --q;
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  if (b <= 0) throw std::domain_error("ceil_div: divisor must be positive");
  BigInt q = a / b;
  if (a > 0 && q * b != a) ++q;
  return q;
}

BigInt dot(std::span<const BigInt> a, std::span<const BigInt> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  BigInt acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

std::string to_decimal(const BigInt& v) { return v.str(); }

BigInt parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && text[0] == '-') pos = 1;
  if (pos == text.size()) {
    throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
  }
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
    }
  }
  // cpp_int reads a leading 0 as an octal prefix.
  while (pos + 1 < text.size() && text[pos] == '0') ++pos;
  BigInt v(std::string(text.substr(pos)));
  return text[0] == '-' ? BigInt(-v) : v;
}

}  // namespace conebound
