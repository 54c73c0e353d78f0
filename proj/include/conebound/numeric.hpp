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

#include <compare>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace conebound {

// Every integer quantity in the library. Values grow doubly exponentially in
// the dimension, so nothing downstream is allowed to narrow to a machine word.
using BigInt = boost::multiprecision::cpp_int;

// Exact rational, always stored reduced with a positive denominator.
class Ratio {
 public:
  Ratio() : num_(0), den_(1) {}
  Ratio(BigInt num);  // NOLINT(google-explicit-constructor)
  // Throws std::domain_error when den == 0.
  Ratio(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  // "num/den", or just "num" when the denominator is 1.
  std::string str() const;

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b);

 private:
  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Ratio& r);

inline Ratio ratio_make(BigInt num, BigInt den) {
  return Ratio(std::move(num), std::move(den));
}

// Exact three-way comparison by cross-multiplication.
std::strong_ordering ratio_cmp(const Ratio& a, const Ratio& b);

// Compare a/b against c/d for b, d > 0 without reducing either side.
std::strong_ordering fraction_cmp(const BigInt& a, const BigInt& b,
                                  const BigInt& c, const BigInt& d);

// Floor and ceiling of a/b, rounding toward -inf / +inf for either sign of a.
// Throws std::domain_error unless b > 0.
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);

BigInt dot(std::span<const BigInt> a, std::span<const BigInt> b);

std::string to_decimal(const BigInt& v);
// Accepts an optional leading '-' followed by one or more ASCII digits.
// Throws std::invalid_argument on anything else.
BigInt parse_decimal(std::string_view text);

}  // namespace conebound
