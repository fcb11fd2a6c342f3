// Copyright 2026 The eigs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eigs/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace eigs {

namespace {
constexpr unsigned kKeepBits = 100;
}

bool BigInt::fits_int64() const {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t BigInt::to_int64() const { return v.convert_to<std::int64_t>(); }

double to_double(const BigInt& a) { return a.v.convert_to<double>(); }

double log(const BigInt& a) {
  if (a.sign() <= 0) return -std::numeric_limits<double>::infinity();
  const unsigned top = boost::multiprecision::msb(a.v);
  if (top <= kKeepBits) return std::log(a.v.convert_to<long double>());
  const unsigned shift = top - kKeepBits;
  boost::multiprecision::cpp_int head = a.v >> shift;
  return static_cast<double>(std::log(head.convert_to<long double>()) + shift * std::log(2.0L));
}

double ratio(const BigInt& a, const BigInt& b) {
  if (a.is_zero()) return 0.0;
  const unsigned ta = boost::multiprecision::msb(boost::multiprecision::abs(a.v));
  const unsigned tb = boost::multiprecision::msb(b.v);
  const unsigned top = std::max(ta, tb);
  if (top <= kKeepBits) return static_cast<double>(a.v.convert_to<long double>() / b.v.convert_to<long double>());
  const unsigned shift = top - kKeepBits;
  if (tb < shift + 2) {
    // denominator vanishes at this scale
    return a.sign() * std::exp(log(BigInt(boost::multiprecision::abs(a.v))) - log(b));
  }
  boost::multiprecision::cpp_int ha = a.v >> shift;
  boost::multiprecision::cpp_int hb = b.v >> shift;
  return static_cast<double>(ha.convert_to<long double>() / hb.convert_to<long double>());
}

}  // namespace eigs
