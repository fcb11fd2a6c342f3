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

#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace eigs {

/// Exact signed integer usable as an Eigen scalar.
struct BigInt {
  boost::multiprecision::cpp_int v;

  BigInt() = default;
  BigInt(std::int64_t x) : v(x) {}  // NOLINT(google-explicit-constructor)
  BigInt(int x) : v(x) {}           // NOLINT(google-explicit-constructor)
  explicit BigInt(boost::multiprecision::cpp_int x) : v(std::move(x)) {}

  BigInt& operator+=(const BigInt& o) {
    v += o.v;
    return *this;
  }
  BigInt& operator-=(const BigInt& o) {
    v -= o.v;
    return *this;
  }
  BigInt& operator*=(const BigInt& o) {
    v *= o.v;
    return *this;
  }
  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  friend BigInt operator-(const BigInt& a) { return BigInt(-a.v); }

  friend bool operator==(const BigInt& a, const BigInt& b) { return a.v == b.v; }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.v < b.v) return std::strong_ordering::less;
    if (b.v < a.v) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  bool is_zero() const { return v.is_zero(); }
  int sign() const { return v.sign(); }
  std::string str() const { return v.str(); }
  bool fits_int64() const;
  std::int64_t to_int64() const;

  friend std::ostream& operator<<(std::ostream& os, const BigInt& a) { return os << a.v; }
};

/// Natural log of a positive BigInt, accurate for arbitrarily large values.
double log(const BigInt& a);

/// a / b in double precision without overflow; b must be positive.
double ratio(const BigInt& a, const BigInt& b);

double to_double(const BigInt& a);

}  // namespace eigs

namespace Eigen {

template <>
struct NumTraits<eigs::BigInt> : GenericNumTraits<eigs::BigInt> {
  using Real = eigs::BigInt;
  using NonInteger = eigs::BigInt;
  using Nested = eigs::BigInt;
  using Literal = eigs::BigInt;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 16
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
