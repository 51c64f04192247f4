// Copyright 2026 The bikeshare Authors
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

#ifndef BIKESHARE_RATIONAL_H_
#define BIKESHARE_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace bikeshare {

// Arbitrary-precision rational number. Always stored in lowest terms with a
// positive denominator; every operation is exact.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(runtime/explicit)
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  // Accepts "p/q", integers, and decimal fractions such as "1.25" or "-0.5".
  // Decimals are read as exact base-10 fractions. Throws ParseError.
  static Rational Parse(std::string_view text);

  // "p/q", or just "p" when the denominator is one.
  std::string ToString() const;
  double ToDouble() const { return value_.get_d(); }

  bool IsZero() const { return sgn(value_) == 0; }
  int Sign() const { return sgn(value_); }
  bool IsInteger() const { return value_.get_den() == 1; }

  const mpq_class& mpq() const { return value_; }

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  // Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational Abs(const Rational& r);

}  // namespace bikeshare

#endif  // BIKESHARE_RATIONAL_H_
