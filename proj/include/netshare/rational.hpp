// Copyright 2026 The netshare Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NETSHARE_RATIONAL_HPP_
#define NETSHARE_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace netshare {

// Exact rational number extended with a single +infinity sentinel.
//
// Finite values are kept in canonical (reduced) form by GMP. Arithmetic that
// would need a value outside [0, +inf] on the infinite side (inf - inf,
// finite - inf, inf * 0, inf / inf) raises ErrorKind::kArithmetic.
class Rat {
 public:
  Rat() = default;
  Rat(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(long long v);  // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  explicit Rat(const mpz_class& z) : q_(z) {}

  static Rat infinity();
  // 10^exp for any integer exp.
  static Rat pow10(long exp);
  // Accepts "p/q", "p", "inf", and plain decimals such as "-0.125".
  static Rat parse(std::string_view text);

  bool is_inf() const { return inf_; }
  bool is_finite() const { return !inf_; }
  bool is_zero() const { return !inf_ && sgn(q_) == 0; }
  int sign() const { return inf_ ? 1 : sgn(q_); }

  // Finite value; throws kArithmetic on infinity.
  const mpq_class& value() const;
  mpz_class numerator() const { return value().get_num(); }
  mpz_class denominator() const { return value().get_den(); }

  // "p/q" (always with a denominator) or "inf".
  std::string str() const;
  // Decimal rendering rounded half-up to `digits` fractional digits.
  std::string decimal(int digits) const;
  double to_double() const;

  // Smallest integer >= value.
  mpz_class ceil() const;

  Rat& operator+=(const Rat& rhs);
  Rat& operator-=(const Rat& rhs);
  Rat& operator*=(const Rat& rhs);
  Rat& operator/=(const Rat& rhs);

  friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
  friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
  friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }
  Rat operator-() const;

  friend bool operator==(const Rat& a, const Rat& b);
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

 private:
  mpq_class q_;
  bool inf_ = false;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Rat min(const Rat& a, const Rat& b);
Rat max(const Rat& a, const Rat& b);

// Exact H_j = 1 + 1/2 + ... + 1/j (H_0 = 0).
Rat harmonic(long j);

}  // namespace netshare

#endif  // NETSHARE_RATIONAL_HPP_
