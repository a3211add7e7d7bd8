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

#include "netshare/rational.hpp"

#include <cctype>
#include <limits>
#include <string>

#include "netshare/error.hpp"

namespace netshare {
namespace {

[[noreturn]] void arith(const std::string& what) {
  throw Error(ErrorKind::kArithmetic, what);
}

mpz_class pow10_z(unsigned long exp) {
  mpz_class z;
  mpz_ui_pow_ui(z.get_mpz_t(), 10, exp);
  return z;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat::Rat(long long v) : q_(static_cast<long>(v)) {
  static_assert(sizeof(long) == sizeof(long long), "LP64 expected");
}

Rat::Rat(long num, long den) {
  if (den == 0) arith("zero denominator");
  q_ = mpq_class(mpz_class(num), mpz_class(den));
  q_.canonicalize();
}

Rat Rat::infinity() {
  Rat r;
  r.inf_ = true;
  return r;
}

Rat Rat::pow10(long exp) {
  if (exp >= 0) return Rat(pow10_z(static_cast<unsigned long>(exp)));
  return Rat(mpq_class(mpz_class(1), pow10_z(static_cast<unsigned long>(-exp))));
}

Rat Rat::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s == "inf" || s == "+inf") return infinity();
  bool negative = false;
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  mpq_class q;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw Error(ErrorKind::kParse, "bad rational '" + std::string(text) + "'");
    }
    mpz_class d{std::string(den), 10};
    if (d == 0) throw Error(ErrorKind::kParse, "zero denominator in '" + std::string(text) + "'");
    q = mpq_class(mpz_class{std::string(num), 10}, d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto ip = body.substr(0, dot);
    auto fp = body.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) ||
        (ip.empty() && fp.empty())) {
      throw Error(ErrorKind::kParse, "bad decimal '" + std::string(text) + "'");
    }
    std::string digits = std::string(ip) + std::string(fp);
    q = mpq_class(mpz_class(digits, 10), pow10_z(fp.size()));
  } else {
    if (!all_digits(body)) {
      throw Error(ErrorKind::kParse, "bad rational '" + std::string(text) + "'");
    }
    q = mpq_class(mpz_class{std::string(body), 10});
  }
  q.canonicalize();
  if (negative) q = -q;
  return Rat(q);
}

const mpq_class& Rat::value() const {
  if (inf_) arith("finite value requested from inf");
  return q_;
}

std::string Rat::str() const {
  if (inf_) return "inf";
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rat::decimal(int digits) const {
  if (inf_) return "inf";
  mpz_class scale = pow10_z(static_cast<unsigned long>(digits));
  mpq_class scaled = abs(q_) * scale + mpq_class(1, 2);
  mpz_class units = scaled.get_num() / scaled.get_den();
  std::string body = units.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<size_t>(digits)) {
      body.insert(0, static_cast<size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<size_t>(digits), ".");
  }
  if (sgn(q_) < 0 && units != 0) body.insert(0, "-");
  return body;
}

double Rat::to_double() const {
  if (inf_) return std::numeric_limits<double>::infinity();
  return q_.get_d();
}

mpz_class Rat::ceil() const {
  const mpq_class& v = value();
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return out;
}

Rat& Rat::operator+=(const Rat& rhs) {
  if (inf_ || rhs.inf_) {
    inf_ = true;
    return *this;
  }
  mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), rhs.q_.get_mpq_t());
  return *this;
}

Rat& Rat::operator-=(const Rat& rhs) {
  if (rhs.inf_) arith(inf_ ? "inf - inf" : "finite - inf");
  if (inf_) return *this;
  mpq_sub(q_.get_mpq_t(), q_.get_mpq_t(), rhs.q_.get_mpq_t());
  return *this;
}

Rat& Rat::operator*=(const Rat& rhs) {
  if (inf_ || rhs.inf_) {
    const Rat& other = inf_ ? rhs : *this;
    if (!other.inf_ && other.sign() <= 0) arith("inf * non-positive");
    inf_ = true;
    return *this;
  }
  mpq_mul(q_.get_mpq_t(), q_.get_mpq_t(), rhs.q_.get_mpq_t());
  return *this;
}

Rat& Rat::operator/=(const Rat& rhs) {
  if (rhs.inf_) {
    if (inf_) arith("inf / inf");
    q_ = 0;
    return *this;
  }
  if (sgn(rhs.q_) == 0) arith("division by zero");
  if (inf_) {
    if (sgn(rhs.q_) < 0) arith("inf / negative");
    return *this;
  }
  mpq_div(q_.get_mpq_t(), q_.get_mpq_t(), rhs.q_.get_mpq_t());
  return *this;
}

Rat Rat::operator-() const {
  if (inf_) arith("negated inf");
  return Rat(mpq_class(-q_));
}

bool operator==(const Rat& a, const Rat& b) {
  if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
  return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  if (a.inf_ || b.inf_) {
    if (a.inf_ == b.inf_) return std::strong_ordering::equal;
    return a.inf_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  int c = mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t());
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }
Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

Rat harmonic(long j) {
  mpq_class h = 0;
  for (long i = 1; i <= j; ++i) h += mpq_class(mpz_class(1), mpz_class(i));
  h.canonicalize();
  return Rat(h);
}

}  // namespace netshare
