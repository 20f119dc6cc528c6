// Copyright 2026 The matroidkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "matroidkit/field.hpp"

#include <utility>

#include "matroidkit/errors.hpp"

namespace matroidkit {

namespace {
__extension__ using Wide = unsigned __int128;
}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::kNotPrime, "field characteristic " + std::to_string(p) + " is not prime");
  }
  if (p >= (std::uint64_t{1} << 62)) {
    throw Error(ErrorCode::kNotPrime, "field characteristic too large");
  }
  return Field(Kind::kPrime, p);
}

Scalar Field::zero() const { return from_integer(0); }
Scalar Field::one() const { return from_integer(1); }

Scalar Field::from_integer(std::int64_t v) const {
  if (kind_ == Kind::kRationals) return Scalar::rational(mpq_class(static_cast<long>(v)));
  const auto p = static_cast<std::int64_t>(p_);
  auto r = v % p;
  if (r < 0) r += p;
  return Scalar::residue(static_cast<std::uint64_t>(r));
}

Scalar Field::from_fraction(std::int64_t num, std::int64_t den) const {
  if (den == 0) throw Error(ErrorCode::kZeroInverse, "zero denominator");
  if (kind_ == Kind::kRationals) {
    return Scalar::rational(mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))));
  }
  return div(from_integer(num), from_integer(den));
}

namespace {

bool parse_integer(std::string_view text, mpz_class& out) {
  if (text.empty()) return false;
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) return false;
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') return false;
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Scalar Field::parse(std::string_view text) const {
  const auto bad = [&] {
    return Error(ErrorCode::kParseError, "parse error: invalid " + name() + " entry '" + std::string(text) + "'");
  };
  if (kind_ == Kind::kRationals) {
    mpz_class num;
    mpz_class den = 1;
    const auto slash = text.find('/');
    if (!parse_integer(text.substr(0, slash), num)) throw bad();
    if (slash != std::string_view::npos) {
      if (!parse_integer(text.substr(slash + 1), den) || den == 0) throw bad();
    }
    return Scalar::rational(mpq_class(num, den));
  }
  mpz_class value;
  if (!parse_integer(text, value)) throw bad();
  mpz_class r = value % mpz_class(static_cast<unsigned long>(p_));
  if (r < 0) r += static_cast<unsigned long>(p_);
  return Scalar::residue(r.get_ui());
}

std::string Field::format(const Scalar& x) const {
  if (x.is_residue()) return std::to_string(x.as_residue());
  return x.as_rational().get_str();
}

bool Field::contains(const Scalar& x) const {
  if (kind_ == Kind::kRationals) return x.is_rational();
  return x.is_residue() && x.as_residue() < p_;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::kRationals) return Scalar::rational(a.as_rational() + b.as_rational());
  const auto s = a.as_residue() + b.as_residue();
  return Scalar::residue(s >= p_ ? s - p_ : s);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::kRationals) return Scalar::rational(a.as_rational() - b.as_rational());
  const auto x = a.as_residue();
  const auto y = b.as_residue();
  return Scalar::residue(x >= y ? x - y : x + p_ - y);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::kRationals) return Scalar::rational(a.as_rational() * b.as_rational());
  const auto prod = static_cast<Wide>(a.as_residue()) * b.as_residue();
  return Scalar::residue(static_cast<std::uint64_t>(prod % p_));
}

Scalar Field::neg(const Scalar& a) const {
  if (kind_ == Kind::kRationals) return Scalar::rational(-a.as_rational());
  const auto x = a.as_residue();
  return Scalar::residue(x == 0 ? 0 : p_ - x);
}

Scalar Field::inv(const Scalar& a) const {
  if (a.is_zero()) throw Error(ErrorCode::kZeroInverse, "inverse of zero");
  if (kind_ == Kind::kRationals) return Scalar::rational(1 / a.as_rational());
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  auto r = static_cast<std::int64_t>(p_);
  auto new_r = static_cast<std::int64_t>(a.as_residue());
  while (new_r != 0) {
    const auto q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p_);
  return Scalar::residue(static_cast<std::uint64_t>(t));
}

std::string Field::name() const {
  return kind_ == Kind::kRationals ? "q" : "gf " + std::to_string(p_);
}

}  // namespace matroidkit
