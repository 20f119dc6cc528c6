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

#ifndef MATROIDKIT_FIELD_HPP_
#define MATROIDKIT_FIELD_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace matroidkit {

/// An exact field element: a residue in [0, p) for GF(p), or a reduced
/// fraction with positive denominator for the rationals.
///
/// A Scalar does not know its field; arithmetic goes through Field, which
/// keeps residues and fractions from being mixed.
class Scalar {
 public:
  Scalar() = default;

  static Scalar residue(std::uint64_t r) { return Scalar(Value(std::in_place_index<0>, r)); }
  static Scalar rational(mpq_class q) {
    q.canonicalize();
    return Scalar(Value(std::in_place_index<1>, std::move(q)));
  }

  bool is_residue() const noexcept { return value_.index() == 0; }
  bool is_rational() const noexcept { return value_.index() == 1; }
  std::uint64_t as_residue() const { return std::get<0>(value_); }
  const mpq_class& as_rational() const { return std::get<1>(value_); }

  bool is_zero() const {
    return is_residue() ? as_residue() == 0 : sgn(as_rational()) == 0;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.value_.index() != b.value_.index()) return false;
    if (a.is_residue()) return a.as_residue() == b.as_residue();
    return cmp(a.as_rational(), b.as_rational()) == 0;
  }

 private:
  using Value = std::variant<std::uint64_t, mpq_class>;
  explicit Scalar(Value v) : value_(std::move(v)) {}

  Value value_;
};

/// A prime field GF(p) or the rationals. Primality is checked at
/// construction by trial division.
class Field {
 public:
  enum class Kind { kPrime, kRationals };

  /// Throws kNotPrime unless p is prime and below 2^62.
  static Field prime(std::uint64_t p);
  static Field rationals() { return Field(Kind::kRationals, 0); }

  Kind kind() const noexcept { return kind_; }
  bool is_prime_field() const noexcept { return kind_ == Kind::kPrime; }
  /// p for GF(p), 0 for the rationals.
  std::uint64_t characteristic() const noexcept { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_integer(std::int64_t v) const;
  Scalar from_fraction(std::int64_t num, std::int64_t den) const;

  /// Integers for GF(p) (reduced mod p, sign allowed); `a` or `a/b` for Q.
  Scalar parse(std::string_view text) const;
  std::string format(const Scalar& x) const;

  bool contains(const Scalar& x) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// Throws Error(kZeroInverse) on zero.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  /// "gf <p>" or "q", as used by the matrix text format.
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace matroidkit

#endif  // MATROIDKIT_FIELD_HPP_
