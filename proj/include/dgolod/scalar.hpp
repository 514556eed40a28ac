#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace dgolod {

class Scalar;

/// Coefficient field: the rationals or a prime field F_p with p < 2^31.
class Field {
 public:
  Field() noexcept = default;

  static Field rationals() noexcept { return Field{}; }
  /// Throws PreconditionError unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);
  /// Parses "Q" or "F<p>".
  static Field parse(const std::string& text);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint32_t characteristic() const noexcept { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_integer(const mpz_class& v) const;
  /// Throws PreconditionError if the denominator vanishes in the field.
  Scalar from_rational(const mpq_class& v) const;

  /// "Q" or "F<p>", the spelling accepted by parse().
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint32_t p) noexcept : p_(p) {}
  std::uint32_t p_ = 0;
};

/// Default characteristic for randomized checks over a prime field.
inline constexpr std::uint32_t kDefaultPrime = 32003;

bool is_prime(std::uint32_t p) noexcept;

/// An element of a Field. Immutable value type; the field travels with the value.
class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;

  Field field() const;
  bool is_zero() const noexcept { return mod_ ? res_ == 0 : sgn(q_) == 0; }
  bool is_one() const noexcept { return mod_ ? res_ == 1 : q_ == 1; }
  /// True when the printed form would start with a minus sign.
  bool is_negative() const noexcept { return mod_ == 0 && sgn(q_) < 0; }

  /// Throws PreconditionError on zero.
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) noexcept {
    return a.mod_ == b.mod_ && (a.mod_ ? a.res_ == b.res_ : a.q_ == b.q_);
  }

  const mpq_class& rational() const noexcept { return q_; }
  std::uint32_t residue() const noexcept { return res_; }

  /// Canonical text: "3", "-1/2", or the residue in [0, p).
  std::string to_string() const;
  std::size_t hash() const noexcept;

 private:
  friend class Field;
  void check_same(const Scalar& o) const;

  std::uint32_t mod_ = 0;  // 0 means rational
  std::uint32_t res_ = 0;
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace dgolod
