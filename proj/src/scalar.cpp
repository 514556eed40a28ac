#include "dgolod/scalar.hpp"

#include <ostream>

#include "dgolod/error.hpp"

namespace dgolod {

bool is_prime(std::uint32_t p) noexcept {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw PreconditionError("field characteristic " + std::to_string(p) +
                            " is not a prime below 2^31");
  }
  return Field{p};
}

Field Field::parse(const std::string& text) {
  if (text == "Q") return rationals();
  if (text.size() >= 2 && text[0] == 'F') {
    std::uint64_t p = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9') throw PreconditionError("bad field name '" + text + "'");
      p = p * 10 + static_cast<std::uint64_t>(text[i] - '0');
      if (p >= (1ull << 31)) throw PreconditionError("field characteristic too large: " + text);
    }
    return prime(static_cast<std::uint32_t>(p));
  }
  throw PreconditionError("bad field name '" + text + "' (expected Q or F<prime>)");
}

std::string Field::name() const { return p_ ? "F" + std::to_string(p_) : "Q"; }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
  Scalar s;
  s.mod_ = p_;
  if (p_) {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    s.res_ = static_cast<std::uint32_t>(r);
  } else {
    s.q_ = mpq_class(mpz_class(static_cast<long>(v)));
  }
  return s;
}

Scalar Field::from_integer(const mpz_class& v) const {
  Scalar s;
  s.mod_ = p_;
  if (p_) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
    s.res_ = static_cast<std::uint32_t>(r.get_ui());
  } else {
    s.q_ = v;
  }
  return s;
}

Scalar Field::from_rational(const mpq_class& v) const {
  if (!p_) {
    Scalar s;
    s.q_ = v;
    return s;
  }
  Scalar den = from_integer(v.get_den());
  if (den.is_zero()) {
    throw PreconditionError("denominator " + v.get_den().get_str() + " vanishes in " + name());
  }
  return from_integer(v.get_num()) / den;
}

Field Scalar::field() const { return Field{mod_}; }

void Scalar::check_same(const Scalar& o) const {
  if (mod_ != o.mod_) throw RingMismatch("scalars from different fields");
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero");
  Scalar s = *this;
  if (mod_) {
    // Fermat: a^(p-2)
    std::uint64_t base = res_, e = mod_ - 2, acc = 1;
    while (e) {
      if (e & 1) acc = acc * base % mod_;
      base = base * base % mod_;
      e >>= 1;
    }
    s.res_ = static_cast<std::uint32_t>(acc);
  } else {
    s.q_ = 1 / q_;
  }
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (mod_) {
    s.res_ = res_ ? mod_ - res_ : 0;
  } else {
    s.q_ = -q_;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (mod_) {
    std::uint64_t r = static_cast<std::uint64_t>(res_) + o.res_;
    res_ = static_cast<std::uint32_t>(r >= mod_ ? r - mod_ : r);
  } else {
    q_ += o.q_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (mod_) {
    res_ = res_ >= o.res_ ? res_ - o.res_ : res_ + (mod_ - o.res_);
  } else {
    q_ -= o.q_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (mod_) {
    res_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(res_) * o.res_ % mod_);
  } else {
    q_ *= o.q_;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::string Scalar::to_string() const { return mod_ ? std::to_string(res_) : q_.get_str(); }

std::size_t Scalar::hash() const noexcept {
  if (mod_) return std::hash<std::uint32_t>{}(res_);
  return std::hash<std::string>{}(q_.get_str());
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace dgolod
