#include "dgolod/monomial.hpp"

#include <algorithm>
#include <limits>

#include "dgolod/error.hpp"

namespace dgolod {

namespace {

Monomial::Exponent checked_exponent(long v) {
  if (v < 0 || v > std::numeric_limits<Monomial::Exponent>::max()) {
    throw PreconditionError("exponent " + std::to_string(v) + " out of range");
  }
  return static_cast<Monomial::Exponent>(v);
}

}  // namespace

Monomial::Monomial(std::initializer_list<int> exps)
    : Monomial(std::span<const int>(exps.begin(), exps.size())) {}

Monomial::Monomial(std::span<const int> exps) {
  if (exps.size() > kMaxVars) throw PreconditionError("too many variables");
  for (std::size_t i = 0; i < exps.size(); ++i) e_[i] = checked_exponent(exps[i]);
}

Monomial Monomial::var(std::size_t i, int power) {
  if (i >= kMaxVars) throw PreconditionError("variable index out of range");
  Monomial m;
  m.e_[i] = checked_exponent(power);
  return m;
}

void Monomial::set(std::size_t i, int value) {
  if (i >= kMaxVars) throw PreconditionError("variable index out of range");
  e_[i] = checked_exponent(value);
}

int Monomial::degree() const noexcept {
  int d = 0;
  for (auto e : e_) d += e;
  return d;
}

std::uint32_t Monomial::support() const noexcept {
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (e_[i]) s |= 1u << i;
  }
  return s;
}

std::size_t Monomial::min_var() const noexcept {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (e_[i]) return i;
  }
  return kMaxVars;
}

std::size_t Monomial::max_var() const noexcept {
  for (std::size_t i = kMaxVars; i-- > 0;) {
    if (e_[i]) return i;
  }
  return kMaxVars;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.e_[i] = checked_exponent(static_cast<long>(e_[i]) + o.e_[i]);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = static_cast<Exponent>(e_[i] - o.e_[i]);
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : e_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<int> Monomial::exponents(std::size_t n) const {
  return std::vector<int>(e_.begin(), e_.begin() + static_cast<std::ptrdiff_t>(n));
}

int compare(TermOrder order, const Monomial& a, const Monomial& b) noexcept {
  if (order == TermOrder::Lex) {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
  }
  const int da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = kMaxVars; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<int> e(n, 0);
  // Enumerate compositions of d into n parts.
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.emplace_back(std::span<const int>(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), Descending{TermOrder::Grevlex});
  return out;
}

std::vector<Monomial> divisors_of(const Monomial& bound, std::size_t n) {
  std::vector<Monomial> out{Monomial{}};
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t cur = out.size();
    for (int k = 1; k <= bound[i]; ++k) {
      for (std::size_t j = 0; j < cur; ++j) {
        Monomial m = out[j];
        m.set(i, k);
        out.push_back(m);
      }
    }
  }
  return out;
}

}  // namespace dgolod
