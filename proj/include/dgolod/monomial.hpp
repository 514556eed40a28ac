#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace dgolod {

/// Upper bound on the number of ring variables.
inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector x_0^{e_0} ... x_{n-1}^{e_{n-1}} with fixed inline storage.
///
/// Entries past the ring's variable count are always zero, so comparison,
/// hashing and the term orders never need to know n.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  constexpr Monomial() noexcept = default;
  Monomial(std::initializer_list<int> exps);
  explicit Monomial(std::span<const int> exps);

  static Monomial var(std::size_t i, int power = 1);

  Exponent operator[](std::size_t i) const noexcept { return e_[i]; }
  void set(std::size_t i, int value);

  int degree() const noexcept;
  bool is_one() const noexcept { return degree() == 0; }
  /// Bitmask of variables with positive exponent.
  std::uint32_t support() const noexcept;
  /// Smallest / largest index with positive exponent; kMaxVars when none.
  std::size_t min_var() const noexcept;
  std::size_t max_var() const noexcept;

  bool divides(const Monomial& other) const noexcept;
  Monomial operator*(const Monomial& o) const;
  /// Exact quotient; caller guarantees divisibility.
  Monomial operator/(const Monomial& o) const noexcept;
  friend Monomial lcm(const Monomial& a, const Monomial& b) noexcept;
  friend Monomial gcd(const Monomial& a, const Monomial& b) noexcept;
  /// Componentwise min(e, bound).
  Monomial clamp(const Monomial& bound) const noexcept { return gcd(*this, bound); }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::size_t hash() const noexcept;
  std::vector<int> exponents(std::size_t n) const;

 private:
  std::array<Exponent, kMaxVars> e_{};
};

/// Total orders on monomials; both are multiplicative with 1 minimal.
enum class TermOrder { Lex, Grevlex };

/// Three-way comparison: negative if a < b in the order.
int compare(TermOrder order, const Monomial& a, const Monomial& b) noexcept;

/// Descending comparator: true when a is strictly larger than b.
struct Descending {
  TermOrder order = TermOrder::Grevlex;
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    return compare(order, a, b) > 0;
  }
};

/// All monomials of total degree d in n variables, in grevlex descending order.
std::vector<Monomial> monomials_of_degree(std::size_t n, int d);
/// All monomials m with m | bound.
std::vector<Monomial> divisors_of(const Monomial& bound, std::size_t n);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace dgolod
