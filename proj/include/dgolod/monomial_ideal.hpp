#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "dgolod/groebner.hpp"
#include "dgolod/polynomial.hpp"

namespace dgolod {

/// Monomial ideal stored by its minimal generators, sorted grevlex-descending.
///
/// The unit ideal (generator 1) and the zero ideal (no generators) are
/// representable because colon and saturation legitimately reach them; the
/// Golod checkers reject both.
class MonomialIdeal {
 public:
  /// Minimalizes the given generators.
  MonomialIdeal(PolyRing ring, std::vector<Monomial> gens);

  static MonomialIdeal unit(PolyRing ring) { return MonomialIdeal(std::move(ring), {Monomial{}}); }
  static MonomialIdeal zero(PolyRing ring) { return MonomialIdeal(std::move(ring), {}); }
  /// (x_1, ..., x_n)
  static MonomialIdeal maximal(const PolyRing& ring);
  /// The prime generated by the variables whose bits are set in `vars`.
  static MonomialIdeal prime(const PolyRing& ring, std::uint32_t vars);
  /// Throws Unsupported unless every generator is a single term.
  static MonomialIdeal from_gens(const IdealGens& ideal);

  const PolyRing& ring() const noexcept { return ring_; }
  const std::vector<Monomial>& gens() const noexcept { return gens_; }
  std::size_t nvars() const noexcept { return ring_.nvars(); }

  bool is_unit() const noexcept { return gens_.size() == 1 && gens_[0].is_one(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  /// Nonzero and not the unit ideal.
  bool is_proper() const noexcept { return !is_zero() && !is_unit(); }
  bool is_artinian() const noexcept;
  bool is_squarefree() const noexcept;

  bool contains(const Monomial& u) const noexcept;
  /// Every term of f lies in the ideal (the criterion for monomial ideals).
  bool contains(const Polynomial& f) const noexcept;
  /// other ⊆ *this
  bool contains(const MonomialIdeal& other) const noexcept;
  /// A generator dividing u, if any.
  std::optional<Monomial> divisor_of(const Monomial& u) const noexcept;

  int max_degree() const noexcept;
  /// lcm of all generators.
  Monomial lcm_all() const noexcept;
  IdealGens to_gens() const;
  std::string to_string() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) noexcept {
    return a.ring_ == b.ring_ && a.gens_ == b.gens_;
  }

 private:
  PolyRing ring_;
  std::vector<Monomial> gens_;
};

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& a);

/// Divisibility-minimal generating set, sorted grevlex-descending, duplicates removed.
std::vector<Monomial> min_gens(std::vector<Monomial> gens);

MonomialIdeal mi_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal mi_product(const MonomialIdeal& a, const MonomialIdeal& b);
/// a^k for k >= 1.
MonomialIdeal mi_power(const MonomialIdeal& a, int k);
MonomialIdeal mi_intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// a : v
MonomialIdeal mi_colon(const MonomialIdeal& a, const Monomial& v);
/// a : b = intersection over generators v of b of (a : v). May be the unit ideal.
MonomialIdeal mi_colon(const MonomialIdeal& a, const MonomialIdeal& b);

struct Saturation {
  MonomialIdeal ideal;
  /// Smallest t >= 1 with a : b^t = a : b^{t+1}.
  int stabilization = 1;
};

/// Union over t of a : b^t, by iterating the colon until it stabilizes.
Saturation mi_saturate(const MonomialIdeal& a, const MonomialIdeal& b);

/// Irredundant decomposition into ideals generated by pure powers, by
/// recursive splitting of mixed generators.
std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& a);

struct AssociatedPrime {
  std::uint32_t vars = 0;  // bitmask of generating variables
  bool minimal = true;
  friend bool operator==(const AssociatedPrime&, const AssociatedPrime&) = default;
};

/// Associated primes of S/a, ordered by (size, mask). Precondition: proper.
std::vector<AssociatedPrime> associated_primes(const MonomialIdeal& a);

/// a^k saturated at the intersection of the embedded associated primes of a^k.
MonomialIdeal symbolic_power(const MonomialIdeal& a, int k);

/// Whether the exponent vector of u lies in conv(exponents of gens) + R^n_{>=0}.
/// Decided by an exact phase-one simplex over the rationals.
bool newton_polyhedron_contains(const std::vector<Monomial>& gens, const Monomial& u,
                                std::size_t nvars);

/// Monomials in the Newton polyhedron, enumerated inside the box spanned by the
/// componentwise maximum of generator exponents.
MonomialIdeal integral_closure(const MonomialIdeal& a);

}  // namespace dgolod
