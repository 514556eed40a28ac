#pragma once

#include <optional>
#include <vector>

#include "dgolod/groebner.hpp"
#include "dgolod/monomial_ideal.hpp"
#include "dgolod/polynomial.hpp"

namespace dgolod {

/// R = S/I with a monomial K-basis: the standard monomials outside the leading-term ideal.
class QuotientRing {
 public:
  explicit QuotientRing(const MonomialIdeal& ideal);
  /// Monomial generators take the fast path; others need a Groebner basis.
  explicit QuotientRing(const IdealGens& ideal, std::size_t step_budget = kDefaultStepBudget);

  const PolyRing& ring() const noexcept { return ring_; }
  std::size_t nvars() const noexcept { return ring_.nvars(); }
  bool is_monomial() const noexcept { return !gb_; }
  bool is_homogeneous() const noexcept { return homogeneous_; }
  /// in(I) for grevlex; I itself for monomial input.
  const MonomialIdeal& leading_ideal() const noexcept { return lead_; }
  bool is_artinian() const noexcept { return lead_.is_artinian(); }

  bool is_standard(const Monomial& m) const noexcept { return !lead_.contains(m); }
  /// Standard monomials of degree d, grevlex-descending.
  std::vector<Monomial> basis(int d) const;
  /// Largest d with basis(d) nonempty, for Artinian R.
  std::optional<int> top_degree() const;
  /// Normal form: a combination of standard monomials.
  Polynomial reduce(const Polynomial& f) const;
  Polynomial reduce(const Monomial& m) const;

 private:
  PolyRing ring_;
  MonomialIdeal lead_;
  std::optional<GroebnerBasis> gb_;
  bool homogeneous_ = true;
};

}  // namespace dgolod
