#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dgolod/polynomial.hpp"

namespace dgolod {

/// An ideal given by polynomial generators.
///
/// Generators are nonzero and share the ring. Operation results (for example
/// d_sigma(I) of an ideal containing a variable) may contain nonzero constants;
/// `require_proper()` enforces the x-adic properness needed by checker inputs.
class IdealGens {
 public:
  /// Throws PreconditionError on an empty list or a zero generator.
  IdealGens(PolyRing ring, std::vector<Polynomial> gens);

  const PolyRing& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& gens() const noexcept { return gens_; }

  /// Every generator lies in the maximal ideal (x_1, ..., x_n).
  bool is_proper() const noexcept;
  /// Throws PreconditionError naming the first generator with nonzero constant term.
  void require_proper() const;
  /// Some generator is a nonzero constant, so the ideal is the unit ideal.
  bool has_unit_generator() const noexcept;
  bool is_monomial() const noexcept;
  bool is_homogeneous() const noexcept;

 private:
  PolyRing ring_;
  std::vector<Polynomial> gens_;
};

struct GroebnerBasis {
  PolyRing ring;
  TermOrder order = TermOrder::Grevlex;
  std::vector<Polynomial> basis;
  bool reduced = false;
};

inline constexpr std::size_t kDefaultStepBudget = 1'000'000;

/// Reduced Groebner basis by Buchberger's algorithm with the normal selection
/// strategy and both Buchberger criteria. Throws PreconditionError when a
/// generator has a nonzero constant term, ResourceLimit when more than
/// `step_budget` single-term reductions are needed.
GroebnerBasis buchberger(const IdealGens& ideal, TermOrder order = TermOrder::Grevlex,
                         std::size_t step_budget = kDefaultStepBudget);

/// Same algorithm without the properness check, for operation results such as
/// d_sigma(I) that may contain elements with a constant term.
GroebnerBasis buchberger_unrestricted(const IdealGens& ideal, TermOrder order = TermOrder::Grevlex,
                                      std::size_t step_budget = kDefaultStepBudget);

/// Remainder of full multivariate division by the basis.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g);

bool ideal_contains(const GroebnerBasis& g, const Polynomial& f);

struct SubsetResult {
  bool holds = true;
  /// First generator of A outside B, with its normal form modulo B.
  std::optional<Polynomial> witness;
  std::optional<Polynomial> witness_normal_form;
};

/// Decides A ⊆ B. Monomial inputs are decided by divisibility alone.
SubsetResult ideal_subset(const IdealGens& a, const IdealGens& b,
                          std::size_t step_budget = kDefaultStepBudget);
/// Same, against a precomputed basis of B.
SubsetResult ideal_subset(const IdealGens& a, const GroebnerBasis& b);

/// The ideal generated by all pairwise products of generators.
IdealGens ideal_product(const IdealGens& a, const IdealGens& b);

}  // namespace dgolod
