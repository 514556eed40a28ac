#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dgolod/d_calculus.hpp"
#include "dgolod/groebner.hpp"
#include "dgolod/monomial_ideal.hpp"

namespace dgolod {

/// A product that should lie in I but does not.
struct Violation {
  Polynomial left;
  Polynomial right;
  /// left * right, or uv / (x_i x_j) for the combinatorial criterion.
  Polynomial product;
  /// Remainder of `product` modulo I (the product itself for monomial I).
  Polynomial normal_form;
  /// 0-based (i, j) when the violation comes from the combinatorial criterion.
  std::optional<std::pair<std::size_t, std::size_t>> divided_vars;
};

struct GolodCertificate {
  IdealGens ideal;
  /// The permutation checked; empty when the claim is about every permutation.
  std::optional<Permutation> sigma;
  bool holds = false;
  /// Generators of d_sigma(I) (for `sigma`, or for `failing_sigma` on failure).
  std::vector<Polynomial> d_sigma_gens;
  std::optional<Violation> violation;
  /// Strong checks: a permutation for which d_sigma(I)^2 is not in I.
  std::optional<Permutation> failing_sigma;
  std::optional<Violation> sigma_violation;
  std::string method;
  std::vector<std::string> notes;
};

/// Decides d_sigma(I)^2 ⊆ I. Monomial ideals by divisibility, others by a Groebner basis of I.
GolodCertificate check_d_sigma_golod(const IdealGens& ideal, const Permutation& sigma,
                                     std::size_t step_budget = kDefaultStepBudget);
GolodCertificate check_d_sigma_golod(const MonomialIdeal& ideal, const Permutation& sigma);

/// Combinatorial criterion, cross-checked against every permutation when n <= 5.
/// Throws CrossCheckMismatch if the two disagree.
GolodCertificate check_strongly_d_golod(const MonomialIdeal& ideal);
/// Monomial input is routed to the overload above; otherwise every permutation
/// is tried with Groebner containment (n <= 6, Unsupported beyond).
GolodCertificate check_strongly_d_golod(const IdealGens& ideal,
                                        std::size_t step_budget = kDefaultStepBudget);

/// Re-derives the certificate's claim from the ideal alone. True when it is confirmed.
bool recheck(const GolodCertificate& cert, std::size_t step_budget = kDefaultStepBudget);

/// x_i u / x_{m(u)} ∈ I for every u ∈ I and i <= m(u). Generators are checked, and
/// the result is compared with a scan of all members up to the largest generator degree.
bool is_stable(const MonomialIdeal& ideal);

/// Certificate for IJ with sigma the order-reversing permutation. Requires I stable and I ⊆ J.
GolodCertificate stable_golod_cert(const MonomialIdeal& i, const MonomialIdeal& j);

/// (x_1..x_{n-1})^2 + x_n (x_1..x_{n-1}), plus x_n^{s+1} when artinian.
IdealGens stretched_ideal(std::size_t n, int s, bool artinian);

/// The order x_n, x_1, ..., x_{n-1}: images (n, 1, ..., n-1).
Permutation stretched_order(std::size_t n);

struct SumFamily {
  IdealGens j;
  IdealGens power;
  GolodCertificate cert;
};

/// J = sum x_i J_i and J^k with its d-Golod certificate. families[i] lists generators
/// of J_i, which may only involve x_i..x_n; an empty list stands for J_i = 0.
SumFamily sum_family_ideal(const PolyRing& ring,
                           const std::vector<std::vector<Polynomial>>& families, int k,
                           std::size_t step_budget = kDefaultStepBudget);
SumFamily sum_family_ideal(const std::vector<MonomialIdeal>& families, int k);

}  // namespace dgolod
