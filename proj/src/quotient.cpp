#include "dgolod/quotient.hpp"

#include "dgolod/error.hpp"

namespace dgolod {

QuotientRing::QuotientRing(const MonomialIdeal& ideal)
    : ring_(ideal.ring()), lead_(ideal) {}

namespace {

MonomialIdeal leading_terms(const GroebnerBasis& gb) {
  std::vector<Monomial> lt;
  for (const auto& g : gb.basis) lt.push_back(g.leading(gb.order).mono);
  return MonomialIdeal(gb.ring, std::move(lt));
}

}  // namespace

QuotientRing::QuotientRing(const IdealGens& ideal, std::size_t step_budget)
    : ring_(ideal.ring()), lead_(MonomialIdeal::zero(ideal.ring())) {
  ideal.require_proper();
  homogeneous_ = ideal.is_homogeneous();
  if (ideal.is_monomial()) {
    lead_ = MonomialIdeal::from_gens(ideal);
    return;
  }
  gb_ = buchberger(ideal, TermOrder::Grevlex, step_budget);
  lead_ = leading_terms(*gb_);
}

std::vector<Monomial> QuotientRing::basis(int d) const {
  std::vector<Monomial> out;
  if (d < 0) return out;
  for (const auto& m : monomials_of_degree(nvars(), d)) {
    if (is_standard(m)) out.push_back(m);
  }
  return out;
}

std::optional<int> QuotientRing::top_degree() const {
  if (!is_artinian()) return std::nullopt;
  // Every monomial of degree > sum of (pure power exponent - 1) lies in the ideal.
  int bound = 0;
  for (std::size_t i = 0; i < nvars(); ++i) {
    int e = 0;
    for (const auto& g : lead_.gens()) {
      if (g.support() == (1u << i)) e = g[i];
    }
    bound += e - 1;
  }
  for (int d = bound; d >= 0; --d) {
    if (!basis(d).empty()) return d;
  }
  return std::nullopt;  // R = 0 cannot happen for a proper ideal
}

Polynomial QuotientRing::reduce(const Polynomial& f) const {
  if (gb_) return normal_form(f, *gb_);
  std::vector<Polynomial::Term> kept;
  for (const auto& t : f.terms()) {
    if (is_standard(t.mono)) kept.push_back(t);
  }
  return Polynomial(f.field(), f.nvars(), std::move(kept));
}

Polynomial QuotientRing::reduce(const Monomial& m) const {
  if (!gb_) return is_standard(m) ? ring_.term(m) : ring_.zero();
  if (is_standard(m)) return ring_.term(m);
  return normal_form(ring_.term(m), *gb_);
}

}  // namespace dgolod
