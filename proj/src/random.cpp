#include "dgolod/random.hpp"

#include <algorithm>

#include "dgolod/d_calculus.hpp"
#include "dgolod/monomial_ideal.hpp"

namespace dgolod {

int RandomSource::uniform(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

bool RandomSource::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

Monomial RandomSource::monomial(std::size_t n, int min_deg, int max_deg) {
  const int d = uniform(min_deg, max_deg);
  Monomial m;
  for (int k = 0; k < d; ++k) {
    const auto i = static_cast<std::size_t>(uniform(0, static_cast<int>(n) - 1));
    m.set(i, m[i] + 1);
  }
  return m;
}

Scalar RandomSource::scalar(const Field& field) {
  int c = 0;
  while (c == 0) c = uniform(-9, 9);
  return field.from_int(c);
}

Polynomial RandomSource::element_of_max_ideal(const PolyRing& ring, int max_terms, int max_deg) {
  std::vector<Polynomial::Term> terms;
  const int k = uniform(1, max_terms);
  for (int t = 0; t < k; ++t) {
    terms.push_back({monomial(ring.nvars(), 1, max_deg), scalar(ring.field())});
  }
  return Polynomial(ring.field(), ring.nvars(), std::move(terms));
}

MonomialIdeal RandomSource::monomial_ideal(const PolyRing& ring, int max_gens, int max_deg) {
  std::vector<Monomial> g;
  const int k = uniform(1, max_gens);
  for (int t = 0; t < k; ++t) g.push_back(monomial(ring.nvars(), 1, max_deg));
  return MonomialIdeal(ring, std::move(g));
}

Permutation RandomSource::permutation(std::size_t n) {
  auto p = Permutation::identity(n).images();
  std::shuffle(p.begin(), p.end(), rng_);
  return Permutation(std::move(p));
}

}  // namespace dgolod
