#include "dgolod/groebner.hpp"

#include <algorithm>
#include <set>

#include "dgolod/error.hpp"

namespace dgolod {

// ---------------------------------------------------------------------------
// IdealGens

IdealGens::IdealGens(PolyRing ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {
  if (gens_.empty()) throw PreconditionError("an ideal needs at least one generator");
  for (const auto& g : gens_) {
    if (g.is_zero()) throw PreconditionError("zero generator");
    if (!(g.field() == ring_.field()) || g.nvars() != ring_.nvars()) {
      throw RingMismatch("generator from a different ring");
    }
  }
}

bool IdealGens::is_proper() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Polynomial& g) { return g.constant_term().is_zero(); });
}

void IdealGens::require_proper() const {
  for (const auto& g : gens_) {
    if (!g.constant_term().is_zero()) {
      throw PreconditionError("generator " + ring_.format(g) +
                              " has a nonzero constant term; the ideal must lie in (x_1..x_n)");
    }
  }
}

bool IdealGens::has_unit_generator() const noexcept {
  return std::any_of(gens_.begin(), gens_.end(),
                     [](const Polynomial& g) { return g.is_constant() && !g.is_zero(); });
}

bool IdealGens::is_monomial() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Polynomial& g) { return g.is_monomial(); });
}

bool IdealGens::is_homogeneous() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Polynomial& g) { return g.is_homogeneous(); });
}

IdealGens ideal_product(const IdealGens& a, const IdealGens& b) {
  if (!(a.ring() == b.ring())) throw RingMismatch("ideals from different rings");
  std::vector<Polynomial> prods;
  for (const auto& f : a.gens()) {
    for (const auto& g : b.gens()) prods.push_back(f * g);
  }
  return IdealGens(a.ring(), std::move(prods));
}

// ---------------------------------------------------------------------------
// Buchberger

namespace {

using Terms = std::vector<Polynomial::Term>;

/// Terms sorted descending in a fixed order.
struct OrderedPoly {
  Terms terms;
  bool empty() const noexcept { return terms.empty(); }
  const Monomial& lm() const { return terms.front().mono; }
  const Scalar& lc() const { return terms.front().coef; }
};

class Reducer {
 public:
  Reducer(TermOrder order, std::size_t budget) : order_(order), budget_(budget) {}

  OrderedPoly from(const Polynomial& f) const {
    OrderedPoly p{f.terms()};
    const Descending desc{order_};
    std::sort(p.terms.begin(), p.terms.end(),
              [&](const auto& a, const auto& b) { return desc(a.mono, b.mono); });
    return p;
  }

  /// p - c * m * g, all in the reducer's order.
  Terms sub_mul(const Terms& p, const Scalar& c, const Monomial& m, const Terms& g) const {
    Terms out;
    out.reserve(p.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < p.size() || j < g.size()) {
      int cmp;
      Monomial gm;
      if (j < g.size()) gm = g[j].mono * m;
      if (j == g.size()) {
        cmp = 1;
      } else if (i == p.size()) {
        cmp = -1;
      } else {
        cmp = compare(order_, p[i].mono, gm);
      }
      if (cmp > 0) {
        out.push_back(p[i++]);
      } else if (cmp < 0) {
        out.push_back({gm, -(c * g[j].coef)});
        ++j;
      } else {
        Scalar v = p[i].coef - c * g[j].coef;
        if (!v.is_zero()) out.push_back({gm, std::move(v)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  void charge() {
    if (++steps_ > budget_) {
      throw ResourceLimit("Groebner step budget of " + std::to_string(budget_) + " exhausted");
    }
  }

  /// Full reduction of p by the basis (every term, not only the leading one).
  OrderedPoly reduce(OrderedPoly p, const std::vector<OrderedPoly>& basis, std::size_t skip) {
    Terms rem;
    while (!p.empty()) {
      const auto& lt = p.terms.front();
      const OrderedPoly* div = nullptr;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (k == skip || basis[k].empty()) continue;
        if (basis[k].lm().divides(lt.mono)) {
          div = &basis[k];
          break;
        }
      }
      if (!div) {
        rem.push_back(lt);
        p.terms.erase(p.terms.begin());
        continue;
      }
      charge();
      const Scalar c = lt.coef / div->lc();
      const Monomial m = lt.mono / div->lm();
      p.terms = sub_mul(p.terms, c, m, div->terms);
    }
    return OrderedPoly{std::move(rem)};
  }

  OrderedPoly spoly(const OrderedPoly& f, const OrderedPoly& g) const {
    const Monomial l = lcm(f.lm(), g.lm());
    Terms a = sub_mul({}, -f.lc().inverse(), l / f.lm(), f.terms);
    return OrderedPoly{sub_mul(a, g.lc().inverse(), l / g.lm(), g.terms)};
  }

  TermOrder order() const noexcept { return order_; }

 private:
  TermOrder order_;
  std::size_t budget_;
  std::size_t steps_ = 0;
};

void make_monic(OrderedPoly& p) {
  if (p.empty()) return;
  const Scalar inv = p.lc().inverse();
  for (auto& t : p.terms) t.coef *= inv;
}

}  // namespace

GroebnerBasis buchberger(const IdealGens& ideal, TermOrder order, std::size_t step_budget) {
  ideal.require_proper();
  return buchberger_unrestricted(ideal, order, step_budget);
}

GroebnerBasis buchberger_unrestricted(const IdealGens& ideal, TermOrder order,
                                      std::size_t step_budget) {
  Reducer red(order, step_budget);
  std::vector<OrderedPoly> g;
  for (const auto& f : ideal.gens()) {
    g.push_back(red.from(f));
    make_monic(g.back());
  }

  using Pair = std::pair<std::size_t, std::size_t>;
  std::set<Pair> pending;
  for (std::size_t j = 1; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});
  }
  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!pending.empty()) {
    // Normal strategy: the pair whose lcm is smallest in the term order.
    auto best = pending.begin();
    Monomial best_lcm = lcm(g[best->first].lm(), g[best->second].lm());
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      const Monomial l = lcm(g[it->first].lm(), g[it->second].lm());
      if (compare(order, l, best_lcm) < 0) {
        best = it;
        best_lcm = l;
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);

    // First criterion: coprime leading monomials.
    if (gcd(g[i].lm(), g[j].lm()).is_one()) continue;
    // Second criterion: some g_k with lm(g_k) | lcm and both pairs already treated.
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (g[k].lm().divides(best_lcm) && !is_pending(i, k) && !is_pending(j, k)) chain = true;
    }
    if (chain) continue;

    OrderedPoly h = red.reduce(red.spoly(g[i], g[j]), g, static_cast<std::size_t>(-1));
    if (h.empty()) continue;
    make_monic(h);
    const std::size_t n = g.size();
    g.push_back(std::move(h));
    for (std::size_t k = 0; k < n; ++k) pending.insert({k, n});
  }

  // Minimalize, then interreduce.
  std::vector<OrderedPoly> minimal;
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
      if (a == b || !g[b].lm().divides(g[a].lm())) continue;
      // Equal leading monomials: keep the lowest index.
      redundant = !(g[b].lm() == g[a].lm()) || b < a;
    }
    if (!redundant) minimal.push_back(g[a]);
  }
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    OrderedPoly head{{minimal[a].terms.front()}};
    OrderedPoly tail{Terms(minimal[a].terms.begin() + 1, minimal[a].terms.end())};
    OrderedPoly rt = red.reduce(std::move(tail), minimal, a);
    head.terms.insert(head.terms.end(), rt.terms.begin(), rt.terms.end());
    minimal[a] = std::move(head);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const OrderedPoly& a, const OrderedPoly& b) {
    return compare(order, a.lm(), b.lm()) > 0;
  });

  GroebnerBasis out{ideal.ring(), order, {}, true};
  for (auto& p : minimal) {
    out.basis.emplace_back(ideal.ring().field(), ideal.ring().nvars(), std::move(p.terms));
  }
  return out;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g) {
  if (!(f.field() == g.ring.field()) || f.nvars() != g.ring.nvars()) {
    throw RingMismatch("polynomial and basis from different rings");
  }
  Reducer red(g.order, static_cast<std::size_t>(-1));
  std::vector<OrderedPoly> basis;
  basis.reserve(g.basis.size());
  for (const auto& b : g.basis) basis.push_back(red.from(b));
  OrderedPoly r = red.reduce(red.from(f), basis, static_cast<std::size_t>(-1));
  return Polynomial(f.field(), f.nvars(), std::move(r.terms));
}

bool ideal_contains(const GroebnerBasis& g, const Polynomial& f) {
  return normal_form(f, g).is_zero();
}

SubsetResult ideal_subset(const IdealGens& a, const GroebnerBasis& b) {
  SubsetResult res;
  for (const auto& f : a.gens()) {
    Polynomial r = normal_form(f, b);
    if (!r.is_zero()) {
      res.holds = false;
      res.witness = f;
      res.witness_normal_form = std::move(r);
      return res;
    }
  }
  return res;
}

SubsetResult ideal_subset(const IdealGens& a, const IdealGens& b, std::size_t step_budget) {
  if (!(a.ring() == b.ring())) throw RingMismatch("ideals from different rings");
  if (b.has_unit_generator()) return {};
  if (a.is_monomial() && b.is_monomial()) {
    SubsetResult res;
    for (const auto& f : a.gens()) {
      const Monomial& u = f.terms().front().mono;
      const bool in = std::any_of(b.gens().begin(), b.gens().end(), [&](const Polynomial& g) {
        return g.terms().front().mono.divides(u);
      });
      if (!in) {
        res.holds = false;
        res.witness = f;
        res.witness_normal_form = f;
        return res;
      }
    }
    return res;
  }
  return ideal_subset(a, buchberger_unrestricted(b, TermOrder::Grevlex, step_budget));
}

}  // namespace dgolod
