#include "dgolod/monomial_ideal.hpp"

#include <algorithm>
#include <ostream>

#include <gmpxx.h>

#include "dgolod/error.hpp"

namespace dgolod {

std::vector<Monomial> min_gens(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return compare(TermOrder::Grevlex, a, b) < 0;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  // Ascending degree: a divisor always precedes its multiples.
  for (const auto& u : gens) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&](const Monomial& v) { return v.divides(u); });
    if (!redundant) kept.push_back(u);
  }
  std::sort(kept.begin(), kept.end(), Descending{TermOrder::Grevlex});
  return kept;
}

MonomialIdeal::MonomialIdeal(PolyRing ring, std::vector<Monomial> gens)
    : ring_(std::move(ring)), gens_(min_gens(std::move(gens))) {
  const std::uint32_t allowed =
      ring_.nvars() >= 32 ? ~0u : ((1u << ring_.nvars()) - 1u);
  for (const auto& g : gens_) {
    if (g.support() & ~allowed) throw PreconditionError("monomial uses a variable outside the ring");
  }
}

MonomialIdeal MonomialIdeal::maximal(const PolyRing& ring) {
  return prime(ring, ring.nvars() >= 32 ? ~0u : (1u << ring.nvars()) - 1u);
}

MonomialIdeal MonomialIdeal::prime(const PolyRing& ring, std::uint32_t vars) {
  std::vector<Monomial> g;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (vars & (1u << i)) g.push_back(Monomial::var(i));
  }
  return MonomialIdeal(ring, std::move(g));
}

MonomialIdeal MonomialIdeal::from_gens(const IdealGens& ideal) {
  std::vector<Monomial> g;
  for (const auto& f : ideal.gens()) {
    if (!f.is_monomial()) {
      throw Unsupported("generator " + ideal.ring().format(f) + " is not a monomial");
    }
    g.push_back(f.terms().front().mono);
  }
  return MonomialIdeal(ideal.ring(), std::move(g));
}

bool MonomialIdeal::is_artinian() const noexcept {
  std::uint32_t pure = 0;
  for (const auto& g : gens_) {
    const std::uint32_t s = g.support();
    if (s == 0) return true;  // unit ideal
    if ((s & (s - 1)) == 0) pure |= s;
  }
  return pure == ((1u << nvars()) - 1u);
}

bool MonomialIdeal::is_squarefree() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(), [&](const Monomial& g) {
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (g[i] > 1) return false;
    }
    return true;
  });
}

bool MonomialIdeal::contains(const Monomial& u) const noexcept { return divisor_of(u).has_value(); }

bool MonomialIdeal::contains(const Polynomial& f) const noexcept {
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const Polynomial::Term& t) { return contains(t.mono); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const noexcept {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& u) { return contains(u); });
}

std::optional<Monomial> MonomialIdeal::divisor_of(const Monomial& u) const noexcept {
  for (const auto& g : gens_) {
    if (g.divides(u)) return g;
  }
  return std::nullopt;
}

int MonomialIdeal::max_degree() const noexcept {
  int d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

Monomial MonomialIdeal::lcm_all() const noexcept {
  Monomial l;
  for (const auto& g : gens_) l = lcm(l, g);
  return l;
}

IdealGens MonomialIdeal::to_gens() const {
  std::vector<Polynomial> g;
  for (const auto& u : gens_) g.push_back(ring_.term(u));
  if (g.empty()) throw PreconditionError("the zero ideal has no generator list");
  return IdealGens(ring_, std::move(g));
}

std::string MonomialIdeal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += ring_.format(gens_[i]);
  }
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& a) { return os << a.to_string(); }

namespace {

void check_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!(a.ring() == b.ring())) throw RingMismatch("monomial ideals from different rings");
}

}  // namespace

MonomialIdeal mi_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ring(a, b);
  std::vector<Monomial> g = a.gens();
  g.insert(g.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.ring(), std::move(g));
}

MonomialIdeal mi_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ring(a, b);
  std::vector<Monomial> g;
  g.reserve(a.gens().size() * b.gens().size());
  for (const auto& u : a.gens()) {
    for (const auto& v : b.gens()) g.push_back(u * v);
  }
  return MonomialIdeal(a.ring(), std::move(g));
}

MonomialIdeal mi_power(const MonomialIdeal& a, int k) {
  if (k < 1) throw PreconditionError("power exponent must be at least 1");
  MonomialIdeal r = a;
  for (int i = 1; i < k; ++i) r = mi_product(r, a);
  return r;
}

MonomialIdeal mi_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ring(a, b);
  std::vector<Monomial> g;
  for (const auto& u : a.gens()) {
    for (const auto& v : b.gens()) g.push_back(lcm(u, v));
  }
  return MonomialIdeal(a.ring(), std::move(g));
}

MonomialIdeal mi_colon(const MonomialIdeal& a, const Monomial& v) {
  std::vector<Monomial> g;
  g.reserve(a.gens().size());
  for (const auto& u : a.gens()) g.push_back(u / gcd(u, v));
  return MonomialIdeal(a.ring(), std::move(g));
}

MonomialIdeal mi_colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ring(a, b);
  MonomialIdeal r = MonomialIdeal::unit(a.ring());
  for (const auto& v : b.gens()) r = mi_intersect(r, mi_colon(a, v));
  return r;
}

Saturation mi_saturate(const MonomialIdeal& a, const MonomialIdeal& b) {
  MonomialIdeal cur = mi_colon(a, b);
  int t = 1;
  for (;;) {
    MonomialIdeal next = mi_colon(cur, b);
    if (next == cur) return {std::move(cur), t};
    cur = std::move(next);
    ++t;
  }
}

namespace {

void split(const MonomialIdeal& a, std::vector<MonomialIdeal>& out) {
  if (a.is_unit()) return;
  for (const auto& u : a.gens()) {
    const std::uint32_t s = u.support();
    if ((s & (s - 1)) == 0) continue;
    const std::size_t i = u.min_var();
    const Monomial head = Monomial::var(i, u[i]);
    const Monomial rest = u / head;
    split(mi_sum(a, MonomialIdeal(a.ring(), {head})), out);
    split(mi_sum(a, MonomialIdeal(a.ring(), {rest})), out);
    return;
  }
  out.push_back(a);
}

}  // namespace

std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& a) {
  std::vector<MonomialIdeal> parts;
  split(a, parts);
  std::vector<MonomialIdeal> out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    bool redundant = false;
    for (std::size_t l = 0; l < parts.size() && !redundant; ++l) {
      if (k == l || !parts[k].contains(parts[l])) continue;
      // parts[l] ⊆ parts[k]: drop k unless they are equal and k comes first.
      redundant = !(parts[k] == parts[l]) || l < k;
    }
    if (!redundant) out.push_back(parts[k]);
  }
  std::sort(out.begin(), out.end(), [](const MonomialIdeal& x, const MonomialIdeal& y) {
    if (x.gens().size() != y.gens().size()) return x.gens().size() < y.gens().size();
    return x.to_string() < y.to_string();
  });
  return out;
}

std::vector<AssociatedPrime> associated_primes(const MonomialIdeal& a) {
  if (a.is_unit()) throw PreconditionError("the unit ideal has no associated primes");
  std::vector<std::uint32_t> masks;
  for (const auto& q : irreducible_decomposition(a)) {
    std::uint32_t m = 0;
    for (const auto& g : q.gens()) m |= g.support();
    masks.push_back(m);
  }
  std::sort(masks.begin(), masks.end(), [](std::uint32_t x, std::uint32_t y) {
    const int px = __builtin_popcount(x), py = __builtin_popcount(y);
    return px != py ? px < py : x < y;
  });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<AssociatedPrime> out;
  for (auto m : masks) {
    const bool embedded = std::any_of(masks.begin(), masks.end(), [&](std::uint32_t o) {
      return o != m && (o & m) == o;
    });
    out.push_back({m, !embedded});
  }
  return out;
}

MonomialIdeal symbolic_power(const MonomialIdeal& a, int k) {
  MonomialIdeal ak = mi_power(a, k);
  std::optional<MonomialIdeal> embedded;
  for (const auto& p : associated_primes(ak)) {
    if (p.minimal) continue;
    MonomialIdeal q = MonomialIdeal::prime(a.ring(), p.vars);
    embedded = embedded ? mi_intersect(*embedded, q) : q;
  }
  if (!embedded) return ak;
  return mi_saturate(ak, *embedded).ideal;
}

bool newton_polyhedron_contains(const std::vector<Monomial>& gens, const Monomial& u,
                                std::size_t nvars) {
  // Feasibility of: sum_j lambda_j a_j + s = u, sum_j lambda_j = 1, lambda, s >= 0.
  // The slacks give a starting basis for the first nvars rows; only the
  // convexity row needs an artificial variable, whose value is minimized.
  const std::size_t m = gens.size();
  if (m == 0) return false;
  const std::size_t rows = nvars + 1;
  const std::size_t cols = m + nvars + 1;  // lambda | slack | artificial
  std::vector<std::vector<mpq_class>> t(rows, std::vector<mpq_class>(cols + 1));
  for (std::size_t i = 0; i < nvars; ++i) {
    for (std::size_t j = 0; j < m; ++j) t[i][j] = gens[j][i];
    t[i][m + i] = 1;
    t[i][cols] = u[i];
  }
  for (std::size_t j = 0; j < m; ++j) t[nvars][j] = 1;
  t[nvars][m + nvars] = 1;
  t[nvars][cols] = 1;
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < nvars; ++i) basis[i] = m + i;
  basis[nvars] = m + nvars;

  // Objective: minimize the artificial; reduced cost of column c is -t[nvars][c]
  // while the artificial is basic in the last row, recomputed after each pivot.
  const std::size_t art = m + nvars;
  auto reduced_cost = [&](std::size_t c) {
    mpq_class r = (c == art) ? 1 : 0;
    for (std::size_t i = 0; i < rows; ++i) {
      if (basis[i] == art) r -= t[i][c];
    }
    return r;
  };
  for (;;) {
    std::size_t enter = cols;
    for (std::size_t c = 0; c < cols; ++c) {
      if (c == art) continue;
      if (std::find(basis.begin(), basis.end(), c) != basis.end()) continue;
      if (reduced_cost(c) < 0) {
        enter = c;  // Bland: smallest index
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = rows;
    mpq_class best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      mpq_class ratio = t[i][cols] / t[i][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == rows) break;  // unbounded direction cannot lower a nonnegative objective
    const mpq_class piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const mpq_class f = t[i][enter];
      for (std::size_t c = 0; c <= cols; ++c) t[i][c] -= f * t[leave][c];
    }
    basis[leave] = enter;
  }
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] == art && t[i][cols] != 0) return false;
  }
  return true;
}

MonomialIdeal integral_closure(const MonomialIdeal& a) {
  if (a.is_zero() || a.is_unit()) return a;
  const Monomial box = a.lcm_all();
  std::vector<Monomial> members;
  for (const auto& u : divisors_of(box, a.nvars())) {
    if (a.contains(u) || newton_polyhedron_contains(a.gens(), u, a.nvars())) members.push_back(u);
  }
  return MonomialIdeal(a.ring(), std::move(members));
}

}  // namespace dgolod
