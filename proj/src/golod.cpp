#include "dgolod/golod.hpp"

#include <algorithm>

#include "dgolod/error.hpp"

namespace dgolod {

namespace {

std::vector<Polynomial> as_polys(const MonomialIdeal& a) {
  std::vector<Polynomial> out;
  for (const auto& u : a.gens()) out.push_back(a.ring().term(u));
  return out;
}

/// First product of two d_sigma(I) generators outside I, for monomial I.
std::optional<Violation> monomial_square_violation(const MonomialIdeal& ideal,
                                                   const MonomialIdeal& d) {
  const auto& g = d.gens();
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = a; b < g.size(); ++b) {
      const Monomial w = g[a] * g[b];
      if (!ideal.contains(w)) {
        const PolyRing& r = ideal.ring();
        return Violation{r.term(g[a]), r.term(g[b]), r.term(w), r.term(w), std::nullopt};
      }
    }
  }
  return std::nullopt;
}

std::optional<Violation> groebner_square_violation(const IdealGens& d, const GroebnerBasis& gb) {
  const auto& g = d.gens();
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = a; b < g.size(); ++b) {
      Polynomial p = g[a] * g[b];
      Polynomial nf = normal_form(p, gb);
      if (!nf.is_zero()) return Violation{g[a], g[b], std::move(p), std::move(nf), std::nullopt};
    }
  }
  return std::nullopt;
}

/// For all generators u, v and x_i | u, x_j | v: uv / (x_i x_j) ∈ I.
std::optional<Violation> combinatorial_violation(const MonomialIdeal& ideal) {
  const auto& g = ideal.gens();
  const PolyRing& r = ideal.ring();
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = a; b < g.size(); ++b) {
      const Monomial uv = g[a] * g[b];
      for (std::size_t i = 0; i < ideal.nvars(); ++i) {
        if (g[a][i] == 0) continue;
        for (std::size_t j = 0; j < ideal.nvars(); ++j) {
          if (g[b][j] == 0) continue;
          const Monomial w = uv / (Monomial::var(i) * Monomial::var(j));
          if (!ideal.contains(w)) {
            return Violation{r.term(g[a]), r.term(g[b]), r.term(w), r.term(w),
                             std::make_pair(i, j)};
          }
        }
      }
    }
  }
  return std::nullopt;
}

void require_checkable(const MonomialIdeal& ideal) {
  if (!ideal.is_proper()) {
    throw PreconditionError("Golod checks need a nonzero ideal inside (x_1..x_n), got " +
                            ideal.to_string());
  }
}

}  // namespace

GolodCertificate check_d_sigma_golod(const MonomialIdeal& ideal, const Permutation& sigma) {
  require_checkable(ideal);
  if (sigma.size() != ideal.nvars()) throw RingMismatch("permutation size differs from ring");
  const MonomialIdeal d = d_ideal(ideal, sigma);
  GolodCertificate cert{ideal.to_gens(), sigma, false, as_polys(d), std::nullopt,
                        std::nullopt, std::nullopt, "monomial", {}};
  cert.violation = monomial_square_violation(ideal, d);
  cert.holds = !cert.violation;
  return cert;
}

GolodCertificate check_d_sigma_golod(const IdealGens& ideal, const Permutation& sigma,
                                     std::size_t step_budget) {
  ideal.require_proper();
  if (ideal.is_monomial()) {
    GolodCertificate c = check_d_sigma_golod(MonomialIdeal::from_gens(ideal), sigma);
    c.ideal = ideal;
    return c;
  }
  if (sigma.size() != ideal.ring().nvars()) throw RingMismatch("permutation size differs from ring");
  const IdealGens d = d_ideal(ideal, sigma);
  GolodCertificate cert{ideal, sigma, false, d.gens(), std::nullopt,
                        std::nullopt, std::nullopt, "groebner", {}};
  cert.violation = groebner_square_violation(d, buchberger(ideal, TermOrder::Grevlex, step_budget));
  cert.holds = !cert.violation;
  return cert;
}

GolodCertificate check_strongly_d_golod(const MonomialIdeal& ideal) {
  require_checkable(ideal);
  GolodCertificate cert{ideal.to_gens(), std::nullopt, false, {}, std::nullopt,
                        std::nullopt, std::nullopt, "combinatorial", {}};
  cert.violation = combinatorial_violation(ideal);
  cert.holds = !cert.violation;

  if (ideal.nvars() <= 5) {
    cert.method = "combinatorial+exhaustive";
    bool all = true;
    for (const auto& s : Permutation::all(ideal.nvars())) {
      const MonomialIdeal d = d_ideal(ideal, s);
      auto v = monomial_square_violation(ideal, d);
      if (v) {
        all = false;
        cert.failing_sigma = s;
        cert.sigma_violation = std::move(v);
        cert.d_sigma_gens = as_polys(d);
        break;
      }
    }
    if (all != cert.holds) {
      throw CrossCheckMismatch("combinatorial criterion says " +
                               std::string(cert.holds ? "true" : "false") +
                               " but the permutation sweep says " + (all ? "true" : "false") +
                               " for " + ideal.to_string());
    }
  } else {
    cert.notes.push_back("permutation sweep skipped for n > 5");
  }
  return cert;
}

GolodCertificate check_strongly_d_golod(const IdealGens& ideal, std::size_t step_budget) {
  ideal.require_proper();
  if (ideal.is_monomial()) {
    GolodCertificate c = check_strongly_d_golod(MonomialIdeal::from_gens(ideal));
    c.ideal = ideal;
    return c;
  }
  const std::size_t n = ideal.ring().nvars();
  if (n > 6) throw Unsupported("strong check of a non-monomial ideal is limited to n <= 6");
  GolodCertificate cert{ideal, std::nullopt, true, {}, std::nullopt,
                        std::nullopt, std::nullopt, "exhaustive-groebner", {}};
  cert.notes.push_back("non-monomial ideal: decided by trying all " +
                       std::to_string(Permutation::all(n).size()) + " permutations");
  const GroebnerBasis gb = buchberger(ideal, TermOrder::Grevlex, step_budget);
  for (const auto& s : Permutation::all(n)) {
    const IdealGens d = d_ideal(ideal, s);
    auto v = groebner_square_violation(d, gb);
    if (v) {
      cert.holds = false;
      cert.failing_sigma = s;
      cert.sigma_violation = v;
      cert.violation = std::move(v);
      cert.d_sigma_gens = d.gens();
      break;
    }
  }
  return cert;
}

namespace {

bool violation_confirmed(const IdealGens& ideal, const Violation& v, const IdealGens* d,
                         std::size_t budget) {
  if (ideal_subset(IdealGens(ideal.ring(), {v.product}), ideal, budget).holds) return false;
  if (v.divided_vars) {
    const auto [i, j] = *v.divided_vars;
    const Polynomial xij = ideal.ring().var(i) * ideal.ring().var(j);
    if (!(v.product * xij == v.left * v.right)) return false;
    const auto in_i = [&](const Polynomial& f) {
      return ideal_subset(IdealGens(ideal.ring(), {f}), ideal, budget).holds;
    };
    return in_i(v.left) && in_i(v.right);
  }
  if (!(v.product == v.left * v.right)) return false;
  return d && ideal_subset(IdealGens(ideal.ring(), {v.left, v.right}), *d, budget).holds;
}

bool sigma_holds(const IdealGens& ideal, const Permutation& s, std::size_t budget) {
  const IdealGens d = d_ideal(ideal, s);
  return ideal_subset(ideal_product(d, d), ideal, budget).holds;
}

}  // namespace

bool recheck(const GolodCertificate& cert, std::size_t budget) {
  const IdealGens& ideal = cert.ideal;
  const std::size_t n = ideal.ring().nvars();
  if (cert.sigma) {
    const IdealGens d = d_ideal(ideal, *cert.sigma);
    if (!ideal_subset(d, IdealGens(ideal.ring(), cert.d_sigma_gens), budget).holds) return false;
    if (!ideal_subset(IdealGens(ideal.ring(), cert.d_sigma_gens), d, budget).holds) return false;
    if (cert.holds) return sigma_holds(ideal, *cert.sigma, budget);
    return cert.violation && violation_confirmed(ideal, *cert.violation, &d, budget);
  }
  if (cert.holds) {
    if (n > 6) return false;
    for (const auto& s : Permutation::all(n)) {
      if (!sigma_holds(ideal, s, budget)) return false;
    }
    return true;
  }
  bool confirmed = false;
  if (cert.failing_sigma && cert.sigma_violation) {
    const IdealGens d = d_ideal(ideal, *cert.failing_sigma);
    if (!violation_confirmed(ideal, *cert.sigma_violation, &d, budget)) return false;
    confirmed = true;
  }
  if (cert.violation && cert.violation->divided_vars) {
    if (!violation_confirmed(ideal, *cert.violation, nullptr, budget)) return false;
    confirmed = true;
  }
  return confirmed;
}

bool is_stable(const MonomialIdeal& ideal) {
  const auto exchange_ok = [&](const Monomial& u) {
    const std::size_t m = u.max_var();
    if (m == kMaxVars) return true;
    const Monomial base = u / Monomial::var(m);
    for (std::size_t i = 0; i < m; ++i) {
      if (!ideal.contains(base * Monomial::var(i))) return false;
    }
    return true;
  };
  const bool by_gens = std::all_of(ideal.gens().begin(), ideal.gens().end(), exchange_ok);
  bool by_scan = true;
  for (int d = 0; d <= ideal.max_degree() && by_scan; ++d) {
    for (const auto& u : monomials_of_degree(ideal.nvars(), d)) {
      if (ideal.contains(u) && !exchange_ok(u)) {
        by_scan = false;
        break;
      }
    }
  }
  if (by_gens != by_scan) {
    throw CrossCheckMismatch("stability by generators and by scan disagree for " + ideal.to_string());
  }
  return by_gens;
}

GolodCertificate stable_golod_cert(const MonomialIdeal& i, const MonomialIdeal& j) {
  if (!is_stable(i)) throw PreconditionError(i.to_string() + " is not stable");
  if (!j.contains(i)) throw PreconditionError("I is not contained in J");
  const Permutation rev = Permutation::reverse(i.nvars());
  const GolodCertificate base = check_d_sigma_golod(i, rev);
  if (!base.holds) {
    throw InvariantViolation("stable ideal " + i.to_string() +
                             " is not d_sigma-Golod for the order-reversing permutation");
  }
  GolodCertificate cert = check_d_sigma_golod(mi_product(i, j), rev);
  cert.notes.push_back("I = " + i.to_string() + " is stable and d_sigma-Golod for sigma = " +
                       rev.to_string());
  return cert;
}

IdealGens stretched_ideal(std::size_t n, int s, bool artinian) {
  if (n < 2 || n > kMaxVars) throw PreconditionError("stretched fixture needs 2 <= n <= 16");
  if (artinian && s < 1) throw PreconditionError("stretched fixture needs s >= 1");
  const PolyRing r = PolyRing::standard(n);
  std::vector<Polynomial> g;
  for (std::size_t a = 0; a + 1 < n; ++a) {
    for (std::size_t b = a; b + 1 < n; ++b) g.push_back(r.var(a) * r.var(b));
  }
  for (std::size_t a = 0; a + 1 < n; ++a) g.push_back(r.var(n - 1) * r.var(a));
  if (artinian) g.push_back(r.term(Monomial::var(n - 1, s + 1)));
  return IdealGens(r, std::move(g));
}

Permutation stretched_order(std::size_t n) {
  std::vector<std::size_t> im(n);
  im[0] = n - 1;
  for (std::size_t i = 1; i < n; ++i) im[i] = i - 1;
  return Permutation(std::move(im));
}

SumFamily sum_family_ideal(const PolyRing& ring,
                           const std::vector<std::vector<Polynomial>>& families, int k,
                           std::size_t step_budget) {
  if (families.size() != ring.nvars()) {
    throw PreconditionError("need one family per variable");
  }
  if (k < 2) throw PreconditionError("k must be at least 2");
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < families.size(); ++i) {
    for (const auto& f : families[i]) {
      for (const auto& t : f.terms()) {
        for (std::size_t v = 0; v < i; ++v) {
          if (t.mono[v] != 0) {
            throw PreconditionError("J_" + std::to_string(i + 1) + " generator " + ring.format(f) +
                                    " uses " + ring.names()[v]);
          }
        }
      }
      if (!f.is_zero()) gens.push_back(ring.var(i) * f);
    }
  }
  if (gens.empty()) throw PreconditionError("every J_i is zero");
  IdealGens j(ring, std::move(gens));
  j.require_proper();
  IdealGens power = j;
  for (int e = 1; e < k; ++e) power = ideal_product(power, j);
  if (power.is_monomial()) {
    const MonomialIdeal m = MonomialIdeal::from_gens(power);
    power = m.to_gens();
    const MonomialIdeal jm = MonomialIdeal::from_gens(j);
    j = jm.to_gens();
  }
  GolodCertificate cert =
      check_d_sigma_golod(power, Permutation::identity(ring.nvars()), step_budget);
  return SumFamily{std::move(j), std::move(power), std::move(cert)};
}

SumFamily sum_family_ideal(const std::vector<MonomialIdeal>& families, int k) {
  if (families.empty()) throw PreconditionError("empty family");
  const PolyRing ring = families.front().ring();
  std::vector<std::vector<Polynomial>> polys;
  for (const auto& f : families) {
    if (!(f.ring() == ring)) throw RingMismatch("families from different rings");
    polys.push_back(as_polys(f));
  }
  return sum_family_ideal(ring, polys, k);
}

}  // namespace dgolod
