#include "dgolod/poincare.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "dgolod/error.hpp"
#include "dgolod/koszul.hpp"
#include "dgolod/linalg.hpp"
#include "dgolod/resolution.hpp"

namespace dgolod {

// ---------------------------------------------------------------------------
// TruncatedSeries

TruncatedSeries::TruncatedSeries(int trunc) {
  if (trunc < 0) throw PreconditionError("negative truncation");
  c_.assign(trunc + 1, 0);
}

TruncatedSeries::TruncatedSeries(int trunc, const std::vector<long>& coeffs) : TruncatedSeries(trunc) {
  for (std::size_t k = 0; k < coeffs.size() && k < c_.size(); ++k) c_[k] = coeffs[k];
}

TruncatedSeries::TruncatedSeries(int trunc, std::vector<mpz_class> coeffs) : TruncatedSeries(trunc) {
  for (std::size_t k = 0; k < coeffs.size() && k < c_.size(); ++k) c_[k] = coeffs[k];
}

TruncatedSeries TruncatedSeries::one(int trunc) { return t_power(trunc, 0); }

TruncatedSeries TruncatedSeries::t_power(int trunc, int k, long coeff) {
  TruncatedSeries s(trunc);
  if (k >= 0 && k <= trunc) s.c_[k] = coeff;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(int trunc) const {
  return TruncatedSeries(trunc, std::vector<mpz_class>(c_.begin(), c_.begin() + std::min<std::size_t>(c_.size(), trunc + 1)));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.trunc(), b.trunc()));
  for (int k = 0; k <= out.trunc(); ++k) out.c_[k] = a.c_[k] + b.c_[k];
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.trunc(), b.trunc()));
  for (int k = 0; k <= out.trunc(); ++k) out.c_[k] = a.c_[k] - b.c_[k];
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.trunc(), b.trunc()));
  for (int i = 0; i <= out.trunc(); ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; i + j <= out.trunc(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return out;
}

TruncatedSeries inverse(const TruncatedSeries& a) {
  const mpz_class& c0 = a[0];
  if (c0 != 1 && c0 != -1) {
    throw PreconditionError("series with constant term " + c0.get_str() +
                            " has no inverse over the integers");
  }
  std::vector<mpz_class> inv(a.trunc() + 1);
  inv[0] = c0;  // c0 is its own inverse
  for (int k = 1; k <= a.trunc(); ++k) {
    mpz_class acc = 0;
    for (int j = 1; j <= k; ++j) acc += a[j] * inv[k - j];
    inv[k] = -acc * c0;
  }
  return TruncatedSeries(a.trunc(), std::move(inv));
}

TruncatedSeries series_op(SeriesOp op, const TruncatedSeries& a,
                          const std::optional<TruncatedSeries>& b) {
  if (op == SeriesOp::Inv) return inverse(a);
  if (!b) throw PreconditionError("binary series operation needs two operands");
  return op == SeriesOp::Add ? a + *b : a * *b;
}

bool coefficientwise_leq(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int top = std::min(a.trunc(), b.trunc());
  for (int k = 0; k <= top; ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

std::string to_string(const TruncatedSeries& s) {
  std::string out;
  for (int k = 0; k <= s.trunc(); ++k) {
    const mpz_class& c = s[k];
    if (c == 0) continue;
    const mpz_class mag = abs(c);
    std::string term;
    if (k == 0 || mag != 1) term = mag.get_str();
    if (k >= 1) term += "t";
    if (k >= 2) term += "^" + std::to_string(k);
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  const std::string tail = "O(t^" + std::to_string(s.trunc() + 1) + ")";
  return out.empty() ? tail : out + " + " + tail;
}

TruncatedSeries serre_bound(const std::vector<std::size_t>& betti, std::size_t n, int trunc) {
  TruncatedSeries num = TruncatedSeries::one(trunc);
  const TruncatedSeries one_plus_t = TruncatedSeries::one(trunc) + TruncatedSeries::t_power(trunc, 1);
  for (std::size_t k = 0; k < n; ++k) num = num * one_plus_t;
  TruncatedSeries den = TruncatedSeries::one(trunc);
  for (std::size_t i = 1; i < betti.size(); ++i) {
    den = den - TruncatedSeries::t_power(trunc, static_cast<int>(i) + 1, static_cast<long>(betti[i]));
  }
  return num * inverse(den);
}

TruncatedSeries sally_series(std::size_t n, std::size_t tau, int trunc) {
  if (n < 1) throw PreconditionError("sally_series needs n >= 1");
  TruncatedSeries den =
      TruncatedSeries::one(trunc) - TruncatedSeries::t_power(trunc, 1, static_cast<long>(n));
  if (tau != n) den = den + TruncatedSeries::t_power(trunc, 2);
  return inverse(den);
}

TruncatedSeries hilbert_series(const QuotientRing& r, int trunc) {
  TruncatedSeries s(trunc);
  std::vector<mpz_class> c;
  for (int d = 0; d <= trunc; ++d) c.emplace_back(static_cast<unsigned long>(r.basis(d).size()));
  return TruncatedSeries(trunc, std::move(c));
}

TruncatedSeries hilbert_series(const MonomialIdeal& ideal, int trunc) {
  if (ideal.is_unit()) throw PreconditionError("the unit ideal has R = 0");
  return hilbert_series(QuotientRing(ideal), trunc);
}

// ---------------------------------------------------------------------------
// Resolution of K over R

namespace {

struct Key {
  int d = 0;
  Monomial b;
};

struct KeyLess {
  std::size_t n;
  bool operator()(const Key& x, const Key& y) const {
    if (x.d != y.d) return x.d < y.d;
    return x.b.exponents(n) < y.b.exponents(n);
  }
};

/// c * e_h
struct Cell {
  std::size_t h;
  Monomial c;
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct CellHash {
  std::size_t operator()(const Cell& x) const noexcept { return x.c.hash() * 1000003u + x.h; }
};

using Vec = std::vector<std::pair<Cell, Scalar>>;

struct Gen {
  Key deg;
  Vec image;  // in the previous free module
};

class Resolver {
 public:
  Resolver(const QuotientRing& r, bool multi, std::optional<int> limit)
      : r_(r), multi_(multi), limit_(limit), n_(r.nvars()) {}

  /// Minimal generators of ker(cur -> prev).
  std::vector<Gen> kernel_generators(const std::vector<Gen>& prev, const std::vector<Gen>& cur,
                                     std::size_t budget, bool& over_budget) {
    std::map<Key, std::vector<Vec>, KeyLess> kernels(KeyLess{n_});
    std::vector<Gen> out;
    for (const Key& key : keys(cur)) {
      const std::vector<Cell> cells = piece(cur, key);
      if (cells.empty()) continue;
      const std::vector<Cell> targets = piece(prev, key);
      std::unordered_map<Cell, std::size_t, CellHash> tindex, cindex;
      for (std::size_t a = 0; a < targets.size(); ++a) tindex.emplace(targets[a], a);
      for (std::size_t a = 0; a < cells.size(); ++a) cindex.emplace(cells[a], a);

      SparseMatrix m{r_.ring().field(), targets.size(), {}};
      for (const auto& cell : cells) m.cols.push_back(to_local(times(cur[cell.h].image, cell.c), tindex));
      std::vector<SparseVector> ker = kernel_basis(m);
      if (ker.empty()) continue;

      EchelonBasis span(cells.size());
      for (const Key& lower : lower_keys(key)) {
        auto it = kernels.find(lower);
        if (it == kernels.end()) continue;
        for (const Vec& k : it->second) {
          for (std::size_t v = 0; v < n_; ++v) {
            if (multi_ && !(lower.b * Monomial::var(v) == key.b)) continue;
            span.insert(to_local(times(k, Monomial::var(v)), cindex));
          }
        }
      }
      std::vector<Vec>& stored = kernels[key];
      for (const auto& v : ker) {
        Vec global;
        for (const auto& [a, c] : v) global.emplace_back(cells[a], c);
        if (span.insert(v)) {
          out.push_back({key, global});
          if (out.size() > budget) {
            over_budget = true;
            return out;
          }
        }
        stored.push_back(std::move(global));
      }
    }
    return out;
  }

 private:
  /// Standard monomials of degree e, cached.
  const std::vector<Monomial>& basis(int e) {
    auto it = basis_.find(e);
    if (it == basis_.end()) it = basis_.emplace(e, r_.basis(e)).first;
    return it->second;
  }

  int top_for(const std::vector<Gen>& gens) {
    int hi = 0;
    for (const auto& g : gens) hi = std::max(hi, g.deg.d);
    if (limit_) return *limit_;
    return hi + *r_.top_degree();
  }

  std::vector<Key> keys(const std::vector<Gen>& gens) {
    const int top = top_for(gens);
    std::set<Key, KeyLess> out(KeyLess{n_});
    if (!multi_) {
      int lo = top + 1;
      for (const auto& g : gens) lo = std::min(lo, g.deg.d);
      for (int d = lo; d <= top; ++d) out.insert({d, Monomial{}});
    } else {
      for (const auto& g : gens) {
        for (int e = 0; g.deg.d + e <= top; ++e) {
          for (const auto& c : basis(e)) out.insert({g.deg.d + e, g.deg.b * c});
        }
      }
    }
    return {out.begin(), out.end()};
  }

  std::vector<Cell> piece(const std::vector<Gen>& gens, const Key& key) {
    std::vector<Cell> out;
    for (std::size_t h = 0; h < gens.size(); ++h) {
      const Key& g = gens[h].deg;
      if (multi_) {
        if (!g.b.divides(key.b)) continue;
        const Monomial c = key.b / g.b;
        if (r_.is_standard(c)) out.push_back({h, c});
      } else if (key.d >= g.d) {
        for (const auto& c : basis(key.d - g.d)) out.push_back({h, c});
      }
    }
    return out;
  }

  std::vector<Key> lower_keys(const Key& key) const {
    std::vector<Key> out;
    if (!multi_) {
      out.push_back({key.d - 1, Monomial{}});
      return out;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (key.b[v] > 0) out.push_back({key.d - 1, key.b / Monomial::var(v)});
    }
    return out;
  }

  /// m * v, reduced in R.
  Vec times(const Vec& v, const Monomial& m) const {
    Vec out;
    for (const auto& [cell, coef] : v) {
      const Monomial prod = cell.c * m;
      if (multi_) {
        if (r_.is_standard(prod)) out.push_back({{cell.h, prod}, coef});
        continue;
      }
      const Polynomial nf = r_.reduce(prod);
      for (const auto& t : nf.terms()) out.push_back({{cell.h, t.mono}, coef * t.coef});
    }
    return out;
  }

  static SparseVector to_local(const Vec& v,
                               const std::unordered_map<Cell, std::size_t, CellHash>& index) {
    std::vector<std::pair<std::size_t, Scalar>> entries;
    for (const auto& [cell, coef] : v) {
      auto it = index.find(cell);
      if (it == index.end()) throw InvariantViolation("element leaves its graded piece");
      entries.emplace_back(it->second, coef);
    }
    return make_sparse(std::move(entries));
  }

  const QuotientRing& r_;
  bool multi_;
  std::optional<int> limit_;
  std::size_t n_;
  std::unordered_map<int, std::vector<Monomial>> basis_;
};

}  // namespace

PoincareResult poincare_k(const QuotientRing& r, int trunc, int hmax,
                          std::optional<int> degree_bound, std::size_t rank_budget) {
  if (trunc < 0 || hmax < 0) throw PreconditionError("negative truncation");
  if (!r.is_monomial() && !r.is_homogeneous()) {
    throw Unsupported("Poincare series need a monomial or homogeneous ideal");
  }
  const int target = std::min(trunc, hmax);
  PoincareResult res;
  res.requested = target;
  res.artinian = r.is_artinian();
  std::optional<int> limit;
  if (!res.artinian) {
    limit = degree_bound ? *degree_bound : trunc + r.leading_ideal().max_degree();
    res.degree_bound = limit;
  }
  const bool multi = r.is_monomial();
  const Field field = r.ring().field();

  std::vector<mpz_class> c{1};
  std::vector<Gen> prev{{Key{0, Monomial{}}, {}}};
  std::vector<Gen> cur;
  for (const auto& m : r.basis(1)) {
    cur.push_back({Key{1, m}, {{Cell{0, m}, field.one()}}});
    if (!multi) cur.back().deg.b = Monomial{};
  }
  if (target >= 1) c.emplace_back(static_cast<unsigned long>(cur.size()));
  Resolver res_engine(r, multi, limit);
  int s = 1;
  for (; s < target && !cur.empty(); ++s) {
    bool over = false;
    std::vector<Gen> next = res_engine.kernel_generators(prev, cur, rank_budget, over);
    if (over) {
      res.note = "rank budget of " + std::to_string(rank_budget) + " exceeded at step " +
                 std::to_string(s + 1);
      break;
    }
    c.emplace_back(static_cast<unsigned long>(next.size()));
    prev = std::move(cur);
    cur = std::move(next);
  }
  res.achieved = static_cast<int>(c.size()) - 1;
  if (res.achieved < target && (cur.empty() || c.back() == 0) && res.note.empty()) {
    res.achieved = target;  // the resolution stopped
  }
  res.series = TruncatedSeries(res.achieved, std::move(c));
  return res;
}

PoincareResult poincare_k(const MonomialIdeal& ideal, int trunc, int hmax) {
  if (ideal.is_unit()) throw PreconditionError("the unit ideal has R = 0");
  return poincare_k(QuotientRing(ideal), trunc, hmax);
}

// ---------------------------------------------------------------------------
// Golod equality and ring profile

namespace {

GolodEquality compare_with_serre(const QuotientRing& r, std::vector<std::size_t> betti, int trunc) {
  GolodEquality g;
  g.betti = std::move(betti);
  g.computed = poincare_k(r, trunc, trunc);
  const int top = g.computed.achieved;
  g.serre = serre_bound(g.betti, r.nvars(), trunc);
  g.leq_everywhere = coefficientwise_leq(g.computed.series, g.serre);
  for (int k = 0; k <= top && g.computed.series[k] == g.serre[k]; ++k) g.equal_up_to = k;
  g.equal = g.equal_up_to == top && top == trunc;
  std::ostringstream msg;
  if (!g.leq_everywhere) {
    msg << "Serre inequality violated";
  } else if (g.equal) {
    msg << "Golod-consistent to degree " << trunc << " (truncated evidence, not a proof)";
  } else if (g.equal_up_to == top) {
    msg << "equal to the Serre bound up to the achieved degree " << top;
  } else {
    msg << "strictly below the Serre bound in degree " << g.equal_up_to + 1 << ", so not Golod";
  }
  if (g.computed.degree_bound) msg << "; internal degrees <= " << *g.computed.degree_bound;
  g.summary = msg.str();
  return g;
}

}  // namespace

GolodEquality golod_equality(const QuotientRing& r, int trunc) {
  std::vector<std::size_t> betti;
  if (r.is_monomial()) {
    betti = betti_numbers(r.leading_ideal());
  } else {
    betti = koszul_homology(r).dims;
    while (!betti.empty() && betti.back() == 0) betti.pop_back();
  }
  return compare_with_serre(r, std::move(betti), trunc);
}

GolodEquality golod_equality(const MonomialIdeal& ideal, int trunc) {
  if (!ideal.is_proper()) throw PreconditionError("golod_equality needs a proper nonzero ideal");
  return golod_equality(QuotientRing(ideal), trunc);
}

RingProfile ring_profile(const QuotientRing& r, std::optional<int> degree_bound) {
  if (!r.is_monomial() && !r.is_homogeneous()) {
    throw Unsupported("ring profiles need a monomial or homogeneous ideal");
  }
  RingProfile p;
  p.n = r.nvars();
  p.artinian = r.is_artinian();
  int top;
  if (p.artinian) {
    p.s = r.top_degree();
    top = *p.s;
  } else {
    top = degree_bound ? *degree_bound : r.leading_ideal().lcm_all().degree();
    p.tau_degree_bound = top;
  }
  for (int d = 0; d <= top; ++d) {
    const auto here = r.basis(d);
    const auto up = r.basis(d + 1);
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    for (std::size_t a = 0; a < up.size(); ++a) index.emplace(up[a], a);
    SparseMatrix m{r.ring().field(), p.n * up.size(), {}};
    for (const auto& u : here) {
      std::vector<std::pair<std::size_t, Scalar>> col;
      for (std::size_t v = 0; v < p.n; ++v) {
        const Polynomial nf = r.reduce(u * Monomial::var(v));
        for (const auto& t : nf.terms()) {
          col.emplace_back(v * up.size() + index.at(t.mono), t.coef);
        }
      }
      m.cols.push_back(make_sparse(std::move(col)));
    }
    const std::size_t socle = here.size() - rank(m);
    p.socle_by_degree.push_back(socle);
    p.tau += socle;
  }
  const std::size_t h2 = r.basis(2).size();
  p.stretched = h2 <= 1;
  p.degenerate = h2 == 0;
  return p;
}

RingProfile ring_profile(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw PreconditionError("the unit ideal has R = 0");
  return ring_profile(QuotientRing(ideal));
}

}  // namespace dgolod
