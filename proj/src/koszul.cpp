#include "dgolod/koszul.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

#include "dgolod/error.hpp"
#include "dgolod/linalg.hpp"

namespace dgolod {

bool TupleOrder::operator()(std::uint32_t a, std::uint32_t b) const noexcept {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  const std::uint32_t diff = a ^ b;
  return (a & diff & -diff) != 0;
}

// ---------------------------------------------------------------------------
// KoszulElement

Polynomial KoszulElement::at(std::uint32_t mask) const {
  auto it = coeffs_.find(mask);
  return it == coeffs_.end() ? ring_.zero() : it->second;
}

void KoszulElement::add(std::uint32_t mask, const Polynomial& f) {
  if (static_cast<std::size_t>(std::popcount(mask)) != degree_) {
    throw PreconditionError("wedge of the wrong degree");
  }
  if (f.is_zero()) return;
  auto [it, fresh] = coeffs_.try_emplace(mask, f);
  if (fresh) return;
  it->second += f;
  if (it->second.is_zero()) coeffs_.erase(it);
}

KoszulElement& KoszulElement::operator+=(const KoszulElement& o) {
  if (o.degree_ != degree_) throw PreconditionError("adding Koszul elements of different degree");
  for (const auto& [mask, f] : o.coeffs_) add(mask, f);
  return *this;
}

KoszulElement KoszulElement::operator-() const {
  KoszulElement out(ring_, degree_);
  for (const auto& [mask, f] : coeffs_) out.coeffs_.emplace(mask, -f);
  return out;
}

KoszulElement operator*(const Polynomial& f, const KoszulElement& z) {
  KoszulElement out(z.ring_, z.degree_);
  for (const auto& [mask, g] : z.coeffs_) out.add(mask, f * g);
  return out;
}

namespace {

/// Sign of sorting the sequence, or 0 on a repeat.
int sort_sign(std::vector<std::size_t> seq) {
  int sign = 1;
  for (std::size_t a = 0; a < seq.size(); ++a) {
    for (std::size_t b = a + 1; b < seq.size(); ++b) {
      if (seq[a] == seq[b]) return 0;
      if (seq[a] > seq[b]) sign = -sign;
    }
  }
  return sign;
}

std::vector<std::size_t> indices_of(std::uint32_t mask) {
  std::vector<std::size_t> out;
  for (std::uint32_t m = mask; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

Monomial mask_monomial(std::uint32_t mask) {
  Monomial m;
  for (std::size_t r : indices_of(mask)) m.set(r, 1);
  return m;
}

}  // namespace

KoszulElement koszul_monomial(const PolyRing& ring, const std::vector<std::size_t>& indices) {
  KoszulElement out(ring, indices.size());
  const int sign = sort_sign(indices);
  if (sign == 0) return out;
  std::uint32_t mask = 0;
  for (std::size_t r : indices) {
    if (r >= ring.nvars()) throw PreconditionError("dx index out of range");
    mask |= 1u << r;
  }
  out.add(mask, ring.constant(sign));
  return out;
}

KoszulElement koszul_boundary(const KoszulElement& z) {
  if (z.degree() == 0) throw PreconditionError("the boundary starts in degree 1");
  const PolyRing& ring = z.ring();
  KoszulElement out(ring, z.degree() - 1);
  for (const auto& [mask, f] : z.coeffs()) {
    int sign = 1;
    for (std::size_t r : indices_of(mask)) {
      out.add(mask & ~(1u << r), f.times(Monomial::var(r), ring.field().from_int(sign)));
      sign = -sign;
    }
  }
  return out;
}

KoszulElement relabel(const KoszulElement& z, const std::vector<std::size_t>& images) {
  KoszulElement out(z.ring(), z.degree());
  for (const auto& [mask, f] : z.coeffs()) {
    std::vector<std::size_t> seq;
    std::uint32_t target = 0;
    for (std::size_t r : indices_of(mask)) {
      seq.push_back(images.at(r));
      target |= 1u << images[r];
    }
    const Polynomial g = relabel(f, images);
    out.add(target, sort_sign(seq) > 0 ? g : -g);
  }
  return out;
}

KoszulElement reduce(const KoszulElement& z, const QuotientRing& r) {
  KoszulElement out(z.ring(), z.degree());
  for (const auto& [mask, f] : z.coeffs()) out.add(mask, r.reduce(f));
  return out;
}

std::string format_koszul(const KoszulElement& z) {
  if (z.is_zero()) return "0";
  const PolyRing& ring = z.ring();
  std::string out;
  for (const auto& [mask, f] : z.coeffs()) {
    std::string wedge;
    for (std::size_t r : indices_of(mask)) wedge += "d" + ring.names()[r];
    std::string term;
    if (wedge.empty()) {
      term = f.size() > 1 && !out.empty() ? "(" + ring.format(f) + ")" : ring.format(f);
    } else if (f == ring.one()) {
      term = wedge;
    } else if (f == -ring.one()) {
      term = "-" + wedge;
    } else if (f.size() == 1) {
      term = ring.format(f) + " " + wedge;
    } else {
      term = "(" + ring.format(f) + ") " + wedge;
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Chains and cycles

namespace {

FreeComplex relabel_complex(const FreeComplex& c, const std::vector<std::size_t>& images) {
  FreeComplex out{c.ring, c.ranks, {}, {}, {}};
  for (const auto& d : c.diffs) {
    PolyMatrix m(c.ring, d.rows(), d.cols());
    for (std::size_t j = 0; j < d.cols(); ++j) {
      for (const auto& [k, f] : d.column(j)) m.set(k, j, relabel(f, images));
    }
    out.diffs.push_back(std::move(m));
  }
  infer_gradings(out);
  return out;
}

/// (id (x) delta_k) applied to a vector of Omega_p coefficients indexed by F_k.
std::vector<KoszulElement> apply_delta(const FreeComplex& c, std::size_t k,
                                       const std::vector<KoszulElement>& v, std::size_t p) {
  const PolyMatrix& d = c.diff(k);
  std::vector<KoszulElement> out(d.rows(), KoszulElement(c.ring, p));
  for (std::size_t l = 0; l < d.cols(); ++l) {
    if (v[l].is_zero()) continue;
    for (const auto& [a, alpha] : d.column(l)) out[a] += alpha * v[l];
  }
  return out;
}

KoszulChain build_chain_identity_order(const FreeComplex& c, std::size_t i, std::size_t j) {
  const PolyRing& ring = c.ring;
  const std::size_t n = ring.nvars();
  KoszulChain chain;
  chain.i = i;
  chain.j = j;

  std::vector<KoszulElement> w(c.ranks[i], KoszulElement(ring, 0));
  w[j].add(0, ring.one());
  chain.components.push_back(w);
  for (std::size_t k = i; k >= 1; --k) {
    const PolyMatrix& d = c.diff(k);
    const std::size_t p = i - k + 1;
    std::vector<KoszulElement> next(d.rows(), KoszulElement(ring, p));
    for (std::size_t l = 0; l < d.cols(); ++l) {
      if (w[l].is_zero()) continue;
      for (const auto& [a, alpha] : d.column(l)) {
        for (std::size_t r = 0; r < n; ++r) {
          const Polynomial dr = d_op(alpha, r);
          if (dr.is_zero()) continue;
          for (const auto& [mask, f] : w[l].coeffs()) {
            if (mask != 0 && static_cast<std::size_t>(std::countr_zero(mask)) <= r) continue;
            next[a].add(mask | (1u << r), dr * f);
          }
        }
      }
    }
    w = std::move(next);
    chain.components.push_back(w);
  }
  return chain;
}

void check_chain(const FreeComplex& c, const KoszulChain& chain) {
  const std::size_t i = chain.i;
  const PolyRing& ring = c.ring;
  auto eps = [](std::size_t p) { return (p * (p + 1) / 2) % 2 == 0 ? 1 : -1; };
  for (std::size_t p = 0; p < i; ++p) {
    const std::size_t k = i - p;
    const auto lhs = apply_delta(c, k, chain.components[p], p);
    const auto& upper = chain.components[p + 1];
    for (std::size_t a = 0; a < lhs.size(); ++a) {
      const KoszulElement rhs = koszul_boundary(upper[a]);
      if (!(lhs[a] == rhs)) {
        std::ostringstream msg;
        msg << "lifting identity fails for z[" << i << "][" << chain.j + 1 << "] at F_" << k - 1
            << " basis " << a + 1 << ": " << format_koszul(lhs[a]) << " vs "
            << format_koszul(rhs);
        throw InvariantViolation(msg.str());
      }
      // Total differential d (x) 1 + (-1)^p 1 (x) delta on sum_p eps(p) z_p.
      const Polynomial s_up = ring.constant(eps(p + 1));
      const Polynomial s_here = ring.constant(eps(p) * (p % 2 == 0 ? 1 : -1));
      if (!(s_up * rhs + s_here * lhs[a]).is_zero()) {
        throw InvariantViolation("total cycle condition fails for z[" + std::to_string(i) + "][" +
                                 std::to_string(chain.j + 1) + "]");
      }
    }
  }
}

}  // namespace

KoszulChain build_chain(const FreeComplex& c, std::size_t i, std::size_t j,
                        const std::optional<Permutation>& sigma) {
  if (i < 1 || i > c.length()) throw PreconditionError("homological degree out of range");
  if (j >= c.ranks[i]) throw PreconditionError("basis index out of range");
  for (std::size_t k = 1; k <= i; ++k) {
    const PolyMatrix& d = c.diff(k);
    for (std::size_t col = 0; col < d.cols(); ++col) {
      for (const auto& [row, f] : d.column(col)) {
        if (!f.constant_term().is_zero()) {
          throw NonMinimalResolution("delta_" + std::to_string(k) + " has the unit-bearing entry " +
                                     c.ring.format(f) + " at (" + std::to_string(row + 1) + "," +
                                     std::to_string(col + 1) + ")");
        }
      }
    }
  }
  if (sigma && sigma->size() != c.ring.nvars()) {
    throw PreconditionError("permutation size differs from the number of variables");
  }
  if (!sigma || sigma->is_identity()) {
    KoszulChain chain = build_chain_identity_order(c, i, j);
    check_chain(c, chain);
    chain.sigma = sigma;
    return chain;
  }
  const FreeComplex pulled = relabel_complex(c, sigma->inverse().images());
  KoszulChain chain = build_chain_identity_order(pulled, i, j);
  check_chain(pulled, chain);
  for (auto& level : chain.components) {
    for (auto& z : level) z = relabel(z, sigma->images());
  }
  check_chain(c, chain);
  chain.sigma = sigma;
  return chain;
}

KoszulElement build_cycle(const FreeComplex& c, std::size_t i, std::size_t j,
                          const std::optional<Permutation>& sigma) {
  return build_chain(c, i, j, sigma).cycle();
}

std::string format_cycle(const KoszulChain& chain) {
  return "z[" + std::to_string(chain.i) + "][" + std::to_string(chain.j + 1) +
         "] = " + format_koszul(chain.cycle());
}

// ---------------------------------------------------------------------------
// Homology strands

namespace {

/// Multidegree b (multigraded R) or internal degree d.
struct StrandKey {
  int d = 0;
  Monomial b;
  friend bool operator==(const StrandKey&, const StrandKey&) = default;
};

struct StrandKeyLess {
  std::size_t n;
  bool operator()(const StrandKey& x, const StrandKey& y) const {
    if (x.d != y.d) return x.d < y.d;
    return x.b.exponents(n) < y.b.exponents(n);
  }
};

struct Cell {
  std::uint32_t mask;
  Monomial m;
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct CellHash {
  std::size_t operator()(const Cell& c) const noexcept { return c.m.hash() * 131 + c.mask; }
};

/// C_i = (Omega_i (x) R) in one strand, with the boundary maps between them.
class Strand {
 public:
  Strand(const QuotientRing& r, bool multi, StrandKey key)
      : r_(r), multi_(multi), key_(std::move(key)), cells_(r.nvars() + 1), index_(r.nvars() + 1) {
    const std::size_t n = r.nvars();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const std::size_t i = std::popcount(mask);
      if (multi_) {
        const Monomial xm = mask_monomial(mask);
        if (!xm.divides(key_.b)) continue;
        const Monomial m = key_.b / xm;
        if (r.is_standard(m)) cells_[i].push_back({mask, m});
      } else {
        for (const auto& m : r.basis(key_.d - static_cast<int>(i))) cells_[i].push_back({mask, m});
      }
    }
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t a = 0; a < cells_[i].size(); ++a) index_[i].emplace(cells_[i][a], a);
    }
  }

  const StrandKey& key() const noexcept { return key_; }
  std::size_t top() const noexcept { return cells_.size() - 1; }
  const std::vector<Cell>& cells(std::size_t i) const { return cells_[i]; }
  std::size_t dim(std::size_t i) const { return cells_[i].size(); }
  std::optional<std::size_t> index(std::size_t i, const Cell& c) const {
    auto it = index_[i].find(c);
    if (it == index_[i].end()) return std::nullopt;
    return it->second;
  }

  /// C_i -> C_{i-1}
  SparseMatrix boundary(std::size_t i) const {
    SparseMatrix m{r_.ring().field(), dim(i - 1), {}};
    for (const auto& cell : cells_[i]) {
      std::vector<std::pair<std::size_t, Scalar>> col;
      int sign = 1;
      for (std::size_t v : indices_of(cell.mask)) {
        const Polynomial p = r_.reduce(cell.m * Monomial::var(v));
        for (const auto& t : p.terms()) {
          auto row = index(i - 1, {cell.mask & ~(1u << v), t.mono});
          if (!row) throw InvariantViolation("boundary leaves its strand");
          col.emplace_back(*row, sign > 0 ? t.coef : -t.coef);
        }
        sign = -sign;
      }
      m.cols.push_back(make_sparse(std::move(col)));
    }
    return m;
  }

  KoszulElement element(std::size_t i, const SparseVector& v) const {
    KoszulElement z(r_.ring(), i);
    for (const auto& [a, c] : v) z.add(cells_[i][a].mask, r_.ring().term(cells_[i][a].m, c));
    return z;
  }

 private:
  const QuotientRing& r_;
  bool multi_;
  StrandKey key_;
  std::vector<std::vector<Cell>> cells_;
  std::vector<std::unordered_map<Cell, std::size_t, CellHash>> index_;
};

bool use_multigrading(const QuotientRing& r) { return r.is_monomial(); }

/// Splits a reduced element into strand pieces.
std::map<StrandKey, std::vector<std::pair<Cell, Scalar>>, StrandKeyLess> split(
    const KoszulElement& z, bool multi, std::size_t n) {
  std::map<StrandKey, std::vector<std::pair<Cell, Scalar>>, StrandKeyLess> out(StrandKeyLess{n});
  for (const auto& [mask, f] : z.coeffs()) {
    for (const auto& t : f.terms()) {
      StrandKey key;
      key.d = t.mono.degree() + std::popcount(mask);
      if (multi) key.b = t.mono * mask_monomial(mask);
      out[key].push_back({{mask, t.mono}, t.coef});
    }
  }
  return out;
}

void check_grading(const QuotientRing& r) {
  if (!r.is_monomial() && !r.is_homogeneous()) {
    throw Unsupported("Koszul homology needs a monomial or homogeneous ideal");
  }
}

}  // namespace

HomologyReport koszul_homology(const QuotientRing& r, std::optional<int> degree_bound) {
  check_grading(r);
  const std::size_t n = r.nvars();
  HomologyReport rep;
  rep.multigraded = use_multigrading(r);
  rep.degree_bound = degree_bound ? *degree_bound : r.leading_ideal().lcm_all().degree();
  if (rep.degree_bound < 0) throw PreconditionError("negative degree bound");
  rep.dims.assign(n + 1, 0);

  std::vector<StrandKey> keys;
  for (int d = 0; d <= rep.degree_bound + 2; ++d) {
    if (rep.multigraded) {
      for (const auto& b : monomials_of_degree(n, d)) keys.push_back({d, b});
    } else {
      keys.push_back({d, Monomial{}});
    }
  }
  for (const auto& key : keys) {
    const Strand s(r, rep.multigraded, key);
    std::vector<SparseMatrix> bd(n + 2);
    std::vector<std::size_t> rk(n + 2, 0);
    for (std::size_t i = 1; i <= n; ++i) {
      if (s.dim(i) == 0 || s.dim(i - 1) == 0) continue;
      bd[i] = s.boundary(i);
      rk[i] = rank(bd[i]);
    }
    for (std::size_t i = 0; i <= n; ++i) {
      const std::size_t h = s.dim(i) - rk[i] - rk[i + 1];
      if (h == 0) continue;
      if (key.d > rep.degree_bound) {
        rep.bound_confirmed = false;
        continue;
      }
      rep.dims[i] += h;
      auto& row = rep.by_degree[key.d];
      if (row.empty()) row.assign(n + 1, 0);
      row[i] += h;

      EchelonBasis img(s.dim(i));
      if (i < n && rk[i + 1] > 0) {
        for (const auto& col : bd[i + 1].cols) img.insert(col);
      }
      std::vector<SparseVector> ker;
      if (i == 0 || bd[i].cols.empty()) {
        for (std::size_t a = 0; a < s.dim(i); ++a) ker.push_back({{a, r.ring().field().one()}});
      } else {
        ker = kernel_basis(bd[i]);
      }
      for (const auto& v : ker) {
        if (!img.insert(v)) continue;
        HomologyClass cls{i, key.d, std::nullopt, s.element(i, v)};
        if (rep.multigraded) cls.multidegree = key.b;
        rep.basis.push_back(std::move(cls));
      }
    }
  }
  return rep;
}

HomologyReport koszul_homology(const MonomialIdeal& ideal, std::optional<int> degree_bound) {
  if (ideal.is_unit()) throw PreconditionError("the unit ideal has R = 0");
  return koszul_homology(QuotientRing(ideal), degree_bound);
}

HomologyReport koszul_homology(const IdealGens& ideal, std::optional<int> degree_bound) {
  return koszul_homology(QuotientRing(ideal), degree_bound);
}

// ---------------------------------------------------------------------------
// Basis and zero-map verification

namespace {

BasisReport verify_basis_impl(const FreeComplex& c, const QuotientRing& r) {
  const std::size_t n = r.nvars();
  const bool multi = use_multigrading(r);
  BasisReport rep;
  rep.betti = c.ranks;
  const HomologyReport h = koszul_homology(r);
  rep.homology_dims = h.dims;
  rep.cycles.resize(c.length() + 1);

  for (std::size_t i = 1; i <= c.length() && rep.passed(); ++i) {
    std::map<StrandKey, std::vector<std::pair<std::size_t, SparseVector>>, StrandKeyLess> groups(
        StrandKeyLess{n});
    std::map<StrandKey, Strand, StrandKeyLess> strands(StrandKeyLess{n});
    for (std::size_t j = 0; j < c.ranks[i]; ++j) {
      const std::string where = "z[" + std::to_string(i) + "][" + std::to_string(j + 1) + "]";
      KoszulElement z(c.ring, i);
      try {
        z = build_cycle(c, i, j);
      } catch (const InvariantViolation& e) {
        rep.failure = where + ": " + e.what();
        return rep;
      }
      rep.cycles[i].push_back(z);
      if (!reduce(koszul_boundary(z), r).is_zero()) {
        rep.failure = where + " is not a cycle modulo I";
        return rep;
      }
      const auto pieces = split(reduce(z, r), multi, n);
      if (pieces.size() != 1) {
        rep.failure = where + (pieces.empty() ? " vanishes modulo I" : " is not homogeneous");
        return rep;
      }
      const auto& [key, cells] = *pieces.begin();
      auto it = strands.find(key);
      if (it == strands.end()) it = strands.emplace(key, Strand(r, multi, key)).first;
      std::vector<std::pair<std::size_t, Scalar>> v;
      for (const auto& [cell, coef] : cells) v.emplace_back(*it->second.index(i, cell), coef);
      groups[key].emplace_back(j, make_sparse(std::move(v)));
    }
    for (const auto& [key, vecs] : groups) {
      const Strand& s = strands.at(key);
      EchelonBasis span(s.dim(i));
      if (i < n && s.dim(i + 1) > 0) {
        for (const auto& col : s.boundary(i + 1).cols) span.insert(col);
      }
      for (const auto& [j, v] : vecs) {
        if (!span.insert(v)) {
          rep.failure = "the class of z[" + std::to_string(i) + "][" + std::to_string(j + 1) +
                        "] depends on the earlier ones";
          return rep;
        }
      }
    }
  }
  const std::size_t top = std::max(c.ranks.size(), h.dims.size());
  for (std::size_t i = 0; i < top && rep.passed(); ++i) {
    const std::size_t b = i < c.ranks.size() ? c.ranks[i] : 0;
    const std::size_t hd = i < h.dims.size() ? h.dims[i] : 0;
    if (b != hd) {
      rep.failure = "b_" + std::to_string(i) + " = " + std::to_string(b) + " but dim H_" +
                    std::to_string(i) + " = " + std::to_string(hd);
    }
  }
  if (rep.passed() && !h.bound_confirmed) rep.failure = "homology found beyond the degree bound";
  return rep;
}

}  // namespace

BasisReport verify_basis(const MonomialIdeal& ideal) {
  if (!ideal.is_proper()) throw PreconditionError("verify_basis needs a proper nonzero ideal");
  return verify_basis_impl(minimal_resolution(ideal), QuotientRing(ideal));
}

BasisReport verify_basis(const FreeComplex& c, const IdealGens& ideal) {
  const QuotientRing r(ideal);
  check_grading(r);
  return verify_basis_impl(c, r);
}

ZeroMapReport verify_zero_map(const FreeComplex& c, const IdealGens& ideal,
                              const Permutation& sigma) {
  ZeroMapReport rep{sigma, {}, {}};
  const PolyRing& ring = ideal.ring();
  std::optional<MonomialIdeal> mono;
  std::optional<GroebnerBasis> gb;
  bool unit = false;
  if (ideal.is_monomial()) {
    mono = d_ideal(MonomialIdeal::from_gens(ideal), sigma);
    unit = mono->is_unit();
  } else {
    const IdealGens dsi = d_ideal(ideal, sigma);
    unit = dsi.has_unit_generator();
    if (!unit) gb = buchberger_unrestricted(dsi);
  }
  for (std::size_t i = 1; i <= c.length(); ++i) {
    for (std::size_t j = 0; j < c.ranks[i]; ++j) {
      const KoszulElement z = build_cycle(c, i, j, sigma);
      for (const auto& [mask, f] : z.coeffs()) {
        CoefficientWitness w{i, j, mask, f, true, {}};
        if (unit) {
          w.witness = "d_sigma(I) is the unit ideal";
        } else if (mono) {
          for (const auto& t : f.terms()) {
            auto g = mono->divisor_of(t.mono);
            if (!g) {
              w.member = false;
              w.witness = "no generator divides " + ring.format(t.mono);
              break;
            }
            if (!w.witness.empty()) w.witness += ", ";
            w.witness += ring.format(*g) + " | " + ring.format(t.mono);
          }
        } else {
          const Polynomial nf = normal_form(f, *gb);
          w.member = nf.is_zero();
          w.witness = "normal form " + ring.format(nf);
        }
        if (!w.member && rep.passed()) {
          rep.failure = "coefficient " + ring.format(f) + " of z[" + std::to_string(i) + "][" +
                        std::to_string(j + 1) + "] is outside d_sigma(I): " + w.witness;
        }
        rep.entries.push_back(std::move(w));
      }
    }
  }
  return rep;
}

ZeroMapReport verify_zero_map(const MonomialIdeal& ideal, const Permutation& sigma) {
  if (!ideal.is_proper()) throw PreconditionError("verify_zero_map needs a proper nonzero ideal");
  return verify_zero_map(minimal_resolution(ideal), ideal.to_gens(), sigma);
}

}  // namespace dgolod
