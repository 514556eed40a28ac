#include "dgolod/resolution.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "dgolod/error.hpp"
#include "dgolod/linalg.hpp"
#include "dgolod/parse.hpp"

namespace dgolod {

// ---------------------------------------------------------------------------
// PolyMatrix

PolyMatrix::PolyMatrix(PolyRing ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {}

Polynomial PolyMatrix::at(std::size_t k, std::size_t j) const {
  const Column& c = cols_.at(j);
  auto it = std::lower_bound(c.begin(), c.end(), k,
                             [](const auto& e, std::size_t r) { return e.first < r; });
  if (it != c.end() && it->first == k) return it->second;
  return ring_.zero();
}

void PolyMatrix::set(std::size_t k, std::size_t j, Polynomial value) {
  if (k >= rows_) throw PreconditionError("row index out of range");
  Column& c = cols_.at(j);
  auto it = std::lower_bound(c.begin(), c.end(), k,
                             [](const auto& e, std::size_t r) { return e.first < r; });
  if (it != c.end() && it->first == k) {
    if (value.is_zero()) {
      c.erase(it);
    } else {
      it->second = std::move(value);
    }
  } else if (!value.is_zero()) {
    c.insert(it, {k, std::move(value)});
  }
}

bool PolyMatrix::is_zero() const noexcept {
  return std::all_of(cols_.begin(), cols_.end(), [](const Column& c) { return c.empty(); });
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw PreconditionError("matrix shapes do not compose");
  PolyMatrix out(a.ring(), a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    std::vector<std::optional<Polynomial>> acc(a.rows());
    for (const auto& [m, bv] : b.column(j)) {
      for (const auto& [k, av] : a.column(m)) {
        if (acc[k]) {
          *acc[k] += av * bv;
        } else {
          acc[k] = av * bv;
        }
      }
    }
    for (std::size_t k = 0; k < a.rows(); ++k) {
      if (acc[k] && !acc[k]->is_zero()) out.cols_[j].push_back({k, std::move(*acc[k])});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Gradings

void infer_gradings(FreeComplex& c) {
  c.degrees.clear();
  c.labels.clear();
  std::vector<std::vector<int>> deg{std::vector<int>(c.ranks.at(0), 0)};
  std::vector<std::vector<Monomial>> lab{std::vector<Monomial>(c.ranks.at(0))};
  bool graded = true, multi = true;
  for (std::size_t i = 1; i <= c.length(); ++i) {
    const PolyMatrix& m = c.diff(i);
    std::vector<int> d(m.cols(), 0);
    std::vector<Monomial> l(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& col = m.column(j);
      if (col.empty()) {
        multi = false;
        continue;
      }
      const auto& [k0, a0] = col.front();
      if (!a0.is_homogeneous()) {
        graded = multi = false;
        break;
      }
      d[j] = a0.degree() + deg[i - 1][k0];
      if (multi && a0.is_monomial()) l[j] = lab[i - 1][k0] * a0.terms().front().mono;
      for (const auto& [k, a] : col) {
        if (!a.is_homogeneous() || a.degree() + deg[i - 1][k] != d[j]) graded = false;
        if (!a.is_monomial() || !(lab[i - 1][k] * a.terms().front().mono == l[j])) multi = false;
      }
    }
    if (!graded) break;
    deg.push_back(std::move(d));
    lab.push_back(std::move(l));
  }
  if (graded) c.degrees = std::move(deg);
  if (graded && multi) c.labels = std::move(lab);
}

// ---------------------------------------------------------------------------
// Taylor complex

FreeComplex taylor_complex(const MonomialIdeal& ideal, std::size_t max_gens) {
  return taylor_complex(ideal, ideal.gens(), max_gens);
}

FreeComplex taylor_complex(const MonomialIdeal& ideal, const std::vector<Monomial>& g,
                           std::size_t max_gens) {
  if (!ideal.is_proper()) throw PreconditionError("Taylor complex needs a proper nonzero ideal");
  if (!std::is_permutation(g.begin(), g.end(), ideal.gens().begin(), ideal.gens().end())) {
    throw PreconditionError("generator order must list the minimal generators");
  }
  const std::size_t m = g.size();
  if (m > max_gens) {
    throw ResourceLimit("Taylor complex of " + std::to_string(m) + " generators exceeds the limit of " +
                        std::to_string(max_gens));
  }
  const PolyRing& ring = ideal.ring();
  const std::uint32_t full = 1u << m;
  std::vector<Monomial> lcm_of(full);
  for (std::uint32_t s = 1; s < full; ++s) {
    const int low = __builtin_ctz(s);
    lcm_of[s] = lcm(lcm_of[s & (s - 1)], g[low]);
  }

  // Subsets of each size in lexicographic order of their element lists.
  std::vector<std::vector<std::uint32_t>> level(m + 1);
  std::vector<std::size_t> index_of(full);
  std::vector<std::uint32_t> stack;
  auto gen = [&](auto&& self, std::size_t start, std::uint32_t mask, std::size_t size,
                 std::size_t target) -> void {
    if (size == target) {
      index_of[mask] = level[target].size();
      level[target].push_back(mask);
      return;
    }
    for (std::size_t e = start; e < m; ++e) self(self, e + 1, mask | (1u << e), size + 1, target);
  };
  for (std::size_t p = 0; p <= m; ++p) gen(gen, 0, 0, 0, p);

  FreeComplex c{ring, {}, {}, {}, {}};
  for (std::size_t p = 0; p <= m; ++p) c.ranks.push_back(level[p].size());
  for (std::size_t p = 1; p <= m; ++p) {
    PolyMatrix d(ring, level[p - 1].size(), level[p].size());
    for (std::size_t j = 0; j < level[p].size(); ++j) {
      const std::uint32_t t = level[p][j];
      std::size_t k = 0;
      for (std::size_t e = 0; e < m; ++e) {
        if (!(t & (1u << e))) continue;
        ++k;
        const std::uint32_t face = t & ~(1u << e);
        const bool negative = (p - k) % 2 == 1;
        d.set(index_of[face], j, ring.term(lcm_of[t] / lcm_of[face], negative ? -1 : 1));
      }
    }
    c.diffs.push_back(std::move(d));
  }
  for (std::size_t p = 0; p <= m; ++p) {
    std::vector<int> deg;
    std::vector<Monomial> lab;
    for (auto t : level[p]) {
      deg.push_back(lcm_of[t].degree());
      lab.push_back(lcm_of[t]);
    }
    c.degrees.push_back(std::move(deg));
    c.labels.push_back(std::move(lab));
  }
  return c;
}

// ---------------------------------------------------------------------------
// Minimalization

namespace {

bool is_unit(const Polynomial& p) { return p.is_constant() && !p.is_zero(); }

PolyMatrix drop_row(const PolyMatrix& m, std::size_t row) {
  PolyMatrix out(m.ring(), m.rows() - 1, m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (const auto& [k, v] : m.column(j)) {
      if (k != row) out.set(k > row ? k - 1 : k, j, v);
    }
  }
  return out;
}

PolyMatrix drop_col(const PolyMatrix& m, std::size_t col) {
  PolyMatrix out(m.ring(), m.rows(), m.cols() - 1);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (j == col) continue;
    for (const auto& [k, v] : m.column(j)) out.set(k, j > col ? j - 1 : j, v);
  }
  return out;
}

template <typename T>
void erase_at(std::vector<T>& v, std::size_t i) {
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
}

std::optional<std::pair<std::size_t, std::size_t>> first_unit(const PolyMatrix& m) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (const auto& [k, v] : m.column(j)) {
      if (is_unit(v)) return std::make_pair(k, j);
    }
  }
  return std::nullopt;
}

}  // namespace

MinimalityReport minimality_report(const FreeComplex& c) {
  MinimalityReport r;
  for (std::size_t i = 1; i <= c.length(); ++i) {
    const PolyMatrix& m = c.diff(i);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      for (const auto& [k, v] : m.column(j)) {
        if (is_unit(v)) r.units.push_back({i, k, j});
      }
    }
  }
  r.minimal = r.units.empty();
  return r;
}

FreeComplex minimalize(FreeComplex c) {
  for (std::size_t i = 1; i <= c.length(); ++i) {
    while (auto u = first_unit(c.diff(i))) {
      const auto [k, j] = *u;
      const PolyMatrix& m = c.diff(i);
      const Scalar cinv = m.at(k, j).constant_term().inverse();
      // delta_i' = D - gamma c^{-1} beta on the remaining rows and columns.
      std::vector<std::pair<std::size_t, Polynomial>> gamma;
      for (const auto& [r, v] : m.column(j)) {
        if (r != k) gamma.push_back({r, cinv * v});
      }
      PolyMatrix next(c.ring, m.rows() - 1, m.cols() - 1);
      for (std::size_t s = 0; s < m.cols(); ++s) {
        if (s == j) continue;
        const std::size_t s2 = s > j ? s - 1 : s;
        for (const auto& [r, v] : m.column(s)) {
          if (r != k) next.set(r > k ? r - 1 : r, s2, v);
        }
        const Polynomial beta = m.at(k, s);
        if (beta.is_zero()) continue;
        for (const auto& [r, gv] : gamma) {
          const std::size_t r2 = r > k ? r - 1 : r;
          next.set(r2, s2, next.at(r2, s2) - gv * beta);
        }
      }
      c.diffs[i - 1] = std::move(next);
      if (i < c.length()) c.diffs[i] = drop_row(c.diffs[i], j);
      if (i >= 2) c.diffs[i - 2] = drop_col(c.diffs[i - 2], k);
      --c.ranks[i];
      --c.ranks[i - 1];
      if (c.graded()) {
        erase_at(c.degrees[i], j);
        erase_at(c.degrees[i - 1], k);
      }
      if (c.multigraded()) {
        erase_at(c.labels[i], j);
        erase_at(c.labels[i - 1], k);
      }
    }
  }
  while (c.ranks.size() > 1 && c.ranks.back() == 0) {
    c.ranks.pop_back();
    c.diffs.pop_back();
    if (c.graded()) c.degrees.pop_back();
    if (c.multigraded()) c.labels.pop_back();
  }
  return c;
}

FreeComplex minimal_resolution(const MonomialIdeal& ideal) {
  return minimalize(taylor_complex(ideal));
}

std::vector<std::size_t> betti_numbers(const MonomialIdeal& ideal) {
  return minimal_resolution(ideal).ranks;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

/// Rank of delta_i restricted to the strand of multidegree b.
std::size_t strand_rank(const FreeComplex& c, std::size_t i, const Monomial& b) {
  const auto& rows = c.labels[i - 1];
  const auto& cols = c.labels[i];
  std::vector<std::size_t> row_index(rows.size(), static_cast<std::size_t>(-1));
  std::size_t nrows = 0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k].divides(b)) row_index[k] = nrows++;
  }
  SparseMatrix m{c.ring.field(), nrows, {}};
  const PolyMatrix& d = c.diff(i);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (!cols[j].divides(b)) continue;
    std::vector<std::pair<std::size_t, Scalar>> e;
    for (const auto& [k, v] : d.column(j)) {
      if (row_index[k] != static_cast<std::size_t>(-1)) e.push_back({row_index[k], v.terms().front().coef});
    }
    m.cols.push_back(make_sparse(std::move(e)));
  }
  return rank(m);
}

std::size_t strand_dim(const std::vector<Monomial>& labels, const Monomial& b) {
  return static_cast<std::size_t>(
      std::count_if(labels.begin(), labels.end(), [&](const Monomial& l) { return l.divides(b); }));
}

struct MonoKey {
  std::size_t basis;
  Monomial mono;
  friend bool operator==(const MonoKey&, const MonoKey&) = default;
};
struct MonoKeyHash {
  std::size_t operator()(const MonoKey& k) const noexcept { return k.mono.hash() * 31 + k.basis; }
};

/// Basis of F_i in internal degree d: pairs (basis element, monomial multiplier).
std::vector<MonoKey> graded_basis(const FreeComplex& c, std::size_t i, int d) {
  std::vector<MonoKey> out;
  for (std::size_t j = 0; j < c.ranks[i]; ++j) {
    const int e = d - c.degrees[i][j];
    if (e < 0) continue;
    for (const auto& m : monomials_of_degree(c.ring.nvars(), e)) out.push_back({j, m});
  }
  return out;
}

std::size_t graded_rank(const FreeComplex& c, std::size_t i, int d) {
  const auto rows = graded_basis(c, i - 1, d);
  std::unordered_map<MonoKey, std::size_t, MonoKeyHash> row_index;
  for (std::size_t r = 0; r < rows.size(); ++r) row_index[rows[r]] = r;
  SparseMatrix m{c.ring.field(), rows.size(), {}};
  const PolyMatrix& delta = c.diff(i);
  for (const auto& [j, mono] : graded_basis(c, i, d)) {
    std::vector<std::pair<std::size_t, Scalar>> e;
    for (const auto& [k, v] : delta.column(j)) {
      for (const auto& t : v.terms()) e.push_back({row_index.at({k, mono * t.mono}), t.coef});
    }
    m.cols.push_back(make_sparse(std::move(e)));
  }
  return rank(m);
}

}  // namespace

ValidationReport validate_complex(const FreeComplex& c, const IdealGens& ideal,
                                  std::optional<int> degree_bound) {
  ValidationReport rep;
  rep.minimality = minimality_report(c);
  auto fail = [&](std::string msg) {
    if (rep.failure.empty()) rep.failure = std::move(msg);
  };
  if (!(c.ring == ideal.ring())) throw RingMismatch("complex and ideal over different rings");
  for (std::size_t i = 1; i <= c.length(); ++i) {
    if (c.diff(i).rows() != c.ranks[i - 1] || c.diff(i).cols() != c.ranks[i]) {
      fail("delta_" + std::to_string(i) + " has the wrong shape");
      return rep;
    }
  }

  rep.delta_squared_zero = true;
  for (std::size_t i = 1; i < c.length(); ++i) {
    const PolyMatrix prod = c.diff(i) * c.diff(i + 1);
    if (!prod.is_zero()) {
      rep.delta_squared_zero = false;
      for (std::size_t j = 0; j < prod.cols(); ++j) {
        if (!prod.column(j).empty()) {
          const auto& [k, v] = prod.column(j).front();
          fail("delta_" + std::to_string(i) + " * delta_" + std::to_string(i + 1) + " has entry (" +
               std::to_string(k + 1) + "," + std::to_string(j + 1) + ") = " + c.ring.format(v));
          break;
        }
      }
      break;
    }
  }

  if (c.ranks.empty() || c.ranks[0] != 1 || c.length() == 0 || c.ranks[1] == 0) {
    fail("F_0 must have rank 1 and delta_1 must be nonzero");
  } else {
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < c.ranks[1]; ++j) {
      Polynomial v = c.diff(1).at(0, j);
      if (!v.is_zero()) row.push_back(std::move(v));
    }
    const IdealGens image(c.ring, row);
    rep.cokernel_ok = ideal_subset(image, ideal).holds && ideal_subset(ideal, image).holds;
    if (!rep.cokernel_ok) fail("the entries of delta_1 do not generate the ideal");
  }

  if (c.multigraded()) {
    rep.exactness_scope = "multidegree";
    Monomial top;
    for (const auto& lv : c.labels) {
      for (const auto& l : lv) top = lcm(top, l);
    }
    rep.exact = true;
    for (const auto& b : divisors_of(top, c.ring.nvars())) {
      std::vector<std::size_t> r(c.length() + 2, 0);
      for (std::size_t i = 1; i <= c.length(); ++i) r[i] = strand_rank(c, i, b);
      for (std::size_t i = 1; i <= c.length() && rep.exact; ++i) {
        if (strand_dim(c.labels[i], b) != r[i] + r[i + 1]) {
          rep.exact = false;
          fail("H_" + std::to_string(i) + " is nonzero in multidegree " + c.ring.format(b));
        }
      }
      if (!rep.exact) break;
    }
  } else if (c.graded()) {
    int bound = 0;
    for (const auto& lv : c.degrees) {
      for (int d : lv) bound = std::max(bound, d);
    }
    if (degree_bound) bound = *degree_bound;
    rep.exactness_scope = "degree <= " + std::to_string(bound);
    rep.exact = true;
    for (int d = 0; d <= bound && rep.exact; ++d) {
      std::vector<std::size_t> r(c.length() + 2, 0);
      for (std::size_t i = 1; i <= c.length(); ++i) r[i] = graded_rank(c, i, d);
      for (std::size_t i = 1; i <= c.length(); ++i) {
        if (graded_basis(c, i, d).size() != r[i] + r[i + 1]) {
          rep.exact = false;
          fail("H_" + std::to_string(i) + " is nonzero in degree " + std::to_string(d));
          break;
        }
      }
    }
  } else {
    rep.exactness_scope = "none";
    fail("the complex is not graded, so exactness was not checked");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Text format

std::string format_complex(const FreeComplex& c) {
  std::ostringstream os;
  os << "complex\nranks:";
  for (auto b : c.ranks) os << ' ' << b;
  os << '\n';
  for (std::size_t i = 1; i <= c.length(); ++i) {
    os << "diff " << i << ":\n";
    const PolyMatrix& m = c.diff(i);
    if (m.cols() == 0) continue;
    for (std::size_t k = 0; k < m.rows(); ++k) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j) os << ", ";
        os << c.ring.format(m.at(k, j));
      }
      os << '\n';
    }
  }
  return os.str();
}

FreeComplex parse_complex(std::string_view text, const PolyRing& ring) {
  struct Line {
    std::size_t number;
    std::string_view text;
    std::size_t offset;
  };
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto h = raw.find('#'); h != std::string_view::npos) raw = raw.substr(0, h);
    std::size_t a = 0, b = raw.size();
    while (a < b && std::isspace(static_cast<unsigned char>(raw[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(raw[b - 1]))) --b;
    if (a < b) lines.push_back({number, raw.substr(a, b - a), a});
  }
  std::size_t at = 0;
  auto next = [&](const char* what) -> const Line& {
    if (at >= lines.size()) throw ParseError(std::string("unexpected end of input, expected ") + what, number + 1, 1);
    return lines[at++];
  };
  const Line& head = next("'complex'");
  if (head.text != "complex") throw ParseError("expected 'complex'", head.number, head.offset + 1);
  const Line& rl = next("'ranks:'");
  if (rl.text.substr(0, 6) != "ranks:") throw ParseError("expected 'ranks:'", rl.number, rl.offset + 1);
  FreeComplex c{ring, {}, {}, {}, {}};
  {
    std::istringstream is{std::string(rl.text.substr(6))};
    std::string tok;
    while (is >> tok) {
      if (!std::all_of(tok.begin(), tok.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
        throw ParseError("bad rank '" + tok + "'", rl.number, rl.offset + 1);
      }
      c.ranks.push_back(std::stoul(tok));
    }
  }
  if (c.ranks.empty()) throw ParseError("no ranks given", rl.number, rl.offset + 1);
  for (std::size_t i = 1; i < c.ranks.size(); ++i) {
    const Line& dl = next("'diff i:'");
    const std::string want = "diff " + std::to_string(i) + ":";
    if (dl.text != want) throw ParseError("expected '" + want + "'", dl.number, dl.offset + 1);
    PolyMatrix m(ring, c.ranks[i - 1], c.ranks[i]);
    if (c.ranks[i] > 0) {
      for (std::size_t k = 0; k < c.ranks[i - 1]; ++k) {
        const Line& row = next("a matrix row");
        std::size_t start = 0;
        std::size_t j = 0;
        for (;;) {
          const std::size_t comma = row.text.find(',', start);
          const std::string_view cell = row.text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
          if (j >= c.ranks[i]) throw ParseError("too many entries in row", row.number, row.offset + start + 1);
          m.set(k, j++, parse_polynomial(cell, ring, row.number, row.offset + start));
          if (comma == std::string_view::npos) break;
          start = comma + 1;
        }
        if (j != c.ranks[i]) {
          throw ParseError("row has " + std::to_string(j) + " entries, expected " + std::to_string(c.ranks[i]),
                           row.number, row.offset + 1);
        }
      }
    }
    c.diffs.push_back(std::move(m));
  }
  if (at != lines.size()) throw ParseError("trailing input", lines[at].number, lines[at].offset + 1);
  infer_gradings(c);
  return c;
}

}  // namespace dgolod
