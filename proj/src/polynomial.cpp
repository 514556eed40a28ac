#include "dgolod/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

#include "dgolod/error.hpp"

namespace dgolod {

// ---------------------------------------------------------------------------
// PolyRing

PolyRing::PolyRing(Field field, std::vector<std::string> names) {
  if (names.empty()) throw PreconditionError("a ring needs at least one variable");
  if (names.size() > kMaxVars) {
    throw PreconditionError("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw PreconditionError("empty variable name");
    if (!seen.insert(n).second) throw PreconditionError("repeated variable name '" + n + "'");
  }
  data_ = std::make_shared<const Data>(Data{field, std::move(names)});
}

PolyRing PolyRing::standard(std::size_t n, Field field) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return PolyRing(field, std::move(names));
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  const auto& ns = names();
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] == name) return i;
  }
  return std::nullopt;
}

bool operator==(const PolyRing& a, const PolyRing& b) noexcept {
  return a.data_ == b.data_ ||
         (a.data_->field == b.data_->field && a.data_->names == b.data_->names);
}

Polynomial PolyRing::zero() const { return Polynomial(field(), nvars()); }
Polynomial PolyRing::one() const { return constant(1); }
Polynomial PolyRing::constant(std::int64_t c) const { return term(Monomial{}, c); }
Polynomial PolyRing::constant(const Scalar& c) const { return term(Monomial{}, c); }

Polynomial PolyRing::var(std::size_t i) const {
  if (i >= nvars()) throw PreconditionError("variable index out of range");
  return term(Monomial::var(i), 1);
}

Polynomial PolyRing::term(const Monomial& m, std::int64_t c) const {
  return term(m, field().from_int(c));
}

Polynomial PolyRing::term(const Monomial& m, const Scalar& c) const {
  return Polynomial(field(), nvars(), {Polynomial::Term{m, c}});
}

std::string PolyRing::format(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (!m[i]) continue;
    if (!out.empty()) out += '*';
    out += names()[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string PolyRing::format(const Polynomial& f) const {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    Scalar mag = c;
    if (c.is_negative()) {
      out += first ? "-" : " - ";
      mag = -c;
    } else if (!first) {
      out += " + ";
    }
    if (m.is_one()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += format(m);
    } else {
      out += mag.to_string() + "*" + format(m);
    }
    first = false;
  }
  return out;
}

std::string PolyRing::header() const {
  std::string out = "ring " + field().name() + "[";
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (i) out += ',';
    out += names()[i];
  }
  return out + "]";
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

const Descending kCanon{TermOrder::Grevlex};

void canonicalize(std::vector<Polynomial::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return kCanon(a.mono, b.mono); });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Polynomial::Term acc = std::move(terms[i]);
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].mono == acc.mono) acc.coef += terms[j++].coef;
    if (!acc.coef.is_zero()) terms[out++] = std::move(acc);
    i = j;
  }
  terms.resize(out);
}

}  // namespace

Polynomial::Polynomial(Field field, std::size_t nvars, std::vector<Term> terms)
    : field_(field), nvars_(nvars), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (!(t.coef.field() == field_)) throw RingMismatch("coefficient from a different field");
  }
  canonicalize(terms_);
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (!(field_ == o.field_) || nvars_ != o.nvars_) {
    throw RingMismatch("polynomials from different rings");
  }
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return field_.zero();
}

int Polynomial::degree() const noexcept {
  return terms_.empty() ? -1 : terms_.front().mono.degree();
}

bool Polynomial::is_homogeneous() const noexcept {
  return terms_.empty() || terms_.front().mono.degree() == terms_.back().mono.degree();
}

const Polynomial::Term& Polynomial::leading(TermOrder order) const {
  if (terms_.empty()) throw PreconditionError("leading term of zero");
  if (order == TermOrder::Grevlex) return terms_.front();
  const Term* best = &terms_.front();
  for (const auto& t : terms_) {
    if (compare(order, t.mono, best->mono) > 0) best = &t;
  }
  return *best;
}

Monomial Polynomial::support_lcm() const noexcept {
  Monomial l;
  for (const auto& t : terms_) l = lcm(l, t.mono);
  return l;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && kCanon(terms_[i].mono, o.terms_[j].mono))) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || kCanon(o.terms_[j].mono, terms_[i].mono)) {
      merged.push_back(o.terms_[j++]);
    } else {
      Scalar c = terms_[i].coef + o.terms_[j].coef;
      if (!c.is_zero()) merged.push_back(Term{terms_[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  std::vector<Polynomial::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coef * t.coef});
  }
  Polynomial r(a.field_, a.nvars_);
  r.terms_ = std::move(prod);
  canonicalize(r.terms_);
  return r;
}

Polynomial operator*(const Scalar& c, const Polynomial& f) {
  Polynomial r(f.field_, f.nvars_);
  if (c.is_zero()) return r;
  r.terms_ = f.terms_;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Polynomial Polynomial::times(const Monomial& m, const Scalar& c) const {
  Polynomial r(field_, nvars_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves grevlex order.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
  return r;
}

std::size_t Polynomial::hash() const noexcept {
  std::size_t h = nvars_;
  for (const auto& t : terms_) h = h * 1000003u ^ (t.mono.hash() + 31 * t.coef.hash());
  return h;
}

Polynomial poly_arith(ArithOp op, const Polynomial& f, const Polynomial& g) {
  switch (op) {
    case ArithOp::Add:
      return f + g;
    case ArithOp::Sub:
      return f - g;
    case ArithOp::Mul:
      return f * g;
  }
  throw PreconditionError("unknown arithmetic operation");
}

Polynomial zero_prefix_sub(const Polynomial& f, std::size_t r) {
  if (r > f.nvars()) throw PreconditionError("substitution index out of range");
  const std::uint32_t killed = (r >= 32) ? ~0u : ((1u << r) - 1u);
  std::vector<Polynomial::Term> kept;
  for (const auto& t : f.terms()) {
    if ((t.mono.support() & killed) == 0) kept.push_back(t);
  }
  return Polynomial(f.field(), f.nvars(), std::move(kept));
}

Polynomial exact_div_var(const Polynomial& f, std::size_t r) {
  if (r >= f.nvars()) throw PreconditionError("variable index out of range");
  const Monomial x = Monomial::var(r);
  std::vector<Polynomial::Term> q;
  q.reserve(f.size());
  for (const auto& t : f.terms()) {
    if (!t.mono[r]) {
      throw NotDivisible("term is not divisible by x" + std::to_string(r + 1),
                         PolyRing::standard(f.nvars()).format(t.mono));
    }
    q.push_back({t.mono / x, t.coef});
  }
  return Polynomial(f.field(), f.nvars(), std::move(q));
}

Polynomial relabel(const Polynomial& f, const std::vector<std::size_t>& images) {
  if (images.size() != f.nvars()) throw PreconditionError("permutation size mismatch");
  std::vector<Polynomial::Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t k = 0; k < images.size(); ++k) m.set(images[k], t.mono[k]);
    out.push_back({m, t.coef});
  }
  return Polynomial(f.field(), f.nvars(), std::move(out));
}

std::string to_string(const Polynomial& f) { return PolyRing::standard(f.nvars()).format(f); }

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << to_string(f); }

}  // namespace dgolod
