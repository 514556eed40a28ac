#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dgolod/monomial.hpp"
#include "dgolod/scalar.hpp"

namespace dgolod {

class Polynomial;

/// The ambient ring S = K[x_1, ..., x_n]. Cheap to copy; shares its name table.
class PolyRing {
 public:
  /// Throws PreconditionError on n = 0, n > kMaxVars, or repeated names.
  PolyRing(Field field, std::vector<std::string> names);
  /// Variables named x1, ..., xn.
  static PolyRing standard(std::size_t n, Field field = Field::rationals());

  std::size_t nvars() const noexcept { return data_->names.size(); }
  const Field& field() const noexcept { return data_->field; }
  const std::vector<std::string>& names() const noexcept { return data_->names; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  PolyRing with_field(Field f) const { return PolyRing(f, names()); }

  Polynomial zero() const;
  Polynomial one() const;
  Polynomial constant(std::int64_t c) const;
  Polynomial constant(const Scalar& c) const;
  /// x_i, 0-based.
  Polynomial var(std::size_t i) const;
  Polynomial term(const Monomial& m, std::int64_t c = 1) const;
  Polynomial term(const Monomial& m, const Scalar& c) const;

  std::string format(const Monomial& m) const;
  std::string format(const Polynomial& f) const;
  /// "ring Q[x1,x2]"
  std::string header() const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) noexcept;

 private:
  struct Data {
    Field field;
    std::vector<std::string> names;
  };
  std::shared_ptr<const Data> data_;
};

/// Sparse polynomial with exact coefficients.
///
/// Terms are kept in grevlex-descending order with no zero coefficients, so
/// structural equality is mathematical equality.
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    Scalar coef;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Polynomial(Field field, std::size_t nvars) : field_(field), nvars_(nvars) {}
  /// Combines repeated monomials and drops zero coefficients.
  Polynomial(Field field, std::size_t nvars, std::vector<Term> terms);

  const Field& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  Scalar constant_term() const;
  /// Largest total degree; -1 for zero.
  int degree() const noexcept;
  bool is_homogeneous() const noexcept;
  /// Leading term in `order`; precondition: nonzero.
  const Term& leading(TermOrder order) const;
  /// lcm of every monomial occurring in the polynomial.
  Monomial support_lcm() const noexcept;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& c, const Polynomial& f);
  Polynomial times(const Monomial& m, const Scalar& c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
    return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  std::size_t hash() const noexcept;

 private:
  void check_compatible(const Polynomial& o) const;

  Field field_;
  std::size_t nvars_;
  std::vector<Term> terms_;
};

enum class ArithOp { Add, Sub, Mul };

/// Ring arithmetic with an explicit operation tag; throws RingMismatch.
Polynomial poly_arith(ArithOp op, const Polynomial& f, const Polynomial& g);

/// f(0, ..., 0, x_r, ..., x_n): drops every term containing x_j for j < r.
/// `r` is 0-based and may equal nvars (which keeps only the constant term).
Polynomial zero_prefix_sub(const Polynomial& f, std::size_t r);

/// f / x_r. Throws NotDivisible with the first offending term.
Polynomial exact_div_var(const Polynomial& f, std::size_t r);

/// Applies x_k -> x_{images[k]} (0-based images of a permutation).
Polynomial relabel(const Polynomial& f, const std::vector<std::size_t>& images);

/// Formats with default names x1..xn; for diagnostics and test output.
std::string to_string(const Polynomial& f);
std::ostream& operator<<(std::ostream& os, const Polynomial& f);

}  // namespace dgolod
