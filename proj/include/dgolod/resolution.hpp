#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dgolod/groebner.hpp"
#include "dgolod/monomial_ideal.hpp"
#include "dgolod/polynomial.hpp"

namespace dgolod {

/// Sparse matrix over S, stored by columns.
class PolyMatrix {
 public:
  using Column = std::vector<std::pair<std::size_t, Polynomial>>;

  PolyMatrix(PolyRing ring, std::size_t rows, std::size_t cols);

  const PolyRing& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_.size(); }
  /// Row-sorted nonzero entries of column j.
  const Column& column(std::size_t j) const { return cols_.at(j); }
  Polynomial at(std::size_t k, std::size_t j) const;
  void set(std::size_t k, std::size_t j, Polynomial value);
  bool is_zero() const noexcept;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_;
  }

 private:
  PolyRing ring_;
  std::size_t rows_;
  std::vector<Column> cols_;
};

/// 0 <- F_0 <- F_1 <- ... <- F_l with diffs[i-1] = delta_i of shape b_{i-1} x b_i.
struct FreeComplex {
  PolyRing ring;
  std::vector<std::size_t> ranks;
  std::vector<PolyMatrix> diffs;
  /// Internal degree of every basis element; empty when the complex is not graded.
  std::vector<std::vector<int>> degrees;
  /// Multidegree of every basis element; empty unless every entry is a single term
  /// of the matching multidegree.
  std::vector<std::vector<Monomial>> labels;

  std::size_t length() const noexcept { return diffs.size(); }
  /// delta_i for 1 <= i <= length.
  const PolyMatrix& diff(std::size_t i) const { return diffs.at(i - 1); }
  bool graded() const noexcept { return !degrees.empty(); }
  bool multigraded() const noexcept { return !labels.empty(); }
};

/// Recomputes `degrees` and `labels` from the entries (F_0 has rank 1 and degree 0).
void infer_gradings(FreeComplex& c);

inline constexpr std::size_t kMaxTaylorGens = 20;

/// Basis: subsets of the minimal generators, by size and then lexicographically.
/// delta(e_T) = sum_k (-1)^{p-k} lcm(T)/lcm(T minus t_k) e_{T minus t_k}, t_k the k-th element.
FreeComplex taylor_complex(const MonomialIdeal& ideal, std::size_t max_gens = kMaxTaylorGens);
/// Same, with the basis built on `order`, a permutation of ideal.gens().
FreeComplex taylor_complex(const MonomialIdeal& ideal, const std::vector<Monomial>& order,
                           std::size_t max_gens = kMaxTaylorGens);

struct UnitEntry {
  std::size_t i;  // homological degree of the differential
  std::size_t row;
  std::size_t col;
};

struct MinimalityReport {
  bool minimal = true;
  std::vector<UnitEntry> units;
};

MinimalityReport minimality_report(const FreeComplex& c);

/// Splits off unit entries, lowest differential first, then leftmost column, then topmost row.
FreeComplex minimalize(FreeComplex c);

/// minimalize(taylor_complex(ideal)).
FreeComplex minimal_resolution(const MonomialIdeal& ideal);
std::vector<std::size_t> betti_numbers(const MonomialIdeal& ideal);

struct ValidationReport {
  bool delta_squared_zero = false;
  bool cokernel_ok = false;
  bool exact = false;
  /// "multidegree" (exhaustive over divisors of the lcm of labels) or "degree <= D".
  std::string exactness_scope;
  MinimalityReport minimality;
  /// First failed assertion; empty when everything passed.
  std::string failure;
  bool passed() const noexcept { return failure.empty(); }
};

/// delta^2 = 0, coker delta_1 = S/I, and H_i = 0 for i >= 1. Multigraded complexes are
/// checked on every multidegree strand; otherwise internal degrees up to `degree_bound`
/// (default: the largest basis degree) are checked.
ValidationReport validate_complex(const FreeComplex& c, const IdealGens& ideal,
                                  std::optional<int> degree_bound = std::nullopt);

/// Text format:
///   complex
///   ranks: b0 b1 ...
///   diff i:
///   <b_{i-1} rows of comma-separated entries>
std::string format_complex(const FreeComplex& c);
/// Throws ParseError. Gradings are inferred.
FreeComplex parse_complex(std::string_view text, const PolyRing& ring);

}  // namespace dgolod
