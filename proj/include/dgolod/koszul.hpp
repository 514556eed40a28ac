#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgolod/d_calculus.hpp"
#include "dgolod/quotient.hpp"
#include "dgolod/resolution.hpp"

namespace dgolod {

/// Orders equal-size variable sets as increasing index tuples, lexicographically.
struct TupleOrder {
  bool operator()(std::uint32_t a, std::uint32_t b) const noexcept;
};

/// Element of Omega_i: sum of f_T dx_T over i-subsets T, stored as bitmasks.
class KoszulElement {
 public:
  using Coeffs = std::map<std::uint32_t, Polynomial, TupleOrder>;

  KoszulElement(PolyRing ring, std::size_t degree) : ring_(std::move(ring)), degree_(degree) {}

  const PolyRing& ring() const noexcept { return ring_; }
  std::size_t degree() const noexcept { return degree_; }
  const Coeffs& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Polynomial at(std::uint32_t mask) const;

  /// Adds f dx_T. Throws PreconditionError when |T| differs from the degree.
  void add(std::uint32_t mask, const Polynomial& f);
  KoszulElement& operator+=(const KoszulElement& o);
  KoszulElement operator-() const;
  friend KoszulElement operator+(KoszulElement a, const KoszulElement& b) { return a += b; }
  friend KoszulElement operator-(KoszulElement a, const KoszulElement& b) { return a += -b; }
  /// f * z
  friend KoszulElement operator*(const Polynomial& f, const KoszulElement& z);

  friend bool operator==(const KoszulElement& a, const KoszulElement& b) noexcept {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  PolyRing ring_;
  std::size_t degree_;
  Coeffs coeffs_;
};

/// dx_{r_1} ... dx_{r_i} for 0-based indices; the sign sorts them.
KoszulElement koszul_monomial(const PolyRing& ring, const std::vector<std::size_t>& indices);

/// d(dx_{r_1}..dx_{r_i}) = sum_k (-1)^{k+1} x_{r_k} dx_{r_1}..(omit r_k)..dx_{r_i}.
/// Throws PreconditionError for degree 0.
KoszulElement koszul_boundary(const KoszulElement& z);

/// Applies x_k -> x_{images[k]} and dx_k -> dx_{images[k]}, re-sorting the wedge.
KoszulElement relabel(const KoszulElement& z, const std::vector<std::size_t>& images);

/// Every coefficient replaced by its normal form in R.
KoszulElement reduce(const KoszulElement& z, const QuotientRing& r);

/// "x2 dx1dx3 - x1 dx2dx3", tuples in canonical order.
std::string format_koszul(const KoszulElement& z);

/// (z_0, ..., z_i): components[p][l] is the Omega_p coefficient of e_{i-p,l}.
struct KoszulChain {
  std::size_t i = 0;
  std::size_t j = 0;  // 0-based basis index in F_i
  std::optional<Permutation> sigma;
  std::vector<std::vector<KoszulElement>> components;

  /// The F_0 component: the cycle z_ij.
  const KoszulElement& cycle() const { return components.back().front(); }
};

/// Lifts 1 (x) e_ij through the double complex, coefficients d^r (or d_sigma^r)
/// of the entries. Checks (id (x) delta)(z_{p}) = (d (x) id)(z_{p+1}) exactly over S and
/// the cycle condition in the total complex, throwing InvariantViolation on failure.
/// Throws NonMinimalResolution when delta_1..delta_i has an entry outside (x_1..x_n).
KoszulChain build_chain(const FreeComplex& c, std::size_t i, std::size_t j,
                        const std::optional<Permutation>& sigma = std::nullopt);
KoszulElement build_cycle(const FreeComplex& c, std::size_t i, std::size_t j,
                          const std::optional<Permutation>& sigma = std::nullopt);

/// "z[i][j] = ..." with 1-based j.
std::string format_cycle(const KoszulChain& chain);

struct HomologyClass {
  std::size_t i = 0;
  int degree = 0;
  std::optional<Monomial> multidegree;
  KoszulElement cycle;
};

struct HomologyReport {
  /// dim H_i(Omega (x) S/I) for i = 0..n.
  std::vector<std::size_t> dims;
  std::vector<HomologyClass> basis;
  /// internal degree -> dims per i, nonzero rows only.
  std::map<int, std::vector<std::size_t>> by_degree;
  int degree_bound = 0;
  bool multigraded = false;
  /// Strands in degrees bound+1 and bound+2 carry no homology.
  bool bound_confirmed = true;
};

/// Exact ranks strand by strand: multidegrees for monomial R, internal degrees
/// otherwise (homogeneous ideals only). Default bound: degree of the lcm of the
/// generators of the (leading) ideal.
HomologyReport koszul_homology(const QuotientRing& r, std::optional<int> degree_bound = std::nullopt);
HomologyReport koszul_homology(const MonomialIdeal& ideal,
                               std::optional<int> degree_bound = std::nullopt);
HomologyReport koszul_homology(const IdealGens& ideal,
                               std::optional<int> degree_bound = std::nullopt);

struct BasisReport {
  std::vector<std::size_t> betti;
  std::vector<std::size_t> homology_dims;
  std::vector<std::vector<KoszulElement>> cycles;  // cycles[i][j], i >= 1
  std::string failure;
  bool passed() const noexcept { return failure.empty(); }
};

/// The z_ij are cycles mod I, independent in homology, and b_i = dim H_i.
BasisReport verify_basis(const MonomialIdeal& ideal);
/// Same for a supplied minimal resolution of S/I.
BasisReport verify_basis(const FreeComplex& c, const IdealGens& ideal);

struct CoefficientWitness {
  std::size_t i = 0;
  std::size_t j = 0;
  std::uint32_t mask = 0;
  Polynomial coefficient;
  bool member = false;
  /// Dividing generator of d_sigma(I) per term, or "normal form 0".
  std::string witness;
};

struct ZeroMapReport {
  Permutation sigma;
  std::vector<CoefficientWitness> entries;
  std::string failure;
  bool passed() const noexcept { return failure.empty(); }
};

/// Every coefficient of every z_ij^sigma lies in d_sigma(I).
ZeroMapReport verify_zero_map(const MonomialIdeal& ideal, const Permutation& sigma);
ZeroMapReport verify_zero_map(const FreeComplex& c, const IdealGens& ideal,
                              const Permutation& sigma);

}  // namespace dgolod
