#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "dgolod/monomial_ideal.hpp"
#include "dgolod/quotient.hpp"

namespace dgolod {

/// c_0 + c_1 t + ... + c_N t^N + O(t^{N+1}) with integer coefficients.
class TruncatedSeries {
 public:
  /// The zero series truncated at N.
  explicit TruncatedSeries(int trunc);
  TruncatedSeries(int trunc, const std::vector<long>& coeffs);
  TruncatedSeries(int trunc, std::vector<mpz_class> coeffs);

  /// 1 and the monomial t^k, truncated at N.
  static TruncatedSeries one(int trunc);
  static TruncatedSeries t_power(int trunc, int k, long coeff = 1);

  int trunc() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const mpz_class& operator[](int k) const { return c_.at(k); }
  const std::vector<mpz_class>& coeffs() const noexcept { return c_; }
  /// Keeps terms up to t^N.
  TruncatedSeries truncated(int trunc) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<mpz_class> c_;
};

/// Throws PreconditionError unless the constant term is 1 or -1.
TruncatedSeries inverse(const TruncatedSeries& a);

enum class SeriesOp { Add, Mul, Inv };
/// Inv ignores b. The result is truncated at the smaller truncation.
TruncatedSeries series_op(SeriesOp op, const TruncatedSeries& a,
                          const std::optional<TruncatedSeries>& b = std::nullopt);

/// Coefficientwise a <= b on the common range.
bool coefficientwise_leq(const TruncatedSeries& a, const TruncatedSeries& b);

/// "1 + 2t + 4t^2 + O(t^3)"
std::string to_string(const TruncatedSeries& s);

/// (1+t)^n / (1 - t (P(t) - 1)), P(t) = sum betti_i t^i.
TruncatedSeries serre_bound(const std::vector<std::size_t>& betti, std::size_t n, int trunc);

/// 1/(1-nt) when tau = n, else 1/(1-nt+t^2).
TruncatedSeries sally_series(std::size_t n, std::size_t tau, int trunc);

/// dim_K R_d for d <= N.
TruncatedSeries hilbert_series(const QuotientRing& r, int trunc);
TruncatedSeries hilbert_series(const MonomialIdeal& ideal, int trunc);

inline constexpr int kDefaultTrunc = 8;
inline constexpr std::size_t kDefaultRankBudget = 200'000;

struct PoincareResult {
  /// c_0..c_h with h the achieved homological degree; padded with zeros to N
  /// only when the resolution provably stops.
  TruncatedSeries series{0};
  int requested = 0;
  int achieved = 0;
  bool artinian = false;
  /// Internal-degree bound used for non-Artinian R.
  std::optional<int> degree_bound;
  /// Set when the rank budget stopped the computation early.
  std::string note;
};

/// Betti numbers of K over R from a minimal graded resolution built degree by
/// degree. Multigraded pieces are used for monomial R.
PoincareResult poincare_k(const QuotientRing& r, int trunc = kDefaultTrunc,
                          int hmax = kDefaultTrunc, std::optional<int> degree_bound = std::nullopt,
                          std::size_t rank_budget = kDefaultRankBudget);
PoincareResult poincare_k(const MonomialIdeal& ideal, int trunc = kDefaultTrunc,
                          int hmax = kDefaultTrunc);

struct GolodEquality {
  TruncatedSeries serre{0};
  PoincareResult computed;
  std::vector<std::size_t> betti;
  /// Largest k <= achieved with equality in every degree up to k, or -1.
  int equal_up_to = -1;
  bool equal = false;
  bool leq_everywhere = false;
  std::string summary;
};

/// Compares P^R_K with the Serre bound. Equality is evidence to degree N only.
GolodEquality golod_equality(const QuotientRing& r, int trunc = kDefaultTrunc);
GolodEquality golod_equality(const MonomialIdeal& ideal, int trunc = kDefaultTrunc);

struct RingProfile {
  std::size_t n = 0;
  bool artinian = false;
  std::size_t tau = 0;
  /// Largest s with m^s != 0; Artinian only.
  std::optional<int> s;
  bool stretched = false;
  /// m^2 = 0, counted as stretched.
  bool degenerate = false;
  /// Socle degrees scanned for non-Artinian R.
  std::optional<int> tau_degree_bound;
  std::vector<std::size_t> socle_by_degree;
};

/// Graded invariants of R; the socle is scanned degreewise up to the top degree,
/// or up to `degree_bound` (default: degree of the lcm of the leading ideal) otherwise.
RingProfile ring_profile(const QuotientRing& r, std::optional<int> degree_bound = std::nullopt);
RingProfile ring_profile(const MonomialIdeal& ideal);

}  // namespace dgolod
