#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dgolod/groebner.hpp"
#include "dgolod/monomial_ideal.hpp"
#include "dgolod/polynomial.hpp"

namespace dgolod {

/// A bijection of {0..n-1}, stored as its image sequence.
class Permutation {
 public:
  /// Throws PreconditionError unless `images` is a bijection.
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);
  /// i -> n-1-i
  static Permutation reverse(std::size_t n);
  /// Parses "2,1,3" (1-based images) or "reverse"; throws PreconditionError.
  static Permutation parse(const std::string& text, std::size_t n);
  /// All n! permutations in lexicographic order of image sequences.
  static std::vector<Permutation> all(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_.at(i); }
  const std::vector<std::size_t>& images() const noexcept { return images_; }
  Permutation inverse() const;
  bool is_identity() const noexcept;
  /// 1-based image list, e.g. "3,1,2".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

/// d^r(f) for 0-based r. Throws NonProperElement when f has a nonzero constant term.
Polynomial d_op(const Polynomial& f, std::size_t r);

/// sigma(d^r(f relabeled by sigma^{-1})).
Polynomial d_sigma_op(const Polynomial& f, std::size_t r, const Permutation& sigma);

/// u / x_{sigma(i)} for the first i with x_{sigma(i)} | u. Precondition: u != 1.
Monomial d_sigma_monomial(const Monomial& u, const Permutation& sigma);

/// The ideal generated by every nonzero d_sigma^i(f_j). May contain units when
/// the input has a linear generator.
IdealGens d_ideal(const IdealGens& ideal, const Permutation& sigma);
MonomialIdeal d_ideal(const MonomialIdeal& ideal, const Permutation& sigma);

}  // namespace dgolod
