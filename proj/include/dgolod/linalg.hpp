#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dgolod/scalar.hpp"

namespace dgolod {

/// Sparse vector: (index, nonzero value) pairs, strictly increasing indices.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

/// Column-major sparse matrix.
struct SparseMatrix {
  Field field;
  std::size_t rows = 0;
  std::vector<SparseVector> cols;
};

/// Builds a SparseVector from unordered (index, value) contributions.
SparseVector make_sparse(std::vector<std::pair<std::size_t, Scalar>> entries);

/// y + c * x
SparseVector axpy(const SparseVector& y, const Scalar& c, const SparseVector& x);

/// Incrementally maintained row-echelon basis of a subspace of K^dim.
///
/// Each stored vector is normalized so its leading (smallest-index) entry is 1,
/// and no two stored vectors share a leading index.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : pivot_of_(dim, kNone) {}

  /// Cancels leading entries that hit a stored pivot; the result is zero iff
  /// v lies in the span.
  SparseVector reduce(SparseVector v) const;
  /// Adds v to the span; returns false when v was already in it.
  bool insert(SparseVector v);
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t dim() const noexcept { return pivot_of_.size(); }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pivot_of_;
  std::vector<SparseVector> rows_;
};

std::size_t rank(const SparseMatrix& m);

/// Basis of { c : M c = 0 }, as vectors indexed by column.
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);

}  // namespace dgolod
