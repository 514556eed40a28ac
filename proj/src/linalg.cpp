#include "dgolod/linalg.hpp"

#include <algorithm>

#include "dgolod/error.hpp"

namespace dgolod {

SparseVector make_sparse(std::vector<std::pair<std::size_t, Scalar>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector out;
  out.reserve(entries.size());
  for (auto& [i, v] : entries) {
    if (!out.empty() && out.back().first == i) {
      out.back().second += v;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!v.is_zero()) {
      out.emplace_back(i, std::move(v));
    }
  }
  return out;
}

SparseVector axpy(const SparseVector& y, const Scalar& c, const SparseVector& x) {
  SparseVector out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(y[i++]);
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, c * x[j].second);
      ++j;
    } else {
      Scalar v = y[i].second + c * x[j].second;
      if (!v.is_zero()) out.emplace_back(y[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVector EchelonBasis::reduce(SparseVector v) const {
  while (!v.empty()) {
    const std::size_t lead = v.front().first;
    if (lead >= pivot_of_.size()) throw PreconditionError("vector index out of range");
    const std::size_t r = pivot_of_[lead];
    if (r == kNone) break;
    v = axpy(v, -v.front().second, rows_[r]);
  }
  return v;
}

bool EchelonBasis::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const Scalar inv = v.front().second.inverse();
  for (auto& [i, x] : v) x *= inv;
  pivot_of_[v.front().first] = rows_.size();
  rows_.push_back(std::move(v));
  return true;
}

std::size_t rank(const SparseMatrix& m) {
  EchelonBasis b(m.rows);
  for (const auto& c : m.cols) b.insert(c);
  return b.rank();
}

std::vector<SparseVector> kernel_basis(const SparseMatrix& m) {
  // Row-reduce [M; I] column by column; a column whose M-part vanishes
  // contributes its identity part to the kernel.
  const std::size_t ncols = m.cols.size();
  const Scalar one = m.field.one();
  EchelonBasis b(m.rows + ncols);
  std::vector<SparseVector> ker;
  for (std::size_t k = 0; k < ncols; ++k) {
    SparseVector v = m.cols[k];
    v.emplace_back(m.rows + k, one);
    v = b.reduce(std::move(v));
    if (v.front().first >= m.rows) {
      SparseVector kv;
      kv.reserve(v.size());
      for (auto& [i, x] : v) kv.emplace_back(i - m.rows, std::move(x));
      ker.push_back(std::move(kv));
    } else {
      b.insert(std::move(v));
    }
  }
  return ker;
}

}  // namespace dgolod
