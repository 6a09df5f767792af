#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qreg/fields.hpp"

namespace qreg {

// sorted by column index, nonzero entries only
template <class K>
using SparseRow = std::vector<std::pair<int, K>>;

template <class K>
void row_axpy(SparseRow<K>& target, const K& s, const SparseRow<K>& src);

template <class K>
void row_scale(SparseRow<K>& r, const K& s);

template <class K>
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<SparseRow<K>> row;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), row(r) {}

  void set(int r, int c, const K& v);
  K get(int r, int c) const;
  long long nnz() const;
  double fill() const;
  bool operator==(const Mat&) const = default;
};

template <class K>
struct Rref {
  // canonical reduced row echelon form with zero rows dropped,
  // rows ordered by pivot column, pivots normalized to 1
  Mat<K> mat;
  std::vector<int> pivot_cols;
};

// maintains the canonical reduced echelon basis of a growing row space
template <class K>
class EchelonBasis {
 public:
  explicit EchelonBasis(int cols) : cols_(cols) {}

  // fully reduces r against the basis; empty result means r was dependent
  SparseRow<K> reduce(SparseRow<K> r) const;
  bool insert(SparseRow<K> r);
  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  const std::vector<SparseRow<K>>& rows() const { return rows_; }
  const std::vector<int>& pivot_cols() const { return pivots_; }
  Rref<K> to_rref() const;

 private:
  int cols_ = 0;
  std::vector<SparseRow<K>> rows_;  // fully reduced, sorted by pivot column
  std::vector<int> pivots_;
};

template <class K>
Rref<K> rref(const Mat<K>& a);

template <class K>
int rank(const Mat<K>& a);

// rows of the result form a basis of the right kernel {v : a v^T = 0},
// one row per free column of rref(a), in ascending free-column order
template <class K>
Mat<K> kernel_basis(const Mat<K>& a, const FieldCtx<K>& F);

// coefficients of v over the rows of r, or nullopt when v is outside the row space
template <class K>
std::optional<std::vector<K>> solve_in_rowspace(const Rref<K>& r, const SparseRow<K>& v);

template <class K>
Mat<K> matmul(const Mat<K>& a, const Mat<K>& b);

template <class K>
Mat<K> transpose(const Mat<K>& a);

template <class K>
Mat<K> identity(int n, const FieldCtx<K>& F);

extern template struct Mat<Rational>;
extern template struct Mat<Fp>;
extern template class EchelonBasis<Rational>;
extern template class EchelonBasis<Fp>;

}  // namespace qreg
