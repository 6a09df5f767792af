#include "qreg/matrix.hpp"

#include <algorithm>

namespace qreg {

namespace {

template <class K>
bool kz(const K& x) {
  return x == K{};
}

}  // namespace

template <class K>
void row_axpy(SparseRow<K>& target, const K& s, const SparseRow<K>& src) {
  if (kz(s) || src.empty()) return;
  SparseRow<K> out;
  out.reserve(target.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < target.size() || j < src.size()) {
    if (j == src.size() || (i < target.size() && target[i].first < src[j].first)) {
      out.push_back(target[i++]);
    } else if (i == target.size() || src[j].first < target[i].first) {
      K v = s * src[j].second;
      if (!kz(v)) out.emplace_back(src[j].first, std::move(v));
      ++j;
    } else {
      K v = target[i].second + s * src[j].second;
      if (!kz(v)) out.emplace_back(target[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  target = std::move(out);
}

template <class K>
void row_scale(SparseRow<K>& r, const K& s) {
  if (kz(s)) {
    r.clear();
    return;
  }
  for (auto& [c, v] : r) v = v * s;
}

template <class K>
void Mat<K>::set(int r, int c, const K& v) {
  auto& rr = row[r];
  auto it = std::lower_bound(rr.begin(), rr.end(), c,
                             [](const auto& e, int col) { return e.first < col; });
  if (it != rr.end() && it->first == c) {
    if (kz(v)) {
      rr.erase(it);
    } else {
      it->second = v;
    }
  } else if (!kz(v)) {
    rr.insert(it, {c, v});
  }
}

template <class K>
K Mat<K>::get(int r, int c) const {
  const auto& rr = row[r];
  auto it = std::lower_bound(rr.begin(), rr.end(), c,
                             [](const auto& e, int col) { return e.first < col; });
  if (it != rr.end() && it->first == c) return it->second;
  return K{};
}

template <class K>
long long Mat<K>::nnz() const {
  long long n = 0;
  for (const auto& r : row) n += static_cast<long long>(r.size());
  return n;
}

template <class K>
double Mat<K>::fill() const {
  if (rows == 0 || cols == 0) return 0.0;
  return static_cast<double>(nnz()) / (static_cast<double>(rows) * cols);
}

namespace {

template <class K>
K value_at(const SparseRow<K>& r, int col) {
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const auto& e, int c) { return e.first < c; });
  if (it != r.end() && it->first == col) return it->second;
  return K{};
}

}  // namespace

template <class K>
SparseRow<K> EchelonBasis<K>::reduce(SparseRow<K> r) const {
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    K c = value_at(r, pivots_[t]);
    if (!kz(c)) row_axpy(r, K(-c), rows_[t]);
  }
  return r;
}

template <class K>
bool EchelonBasis<K>::insert(SparseRow<K> r) {
  r = reduce(std::move(r));
  if (r.empty()) return false;
  K lead = r.front().second;
  K one = lead / lead;
  row_scale(r, K(one / lead));
  int piv = r.front().first;
  for (auto& existing : rows_) {
    K c = value_at(existing, piv);
    if (!kz(c)) row_axpy(existing, K(-c), r);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  auto idx = pos - pivots_.begin();
  pivots_.insert(pos, piv);
  rows_.insert(rows_.begin() + idx, std::move(r));
  return true;
}

template <class K>
Rref<K> EchelonBasis<K>::to_rref() const {
  Rref<K> out;
  out.mat = Mat<K>(rank(), cols_);
  out.mat.row = rows_;
  out.pivot_cols = pivots_;
  return out;
}

namespace {

template <class K>
Rref<K> rref_dense(const Mat<K>& a) {
  std::vector<std::vector<K>> rows;
  std::vector<int> pivot_col_of_row;
  std::vector<int> pivot_row_of_col(a.cols, -1);
  for (int i = 0; i < a.rows; ++i) {
    std::vector<K> r(a.cols, K{});
    for (const auto& [c, v] : a.row[i]) r[c] = v;
    for (int c = 0; c < a.cols; ++c) {
      if (kz(r[c])) continue;
      int pr = pivot_row_of_col[c];
      if (pr >= 0) {
        K s = r[c];
        const auto& prow = rows[pr];
        for (int k = c; k < a.cols; ++k) {
          if (!kz(prow[k])) r[k] = r[k] - s * prow[k];
        }
      } else {
        K lead = r[c];
        K one = lead / lead;
        K inv = one / lead;
        for (int k = c; k < a.cols; ++k) {
          if (!kz(r[k])) r[k] = r[k] * inv;
        }
        for (int k = c + 1; k < a.cols; ++k) {
          if (kz(r[k]) || pivot_row_of_col[k] < 0) continue;
          K s = r[k];
          const auto& prow = rows[pivot_row_of_col[k]];
          for (int m = k; m < a.cols; ++m) {
            if (!kz(prow[m])) r[m] = r[m] - s * prow[m];
          }
        }
        for (std::size_t t = 0; t < rows.size(); ++t) {
          K s = rows[t][c];
          if (kz(s)) continue;
          for (int k = c; k < a.cols; ++k) {
            if (!kz(r[k])) rows[t][k] = rows[t][k] - s * r[k];
          }
        }
        pivot_row_of_col[c] = static_cast<int>(rows.size());
        rows.push_back(std::move(r));
        pivot_col_of_row.push_back(c);
        break;
      }
    }
  }
  std::vector<int> order(rows.size());
  for (std::size_t t = 0; t < rows.size(); ++t) order[t] = static_cast<int>(t);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return pivot_col_of_row[x] < pivot_col_of_row[y]; });
  Rref<K> out;
  out.mat = Mat<K>(static_cast<int>(rows.size()), a.cols);
  for (std::size_t t = 0; t < order.size(); ++t) {
    out.pivot_cols.push_back(pivot_col_of_row[order[t]]);
    SparseRow<K> sr;
    const auto& r = rows[order[t]];
    for (int c = 0; c < a.cols; ++c) {
      if (!kz(r[c])) sr.emplace_back(c, r[c]);
    }
    out.mat.row[t] = std::move(sr);
  }
  return out;
}

}  // namespace

template <class K>
Rref<K> rref(const Mat<K>& a) {
  if (a.fill() > 0.5) return rref_dense(a);
  EchelonBasis<K> eb(a.cols);
  for (const auto& r : a.row) eb.insert(r);
  return eb.to_rref();
}

template <class K>
int rank(const Mat<K>& a) {
  return static_cast<int>(rref(a).pivot_cols.size());
}

template <class K>
Mat<K> kernel_basis(const Mat<K>& a, const FieldCtx<K>& F) {
  Rref<K> r = rref(a);
  std::vector<int> free_cols;
  {
    std::size_t t = 0;
    for (int c = 0; c < a.cols; ++c) {
      if (t < r.pivot_cols.size() && r.pivot_cols[t] == c) {
        ++t;
      } else {
        free_cols.push_back(c);
      }
    }
  }
  Mat<K> out(static_cast<int>(free_cols.size()), a.cols);
  for (std::size_t idx = 0; idx < free_cols.size(); ++idx) {
    int f = free_cols[idx];
    SparseRow<K> v;
    for (std::size_t t = 0; t < r.pivot_cols.size(); ++t) {
      K c = value_at(r.mat.row[t], f);
      if (!kz(c)) v.emplace_back(r.pivot_cols[t], -c);
    }
    v.emplace_back(f, F.one());
    std::sort(v.begin(), v.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    out.row[idx] = std::move(v);
  }
  return out;
}

template <class K>
std::optional<std::vector<K>> solve_in_rowspace(const Rref<K>& r, const SparseRow<K>& v) {
  std::vector<K> coeffs;
  coeffs.reserve(r.pivot_cols.size());
  SparseRow<K> residual = v;
  for (std::size_t t = 0; t < r.pivot_cols.size(); ++t) {
    K c = value_at(v, r.pivot_cols[t]);
    coeffs.push_back(c);
    if (!kz(c)) row_axpy(residual, K(-c), r.mat.row[t]);
  }
  if (!residual.empty()) return std::nullopt;
  return coeffs;
}

template <class K>
Mat<K> matmul(const Mat<K>& a, const Mat<K>& b) {
  Mat<K> out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    SparseRow<K> acc;
    for (const auto& [k, av] : a.row[i]) {
      row_axpy(acc, av, b.row[k]);
    }
    out.row[i] = std::move(acc);
  }
  return out;
}

template <class K>
Mat<K> transpose(const Mat<K>& a) {
  Mat<K> out(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i) {
    for (const auto& [j, v] : a.row[i]) out.row[j].emplace_back(i, v);
  }
  return out;
}

template <class K>
Mat<K> identity(int n, const FieldCtx<K>& F) {
  Mat<K> out(n, n);
  for (int i = 0; i < n; ++i) out.row[i] = {{i, F.one()}};
  return out;
}

template struct Mat<Rational>;
template struct Mat<Fp>;
template class EchelonBasis<Rational>;
template class EchelonBasis<Fp>;

template void row_axpy<Rational>(SparseRow<Rational>&, const Rational&, const SparseRow<Rational>&);
template void row_axpy<Fp>(SparseRow<Fp>&, const Fp&, const SparseRow<Fp>&);
template void row_scale<Rational>(SparseRow<Rational>&, const Rational&);
template void row_scale<Fp>(SparseRow<Fp>&, const Fp&);
template Rref<Rational> rref<Rational>(const Mat<Rational>&);
template Rref<Fp> rref<Fp>(const Mat<Fp>&);
template int rank<Rational>(const Mat<Rational>&);
template int rank<Fp>(const Mat<Fp>&);
template Mat<Rational> kernel_basis<Rational>(const Mat<Rational>&, const FieldCtx<Rational>&);
template Mat<Fp> kernel_basis<Fp>(const Mat<Fp>&, const FieldCtx<Fp>&);
template std::optional<std::vector<Rational>> solve_in_rowspace<Rational>(const Rref<Rational>&, const SparseRow<Rational>&);
template std::optional<std::vector<Fp>> solve_in_rowspace<Fp>(const Rref<Fp>&, const SparseRow<Fp>&);
template Mat<Rational> matmul<Rational>(const Mat<Rational>&, const Mat<Rational>&);
template Mat<Fp> matmul<Fp>(const Mat<Fp>&, const Mat<Fp>&);
template Mat<Rational> transpose<Rational>(const Mat<Rational>&);
template Mat<Fp> transpose<Fp>(const Mat<Fp>&);
template Mat<Rational> identity<Rational>(int, const FieldCtx<Rational>&);
template Mat<Fp> identity<Fp>(int, const FieldCtx<Fp>&);

}  // namespace qreg
