#include "qreg/algebra.hpp"

#include <algorithm>

namespace qreg {

namespace {

template <class K>
bool kz(const K& x) {
  return x == K{};
}

int index_of_arrows(const std::vector<Path>& paths, const std::vector<int>& arrows) {
  auto it = std::lower_bound(paths.begin(), paths.end(), arrows,
                             [](const Path& p, const std::vector<int>& a) {
                               return std::lexicographical_compare(p.arrows.begin(),
                                                                   p.arrows.end(), a.begin(),
                                                                   a.end());
                             });
  if (it == paths.end() || it->arrows != arrows) {
    throw std::logic_error("path missing from its slice enumeration");
  }
  return static_cast<int>(it - paths.begin());
}

}  // namespace

template <class K>
bool Elem<K>::is_zero() const {
  for (const auto& c : coords) {
    if (!kz(c)) return false;
  }
  return true;
}

template <class K>
AlgebraSlices<K>::AlgebraSlices(Presentation pres, int truncation, FieldCtx<K> ctx)
    : pres_(std::move(pres)), ctx_(ctx), trunc_(truncation) {
  for (const auto& a : pres_.quiver.arrows) max_arrow_deg_ = std::max(max_arrow_deg_, a.deg);
  int n = pres_.quiver.vertices;
  slices_.assign(trunc_ + 1,
                 std::vector<std::vector<Slice<K>>>(n, std::vector<Slice<K>>(n)));
}

template <class K>
const Slice<K>& AlgebraSlices<K>::slice(int d, int i, int j) const {
  if (d < 0 || d > trunc_) {
    throw AlgebraError(AlgebraErrorKind::degree_overflow,
                       "degree " + std::to_string(d) + " is outside the truncation " +
                           std::to_string(trunc_));
  }
  return slices_[d][i][j];
}

template <class K>
int AlgebraSlices<K>::dim(int d, int i, int j) const {
  if (d < 0) return 0;
  return slice(d, i, j).dim();
}

template <class K>
Elem<K> AlgebraSlices<K>::zero(int d, int i, int j) const {
  Elem<K> e;
  e.deg = d;
  e.src = i;
  e.tgt = j;
  e.coords.assign(dim(d, i, j), K{});
  return e;
}

template <class K>
Elem<K> AlgebraSlices<K>::unit(int vertex) const {
  Elem<K> e = zero(0, vertex, vertex);
  e.coords[0] = ctx_.one();
  return e;
}

template <class K>
Elem<K> AlgebraSlices<K>::arrow_elem(int arrow) const {
  const Arrow& a = pres_.quiver.arrows[arrow];
  Path p;
  p.src = a.src;
  p.tgt = a.tgt;
  p.deg = a.deg;
  p.arrows = {arrow};
  return elem_of_path(p);
}

template <class K>
Elem<K> AlgebraSlices<K>::elem_of_path(const Path& p) const {
  const Slice<K>& sl = slice(p.deg, p.src, p.tgt);
  int idx = index_of_arrows(sl.paths, p.arrows);
  Elem<K> e = zero(p.deg, p.src, p.tgt);
  if (sl.unit_of_path[idx] >= 0) {
    e.coords[sl.unit_of_path[idx]] = ctx_.one();
  } else {
    e.coords = sl.pivot_reduce.at(idx);
  }
  return e;
}

template <class K>
Elem<K> AlgebraSlices<K>::add(const Elem<K>& a, const Elem<K>& b) const {
  if (a.deg != b.deg || a.src != b.src || a.tgt != b.tgt) {
    throw std::logic_error("adding elements of different slices");
  }
  Elem<K> out = a;
  for (std::size_t k = 0; k < out.coords.size(); ++k) out.coords[k] = out.coords[k] + b.coords[k];
  return out;
}

template <class K>
const std::vector<K>& AlgebraSlices<K>::reduce_concat(int d1, int i1, int j1, int s, int d2,
                                                      int j2, int t) const {
  std::array<int, 7> key{d1, i1, j1, s, d2, j2, t};
  auto it = concat_memo_.find(key);
  if (it != concat_memo_.end()) return it->second;

  const Slice<K>& left = slices_[d1][i1][j1];
  const Slice<K>& right = slices_[d2][j1][j2];
  const Slice<K>& target = slices_[d1 + d2][i1][j2];
  std::vector<int> arrows = left.paths[left.basis_paths[s]].arrows;
  const auto& rarr = right.paths[right.basis_paths[t]].arrows;
  arrows.insert(arrows.end(), rarr.begin(), rarr.end());
  int idx = index_of_arrows(target.paths, arrows);

  std::vector<K> coords;
  if (target.unit_of_path[idx] >= 0) {
    coords.assign(target.dim(), K{});
    coords[target.unit_of_path[idx]] = ctx_.one();
  } else {
    coords = target.pivot_reduce.at(idx);
  }
  return concat_memo_.emplace(key, std::move(coords)).first->second;
}

template <class K>
Elem<K> AlgebraSlices<K>::multiply(const Elem<K>& a, const Elem<K>& b) const {
  if (a.tgt != b.src) {
    throw std::logic_error("multiplying non-composable elements");
  }
  int d = a.deg + b.deg;
  if (d > trunc_) {
    throw AlgebraError(AlgebraErrorKind::degree_overflow,
                       "product degree " + std::to_string(d) + " exceeds the truncation");
  }
  Elem<K> out = zero(d, a.src, b.tgt);
  for (std::size_t s = 0; s < a.coords.size(); ++s) {
    if (kz(a.coords[s])) continue;
    for (std::size_t t = 0; t < b.coords.size(); ++t) {
      if (kz(b.coords[t])) continue;
      const auto& red = reduce_concat(a.deg, a.src, a.tgt, static_cast<int>(s), b.deg, b.tgt,
                                      static_cast<int>(t));
      K c = a.coords[s] * b.coords[t];
      for (std::size_t k = 0; k < red.size(); ++k) {
        if (!kz(red[k])) out.coords[k] = out.coords[k] + c * red[k];
      }
    }
  }
  return out;
}

template <class K>
std::string AlgebraSlices<K>::coord_str(const Elem<K>& e) const {
  std::string out;
  for (std::size_t k = 0; k < e.coords.size(); ++k) {
    if (k) out += ",";
    out += FieldCtx<K>::str(e.coords[k]);
  }
  return out;
}

template <class K>
AlgebraSlices<K> expand(const Presentation& p, int truncation, const FieldCtx<K>& ctx) {
  if (truncation < 0) {
    throw AlgebraError(AlgebraErrorKind::degree_overflow, "negative truncation");
  }
  Presentation pres = validate(p);
  AlgebraSlices<K> A(pres, truncation, ctx);
  const Quiver& q = A.pres_.quiver;
  int n = q.vertices;

  for (int i = 0; i < n; ++i) {
    Slice<K>& sl = A.slices_[0][i][i];
    Path e;
    e.src = e.tgt = i;
    sl.paths = {e};
    sl.basis_paths = {0};
    sl.unit_of_path = {0};
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) A.slices_[0][i][j].unit_of_path.clear();
    }
  }

  // ideal spans propagate degree by degree:
  // I_d(i,j) = sum_alpha alpha * I_{d - deg alpha}(tgt alpha, j) + span{r * v}
  for (int d = 1; d <= truncation; ++d) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Slice<K>& sl = A.slices_[d][i][j];
        sl.paths = enumerate_paths(q, d, i, j);
        sl.unit_of_path.assign(sl.paths.size(), -1);
        if (sl.paths.empty()) continue;

        EchelonBasis<K> eb(static_cast<int>(sl.paths.size()));

        for (const Relation& r : A.pres_.relations) {
          if (r.src != i || r.deg > d) continue;
          const auto& tails = A.slices_[d - r.deg][r.tgt][j].paths;
          for (const Path& v : tails) {
            SparseRow<K> row;
            for (const RelTerm& t : r.terms) {
              std::vector<int> arrows = t.arrows;
              arrows.insert(arrows.end(), v.arrows.begin(), v.arrows.end());
              row.emplace_back(index_of_arrows(sl.paths, arrows), ctx.from_mpq(t.coeff));
            }
            std::sort(row.begin(), row.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            eb.insert(std::move(row));
          }
        }

        for (int ai = 0; ai < static_cast<int>(q.arrows.size()); ++ai) {
          const Arrow& al = q.arrows[ai];
          if (al.src != i || al.deg > d) continue;
          const Slice<K>& lower = A.slices_[d - al.deg][al.tgt][j];
          for (const auto& [pidx, coords] : lower.pivot_reduce) {
            SparseRow<K> row;
            std::vector<int> arrows = {ai};
            arrows.insert(arrows.end(), lower.paths[pidx].arrows.begin(),
                          lower.paths[pidx].arrows.end());
            row.emplace_back(index_of_arrows(sl.paths, arrows), ctx.one());
            for (std::size_t c = 0; c < coords.size(); ++c) {
              if (kz(coords[c])) continue;
              std::vector<int> ar = {ai};
              const auto& basis_arr = lower.paths[lower.basis_paths[c]].arrows;
              ar.insert(ar.end(), basis_arr.begin(), basis_arr.end());
              row.emplace_back(index_of_arrows(sl.paths, ar), -coords[c]);
            }
            std::sort(row.begin(), row.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            eb.insert(std::move(row));
          }
        }

        const auto& piv = eb.pivot_cols();
        {
          std::size_t t = 0;
          for (int c = 0; c < static_cast<int>(sl.paths.size()); ++c) {
            if (t < piv.size() && piv[t] == c) {
              ++t;
            } else {
              sl.unit_of_path[c] = static_cast<int>(sl.basis_paths.size());
              sl.basis_paths.push_back(c);
            }
          }
        }
        for (std::size_t t = 0; t < piv.size(); ++t) {
          std::vector<K> coords(sl.basis_paths.size(), K{});
          for (const auto& [c, w] : eb.rows()[t]) {
            if (c == piv[t]) continue;
            coords[sl.unit_of_path[c]] = -w;
          }
          sl.pivot_reduce.emplace(piv[t], std::move(coords));
        }
      }
    }
  }
  return A;
}

long long HilbertTable::total(int d) const {
  long long s = 0;
  for (const auto& row : dims[d]) {
    for (long long v : row) s += v;
  }
  return s;
}

std::vector<std::vector<long long>> HilbertTable::transposed(int d) const {
  std::vector<std::vector<long long>> out(vertices, std::vector<long long>(vertices, 0));
  for (int i = 0; i < vertices; ++i) {
    for (int j = 0; j < vertices; ++j) out[j][i] = dims[d][i][j];
  }
  return out;
}

template <class K>
HilbertTable hilbert(const AlgebraSlices<K>& a) {
  HilbertTable h;
  h.truncation = a.truncation();
  h.vertices = a.vertices();
  h.dims.assign(h.truncation + 1,
                std::vector<std::vector<long long>>(h.vertices,
                                                    std::vector<long long>(h.vertices, 0)));
  for (int d = 0; d <= h.truncation; ++d) {
    for (int i = 0; i < h.vertices; ++i) {
      for (int j = 0; j < h.vertices; ++j) h.dims[d][i][j] = a.dim(d, i, j);
    }
  }
  return h;
}

long long SocleReport::positive_degree_dim() const {
  long long s = 0;
  for (std::size_t d = 1; d < dims.size(); ++d) s += dims[d];
  return s;
}

template <class K>
SocleReport socle(const AlgebraSlices<K>& a) {
  SocleReport rep;
  rep.window = a.truncation() - a.max_arrow_deg();
  if (rep.window < 0) return rep;
  rep.dims.assign(rep.window + 1, 0);
  const Quiver& q = a.pres().quiver;
  int n = a.vertices();

  for (int d = 0; d <= rep.window; ++d) {
    bool witnessed = false;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        int m = a.dim(d, i, j);
        if (m == 0) continue;
        std::vector<int> in_arrows;
        int total_rows = 0;
        for (int ai = 0; ai < static_cast<int>(q.arrows.size()); ++ai) {
          if (q.arrows[ai].tgt != i) continue;
          in_arrows.push_back(ai);
          total_rows += a.dim(d + q.arrows[ai].deg, q.arrows[ai].src, j);
        }
        Mat<K> mat(total_rows, m);
        int offset = 0;
        for (int ai : in_arrows) {
          const Arrow& al = q.arrows[ai];
          int block = a.dim(d + al.deg, al.src, j);
          if (block > 0) {
            Elem<K> ae = a.arrow_elem(ai);
            for (int t = 0; t < m; ++t) {
              Elem<K> b = a.zero(d, i, j);
              b.coords[t] = a.ctx().one();
              Elem<K> prod = a.multiply(ae, b);
              for (int r = 0; r < block; ++r) {
                if (!(prod.coords[r] == K{})) mat.set(offset + r, t, prod.coords[r]);
              }
            }
          }
          offset += block;
        }
        Mat<K> kern = kernel_basis(mat, a.ctx());
        if (kern.rows == 0) continue;
        rep.dims[d] += kern.rows;
        if (!witnessed) {
          witnessed = true;
          SocleWitness w;
          w.deg = d;
          w.src = i;
          w.tgt = j;
          for (int c = 0; c < m; ++c) w.coords.push_back(FieldCtx<K>::str(kern.get(0, c)));
          rep.witnesses.push_back(std::move(w));
        }
      }
    }
  }
  return rep;
}

template struct Elem<Rational>;
template struct Elem<Fp>;
template class AlgebraSlices<Rational>;
template class AlgebraSlices<Fp>;
template AlgebraSlices<Rational> expand<Rational>(const Presentation&, int,
                                                  const FieldCtx<Rational>&);
template AlgebraSlices<Fp> expand<Fp>(const Presentation&, int, const FieldCtx<Fp>&);
template HilbertTable hilbert<Rational>(const AlgebraSlices<Rational>&);
template HilbertTable hilbert<Fp>(const AlgebraSlices<Fp>&);
template SocleReport socle<Rational>(const AlgebraSlices<Rational>&);
template SocleReport socle<Fp>(const AlgebraSlices<Fp>&);

}  // namespace qreg
