#include "qreg/resolution.hpp"

#include <algorithm>
#include <stdexcept>

namespace qreg {

namespace {

template <class K>
bool kz(const K& x) {
  return x == K{};
}

// offsets of each (summand, left vertex) block inside component(p, a, m)
template <class K>
std::vector<std::vector<int>> block_offsets(const ProjSum& p, const AlgebraSlices<K>& a, int m) {
  std::vector<std::vector<int>> off(p.size(), std::vector<int>(a.vertices(), 0));
  int pos = 0;
  for (int t = 0; t < p.size(); ++t) {
    int d = m - p.summands[t].shift;
    for (int v = 0; v < a.vertices(); ++v) {
      off[t][v] = pos;
      if (d >= 0) pos += a.dim(d, v, p.summands[t].vertex);
    }
  }
  return off;
}

// left multiplication of a component vector by one arrow
template <class K>
SparseRow<K> arrow_left_mul(const AlgebraSlices<K>& a, const ProjSum& p, int arrow,
                            const CompLayout& src_lay, int m_src,
                            const std::vector<std::vector<int>>& tgt_off,
                            const SparseRow<K>& w) {
  const Arrow& al = a.pres().quiver.arrows[arrow];
  std::map<int, Elem<K>> lifted;
  for (const auto& [pos, val] : w) {
    const CompTriple& tr = src_lay.triples[pos];
    if (tr.vertex != al.tgt) continue;
    auto it = lifted.find(tr.summand);
    if (it == lifted.end()) {
      it = lifted
               .emplace(tr.summand, a.zero(m_src - p.summands[tr.summand].shift, al.tgt,
                                           p.summands[tr.summand].vertex))
               .first;
    }
    it->second.coords[tr.idx] = val;
  }
  Elem<K> ae = a.arrow_elem(arrow);
  SparseRow<K> out;
  for (const auto& [t, e] : lifted) {
    Elem<K> prod = a.multiply(ae, e);
    int base = tgt_off[t][al.src];
    for (std::size_t k = 0; k < prod.coords.size(); ++k) {
      if (!kz(prod.coords[k])) out.emplace_back(base + static_cast<int>(k), prod.coords[k]);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

template <class K>
SimpleResolution<K> resolve_core(const AlgebraSlices<K>& a, const std::vector<int>& start,
                                 int tag, int maxstep) {
  if (maxstep < 0) throw std::invalid_argument("maxstep must be nonnegative");
  const Quiver& q = a.pres().quiver;
  SimpleResolution<K> res;
  res.simple = tag;
  res.maxstep = maxstep;

  ResolutionStep<K> st0;
  for (int j : start) st0.proj.summands.push_back({j, 0});
  st0.window = a.truncation();
  res.steps.push_back(std::move(st0));

  for (int s = 1; s <= maxstep; ++s) {
    const ResolutionStep<K>& prev = res.steps[s - 1];
    int min_shift = prev.proj.summands[0].shift;
    for (const auto& sm : prev.proj.summands) min_shift = std::min(min_shift, sm.shift);
    int mu = (s == 1) ? 0 : min_shift;
    int window = prev.window - mu;
    int m_min = min_shift + 1;
    if (window < m_min) {
      res.exhausted = true;
      break;
    }

    std::vector<std::vector<SparseRow<K>>> kern(window + 1);
    std::vector<CompLayout> lay(window + 1);
    for (int m = m_min; m <= window; ++m) {
      lay[m] = component(prev.proj, a, m);
      if (s == 1) {
        for (int pos = 0; pos < lay[m].dim(); ++pos) {
          kern[m].push_back({{pos, a.ctx().one()}});
        }
      } else {
        Mat<K> kb = kernel_basis(apply(prev.d, a, m), a.ctx());
        for (auto& r : kb.row) kern[m].push_back(std::move(r));
      }
    }

    struct Gen {
      int vertex;
      int degree;
      SparseRow<K> vec;
    };
    std::vector<Gen> gens;
    for (int m = m_min; m <= window; ++m) {
      if (kern[m].empty()) continue;
      auto off = block_offsets(prev.proj, a, m);
      EchelonBasis<K> jk(lay[m].dim());
      for (int ai = 0; ai < static_cast<int>(q.arrows.size()); ++ai) {
        int mlow = m - q.arrows[ai].deg;
        if (mlow < m_min || mlow > window) continue;
        for (const auto& w : kern[mlow]) {
          SparseRow<K> row = arrow_left_mul(a, prev.proj, ai, lay[mlow], mlow, off, w);
          if (!row.empty()) jk.insert(std::move(row));
        }
      }
      for (int jb = 0; jb < a.vertices(); ++jb) {
        EchelonBasis<K> kblock(lay[m].dim());
        for (const auto& w : kern[m]) {
          SparseRow<K> restr;
          for (const auto& [pos, val] : w) {
            if (lay[m].triples[pos].vertex == jb) restr.emplace_back(pos, val);
          }
          if (!restr.empty()) kblock.insert(std::move(restr));
        }
        for (const auto& r : kblock.rows()) {
          if (jk.insert(r)) gens.push_back({jb, m, r});
        }
      }
    }

    if (gens.empty()) {
      res.terminated = true;
      break;
    }

    ResolutionStep<K> st;
    st.window = window;
    for (const auto& g : gens) st.proj.summands.push_back({g.vertex, g.degree});
    st.d.src = st.proj;
    st.d.tgt = prev.proj;
    for (int gi = 0; gi < static_cast<int>(gens.size()); ++gi) {
      const Gen& g = gens[gi];
      for (const auto& [pos, val] : g.vec) {
        const CompTriple& tr = lay[g.degree].triples[pos];
        auto key = std::make_pair(gi, tr.summand);
        auto it = st.d.entries.find(key);
        if (it == st.d.entries.end()) {
          const Summand& tsum = prev.proj.summands[tr.summand];
          it = st.d.entries.emplace(key, a.zero(g.degree - tsum.shift, g.vertex, tsum.vertex))
                   .first;
        }
        it->second.coords[tr.idx] = val;
      }
    }
    res.steps.push_back(std::move(st));
  }
  return res;
}

}  // namespace

template <class K>
int SimpleResolution<K>::top_nonzero_step() const {
  return static_cast<int>(steps.size()) - 1;
}

template <class K>
BettiRow betti(const SimpleResolution<K>& r) {
  BettiRow rows(r.steps.size());
  for (std::size_t s = 0; s < r.steps.size(); ++s) {
    for (const auto& sm : r.steps[s].proj.summands) ++rows[s][{sm.vertex, sm.shift}];
  }
  return rows;
}

template <class K>
SimpleResolution<K> resolve(const AlgebraSlices<K>& a, int simple_vertex, int maxstep) {
  if (simple_vertex < 0 || simple_vertex >= a.vertices()) {
    throw std::out_of_range("simple module vertex out of range");
  }
  return resolve_core(a, {simple_vertex}, simple_vertex, maxstep);
}

template <class K>
SimpleResolution<K> resolve_semisimple(const AlgebraSlices<K>& a, int maxstep) {
  std::vector<int> all(a.vertices());
  for (int j = 0; j < a.vertices(); ++j) all[j] = j;
  return resolve_core(a, all, -1, maxstep);
}

namespace {

struct TorShape {
  std::vector<int> comps;
  std::vector<int> verts;
  std::vector<int> fdims;
  std::vector<long long> strides;
  long long offset = 0;
  long long size = 0;
};

struct TorLevel {
  std::vector<TorShape> shapes;
  std::map<std::vector<int>, int> shape_at;  // comps ++ verts
  long long dim = 0;
};

std::vector<int> shape_key(const std::vector<int>& comps, const std::vector<int>& verts) {
  std::vector<int> key = comps;
  key.insert(key.end(), verts.begin(), verts.end());
  return key;
}

template <class K>
void tor_shapes_rec(const AlgebraSlices<K>& a, int j, int s, int l_rem, std::vector<int>& comps,
                    std::vector<int>& verts, TorLevel& lvl) {
  int k = static_cast<int>(comps.size());
  if (k == s) {
    if (l_rem != 0) return;
    TorShape sh;
    sh.comps = comps;
    sh.verts = verts;
    sh.size = 1;
    for (int f = 0; f < s; ++f) {
      sh.fdims.push_back(a.dim(comps[f], verts[f], verts[f + 1]));
      sh.size *= sh.fdims.back();
    }
    sh.strides.assign(s, 1);
    for (int f = s - 2; f >= 0; --f) sh.strides[f] = sh.strides[f + 1] * sh.fdims[f + 1];
    sh.offset = lvl.dim;
    lvl.dim += sh.size;
    lvl.shape_at.emplace(shape_key(sh.comps, sh.verts), static_cast<int>(lvl.shapes.size()));
    lvl.shapes.push_back(std::move(sh));
    return;
  }
  int remaining = s - k - 1;
  for (int d = 1; d + remaining <= l_rem; ++d) {
    for (int v = 0; v < a.vertices(); ++v) {
      if (k + 1 == s && v != j) continue;
      if (a.dim(d, verts.back(), v) == 0) continue;
      comps.push_back(d);
      verts.push_back(v);
      tor_shapes_rec(a, j, s, l_rem - d, comps, verts, lvl);
      comps.pop_back();
      verts.pop_back();
    }
  }
}

template <class K>
TorLevel tor_level(const AlgebraSlices<K>& a, int i, int j, int s, int l) {
  TorLevel lvl;
  std::vector<int> comps;
  std::vector<int> verts = {i};
  tor_shapes_rec(a, j, s, l, comps, verts, lvl);
  return lvl;
}

template <class K>
int bprime_rank(const AlgebraSlices<K>& a, const TorLevel& src, const TorLevel& tgt) {
  if (src.dim == 0 || tgt.dim == 0) return 0;
  Mat<K> m(static_cast<int>(tgt.dim), static_cast<int>(src.dim));
  for (const auto& sh : src.shapes) {
    int s = static_cast<int>(sh.comps.size());
    std::vector<int> tup(s, 0);
    for (long long li = 0; li < sh.size; ++li) {
      int col = static_cast<int>(sh.offset + li);
      std::map<int, K> acc;
      for (int k = 0; k + 1 < s; ++k) {
        const auto& red = a.reduce_concat(sh.comps[k], sh.verts[k], sh.verts[k + 1], tup[k],
                                          sh.comps[k + 1], sh.verts[k + 2], tup[k + 1]);
        if (red.empty()) continue;
        std::vector<int> comps2 = sh.comps;
        comps2[k] += comps2[k + 1];
        comps2.erase(comps2.begin() + k + 1);
        std::vector<int> verts2 = sh.verts;
        verts2.erase(verts2.begin() + k + 1);
        auto it = tgt.shape_at.find(shape_key(comps2, verts2));
        if (it == tgt.shape_at.end()) continue;
        const TorShape& tsh = tgt.shapes[it->second];
        long long fixed = tsh.offset;
        for (int k2 = 0; k2 < s; ++k2) {
          if (k2 == k || k2 == k + 1) continue;
          int tpos = (k2 < k) ? k2 : k2 - 1;
          fixed += tup[k2] * tsh.strides[tpos];
        }
        bool neg = (k % 2) == 1;
        for (std::size_t c = 0; c < red.size(); ++c) {
          if (kz(red[c])) continue;
          int row = static_cast<int>(fixed + static_cast<long long>(c) * tsh.strides[k]);
          acc[row] = acc[row] + (neg ? -red[c] : red[c]);
        }
      }
      for (const auto& [row, val] : acc) {
        if (!kz(val)) m.set(row, col, val);
      }
      for (int k = s - 1; k >= 0; --k) {
        if (++tup[k] < sh.fdims[k]) break;
        tup[k] = 0;
      }
    }
  }
  return rank(m);
}

}  // namespace

template <class K>
TorTable tor_oracle(const AlgebraSlices<K>& a, int maxstep, long long cost_guard) {
  TorTable t;
  t.maxstep = maxstep;
  t.window = a.truncation();
  t.dims.assign(maxstep + 1, {});
  for (int i = 0; i < a.vertices(); ++i) t.dims[0][{i, i, 0}] = 1;

  int n = a.vertices();
  for (int l = 1; l <= a.truncation(); ++l) {
    std::vector<std::vector<std::vector<TorLevel>>> lv(
        n, std::vector<std::vector<TorLevel>>(n, std::vector<TorLevel>(maxstep + 2)));
    long long total = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int s = 1; s <= maxstep + 1 && s <= l; ++s) {
          lv[i][j][s] = tor_level(a, i, j, s, l);
          total += lv[i][j][s].dim;
        }
      }
    }
    if (total > cost_guard) {
      if (l == 1) {
        throw AlgebraError(AlgebraErrorKind::cost_guard_exceeded,
                           "bar complex exceeds the cost guard already at internal degree 1");
      }
      t.window = l - 1;
      break;
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        std::vector<int> rk(maxstep + 3, 0);
        for (int s = 2; s <= maxstep + 1 && s <= l; ++s) {
          rk[s] = bprime_rank<K>(a, lv[i][j][s], lv[i][j][s - 1]);
        }
        for (int s = 1; s <= maxstep && s <= l; ++s) {
          long long h = lv[i][j][s].dim - rk[s] - rk[s + 1];
          if (h < 0) throw std::logic_error("negative homology dimension in the bar complex");
          if (h > 0) t.dims[s][{i, j, l}] = h;
        }
      }
    }
  }
  return t;
}

template <class K>
ExtTable ext_against_A(const SimpleResolution<K>& r, const AlgebraSlices<K>& a) {
  ExtTable et;
  et.simple = r.simple;
  const int D = a.truncation();
  int built = static_cast<int>(r.steps.size()) - 1;
  int top_compute = r.terminated ? r.maxstep : built - 1;
  et.steps.resize(r.maxstep + 1);

  std::vector<int> msh(built + 1, 0);
  for (int s = 0; s <= built; ++s) msh[s] = r.steps[s].proj.max_shift();
  auto window_of = [&](int s) {
    int w = D;
    for (int t = s - 1; t <= s + 1; ++t) {
      if (t >= 0 && t <= built) w = std::min(w, D - msh[t]);
    }
    return w;
  };

  // rank of the Hom differential from step s to step s + 1, per (q, right vertex)
  std::map<std::tuple<int, int, int>, int> rank_memo;
  auto rank_d = [&](int s, int q, int j) -> int {
    if (s > built || s + 1 > built) return 0;
    auto key = std::make_tuple(s, q, j);
    auto it = rank_memo.find(key);
    if (it != rank_memo.end()) return it->second;
    const ProjSum& sp = r.steps[s].proj;
    const ProjSum& tp = r.steps[s + 1].proj;
    std::vector<int> col_off(sp.size() + 1, 0);
    for (int t = 0; t < sp.size(); ++t) {
      int d = q + sp.summands[t].shift;
      col_off[t + 1] = col_off[t] + ((d >= 0) ? a.dim(d, sp.summands[t].vertex, j) : 0);
    }
    std::vector<int> row_off(tp.size() + 1, 0);
    for (int u = 0; u < tp.size(); ++u) {
      int d = q + tp.summands[u].shift;
      row_off[u + 1] = row_off[u] + ((d >= 0) ? a.dim(d, tp.summands[u].vertex, j) : 0);
    }
    Mat<K> m(row_off.back(), col_off.back());
    for (const auto& [key2, ev] : r.steps[s + 1].d.entries) {
      auto [u, tcol] = key2;
      if (ev.is_zero()) continue;
      int d = q + sp.summands[tcol].shift;
      if (d < 0) continue;
      int cols_here = col_off[tcol + 1] - col_off[tcol];
      for (int idx = 0; idx < cols_here; ++idx) {
        Elem<K> x = a.zero(d, sp.summands[tcol].vertex, j);
        x.coords[idx] = a.ctx().one();
        Elem<K> prod = a.multiply(ev, x);
        for (std::size_t kk = 0; kk < prod.coords.size(); ++kk) {
          if (!kz(prod.coords[kk])) {
            m.set(row_off[u] + static_cast<int>(kk), col_off[tcol] + idx, prod.coords[kk]);
          }
        }
      }
    }
    int rk = rank(m);
    rank_memo.emplace(key, rk);
    return rk;
  };

  for (int s = 0; s <= r.maxstep; ++s) {
    ExtStep& step = et.steps[s];
    step.window = window_of(s);
    if (s > top_compute) continue;
    step.computed = true;
    if (s > built) continue;  // past termination the groups vanish within the window
    const ProjSum& sp = r.steps[s].proj;
    for (int j = 0; j < a.vertices(); ++j) {
      for (int q = -msh[s]; q <= step.window; ++q) {
        long long cols = 0;
        for (const auto& sm : sp.summands) {
          if (q + sm.shift >= 0) cols += a.dim(q + sm.shift, sm.vertex, j);
        }
        if (cols == 0) continue;
        long long dim = cols - rank_d(s, q, j) - (s == 0 ? 0 : rank_d(s - 1, q, j));
        if (dim < 0) throw std::logic_error("negative cohomology dimension");
        if (dim > 0) step.dims[{q, j}] = dim;
      }
    }
  }
  return et;
}

GlobalDimEstimate global_dimension_estimate(const std::vector<ResolutionSummary>& rows) {
  GlobalDimEstimate g;
  if (rows.empty()) {
    g.kind = GlobalDimEstimate::Kind::exactly;
    g.value = 0;
    return g;
  }
  bool all_term = true;
  int top = 0;
  for (const auto& r : rows) {
    all_term = all_term && r.terminated;
    top = std::max(top, r.top_nonzero_step);
  }
  g.value = top;
  if (all_term) {
    g.kind = GlobalDimEstimate::Kind::exactly;
  } else if (top >= 1) {
    g.kind = GlobalDimEstimate::Kind::at_least;
  } else {
    g.kind = GlobalDimEstimate::Kind::inconclusive_window;
  }
  return g;
}

template struct ResolutionStep<Rational>;
template struct ResolutionStep<Fp>;
template struct SimpleResolution<Rational>;
template struct SimpleResolution<Fp>;
template BettiRow betti<Rational>(const SimpleResolution<Rational>&);
template BettiRow betti<Fp>(const SimpleResolution<Fp>&);
template SimpleResolution<Rational> resolve<Rational>(const AlgebraSlices<Rational>&, int, int);
template SimpleResolution<Fp> resolve<Fp>(const AlgebraSlices<Fp>&, int, int);
template SimpleResolution<Rational> resolve_semisimple<Rational>(const AlgebraSlices<Rational>&,
                                                                 int);
template SimpleResolution<Fp> resolve_semisimple<Fp>(const AlgebraSlices<Fp>&, int);
template TorTable tor_oracle<Rational>(const AlgebraSlices<Rational>&, int, long long);
template TorTable tor_oracle<Fp>(const AlgebraSlices<Fp>&, int, long long);
template ExtTable ext_against_A<Rational>(const SimpleResolution<Rational>&,
                                          const AlgebraSlices<Rational>&);
template ExtTable ext_against_A<Fp>(const SimpleResolution<Fp>&, const AlgebraSlices<Fp>&);

}  // namespace qreg
