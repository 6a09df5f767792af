#include "qreg/modules.hpp"

#include <stdexcept>

namespace qreg {

int ProjSum::max_shift() const {
  int m = 0;
  for (const auto& s : summands) m = std::max(m, s.shift);
  return m;
}

template <class K>
SimpleModule simple(const AlgebraSlices<K>& a, int vertex) {
  if (vertex < 0 || vertex >= a.vertices()) {
    throw std::out_of_range("simple module vertex out of range");
  }
  return SimpleModule{vertex};
}

template <class K>
CompLayout component(const ProjSum& p, const AlgebraSlices<K>& a, int m) {
  CompLayout lay;
  lay.degree = m;
  lay.summand_offset.reserve(p.summands.size());
  for (int t = 0; t < p.size(); ++t) {
    lay.summand_offset.push_back(lay.dim());
    const Summand& s = p.summands[t];
    int d = m - s.shift;
    if (d < 0) continue;
    for (int v = 0; v < a.vertices(); ++v) {
      int n = a.dim(d, v, s.vertex);
      for (int idx = 0; idx < n; ++idx) lay.triples.push_back({t, v, idx});
    }
  }
  return lay;
}

template <class K>
Mat<K> apply(const ModuleMap<K>& f, const AlgebraSlices<K>& a, int m) {
  CompLayout src = component(f.src, a, m);
  CompLayout tgt = component(f.tgt, a, m);
  Mat<K> out(tgt.dim(), src.dim());

  std::vector<std::vector<int>> row_off(f.tgt.size(), std::vector<int>(a.vertices(), 0));
  for (int t = 0; t < f.tgt.size(); ++t) {
    int pos = tgt.summand_offset[t];
    int d = m - f.tgt.summands[t].shift;
    for (int v = 0; v < a.vertices(); ++v) {
      row_off[t][v] = pos;
      if (d >= 0) pos += a.dim(d, v, f.tgt.summands[t].vertex);
    }
  }

  for (int col = 0; col < src.dim(); ++col) {
    const CompTriple& tr = src.triples[col];
    const Summand& ss = f.src.summands[tr.summand];
    Elem<K> x = a.zero(m - ss.shift, tr.vertex, ss.vertex);
    x.coords[tr.idx] = a.ctx().one();
    auto it = f.entries.lower_bound({tr.summand, 0});
    for (; it != f.entries.end() && it->first.first == tr.summand; ++it) {
      const Elem<K>& ev = it->second;
      if (ev.is_zero()) continue;
      Elem<K> prod = a.multiply(x, ev);
      int base = row_off[it->first.second][tr.vertex];
      for (std::size_t k = 0; k < prod.coords.size(); ++k) {
        if (!(prod.coords[k] == K{})) out.set(base + static_cast<int>(k), col, prod.coords[k]);
      }
    }
  }
  return out;
}

template SimpleModule simple<Rational>(const AlgebraSlices<Rational>&, int);
template SimpleModule simple<Fp>(const AlgebraSlices<Fp>&, int);
template struct ModuleMap<Rational>;
template struct ModuleMap<Fp>;
template CompLayout component<Rational>(const ProjSum&, const AlgebraSlices<Rational>&, int);
template CompLayout component<Fp>(const ProjSum&, const AlgebraSlices<Fp>&, int);
template Mat<Rational> apply<Rational>(const ModuleMap<Rational>&, const AlgebraSlices<Rational>&,
                                       int);
template Mat<Fp> apply<Fp>(const ModuleMap<Fp>&, const AlgebraSlices<Fp>&, int);

}  // namespace qreg
