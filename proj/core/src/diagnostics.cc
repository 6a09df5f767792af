#include "qreg/diagnostics.hpp"

#include <algorithm>
#include <stdexcept>

namespace qreg {

std::vector<int> inverse_permutation(const std::vector<int>& sigma) {
  std::vector<int> inv(sigma.size(), -1);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    int v = sigma[i];
    if (v < 0 || v >= static_cast<int>(sigma.size()) || inv[v] != -1) {
      throw std::invalid_argument("not a permutation");
    }
    inv[v] = static_cast<int>(i);
  }
  return inv;
}

long long BimoduleOverS::row_total(int i) const {
  long long s = 0;
  for (const auto& [key, d] : dims) {
    if (std::get<0>(key) == i) s += d;
  }
  return s;
}

std::variant<NakayamaData, InvertibleFailure> recognize_invertible(const BimoduleOverS& v) {
  NakayamaData nak;
  nak.sigma.assign(v.vertices, -1);
  nak.shift.assign(v.vertices, 0);
  for (int i = 0; i < v.vertices; ++i) {
    long long total = 0;
    int slot_vertex = -1;
    int slot_degree = 0;
    for (const auto& [key, d] : v.dims) {
      if (std::get<0>(key) != i) continue;
      total += d;
      slot_vertex = std::get<1>(key);
      slot_degree = std::get<2>(key);
    }
    if (total == 0) {
      return InvertibleFailure{InvertibleFailure::Reason::row_empty, i, 0, true};
    }
    if (total >= 2) {
      return InvertibleFailure{InvertibleFailure::Reason::row_overfull, i, total, false};
    }
    nak.sigma[i] = slot_vertex;
    nak.shift[i] = slot_degree;
  }
  std::vector<long long> col_total(v.vertices, 0);
  for (const auto& [key, d] : v.dims) col_total[std::get<1>(key)] += d;
  for (int j = 0; j < v.vertices; ++j) {
    if (col_total[j] >= 2) {
      return InvertibleFailure{InvertibleFailure::Reason::column_overfull, j, col_total[j],
                               false};
    }
  }
  return nak;
}

GrowthEstimate gk_estimate(const HilbertTable& h) {
  GrowthEstimate g;
  const int D = h.truncation;
  std::vector<long long> t(D + 1);
  for (int d = 0; d <= D; ++d) t[d] = h.total(d);

  if (t[D] == 0) {
    g.kind = GrowthEstimate::Kind::polynomial;
    g.degree = 0;
    return g;
  }
  if (D < 4) return g;

  int half = (D + 1) / 2;
  bool ratio_up = true;
  for (int d = half; d < D; ++d) {
    if (t[d] == 0 || 2 * t[d + 1] < 3 * t[d]) {
      ratio_up = false;
      break;
    }
  }
  if (ratio_up) {
    g.kind = GrowthEstimate::Kind::superpolynomial_suspected;
    return g;
  }

  auto settle = [](std::vector<long long> seq, int from) -> int {
    // least k <= 4 with the k-th difference constant on positions >= from
    for (int k = 0; k <= 4; ++k) {
      int len = static_cast<int>(seq.size());
      if (len - from >= 2) {
        bool flat = true;
        for (int d = from + 1; d < len; ++d) flat = flat && (seq[d] == seq[from]);
        if (flat) return k;
      }
      std::vector<long long> diff;
      for (int d = 0; d + 1 < len; ++d) diff.push_back(seq[d + 1] - seq[d]);
      seq = std::move(diff);
      if (static_cast<int>(seq.size()) <= from) break;
    }
    return -1;
  };

  int k = settle(t, half);
  if (k >= 0) {
    g.kind = GrowthEstimate::Kind::polynomial;
    g.degree = k + 1;
    return g;
  }

  std::vector<long long> even, odd;
  for (int d = 0; d <= D; ++d) (d % 2 == 0 ? even : odd).push_back(t[d]);
  int ke = settle(even, static_cast<int>(even.size()) / 2);
  int ko = settle(odd, static_cast<int>(odd.size()) / 2);
  if (ke >= 0 && ko >= 0) {
    g.kind = GrowthEstimate::Kind::polynomial;
    g.degree = std::max(ke, ko) + 1;
    return g;
  }
  return g;
}

template <class K>
TensorRecognition tensor_recognize(const AlgebraSlices<K>& a) {
  TensorRecognition tr;
  const int D = a.truncation();
  const int n = a.vertices();
  const Quiver& q = a.pres().quiver;
  tr.v.vertices = n;
  tr.v.window = D;

  // dim of J^2 inside each slice, spanned by arrow * (lower slice basis)
  std::vector<std::vector<std::vector<long long>>> vdim(
      D + 1, std::vector<std::vector<long long>>(n, std::vector<long long>(n, 0)));
  for (int l = 1; l <= D; ++l) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        int m = a.dim(l, i, j);
        if (m == 0) continue;
        EchelonBasis<K> eb(m);
        for (int ai = 0; ai < static_cast<int>(q.arrows.size()); ++ai) {
          const Arrow& al = q.arrows[ai];
          if (al.src != i || l - al.deg < 1) continue;
          int lower = a.dim(l - al.deg, al.tgt, j);
          if (lower == 0) continue;
          Elem<K> ae = a.arrow_elem(ai);
          for (int t = 0; t < lower; ++t) {
            Elem<K> b = a.zero(l - al.deg, al.tgt, j);
            b.coords[t] = a.ctx().one();
            Elem<K> prod = a.multiply(ae, b);
            SparseRow<K> row;
            for (std::size_t c = 0; c < prod.coords.size(); ++c) {
              if (!(prod.coords[c] == K{})) row.emplace_back(static_cast<int>(c), prod.coords[c]);
            }
            if (!row.empty()) eb.insert(std::move(row));
          }
        }
        long long vd = m - eb.rank();
        vdim[l][i][j] = vd;
        if (vd > 0) tr.v.dims[{i, j, l}] = vd;
      }
    }
  }

  // dims of the tensor algebra on J/J^2, degree by degree
  std::vector<std::vector<std::vector<long long>>> tdim(
      D + 1, std::vector<std::vector<long long>>(n, std::vector<long long>(n, 0)));
  for (int i = 0; i < n; ++i) tdim[0][i][i] = 1;
  tr.iso_up_to_trunc = true;
  for (int d = 1; d <= D && tr.iso_up_to_trunc; ++d) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        long long s = 0;
        for (int e = 1; e <= d; ++e) {
          for (int v = 0; v < n; ++v) s += vdim[e][i][v] * tdim[d - e][v][j];
        }
        tdim[d][i][j] = s;
        if (s < a.dim(d, i, j)) {
          throw std::logic_error("tensor algebra dimensions fell below the quotient");
        }
        if (s != a.dim(d, i, j) && tr.iso_up_to_trunc) {
          tr.iso_up_to_trunc = false;
          tr.first_gap_degree = d;
        }
      }
    }
  }
  return tr;
}

DualityCheck betti_duality_check(const std::vector<BettiRow>& rows,
                                 const std::vector<std::vector<int>>& windows,
                                 const NakayamaData& nak, int dimension) {
  DualityCheck dc;
  dc.ran = true;
  dc.pass = true;
  std::vector<int> inv = inverse_permutation(nak.sigma);

  auto lookup = [&](int j2, int s2, int i2, int l2) -> std::optional<long long> {
    if (j2 < 0 || j2 >= static_cast<int>(rows.size())) return std::nullopt;
    if (s2 < 0 || s2 > dimension) return 0;
    if (s2 >= static_cast<int>(rows[j2].size())) {
      int w = windows[j2].empty() ? -1 : windows[j2].back();
      if (l2 <= w) return 0;
      return std::nullopt;
    }
    if (l2 > windows[j2][s2]) return std::nullopt;
    auto it = rows[j2][s2].find({i2, l2});
    return it == rows[j2][s2].end() ? 0 : it->second;
  };

  for (int j = 0; j < static_cast<int>(rows.size()); ++j) {
    for (int s = 0; s < static_cast<int>(rows[j].size()) && s <= dimension; ++s) {
      for (const auto& [key, c] : rows[j][s]) {
        auto [i, l] = key;
        int j2 = inv[i];
        int s2 = dimension - s;
        int l2 = nak.shift[inv[i]] - l;
        auto mirror = lookup(j2, s2, j, l2);
        if (!mirror.has_value()) continue;
        if (*mirror != c) {
          dc.pass = false;
          dc.first_mismatch = "beta[" + std::to_string(j) + "][" + std::to_string(s) + "][(" +
                              std::to_string(i) + "," + std::to_string(l) + ")] = " +
                              std::to_string(c) + " but beta[" + std::to_string(j2) + "][" +
                              std::to_string(s2) + "][(" + std::to_string(j) + "," +
                              std::to_string(l2) + ")] = " + std::to_string(*mirror);
          return dc;
        }
      }
    }
  }
  return dc;
}

namespace {

template <class K>
std::vector<SimpleResolution<K>> fill_analysis(const AlgebraSlices<K>& a, int maxstep,
                                               Analysis& out, WindowInfo& win) {
  const int n = a.vertices();
  out.hilbert = hilbert(a);
  out.growth = gk_estimate(out.hilbert);
  out.socle = socle(a);
  win.truncation = a.truncation();
  win.socle = out.socle.window;

  std::vector<SimpleResolution<K>> rs;
  rs.reserve(n);
  out.betti.resize(n);
  out.res_summary.resize(n);
  out.ext.resize(n);
  win.resolution.resize(n);
  win.ext.resize(n);
  for (int j = 0; j < n; ++j) {
    rs.push_back(resolve(a, j, maxstep));
    const auto& r = rs.back();
    out.betti[j] = betti(r);
    out.res_summary[j] = {r.terminated, r.exhausted, r.top_nonzero_step(), r.maxstep};
    out.ext[j] = ext_against_A(r, a);
    for (const auto& st : r.steps) win.resolution[j].push_back(st.window);
    for (const auto& st : out.ext[j].steps) win.ext[j].push_back(st.window);
  }
  out.gldim = global_dimension_estimate(out.res_summary);

  // cross-check: Ext^0(S_j, A) collects exactly the socle rows starting at j
  bool all0 = true;
  for (int j = 0; j < n; ++j) all0 = all0 && !out.ext[j].steps.empty() && out.ext[j].steps[0].computed;
  if (all0 && out.socle.window >= 0) {
    int qmax = out.socle.window;
    for (int j = 0; j < n; ++j) qmax = std::min(qmax, out.ext[j].steps[0].window);
    for (int qd = 0; qd <= qmax; ++qd) {
      long long se = 0;
      for (int j = 0; j < n; ++j) {
        for (const auto& [key, d] : out.ext[j].steps[0].dims) {
          if (key.first == qd) se += d;
        }
      }
      if (se != out.socle.dims[qd]) out.ext0_socle_consistent = false;
    }
  }
  return rs;
}

Witness socle_witness_of(const SocleReport& rep) {
  Witness w;
  for (const auto& sw : rep.witnesses) {
    if (sw.deg >= 1) {
      w.kind = Witness::Kind::socle_element;
      w.deg = sw.deg;
      w.src = sw.src;
      w.tgt = sw.tgt;
      w.coords = sw.coords;
      break;
    }
  }
  return w;
}

Witness bimodule_witness(const BimoduleOverS& v, const InvertibleFailure& f,
                         const std::string& detail) {
  Witness w;
  w.kind = Witness::Kind::bimodule_row;
  w.row = f.index;
  w.detail = detail;
  bool column = f.reason == InvertibleFailure::Reason::column_overfull;
  for (const auto& [key, d] : v.dims) {
    int own = column ? std::get<1>(key) : std::get<0>(key);
    int other = column ? std::get<0>(key) : std::get<1>(key);
    if (own == f.index) w.slots.emplace_back(other, std::get<2>(key), d);
  }
  return w;
}

void certify(Verdict& v, Analysis& out, int dimension, const NakayamaData& nak,
             bool run_duality, const std::string& reason) {
  v.status = VerdictStatus::certified_up_to;
  v.dimension = dimension;
  v.nakayama = nak;
  v.reason = reason;
  if (run_duality) {
    out.duality = betti_duality_check(out.betti, v.windows.resolution, nak, dimension);
    if (!out.duality.pass) {
      v.status = VerdictStatus::inconclusive;
      v.reason = "internal cross-check failed, betti duality mismatch: " +
                 out.duality.first_mismatch;
    }
  }
  if (!out.ext0_socle_consistent) {
    v.status = VerdictStatus::inconclusive;
    v.reason = "internal cross-check failed: Ext^0 and socle disagree";
  }
}

template <class K>
Verdict ext_pattern_verdict(const AlgebraSlices<K>& a, Analysis& out, Verdict v,
                            bool run_duality) {
  v.branch = "ext-pattern";
  const int n = a.vertices();

  if (out.gldim.kind == GlobalDimEstimate::Kind::at_least) {
    v.status = VerdictStatus::inconclusive;
    v.reason = "a resolution is still open at step " + std::to_string(out.gldim.value) +
               "; raise the step limit or the truncation";
    return v;
  }
  if (out.gldim.kind == GlobalDimEstimate::Kind::inconclusive_window) {
    v.status = VerdictStatus::inconclusive;
    v.reason = "the windows are too small to estimate the global dimension";
    return v;
  }

  const int d = out.gldim.value;
  NakayamaData id_nak;
  if (d == 0) {
    id_nak.sigma.resize(n);
    for (int i = 0; i < n; ++i) id_nak.sigma[i] = i;
    id_nak.shift.assign(n, 0);
    certify(v, out, 0, id_nak, run_duality,
            "every simple is projective up to the windows");
    return v;
  }

  for (int j = 0; j < n; ++j) {
    for (int s = 0; s < static_cast<int>(out.ext[j].steps.size()); ++s) {
      if (s == d) continue;
      const ExtStep& step = out.ext[j].steps[s];
      if (!step.computed) {
        v.status = VerdictStatus::inconclusive;
        v.reason = "Ext^" + std::to_string(s) + "(S_" + std::to_string(j) +
                   ", A) could not be computed inside the windows";
        return v;
      }
      if (!step.dims.empty()) {
        v.status = VerdictStatus::inconclusive;
        v.reason = "Ext^" + std::to_string(s) + "(S_" + std::to_string(j) +
                   ", A) is nonzero inside its window although the resolutions end at step " +
                   std::to_string(d);
        return v;
      }
    }
  }

  BimoduleOverS bv;
  bv.vertices = n;
  bv.window = a.truncation();
  for (int j = 0; j < n; ++j) {
    const ExtStep& step = out.ext[j].steps[d];
    if (!step.computed) {
      v.status = VerdictStatus::inconclusive;
      v.reason = "Ext^" + std::to_string(d) + "(S_" + std::to_string(j) +
                 ", A) could not be computed inside the windows";
      return v;
    }
    bv.window = std::min(bv.window, step.window);
    for (const auto& [key, c] : step.dims) bv.dims[{j, key.second, -key.first}] += c;
  }

  auto rec = recognize_invertible(bv);
  if (std::holds_alternative<NakayamaData>(rec)) {
    certify(v, out, d, std::get<NakayamaData>(rec), run_duality,
            "resolutions end at step " + std::to_string(d) + " and the Ext^" +
                std::to_string(d) + " rows form an invertible bimodule over S");
    return v;
  }
  const auto& f = std::get<InvertibleFailure>(rec);
  if (f.reason == InvertibleFailure::Reason::row_empty) {
    v.status = VerdictStatus::inconclusive;
    v.reason = "Ext^" + std::to_string(d) + "(S_" + std::to_string(f.index) +
               ", A) vanishes inside its window; a larger truncation may reveal it";
    return v;
  }
  v.status = VerdictStatus::refuted;
  v.dimension = d;
  v.dimension_scoped = true;
  v.witness = bimodule_witness(bv, f, "ext:" + std::to_string(d));
  v.reason = (f.reason == InvertibleFailure::Reason::row_overfull
                  ? "Ext^" + std::to_string(d) + "(S_" + std::to_string(f.index) +
                        ", A) has total dimension " + std::to_string(f.total) +
                        " inside its window, so it is not an invertible bimodule row"
                  : "vertex " + std::to_string(f.index) + " supports " +
                        std::to_string(f.total) + " Ext^" + std::to_string(d) +
                        " slots, so the bimodule column is not invertible");
  return v;
}

}  // namespace

template <class K>
Verdict as_regular_check(const AlgebraSlices<K>& a, int maxstep, Analysis& out,
                         bool run_duality) {
  out = Analysis{};
  Verdict v;
  fill_analysis(a, maxstep, out, v.windows);
  return ext_pattern_verdict(a, out, std::move(v), run_duality);
}

template <class K>
Verdict twisted_cy_classify(const AlgebraSlices<K>& a, int maxstep, Analysis& out,
                            bool run_duality) {
  out = Analysis{};
  Verdict v;
  fill_analysis(a, maxstep, out, v.windows);
  const int D = a.truncation();
  const int n = a.vertices();

  bool positive_part = false;
  for (int d = 1; d <= D; ++d) positive_part = positive_part || out.hilbert.total(d) > 0;

  if (!positive_part) {
    if (D == 0) {
      v.status = VerdictStatus::inconclusive;
      v.reason = "truncation 0 shows only the degree-zero part";
      return v;
    }
    v.branch = "degree-zero";
    NakayamaData nak;
    nak.sigma.resize(n);
    for (int i = 0; i < n; ++i) nak.sigma[i] = i;
    nak.shift.assign(n, 0);
    certify(v, out, 0, nak, run_duality,
            "A vanishes in every positive degree up to the truncation");
    return v;
  }

  if (out.socle.positive_degree_dim() > 0) {
    v.branch = "socle";
    v.status = VerdictStatus::refuted;
    v.witness = socle_witness_of(out.socle);
    v.reason =
        "the socle is nonzero in a positive degree, which no regular algebra of positive "
        "dimension allows, and the positive part of A rules out dimension 0; this survives "
        "any extension of the window";
    return v;
  }

  out.tensor = tensor_recognize(a);
  if (out.tensor->iso_up_to_trunc) {
    v.branch = "tensor";
    auto rec = recognize_invertible(out.tensor->v);
    if (std::holds_alternative<NakayamaData>(rec)) {
      if (out.gldim.kind == GlobalDimEstimate::Kind::exactly && out.gldim.value != 1) {
        v.status = VerdictStatus::inconclusive;
        v.reason = "internal cross-check failed: tensor shape with global dimension " +
                   std::to_string(out.gldim.value);
        return v;
      }
      certify(v, out, 1, std::get<NakayamaData>(rec), run_duality,
              "A agrees with the tensor algebra on J/J^2 up to the truncation and J/J^2 is "
              "an invertible bimodule over S");
      return v;
    }
    const auto& f = std::get<InvertibleFailure>(rec);
    if (f.reason == InvertibleFailure::Reason::row_empty) {
      v.status = VerdictStatus::inconclusive;
      v.reason = "vertex " + std::to_string(f.index) +
                 " supports no part of J/J^2 inside the window";
      return v;
    }
    v.status = VerdictStatus::refuted;
    v.dimension = 1;
    v.dimension_scoped = true;
    v.witness = bimodule_witness(out.tensor->v, f, "jj2");
    v.reason = (f.reason == InvertibleFailure::Reason::row_overfull
                    ? "J/J^2 has row total " + std::to_string(f.total) + " at vertex " +
                          std::to_string(f.index)
                    : "J/J^2 has column total " + std::to_string(f.total) + " at vertex " +
                          std::to_string(f.index)) +
               ", so it is not invertible over S and dimension 1 is impossible; row totals "
               "only grow under larger windows";
    return v;
  }

  return ext_pattern_verdict(a, out, std::move(v), run_duality);
}

template <class K>
bool reverify(const Witness& w, const AlgebraSlices<K>& a) {
  switch (w.kind) {
    case Witness::Kind::none:
    case Witness::Kind::degree_zero_excess:
      return false;
    case Witness::Kind::socle_element: {
      if (w.deg < 1 || w.src < 0 || w.src >= a.vertices() || w.tgt < 0 ||
          w.tgt >= a.vertices() || w.deg > a.truncation()) {
        return false;
      }
      int m = a.dim(w.deg, w.src, w.tgt);
      if (m == 0 || static_cast<int>(w.coords.size()) != m) return false;
      Elem<K> e = a.zero(w.deg, w.src, w.tgt);
      try {
        for (int c = 0; c < m; ++c) e.coords[c] = a.ctx().parse(w.coords[c]);
      } catch (const std::exception&) {
        return false;
      }
      if (e.is_zero()) return false;
      const Quiver& q = a.pres().quiver;
      for (int ai = 0; ai < static_cast<int>(q.arrows.size()); ++ai) {
        if (q.arrows[ai].tgt != w.src) continue;
        if (w.deg + q.arrows[ai].deg > a.truncation()) return false;
        if (!a.multiply(a.arrow_elem(ai), e).is_zero()) return false;
      }
      return true;
    }
    case Witness::Kind::bimodule_row: {
      if (w.row < 0 || w.row >= a.vertices()) return false;
      if (w.detail.rfind("ext:", 0) == 0) {
        int d = 0;
        try {
          d = std::stoi(w.detail.substr(4));
        } catch (const std::exception&) {
          return false;
        }
        if (d < 0) return false;
        int maxstep = std::min(a.truncation(), d + 1);
        long long row_total = 0;
        std::vector<long long> col_total(a.vertices(), 0);
        for (int j = 0; j < a.vertices(); ++j) {
          auto r = resolve(a, j, maxstep);
          auto et = ext_against_A(r, a);
          if (d >= static_cast<int>(et.steps.size()) || !et.steps[d].computed) continue;
          for (const auto& [key, c] : et.steps[d].dims) {
            if (j == w.row) row_total += c;
            col_total[key.second] += c;
          }
        }
        return row_total >= 2 || col_total[w.row] >= 2;
      }
      TensorRecognition tr = tensor_recognize(a);
      long long row_total = 0;
      std::vector<long long> col_total(a.vertices(), 0);
      for (const auto& [key, d] : tr.v.dims) {
        if (std::get<0>(key) == w.row) row_total += d;
        col_total[std::get<1>(key)] += d;
      }
      return row_total >= 2 || col_total[w.row] >= 2;
    }
  }
  return false;
}

template TensorRecognition tensor_recognize<Rational>(const AlgebraSlices<Rational>&);
template TensorRecognition tensor_recognize<Fp>(const AlgebraSlices<Fp>&);
template Verdict as_regular_check<Rational>(const AlgebraSlices<Rational>&, int, Analysis&,
                                            bool);
template Verdict as_regular_check<Fp>(const AlgebraSlices<Fp>&, int, Analysis&, bool);
template Verdict twisted_cy_classify<Rational>(const AlgebraSlices<Rational>&, int, Analysis&,
                                               bool);
template Verdict twisted_cy_classify<Fp>(const AlgebraSlices<Fp>&, int, Analysis&, bool);
template bool reverify<Rational>(const Witness&, const AlgebraSlices<Rational>&);
template bool reverify<Fp>(const Witness&, const AlgebraSlices<Fp>&);

}  // namespace qreg
