#include "qreg/pipeline.hpp"

#include <chrono>
#include <random>

namespace qreg {

namespace {

using clock_type = std::chrono::steady_clock;

long long ms_since(clock_type::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(clock_type::now() - t0).count();
}

Presentation with_field(const Presentation& p, const RunOptions& opt) {
  Presentation q = p;
  if (opt.field_explicit) q.field = opt.field;
  return validate(q);
}

Report base_report(const Presentation& q, const RunOptions& opt, const std::string& command) {
  Report r;
  r.command = command;
  r.input = opt.input_name;
  r.field = q.field;
  r.truncation = opt.truncation;
  r.maxstep = opt.maxstep < 0 ? opt.truncation : opt.maxstep;
  r.seed = opt.seed;
  r.vertices = q.quiver.vertices;
  r.arrows = static_cast<int>(q.quiver.arrows.size());
  r.relations = static_cast<int>(q.relations.size());
  return r;
}

template <class K>
void associativity_spot_check(const AlgebraSlices<K>& a, unsigned long long seed) {
  const int D = a.truncation();
  if (D < 3) return;
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };
  const int n = a.vertices();
  int done = 0;
  for (int tries = 0; tries < 200 && done < 20; ++tries) {
    int d1 = pick(1, D - 2);
    int d2 = pick(1, D - 1 - d1);
    int d3 = pick(1, D - d1 - d2);
    int i = pick(0, n - 1), j = pick(0, n - 1), k = pick(0, n - 1), l = pick(0, n - 1);
    if (a.dim(d1, i, j) == 0 || a.dim(d2, j, k) == 0 || a.dim(d3, k, l) == 0) continue;
    auto rand_elem = [&](int d, int s, int t) {
      Elem<K> e = a.zero(d, s, t);
      for (auto& c : e.coords) c = a.ctx().from_long(pick(-2, 2));
      return e;
    };
    Elem<K> x = rand_elem(d1, i, j);
    Elem<K> y = rand_elem(d2, j, k);
    Elem<K> z = rand_elem(d3, k, l);
    Elem<K> left = a.multiply(a.multiply(x, y), z);
    Elem<K> right = a.multiply(x, a.multiply(y, z));
    for (std::size_t c = 0; c < left.coords.size(); ++c) {
      if (!(left.coords[c] == right.coords[c])) {
        throw std::logic_error("associativity spot check failed");
      }
    }
    ++done;
  }
}

bool tor_match(const std::vector<BettiRow>& bt, const std::vector<std::vector<int>>& rwin,
               const std::vector<ResolutionSummary>& sums, const TorTable& t) {
  const int n = static_cast<int>(bt.size());
  for (int j = 0; j < n; ++j) {
    for (int s = 0; s < static_cast<int>(bt[j].size()) && s <= t.maxstep; ++s) {
      for (const auto& [key, c] : bt[j][s]) {
        auto [i, l] = key;
        if (l > t.window) continue;
        auto it = t.dims[s].find({i, j, l});
        long long tc = (it == t.dims[s].end()) ? 0 : it->second;
        if (tc != c) return false;
      }
    }
  }
  for (int s = 0; s <= t.maxstep; ++s) {
    for (const auto& [key, c] : t.dims[s]) {
      auto [i, j, l] = key;
      if (j < 0 || j >= n) return false;
      long long bc = -1;
      if (s < static_cast<int>(bt[j].size())) {
        if (l > rwin[j][s]) continue;
        auto it = bt[j][s].find({i, l});
        bc = (it == bt[j][s].end()) ? 0 : it->second;
      } else if (sums[j].terminated) {
        if (rwin[j].empty() || l > rwin[j].back()) continue;
        bc = 0;
      } else {
        continue;
      }
      if (bc != c) return false;
    }
  }
  return true;
}

template <class K>
void run_tor(const AlgebraSlices<K>& a, Report& r) {
  r.tor = tor_oracle(a, r.maxstep);
  r.verdict.windows.tor = r.tor->window;
  r.tor_matches = tor_match(r.analysis.betti, r.verdict.windows.resolution,
                            r.analysis.res_summary, *r.tor);
  if (!r.tor_matches && r.has_verdict &&
      r.verdict.status == VerdictStatus::certified_up_to) {
    r.verdict.status = VerdictStatus::inconclusive;
    r.verdict.reason = "internal cross-check failed: the bar complex disagrees with the "
                       "resolutions";
  }
}

template <class K>
void do_check(const Presentation& q, const RunOptions& opt, const FieldCtx<K>& ctx,
              Report& r) {
  auto t0 = clock_type::now();
  AlgebraSlices<K> a = expand(q, r.truncation, ctx);
  r.timings.expand_ms = ms_since(t0);
  associativity_spot_check(a, opt.seed);

  auto t1 = clock_type::now();
  r.verdict = twisted_cy_classify(a, r.maxstep, r.analysis, opt.run_duality);
  r.has_verdict = true;
  r.timings.resolve_ms = ms_since(t1);

  auto t2 = clock_type::now();
  if (opt.run_tor_oracle) run_tor(a, r);
  r.timings.checks_ms = ms_since(t2);
  r.timings.total_ms = ms_since(t0);
}

template <class K>
void do_resolve(const Presentation& q, const RunOptions& opt, const FieldCtx<K>& ctx,
                Report& r) {
  auto t0 = clock_type::now();
  AlgebraSlices<K> a = expand(q, r.truncation, ctx);
  r.timings.expand_ms = ms_since(t0);
  associativity_spot_check(a, opt.seed);

  auto t1 = clock_type::now();
  r.verdict = as_regular_check(a, r.maxstep, r.analysis, false);
  r.has_verdict = false;
  r.timings.resolve_ms = ms_since(t1);

  auto t2 = clock_type::now();
  if (opt.run_tor_oracle) run_tor(a, r);
  r.timings.checks_ms = ms_since(t2);
  r.timings.total_ms = ms_since(t0);
}

template <class K>
void do_hilbert(const Presentation& q, const RunOptions& opt, const FieldCtx<K>& ctx,
                Report& r) {
  auto t0 = clock_type::now();
  AlgebraSlices<K> a = expand(q, r.truncation, ctx);
  r.timings.expand_ms = ms_since(t0);
  associativity_spot_check(a, opt.seed);
  r.analysis.hilbert = hilbert(a);
  r.analysis.growth = gk_estimate(r.analysis.hilbert);
  r.timings.total_ms = ms_since(t0);
}

}  // namespace

Report run_check(const Presentation& p, const RunOptions& opt) {
  Presentation q = with_field(p, opt);
  Report r = base_report(q, opt, "check");
  if (q.field.is_rational()) {
    do_check<Rational>(q, opt, make_rational_ctx(), r);
  } else {
    do_check<Fp>(q, opt, make_fp_ctx(q.field.p), r);
  }
  return r;
}

Report run_resolve(const Presentation& p, const RunOptions& opt) {
  Presentation q = with_field(p, opt);
  Report r = base_report(q, opt, "resolve");
  if (q.field.is_rational()) {
    do_resolve<Rational>(q, opt, make_rational_ctx(), r);
  } else {
    do_resolve<Fp>(q, opt, make_fp_ctx(q.field.p), r);
  }
  return r;
}

Report run_hilbert(const Presentation& p, const RunOptions& opt) {
  Presentation q = with_field(p, opt);
  Report r = base_report(q, opt, "hilbert");
  if (q.field.is_rational()) {
    do_hilbert<Rational>(q, opt, make_rational_ctx(), r);
  } else {
    do_hilbert<Fp>(q, opt, make_fp_ctx(q.field.p), r);
  }
  return r;
}

}  // namespace qreg
