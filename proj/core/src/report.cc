#include "qreg/report.hpp"

#include <sstream>

#include "json.hpp"

namespace qreg {

namespace {

using nlohmann::json;

const char* status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::certified_up_to:
      return "certified_up_to";
    case VerdictStatus::refuted:
      return "refuted";
    case VerdictStatus::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

const char* growth_name(GrowthEstimate::Kind k) {
  switch (k) {
    case GrowthEstimate::Kind::polynomial:
      return "polynomial";
    case GrowthEstimate::Kind::superpolynomial_suspected:
      return "superpolynomial_suspected";
    case GrowthEstimate::Kind::unclear:
      return "unclear";
  }
  return "unclear";
}

const char* gldim_name(GlobalDimEstimate::Kind k) {
  switch (k) {
    case GlobalDimEstimate::Kind::exactly:
      return "exactly";
    case GlobalDimEstimate::Kind::at_least:
      return "at_least";
    case GlobalDimEstimate::Kind::inconclusive_window:
      return "inconclusive_window";
  }
  return "inconclusive_window";
}

const char* witness_name(Witness::Kind k) {
  switch (k) {
    case Witness::Kind::none:
      return "none";
    case Witness::Kind::socle_element:
      return "socle_element";
    case Witness::Kind::bimodule_row:
      return "bimodule_row";
    case Witness::Kind::degree_zero_excess:
      return "degree_zero_excess";
  }
  return "none";
}

json hilbert_json(const HilbertTable& h) {
  json totals = json::array();
  for (int d = 0; d <= h.truncation; ++d) totals.push_back(h.total(d));
  json by_degree = json::array();
  for (int d = 0; d <= h.truncation; ++d) by_degree.push_back(h.dims[d]);
  return json{{"truncation", h.truncation}, {"totals", totals}, {"by_degree", by_degree}};
}

json socle_json(const SocleReport& s) {
  json witnesses = json::array();
  for (const auto& w : s.witnesses) {
    witnesses.push_back(json{
        {"degree", w.deg}, {"src", w.src}, {"tgt", w.tgt}, {"coords", w.coords}});
  }
  return json{{"window", s.window}, {"dims", s.dims}, {"witnesses", witnesses}};
}

json betti_json(const BettiRow& rows) {
  json steps = json::array();
  for (const auto& row : rows) {
    json entries = json::array();
    for (const auto& [key, c] : row) {
      entries.push_back(json{{"vertex", key.first}, {"degree", key.second}, {"count", c}});
    }
    steps.push_back(entries);
  }
  return steps;
}

json ext_json(const ExtTable& e) {
  json steps = json::array();
  for (const auto& st : e.steps) {
    json dims = json::array();
    for (const auto& [key, c] : st.dims) {
      dims.push_back(json{{"q", key.first}, {"vertex", key.second}, {"dim", c}});
    }
    steps.push_back(json{{"computed", st.computed}, {"window", st.window}, {"dims", dims}});
  }
  return json{{"simple", e.simple}, {"steps", steps}};
}

json tor_json(const TorTable& t) {
  json steps = json::array();
  for (const auto& row : t.dims) {
    json entries = json::array();
    for (const auto& [key, c] : row) {
      entries.push_back(json{{"i", std::get<0>(key)},
                             {"j", std::get<1>(key)},
                             {"degree", std::get<2>(key)},
                             {"dim", c}});
    }
    steps.push_back(entries);
  }
  return json{{"window", t.window}, {"maxstep", t.maxstep}, {"dims", steps}};
}

json witness_json(const Witness& w) {
  json out{{"kind", witness_name(w.kind)}};
  if (w.kind == Witness::Kind::socle_element) {
    out["degree"] = w.deg;
    out["src"] = w.src;
    out["tgt"] = w.tgt;
    out["coords"] = w.coords;
  }
  if (w.kind == Witness::Kind::bimodule_row) {
    out["row"] = w.row;
    json slots = json::array();
    for (const auto& [v, l, c] : w.slots) {
      slots.push_back(json{{"vertex", v}, {"degree", l}, {"dim", c}});
    }
    out["slots"] = slots;
    out["detail"] = w.detail;
  }
  return out;
}

json verdict_json(const Verdict& v) {
  json out{{"status", status_name(v.status)},
           {"dimension", v.dimension},
           {"dimension_scoped", v.dimension_scoped},
           {"branch", v.branch},
           {"reason", v.reason}};
  if (v.status == VerdictStatus::certified_up_to) {
    out["nakayama"] = json{{"sigma", v.nakayama.sigma}, {"shift", v.nakayama.shift}};
  }
  out["witness"] = (v.witness.kind == Witness::Kind::none) ? json(nullptr)
                                                           : witness_json(v.witness);
  out["windows"] = json{{"truncation", v.windows.truncation},
                        {"socle", v.windows.socle},
                        {"tor", v.windows.tor},
                        {"resolution", v.windows.resolution},
                        {"ext", v.windows.ext}};
  return out;
}

}  // namespace

std::string report_to_json(const Report& r) {
  json out;
  out["schema"] = r.schema;
  out["command"] = r.command;
  out["input"] = r.input;
  out["field"] = r.field.str();
  out["truncation"] = r.truncation;
  out["maxstep"] = r.maxstep;
  out["seed"] = r.seed;
  out["presentation"] =
      json{{"vertices", r.vertices}, {"arrows", r.arrows}, {"relations", r.relations}};
  out["hilbert"] = hilbert_json(r.analysis.hilbert);
  out["growth"] = json{{"kind", growth_name(r.analysis.growth.kind)},
                       {"degree", r.analysis.growth.degree}};
  out["socle"] = socle_json(r.analysis.socle);
  json res = json::array();
  for (std::size_t j = 0; j < r.analysis.betti.size(); ++j) {
    const auto& sum = r.analysis.res_summary[j];
    json entry{{"simple", static_cast<int>(j)},
               {"terminated", sum.terminated},
               {"exhausted", sum.exhausted},
               {"top_step", sum.top_nonzero_step},
               {"betti", betti_json(r.analysis.betti[j])}};
    if (j < r.verdict.windows.resolution.size()) {
      entry["windows"] = r.verdict.windows.resolution[j];
    }
    res.push_back(entry);
  }
  out["resolutions"] = res;
  json ext = json::array();
  for (const auto& e : r.analysis.ext) ext.push_back(ext_json(e));
  out["ext"] = ext;
  out["gldim"] = json{{"kind", gldim_name(r.analysis.gldim.kind)},
                      {"value", r.analysis.gldim.value}};
  if (r.analysis.tensor.has_value()) {
    json dims = json::array();
    for (const auto& [key, c] : r.analysis.tensor->v.dims) {
      dims.push_back(json{{"i", std::get<0>(key)},
                          {"j", std::get<1>(key)},
                          {"degree", std::get<2>(key)},
                          {"dim", c}});
    }
    out["tensor"] = json{{"iso_up_to_trunc", r.analysis.tensor->iso_up_to_trunc},
                         {"first_gap_degree", r.analysis.tensor->first_gap_degree},
                         {"jj2", dims}};
  } else {
    out["tensor"] = nullptr;
  }
  out["tor"] = r.tor.has_value() ? tor_json(*r.tor) : json(nullptr);
  out["tor_matches"] = r.tor_matches;
  out["checks"] = json{{"duality_ran", r.analysis.duality.ran},
                       {"duality_pass", r.analysis.duality.pass},
                       {"duality_first_mismatch", r.analysis.duality.first_mismatch},
                       {"ext0_socle_consistent", r.analysis.ext0_socle_consistent}};
  out["verdict"] = r.has_verdict ? verdict_json(r.verdict) : json(nullptr);
  out["timings"] = json{{"expand_ms", r.timings.expand_ms},
                        {"resolve_ms", r.timings.resolve_ms},
                        {"ext_ms", r.timings.ext_ms},
                        {"checks_ms", r.timings.checks_ms},
                        {"total_ms", r.timings.total_ms}};
  return out.dump(2) + "\n";
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  os << r.command << " " << r.input << "  field=" << r.field.str()
     << "  truncation=" << r.truncation << "  maxstep=" << r.maxstep << "\n";
  os << "quiver: " << r.vertices << " vertices, " << r.arrows << " arrows, " << r.relations
     << " relations\n";

  os << "hilbert totals:";
  for (int d = 0; d <= r.analysis.hilbert.truncation; ++d) {
    os << " " << r.analysis.hilbert.total(d);
  }
  os << "\n";
  os << "growth: " << growth_name(r.analysis.growth.kind);
  if (r.analysis.growth.kind == GrowthEstimate::Kind::polynomial) {
    os << " (degree " << r.analysis.growth.degree << ")";
  }
  os << "\n";

  if (r.analysis.socle.window >= 0) {
    os << "socle dims (window " << r.analysis.socle.window << "):";
    for (long long v : r.analysis.socle.dims) os << " " << v;
    os << "\n";
  }

  for (std::size_t j = 0; j < r.analysis.betti.size(); ++j) {
    const auto& sum = r.analysis.res_summary[j];
    os << "S_" << j << ": ";
    if (sum.terminated) {
      os << "resolution ends at step " << sum.top_nonzero_step;
    } else if (sum.exhausted) {
      os << "window exhausted after step " << sum.top_nonzero_step;
    } else {
      os << "open at step " << sum.top_nonzero_step;
    }
    os << "; betti";
    for (std::size_t s = 0; s < r.analysis.betti[j].size(); ++s) {
      os << " [";
      bool first = true;
      for (const auto& [key, c] : r.analysis.betti[j][s]) {
        if (!first) os << " ";
        first = false;
        os << key.first << "(-" << key.second << ")";
        if (c > 1) os << "^" << c;
      }
      os << "]";
    }
    if (j < r.verdict.windows.resolution.size()) {
      os << "; windows";
      for (int w : r.verdict.windows.resolution[j]) os << " " << w;
    }
    os << "\n";
  }

  os << "global dimension: " << gldim_name(r.analysis.gldim.kind) << " "
     << r.analysis.gldim.value << "\n";

  for (const auto& e : r.analysis.ext) {
    for (std::size_t s = 0; s < e.steps.size(); ++s) {
      if (e.steps[s].dims.empty()) continue;
      os << "Ext^" << s << "(S_" << e.simple << ", A):";
      for (const auto& [key, c] : e.steps[s].dims) {
        os << " (q=" << key.first << ", v=" << key.second << "):" << c;
      }
      os << "  [window " << e.steps[s].window << "]\n";
    }
  }

  if (r.tor.has_value()) {
    os << "tor oracle (window " << r.tor->window << "): "
       << (r.tor_matches ? "matches the resolutions" : "MISMATCH against the resolutions")
       << "\n";
  }
  if (r.analysis.duality.ran) {
    os << "betti duality: " << (r.analysis.duality.pass ? "pass" : "FAIL ")
       << r.analysis.duality.first_mismatch << "\n";
  }

  if (r.has_verdict) {
    const Verdict& v = r.verdict;
    os << "verdict: ";
    switch (v.status) {
      case VerdictStatus::certified_up_to:
        os << "CERTIFIED_UP_TO(" << r.truncation << ") dimension " << v.dimension;
        break;
      case VerdictStatus::refuted:
        os << "REFUTED";
        if (v.dimension_scoped) os << " at dimension " << v.dimension;
        break;
      case VerdictStatus::inconclusive:
        os << "INCONCLUSIVE";
        break;
    }
    os << " [" << v.branch << "]\n";
    if (v.status == VerdictStatus::certified_up_to) {
      os << "nakayama sigma:";
      for (int s : v.nakayama.sigma) os << " " << s;
      os << "  shifts:";
      for (int s : v.nakayama.shift) os << " " << s;
      os << "\n";
    }
    if (v.witness.kind == Witness::Kind::socle_element) {
      os << "witness: socle element in degree " << v.witness.deg << " at (" << v.witness.src
         << " -> " << v.witness.tgt << ")\n";
    }
    if (v.witness.kind == Witness::Kind::bimodule_row) {
      os << "witness: bimodule row " << v.witness.row << " (" << v.witness.detail << ")";
      for (const auto& [vx, l, c] : v.witness.slots) {
        os << " (v=" << vx << ", deg=" << l << "):" << c;
      }
      os << "\n";
    }
    os << "reason: " << v.reason << "\n";
  }
  os << "total " << r.timings.total_ms << " ms\n";
  return os.str();
}

int exit_code_for(const Verdict& v) {
  switch (v.status) {
    case VerdictStatus::certified_up_to:
      return 0;
    case VerdictStatus::refuted:
      return 2;
    case VerdictStatus::inconclusive:
      return 3;
  }
  return 3;
}

}  // namespace qreg
