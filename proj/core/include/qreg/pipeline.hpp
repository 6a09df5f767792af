#pragma once

#include "qreg/report.hpp"

namespace qreg {

struct RunOptions {
  int truncation = 8;
  int maxstep = -1;  // -1 means truncation
  FieldSpec field;
  bool field_explicit = false;  // command line field overrides the file's
  bool run_duality = true;
  bool run_tor_oracle = false;
  unsigned long long seed = 0;
  std::string input_name;
};

// full classification: expand, socle, resolutions, Ext, verdict
Report run_check(const Presentation& p, const RunOptions& opt);

// resolutions and Betti data only (verdict omitted)
Report run_resolve(const Presentation& p, const RunOptions& opt);

// Hilbert table and growth estimate only
Report run_hilbert(const Presentation& p, const RunOptions& opt);

}  // namespace qreg
