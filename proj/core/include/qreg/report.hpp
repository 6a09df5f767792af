#pragma once

#include <string>

#include "qreg/diagnostics.hpp"

namespace qreg {

struct Timings {
  long long expand_ms = 0;
  long long resolve_ms = 0;
  long long ext_ms = 0;
  long long checks_ms = 0;
  long long total_ms = 0;
};

struct Report {
  int schema = 1;
  std::string input;
  std::string command;  // check | resolve | hilbert
  FieldSpec field;
  int truncation = 0;
  int maxstep = 0;
  unsigned long long seed = 0;

  int vertices = 0;
  int arrows = 0;
  int relations = 0;

  Analysis analysis;
  Verdict verdict;
  bool has_verdict = false;

  std::optional<TorTable> tor;  // filled when the oracle comparison ran
  bool tor_matches = true;

  Timings timings;
};

std::string report_to_json(const Report& r);
std::string report_to_text(const Report& r);

int exit_code_for(const Verdict& v);

}  // namespace qreg
