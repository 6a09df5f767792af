#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "qreg/modules.hpp"

namespace qreg {

template <class K>
struct ResolutionStep {
  ProjSum proj;     // P^{-s}
  ModuleMap<K> d;   // differential P^{-s} -> P^{-(s-1)}; empty map at s = 0
  int window = -1;  // generator degrees are certified complete up to this degree
};

template <class K>
struct SimpleResolution {
  int simple = 0;  // vertex j of S_j; -1 for the sum of all simples
  int maxstep = 0;
  std::vector<ResolutionStep<K>> steps;
  // kernel seen to vanish on a non-vacuous window after the last stored step
  bool terminated = false;
  // the window fell below the least possible kernel degree; deeper steps unknown
  bool exhausted = false;

  int top_nonzero_step() const;
};

// betti[s] maps (vertex, internal degree) to the number of summands A e_vertex(-degree)
using BettiRow = std::vector<std::map<std::pair<int, int>, long long>>;

template <class K>
BettiRow betti(const SimpleResolution<K>& r);

// minimal graded projective resolution of S_j computed degree by degree
template <class K>
SimpleResolution<K> resolve(const AlgebraSlices<K>& a, int simple_vertex, int maxstep);

// same engine applied to the direct sum of all simples at once
template <class K>
SimpleResolution<K> resolve_semisimple(const AlgebraSlices<K>& a, int maxstep);

// Tor_s(S, S) via the reduced bar complex; blocks keyed (i, j, internal degree);
// beta[j][s][(i,l)] equals the (i, j, l) entry at homological degree s
struct TorTable {
  int window = -1;  // internal degrees certified up to this
  int maxstep = 0;
  std::vector<std::map<std::tuple<int, int, int>, long long>> dims;
};

template <class K>
TorTable tor_oracle(const AlgebraSlices<K>& a, int maxstep, long long cost_guard = 20000);

// Ext^s(S_j, A) dims from Hom(P^{-s}, A) = sum of e_i A(l); slots keyed by
// (internal degree q, right vertex); the reported shift of a slot is -q
struct ExtStep {
  bool computed = false;
  int window = -1;  // internal degrees q <= window are certified
  std::map<std::pair<int, int>, long long> dims;
};

struct ExtTable {
  int simple = 0;
  std::vector<ExtStep> steps;
};

template <class K>
ExtTable ext_against_A(const SimpleResolution<K>& r, const AlgebraSlices<K>& a);

struct GlobalDimEstimate {
  enum class Kind { exactly, at_least, inconclusive_window };
  Kind kind = Kind::inconclusive_window;
  int value = -1;
};

struct ResolutionSummary {
  bool terminated = false;
  bool exhausted = false;
  int top_nonzero_step = 0;
  int maxstep = 0;
};

GlobalDimEstimate global_dimension_estimate(const std::vector<ResolutionSummary>& rows);

}  // namespace qreg
