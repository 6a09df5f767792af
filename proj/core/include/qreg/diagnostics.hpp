#pragma once

#include <optional>
#include <string>
#include <variant>

#include "qreg/resolution.hpp"

namespace qreg {

struct NakayamaData {
  std::vector<int> sigma;   // permutation of vertices
  std::vector<int> shift;   // per-vertex internal shift
  bool operator==(const NakayamaData&) const = default;
};

std::vector<int> inverse_permutation(const std::vector<int>& sigma);

// graded bimodule over S = k^n given by its dimension table
struct BimoduleOverS {
  int vertices = 0;
  int window = -1;  // internal degrees certified up to this
  std::map<std::tuple<int, int, int>, long long> dims;  // (i, j, degree) -> dim

  long long row_total(int i) const;
};

struct InvertibleFailure {
  enum class Reason { row_overfull, row_empty, column_overfull };
  Reason reason;
  int index = -1;          // offending row or column
  long long total = 0;     // its dimension total inside the window
  bool window_limited = false;  // true for empty rows: more data could fill them
};

// a bimodule over split S is invertible exactly when its dimension table is a
// permutation matrix with each entry one-dimensional in a single degree
std::variant<NakayamaData, InvertibleFailure> recognize_invertible(const BimoduleOverS& v);

enum class VerdictStatus { certified_up_to, refuted, inconclusive };

struct Witness {
  enum class Kind { none, socle_element, bimodule_row, degree_zero_excess };
  Kind kind = Kind::none;
  // socle element: slice coordinates as exact field literals
  int deg = 0;
  int src = 0;
  int tgt = 0;
  std::vector<std::string> coords;
  // bimodule row: slot dims (other vertex, degree, dim)
  int row = -1;
  std::vector<std::tuple<int, int, long long>> slots;
  std::string detail;
};

struct WindowInfo {
  int truncation = 0;
  int socle = -1;
  int tor = -1;
  std::vector<std::vector<int>> resolution;  // per simple, per step
  std::vector<std::vector<int>> ext;         // per simple, per step
};

struct Verdict {
  VerdictStatus status = VerdictStatus::inconclusive;
  int dimension = -1;            // certified dimension, or the refuted one when scoped
  bool dimension_scoped = false; // refutation applies only to `dimension`
  NakayamaData nakayama;
  Witness witness;
  std::string reason;
  std::string branch;  // "degree-zero" | "tensor" | "ext-pattern"
  WindowInfo windows;
};

struct GrowthEstimate {
  enum class Kind { polynomial, superpolynomial_suspected, unclear };
  Kind kind = Kind::unclear;
  int degree = -1;  // for polynomial growth
};

GrowthEstimate gk_estimate(const HilbertTable& h);

struct TensorRecognition {
  BimoduleOverS v;        // J / J^2 with its dimension table
  bool iso_up_to_trunc = false;
  int first_gap_degree = -1;  // least degree where T_S(V) and A dims differ
};

template <class K>
TensorRecognition tensor_recognize(const AlgebraSlices<K>& a);

struct DualityCheck {
  bool ran = false;
  bool pass = false;
  std::string first_mismatch;
};

// Betti symmetry under the Nakayama data:
// beta[j][s][(i,l)] == beta[sigma^{-1}(i)][d-s][(j, shift_{sigma^{-1}(i)} - l)]
DualityCheck betti_duality_check(const std::vector<BettiRow>& rows,
                                 const std::vector<std::vector<int>>& windows,
                                 const NakayamaData& nak, int dimension);

// everything the classification saw, kept field-independent for reporting
struct Analysis {
  HilbertTable hilbert;
  GrowthEstimate growth;
  SocleReport socle;
  std::vector<BettiRow> betti;           // per simple
  std::vector<ResolutionSummary> res_summary;
  std::vector<ExtTable> ext;             // per simple, empty if not run
  GlobalDimEstimate gldim;
  std::optional<TensorRecognition> tensor;
  DualityCheck duality;
  bool ext0_socle_consistent = true;
};

template <class K>
Verdict as_regular_check(const AlgebraSlices<K>& a, int maxstep, Analysis& out,
                         bool run_duality = true);

template <class K>
Verdict twisted_cy_classify(const AlgebraSlices<K>& a, int maxstep, Analysis& out,
                            bool run_duality = true);

// re-checks a stored witness against freshly computed data
template <class K>
bool reverify(const Witness& w, const AlgebraSlices<K>& a);

}  // namespace qreg
