#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qreg/matrix.hpp"
#include "qreg/presentation.hpp"

namespace qreg {

enum class AlgebraErrorKind {
  degree_overflow,
  cost_guard_exceeded,
};

struct AlgebraError : std::runtime_error {
  AlgebraErrorKind kind;
  AlgebraError(AlgebraErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// one graded piece e_i A_d e_j presented on the path basis
template <class K>
struct Slice {
  std::vector<Path> paths;        // all paths, lexicographic order
  std::vector<int> basis_paths;   // surviving (non-pivot) path indices, ascending
  std::vector<int> unit_of_path;  // basis position of a path, -1 for reducible paths
  std::map<int, std::vector<K>> pivot_reduce;  // reducible path -> coordinates over the basis

  int dim() const { return static_cast<int>(basis_paths.size()); }
};

// element of e_src A_deg e_tgt in slice coordinates; empty coords means zero
template <class K>
struct Elem {
  int deg = 0;
  int src = 0;
  int tgt = 0;
  std::vector<K> coords;

  bool is_zero() const;
};

template <class K>
class AlgebraSlices;

// builds A = kQ/I degree by degree up to the truncation
template <class K>
AlgebraSlices<K> expand(const Presentation& p, int truncation, const FieldCtx<K>& ctx);

template <class K>
class AlgebraSlices {
 public:
  AlgebraSlices(Presentation pres, int truncation, FieldCtx<K> ctx);

  const Presentation& pres() const { return pres_; }
  const FieldCtx<K>& ctx() const { return ctx_; }
  int truncation() const { return trunc_; }
  int vertices() const { return pres_.quiver.vertices; }
  int max_arrow_deg() const { return max_arrow_deg_; }

  const Slice<K>& slice(int d, int i, int j) const;  // degree_overflow beyond truncation
  int dim(int d, int i, int j) const;

  Elem<K> zero(int d, int i, int j) const;
  Elem<K> unit(int vertex) const;
  Elem<K> arrow_elem(int arrow) const;
  Elem<K> elem_of_path(const Path& p) const;
  Elem<K> add(const Elem<K>& a, const Elem<K>& b) const;
  Elem<K> multiply(const Elem<K>& a, const Elem<K>& b) const;

  // coordinates of (basis path s of the left slice) * (basis path t of the right slice)
  const std::vector<K>& reduce_concat(int d1, int i1, int j1, int s, int d2, int j2, int t) const;

  std::string coord_str(const Elem<K>& e) const;

 private:
  friend AlgebraSlices<K> expand<K>(const Presentation&, int, const FieldCtx<K>&);

  Presentation pres_;
  FieldCtx<K> ctx_;
  int trunc_ = 0;
  int max_arrow_deg_ = 0;
  std::vector<std::vector<std::vector<Slice<K>>>> slices_;  // [d][i][j]
  mutable std::map<std::array<int, 7>, std::vector<K>> concat_memo_;
};

struct HilbertTable {
  int truncation = 0;
  int vertices = 0;
  std::vector<std::vector<std::vector<long long>>> dims;  // [d][i][j] = dim e_i A_d e_j

  long long total(int d) const;
  std::vector<std::vector<long long>> transposed(int d) const;
};

template <class K>
HilbertTable hilbert(const AlgebraSlices<K>& a);

struct SocleWitness {
  int deg = 0;
  int src = 0;
  int tgt = 0;
  std::vector<std::string> coords;  // over the slice basis, exact field literals
};

struct SocleReport {
  int window = -1;                           // degrees 0..window are certified
  std::vector<long long> dims;               // total socle dimension per degree
  std::vector<SocleWitness> witnesses;       // one per nonzero degree (first element found)

  long long positive_degree_dim() const;
};

// left socle {a : J a = 0} of A as a left module, degree by degree
template <class K>
SocleReport socle(const AlgebraSlices<K>& a);

}  // namespace qreg
