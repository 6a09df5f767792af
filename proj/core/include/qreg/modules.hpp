#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qreg/algebra.hpp"

namespace qreg {

// one projective summand A e_vertex(-shift)
struct Summand {
  int vertex = 0;
  int shift = 0;
  bool operator==(const Summand&) const = default;
};

struct ProjSum {
  std::vector<Summand> summands;

  int size() const { return static_cast<int>(summands.size()); }
  bool empty() const { return summands.empty(); }
  int max_shift() const;
};

// the simple S_i concentrated in degree 0 at a vertex
struct SimpleModule {
  int vertex = 0;
};

template <class K>
SimpleModule simple(const AlgebraSlices<K>& a, int vertex);

// graded map between projective sums; entry (s, t) lies in
// e_{i_s} A_{l_s - l_t} e_{i_t} and acts by right multiplication
template <class K>
struct ModuleMap {
  ProjSum src;
  ProjSum tgt;
  std::map<std::pair<int, int>, Elem<K>> entries;
};

// ordered basis of the degree-m component of a projective sum:
// triples (summand, left vertex, slice basis index)
struct CompTriple {
  int summand = 0;
  int vertex = 0;
  int idx = 0;
};

struct CompLayout {
  int degree = 0;
  std::vector<CompTriple> triples;
  std::vector<int> summand_offset;  // position of each summand's first triple

  int dim() const { return static_cast<int>(triples.size()); }
};

template <class K>
CompLayout component(const ProjSum& p, const AlgebraSlices<K>& a, int m);

// matrix of the map in degree m: rows indexed by component(tgt, m),
// columns by component(src, m)
template <class K>
Mat<K> apply(const ModuleMap<K>& f, const AlgebraSlices<K>& a, int m);

}  // namespace qreg
