#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qreg/fields.hpp"

namespace qreg {

struct Arrow {
  std::string name;
  int src = 0;
  int tgt = 0;
  int deg = 1;
  bool operator==(const Arrow&) const = default;
};

struct Quiver {
  int vertices = 0;
  std::vector<Arrow> arrows;
  bool operator==(const Quiver&) const = default;
};

// arrows are listed in composition order: a path traverses arrows[0] first
struct Path {
  int src = 0;
  int tgt = 0;
  int deg = 0;
  std::vector<int> arrows;  // indices into Quiver::arrows; empty means the lazy path e_src
  bool operator==(const Path&) const = default;
};

bool path_lex_less(const Path& a, const Path& b);
Path concat(const Quiver& q, const Path& a, const Path& b);

struct RelTerm {
  mpq_class coeff;
  std::vector<int> arrows;
  bool operator==(const RelTerm&) const = default;
};

// normalized: terms sorted lexicographically by arrow sequence, no duplicate
// paths, no zero coefficients, leading coefficient 1, all terms sharing
// (src, tgt, deg) with deg >= 2
struct Relation {
  int src = 0;
  int tgt = 0;
  int deg = 0;
  std::vector<RelTerm> terms;
  bool operator==(const Relation&) const = default;
};

struct Presentation {
  Quiver quiver;
  std::vector<Relation> relations;
  FieldSpec field;
  bool operator==(const Presentation&) const = default;
};

enum class PresentationErrorKind {
  bad_vertex_index,
  duplicate_arrow_name,
  degree_zero_arrow,
  non_composable_path,
  non_uniform_relation,
  inhomogeneous_relation,
  relation_degree_too_low,
  bad_coefficient,
  parse,
};

struct PresentationError : std::runtime_error {
  PresentationErrorKind kind;
  int line;  // 1-based source line when raised by the parser, -1 otherwise

  PresentationError(PresentationErrorKind k, const std::string& msg, int ln = -1)
      : std::runtime_error(ln >= 0 ? "line " + std::to_string(ln) + ": " + msg : msg),
        kind(k),
        line(ln) {}
};

// checks the invariants and brings relations to normal form; throws PresentationError
Presentation validate(Presentation p);

// all paths src -> tgt of total degree deg, in lexicographic order on arrow sequences
std::vector<Path> enumerate_paths(const Quiver& q, int deg, int src, int tgt);

Presentation opposite(const Presentation& p);

Presentation parse_presentation(const std::string& text);
Presentation read_presentation_file(const std::string& path);
std::string serialize(const Presentation& p);

}  // namespace qreg
