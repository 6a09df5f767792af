#include <string>
#include <vector>

#include "doctest.h"
#include "qreg/presentation.hpp"

using namespace qreg;

namespace {

const char* corpus_files[] = {
    "kxy.alg",        "free2.alg",      "mckay.alg",   "kron_preproj.alg",
    "a2_preproj.alg", "s3_trivial.alg", "tensor_perm.alg",
};

Presentation corpus(const std::string& name) {
  return read_presentation_file(std::string(CORPUS_DIR) + "/" + name);
}

PresentationErrorKind kind_of(const std::string& text) {
  try {
    parse_presentation(text);
  } catch (const PresentationError& e) {
    return e.kind;
  }
  FAIL("expected a PresentationError");
  return PresentationErrorKind::parse;
}

int line_of(const std::string& text) {
  try {
    parse_presentation(text);
  } catch (const PresentationError& e) {
    return e.line;
  }
  return -2;
}

// path counts by the transfer recursion: N_d(i,j) = sum over arrows out of i
std::vector<std::vector<std::vector<long>>> path_counts(const Quiver& q, int maxdeg) {
  int n = q.vertices;
  std::vector counts(maxdeg + 1, std::vector(n, std::vector<long>(n, 0)));
  for (int i = 0; i < n; ++i) counts[0][i][i] = 1;
  for (int d = 1; d <= maxdeg; ++d)
    for (int i = 0; i < n; ++i)
      for (const auto& a : q.arrows)
        if (a.src == i && a.deg <= d)
          for (int j = 0; j < n; ++j) counts[d][i][j] += counts[d - a.deg][a.tgt][j];
  return counts;
}

}  // namespace

TEST_CASE("corpus file parses to the expected presentation") {
  auto p = corpus("kxy.alg");
  CHECK(p.quiver.vertices == 1);
  REQUIRE(p.quiver.arrows.size() == 2);
  CHECK(p.quiver.arrows[0] == Arrow{"x", 0, 0, 1});
  CHECK(p.quiver.arrows[1] == Arrow{"y", 0, 0, 1});
  CHECK(p.field == FieldSpec::rationals());
  REQUIRE(p.relations.size() == 1);
  const Relation& r = p.relations[0];
  CHECK(r.src == 0);
  CHECK(r.tgt == 0);
  CHECK(r.deg == 2);
  REQUIRE(r.terms.size() == 2);
  CHECK(r.terms[0].coeff == 1);
  CHECK(r.terms[0].arrows == std::vector<int>({0, 1}));
  CHECK(r.terms[1].coeff == -1);
  CHECK(r.terms[1].arrows == std::vector<int>({1, 0}));
}

TEST_CASE("serialize then parse is the identity on the corpus") {
  for (const char* name : corpus_files) {
    auto p = corpus(name);
    CHECK(parse_presentation(serialize(p)) == p);
  }
}

TEST_CASE("opposite is an involution on the corpus") {
  for (const char* name : corpus_files) {
    auto p = corpus(name);
    CHECK(opposite(opposite(p)) == p);
  }
}

TEST_CASE("opposite reverses arrows and paths") {
  auto p = corpus("mckay.alg");
  auto op = opposite(p);
  CHECK(op.quiver.arrows[2].src == 1);  // y1 was 0 -> 1
  CHECK(op.quiver.arrows[2].tgt == 0);
  // x1.y1 - y1.x2 reverses to y1.x1 - x2.y1, then renormalizes to lead 1
  REQUIRE(op.relations.size() == 2);
  for (const auto& r : op.relations) {
    CHECK(r.terms.size() == 2);
    CHECK(r.terms[0].coeff == 1);
    CHECK(r.terms[1].coeff == -1);
  }
}

TEST_CASE("enumerate_paths agrees with the transfer recursion") {
  for (const char* name : {"kxy.alg", "mckay.alg", "kron_preproj.alg", "tensor_perm.alg"}) {
    auto q = corpus(name).quiver;
    auto counts = path_counts(q, 6);
    for (int d = 0; d <= 6; ++d)
      for (int i = 0; i < q.vertices; ++i)
        for (int j = 0; j < q.vertices; ++j)
          CHECK(static_cast<long>(enumerate_paths(q, d, i, j).size()) == counts[d][i][j]);
  }
}

TEST_CASE("enumerate_paths lists in lexicographic order") {
  auto q = corpus("kxy.alg").quiver;
  auto ps = enumerate_paths(q, 2, 0, 0);
  REQUIRE(ps.size() == 4);
  CHECK(ps[0].arrows == std::vector<int>({0, 0}));
  CHECK(ps[1].arrows == std::vector<int>({0, 1}));
  CHECK(ps[2].arrows == std::vector<int>({1, 0}));
  CHECK(ps[3].arrows == std::vector<int>({1, 1}));
  for (std::size_t k = 0; k + 1 < ps.size(); ++k) CHECK(path_lex_less(ps[k], ps[k + 1]));
}

TEST_CASE("concat joins composable paths only") {
  auto q = corpus("tensor_perm.alg").quiver;  // u: 0 -> 1, v: 1 -> 0
  Path u{0, 1, 1, {0}}, v{1, 0, 1, {1}};
  auto uv = concat(q, u, v);
  CHECK(uv.src == 0);
  CHECK(uv.tgt == 0);
  CHECK(uv.deg == 2);
  CHECK(uv.arrows == std::vector<int>({0, 1}));
  CHECK_THROWS_AS(concat(q, u, u), PresentationError);
}

TEST_CASE("parser reports error kinds with line numbers") {
  using PEK = PresentationErrorKind;
  CHECK(kind_of("vertices 1\narrow a 0 2\n") == PEK::bad_vertex_index);
  CHECK(line_of("vertices 1\narrow a 0 2\n") == 2);
  CHECK(kind_of("vertices 1\narrow a 0 0\narrow a 0 0\n") == PEK::duplicate_arrow_name);
  CHECK(line_of("vertices 1\narrow a 0 0\narrow a 0 0\n") == 3);
  CHECK(kind_of("vertices 1\narrow a 0 0 0\n") == PEK::degree_zero_arrow);
  CHECK(kind_of("vertices 2\narrow a 0 1\nrelation a.a\n") == PEK::non_composable_path);
  CHECK(line_of("vertices 2\narrow a 0 1\nrelation a.a\n") == 3);
  CHECK(kind_of("vertices 2\narrow a 0 0\narrow b 1 1\nrelation a.a + b.b\n") ==
        PEK::non_uniform_relation);
  CHECK(kind_of("vertices 1\narrow x 0 0\narrow y 0 0 2\nrelation x.x.x - y\n") ==
        PEK::inhomogeneous_relation);
  CHECK(kind_of("vertices 1\narrow x 0 0\nrelation x\n") == PEK::relation_degree_too_low);
  CHECK(kind_of("vertices 1\narrow x 0 0\nrelation 1/0*x.x\n") == PEK::bad_coefficient);
  CHECK(kind_of("vertices 1\nfrobnicate\n") == PEK::parse);
  CHECK(line_of("vertices 1\nfrobnicate\n") == 2);
  CHECK(kind_of("vertices 1\narrow x 0 0\nrelation z.z\n") == PEK::parse);
  CHECK(kind_of("vertices 0\n") == PEK::bad_vertex_index);
  // a denominator divisible by p is rejected over F_p
  CHECK(kind_of("vertices 1\nfield F3\narrow x 0 0\nrelation x.x - 1/3*x.x\n") ==
        PEK::bad_coefficient);
}

TEST_CASE("parser tolerates comments blank lines and extra spaces") {
  auto p = parse_presentation(
      "# header comment\n"
      "\n"
      "  vertices   2\n"
      "arrow a 0 1   # trailing comment\n"
      "arrow b 1 0 3\n"
      "relation   a . b . a . b\n");
  CHECK(p.quiver.vertices == 2);
  CHECK(p.quiver.arrows[0].deg == 1);
  CHECK(p.quiver.arrows[1].deg == 3);
  REQUIRE(p.relations.size() == 1);
  CHECK(p.relations[0].deg == 8);
}

TEST_CASE("field line parses Q and F_p") {
  CHECK(parse_presentation("vertices 1\nfield Q\n").field == FieldSpec::rationals());
  CHECK(parse_presentation("vertices 1\nfield F7\n").field == FieldSpec::prime(7));
  CHECK(kind_of("vertices 1\nfield F6\n") == PresentationErrorKind::parse);
  CHECK(kind_of("vertices 1\nfield R\n") == PresentationErrorKind::parse);
}

TEST_CASE("coefficients combine and normalize to a monic leading term") {
  auto p = parse_presentation(
      "vertices 1\n"
      "arrow x 0 0\n"
      "arrow y 0 0\n"
      "relation 2*x.y + x.y - 6*y.x\n");
  REQUIRE(p.relations.size() == 1);
  const auto& r = p.relations[0];
  REQUIRE(r.terms.size() == 2);
  CHECK(r.terms[0].coeff == 1);
  CHECK(r.terms[1].coeff == -2);

  // terms cancelling to zero drop the relation entirely
  auto q = parse_presentation("vertices 1\narrow x 0 0\nrelation x.x - x.x\n");
  CHECK(q.relations.empty());

  // duplicate relations are kept once
  auto d = parse_presentation(
      "vertices 1\narrow x 0 0\narrow y 0 0\nrelation x.y - y.x\nrelation 2*x.y - 2*y.x\n");
  CHECK(d.relations.size() == 1);
}

TEST_CASE("validate rejects bad programmatic input") {
  Presentation p;
  p.quiver.vertices = 1;
  p.quiver.arrows.push_back({"x", 0, 0, 1});
  p.quiver.arrows.push_back({"x", 0, 0, 1});
  CHECK_THROWS_AS(validate(p), PresentationError);

  Presentation q;
  q.quiver.vertices = 2;
  q.quiver.arrows.push_back({"a", 0, 3, 1});
  CHECK_THROWS_AS(validate(q), PresentationError);
}
