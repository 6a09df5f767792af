#include "qreg/constructions.hpp"

#include <set>
#include <stdexcept>

namespace qreg {

namespace {

std::vector<std::string> var_names(int vars) {
  if (vars <= 3) {
    std::vector<std::string> names = {"x", "y", "z"};
    names.resize(vars);
    return names;
  }
  std::vector<std::string> names;
  for (int i = 1; i <= vars; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::string unique_name(std::string candidate, std::set<std::string>& used) {
  while (used.count(candidate)) candidate += "_2";
  used.insert(candidate);
  return candidate;
}

}  // namespace

Presentation polynomial_algebra(int vars, FieldSpec field) {
  if (vars < 1) throw std::invalid_argument("at least one variable");
  Presentation p;
  p.field = field;
  p.quiver.vertices = 1;
  for (const auto& nm : var_names(vars)) p.quiver.arrows.push_back({nm, 0, 0, 1});
  for (int i = 0; i < vars; ++i) {
    for (int j = i + 1; j < vars; ++j) {
      Relation r;
      r.src = r.tgt = 0;
      r.deg = 2;
      r.terms.push_back({mpq_class(1), {i, j}});
      r.terms.push_back({mpq_class(-1), {j, i}});
      p.relations.push_back(std::move(r));
    }
  }
  return validate(p);
}

Presentation free_algebra(int vars, FieldSpec field) {
  if (vars < 1) throw std::invalid_argument("at least one variable");
  Presentation p;
  p.field = field;
  p.quiver.vertices = 1;
  for (const auto& nm : var_names(vars)) p.quiver.arrows.push_back({nm, 0, 0, 1});
  return validate(p);
}

Presentation skew_polynomial(const mpq_class& q, FieldSpec field) {
  if (q == 0) throw std::invalid_argument("the skew parameter must be nonzero");
  Presentation p;
  p.field = field;
  p.quiver.vertices = 1;
  p.quiver.arrows.push_back({"x", 0, 0, 1});
  p.quiver.arrows.push_back({"y", 0, 0, 1});
  Relation r;
  r.src = r.tgt = 0;
  r.deg = 2;
  r.terms.push_back({mpq_class(1), {0, 1}});
  r.terms.push_back({mpq_class(-1) / q, {1, 0}});
  p.relations.push_back(std::move(r));
  return validate(p);
}

Presentation tensor_algebra_presentation(int vertices,
                                         const std::vector<std::tuple<int, int, int>>& gens,
                                         FieldSpec field) {
  if (vertices < 1) throw std::invalid_argument("at least one vertex");
  Presentation p;
  p.field = field;
  p.quiver.vertices = vertices;
  int k = 0;
  for (const auto& [src, tgt, deg] : gens) {
    ++k;
    p.quiver.arrows.push_back({"g" + std::to_string(k), src, tgt, deg});
  }
  return validate(p);
}

Presentation semisimple(int n, FieldSpec field) {
  if (n < 1) throw std::invalid_argument("at least one vertex");
  Presentation p;
  p.field = field;
  p.quiver.vertices = n;
  return validate(p);
}

Presentation preprojective(const Presentation& q) {
  if (!q.relations.empty()) {
    throw std::invalid_argument("the base of a preprojective algebra must be relation free");
  }
  for (const auto& a : q.quiver.arrows) {
    if (a.deg != 1) {
      throw std::invalid_argument("the base of a preprojective algebra needs degree-1 arrows");
    }
  }
  Presentation p;
  p.field = q.field;
  p.quiver.vertices = q.quiver.vertices;
  int na = static_cast<int>(q.quiver.arrows.size());
  std::set<std::string> used;
  for (const auto& a : q.quiver.arrows) {
    used.insert(a.name);
    p.quiver.arrows.push_back(a);
  }
  for (const auto& a : q.quiver.arrows) {
    p.quiver.arrows.push_back({unique_name(a.name + "s", used), a.tgt, a.src, 1});
  }
  for (int v = 0; v < p.quiver.vertices; ++v) {
    Relation r;
    r.src = r.tgt = v;
    r.deg = 2;
    for (int i = 0; i < na; ++i) {
      if (q.quiver.arrows[i].src == v) r.terms.push_back({mpq_class(1), {i, na + i}});
      if (q.quiver.arrows[i].tgt == v) r.terms.push_back({mpq_class(-1), {na + i, i}});
    }
    if (!r.terms.empty()) p.relations.push_back(std::move(r));
  }
  return validate(p);
}

Presentation preprojective_named(const std::string& name, FieldSpec field) {
  Presentation base;
  base.field = field;
  if (name == "a2") {
    base.quiver.vertices = 2;
    base.quiver.arrows.push_back({"a", 0, 1, 1});
  } else if (name == "kronecker2") {
    base.quiver.vertices = 2;
    base.quiver.arrows.push_back({"a", 0, 1, 1});
    base.quiver.arrows.push_back({"b", 0, 1, 1});
  } else if (name == "loop1") {
    base.quiver.vertices = 1;
    base.quiver.arrows.push_back({"x", 0, 0, 1});
  } else {
    throw std::invalid_argument("unknown base quiver: " + name);
  }
  return preprojective(base);
}

Presentation mckay_z2(FieldSpec field) {
  Presentation p;
  p.field = field;
  p.quiver.vertices = 2;
  p.quiver.arrows.push_back({"x1", 0, 0, 1});
  p.quiver.arrows.push_back({"x2", 1, 1, 1});
  p.quiver.arrows.push_back({"y1", 0, 1, 1});
  p.quiver.arrows.push_back({"y2", 1, 0, 1});
  Relation r1;
  r1.src = 0;
  r1.tgt = 1;
  r1.deg = 2;
  r1.terms.push_back({mpq_class(1), {0, 2}});
  r1.terms.push_back({mpq_class(-1), {2, 1}});
  p.relations.push_back(std::move(r1));
  Relation r2;
  r2.src = 1;
  r2.tgt = 0;
  r2.deg = 2;
  r2.terms.push_back({mpq_class(1), {1, 3}});
  r2.terms.push_back({mpq_class(-1), {3, 0}});
  p.relations.push_back(std::move(r2));
  return validate(p);
}

Presentation direct_sum(const Presentation& a, const Presentation& b) {
  if (!(a.field == b.field)) {
    throw std::invalid_argument("direct sum needs matching coefficient fields");
  }
  Presentation p;
  p.field = a.field;
  int na = a.quiver.vertices;
  p.quiver.vertices = na + b.quiver.vertices;
  std::set<std::string> used;
  for (const auto& ar : a.quiver.arrows) {
    used.insert(ar.name);
    p.quiver.arrows.push_back(ar);
  }
  for (const auto& ar : b.quiver.arrows) {
    p.quiver.arrows.push_back({unique_name(ar.name, used), ar.src + na, ar.tgt + na, ar.deg});
  }
  int shift = static_cast<int>(a.quiver.arrows.size());
  p.relations = a.relations;
  for (Relation r : b.relations) {
    r.src += na;
    r.tgt += na;
    for (auto& t : r.terms) {
      for (auto& idx : t.arrows) idx += shift;
    }
    p.relations.push_back(std::move(r));
  }
  return validate(p);
}

Presentation tensor_product(const Presentation& a, const Presentation& b) {
  if (!(a.field == b.field)) {
    throw std::invalid_argument("tensor product needs matching coefficient fields");
  }
  Presentation p;
  p.field = a.field;
  int nb = b.quiver.vertices;
  p.quiver.vertices = a.quiver.vertices * nb;
  auto vid = [nb](int u, int v) { return u * nb + v; };

  std::set<std::string> used;
  int na_arr = static_cast<int>(a.quiver.arrows.size());
  // columns first: alpha x 1 at every b-vertex, then 1 x beta at every a-vertex
  for (int ai = 0; ai < na_arr; ++ai) {
    const Arrow& al = a.quiver.arrows[ai];
    for (int v = 0; v < nb; ++v) {
      p.quiver.arrows.push_back({unique_name(al.name + "_c" + std::to_string(v), used),
                                 vid(al.src, v), vid(al.tgt, v), al.deg});
    }
  }
  int col_base = 0;
  int row_base = na_arr * nb;
  for (int bi = 0; bi < static_cast<int>(b.quiver.arrows.size()); ++bi) {
    const Arrow& bl = b.quiver.arrows[bi];
    for (int u = 0; u < a.quiver.vertices; ++u) {
      p.quiver.arrows.push_back({unique_name(bl.name + "_r" + std::to_string(u), used),
                                 vid(u, bl.src), vid(u, bl.tgt), bl.deg});
    }
  }
  auto col_arrow = [&](int ai, int v) { return col_base + ai * nb + v; };
  auto row_arrow = [&](int bi, int u) { return row_base + bi * a.quiver.vertices + u; };

  for (const Relation& r : a.relations) {
    for (int v = 0; v < nb; ++v) {
      Relation rr;
      rr.src = vid(r.src, v);
      rr.tgt = vid(r.tgt, v);
      rr.deg = r.deg;
      for (const auto& t : r.terms) {
        RelTerm tt{t.coeff, {}};
        for (int ai : t.arrows) tt.arrows.push_back(col_arrow(ai, v));
        rr.terms.push_back(std::move(tt));
      }
      p.relations.push_back(std::move(rr));
    }
  }
  for (const Relation& r : b.relations) {
    for (int u = 0; u < a.quiver.vertices; ++u) {
      Relation rr;
      rr.src = vid(u, r.src);
      rr.tgt = vid(u, r.tgt);
      rr.deg = r.deg;
      for (const auto& t : r.terms) {
        RelTerm tt{t.coeff, {}};
        for (int bi : t.arrows) tt.arrows.push_back(row_arrow(bi, u));
        rr.terms.push_back(std::move(tt));
      }
      p.relations.push_back(std::move(rr));
    }
  }
  for (int ai = 0; ai < na_arr; ++ai) {
    const Arrow& al = a.quiver.arrows[ai];
    for (int bi = 0; bi < static_cast<int>(b.quiver.arrows.size()); ++bi) {
      const Arrow& bl = b.quiver.arrows[bi];
      Relation rr;
      rr.src = vid(al.src, bl.src);
      rr.tgt = vid(al.tgt, bl.tgt);
      rr.deg = al.deg + bl.deg;
      rr.terms.push_back({mpq_class(1), {col_arrow(ai, bl.src), row_arrow(bi, al.tgt)}});
      rr.terms.push_back({mpq_class(-1), {row_arrow(bi, al.src), col_arrow(ai, bl.tgt)}});
      p.relations.push_back(std::move(rr));
    }
  }
  return validate(p);
}

}  // namespace qreg
