#pragma once

#include <tuple>

#include "qreg/presentation.hpp"

namespace qreg {

// commuting loops x, y, z / x1..xn at one vertex
Presentation polynomial_algebra(int vars, FieldSpec field = FieldSpec::rationals());

// free loops, no relations
Presentation free_algebra(int vars, FieldSpec field = FieldSpec::rationals());

// k<x,y> / (x.y - (1/q) y.x), i.e. y x = q x y; q must be nonzero
Presentation skew_polynomial(const mpq_class& q, FieldSpec field = FieldSpec::rationals());

// relation-free quiver algebra: generators (src, tgt, deg)
Presentation tensor_algebra_presentation(int vertices,
                                         const std::vector<std::tuple<int, int, int>>& gens,
                                         FieldSpec field = FieldSpec::rationals());

// n isolated vertices, no arrows
Presentation semisimple(int n, FieldSpec field = FieldSpec::rationals());

// doubled quiver with the vertexwise commutator relations sum_a (a astar - astar a);
// q must have degree-1 arrows and no relations
Presentation preprojective(const Presentation& q);

// named base quivers: "a2" (0 -> 1), "kronecker2" (0 => 1), "loop1" (one loop)
Presentation preprojective_named(const std::string& name, FieldSpec field = FieldSpec::rationals());

// two vertices, loops x1, x2, crossing arrows y1: 0 -> 1, y2: 1 -> 0,
// relations x1.y1 - y1.x2 and x2.y2 - y2.x1
Presentation mckay_z2(FieldSpec field = FieldSpec::rationals());

Presentation direct_sum(const Presentation& a, const Presentation& b);

// vertex pairs, arrows alpha x 1 and 1 x beta, cross commutation relations,
// and the relations of both factors transported to every column/row
Presentation tensor_product(const Presentation& a, const Presentation& b);

}  // namespace qreg
