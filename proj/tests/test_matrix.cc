#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "qreg/matrix.hpp"

using namespace qreg;

namespace {

Mat<Rational> qmat(const std::vector<std::vector<long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  Mat<Rational> m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if (rows[i][j] != 0) m.set(i, j, Rational(rows[i][j]));
  return m;
}

Mat<Fp> pmat(const std::vector<std::vector<long>>& rows, long long p) {
  auto F = make_fp_ctx(p);
  int r = static_cast<int>(rows.size());
  int c = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  Mat<Fp> m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if (rows[i][j] % p != 0) m.set(i, j, F.from_long(rows[i][j]));
  return m;
}

template <class K>
SparseRow<K> sparse_of(const std::vector<K>& dense) {
  SparseRow<K> r;
  for (int j = 0; j < static_cast<int>(dense.size()); ++j)
    if (!(dense[j] == K{})) r.emplace_back(j, dense[j]);
  return r;
}

template <class K>
bool is_zero_mat(const Mat<K>& m) {
  for (const auto& r : m.row)
    if (!r.empty()) return false;
  return true;
}

template <class K>
Mat<K> random_mat(std::mt19937_64& rng, const FieldCtx<K>& F, int maxdim) {
  std::uniform_int_distribution<int> dim(1, maxdim);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> fill(0, 2);
  Mat<K> m(dim(rng), dim(rng));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (fill(rng) != 0) {
        int e = entry(rng);
        if (e != 0) m.set(i, j, F.from_long(e));
      }
  return m;
}

}  // namespace

TEST_CASE("rref of a dependent pair keeps one normalized row") {
  auto r = rref(qmat({{1, 2}, {2, 4}}));
  CHECK(r.mat.rows == 1);
  CHECK(r.pivot_cols == std::vector<int>{0});
  CHECK(r.mat.get(0, 0) == Rational(1));
  CHECK(r.mat.get(0, 1) == Rational(2));
}

TEST_CASE("rref over F2 reaches the identity") {
  auto r = rref(pmat({{1, 1}, {1, 0}}, 2));
  CHECK(r.mat.rows == 2);
  CHECK(r.pivot_cols == std::vector<int>({0, 1}));
  CHECK(r.mat.get(0, 0).v == 1);
  CHECK(r.mat.get(0, 1).v == 0);
  CHECK(r.mat.get(1, 0).v == 0);
  CHECK(r.mat.get(1, 1).v == 1);
}

TEST_CASE("kernel basis of a 2x3 matrix") {
  auto F = make_rational_ctx();
  auto a = qmat({{1, 1, 0}, {0, 1, 1}});
  auto k = kernel_basis(a, F);
  REQUIRE(k.rows == 1);
  CHECK(k.cols == 3);
  CHECK(k.get(0, 0) == Rational(1));
  CHECK(k.get(0, 1) == Rational(-1));
  CHECK(k.get(0, 2) == Rational(1));
  CHECK(is_zero_mat(matmul(a, transpose(k))));
}

TEST_CASE("rank of a singular matrix") {
  CHECK(rank(qmat({{2, 4}, {1, 2}})) == 1);
  CHECK(rank(qmat({{2, 4}, {1, 3}})) == 2);
  CHECK(rank(Mat<Rational>(3, 3)) == 0);
}

TEST_CASE("echelon basis detects dependence") {
  auto F = make_rational_ctx();
  EchelonBasis<Rational> eb(3);
  CHECK(eb.insert(sparse_of<Rational>({Rational(1), Rational(2), Rational(0)})));
  CHECK(!eb.insert(sparse_of<Rational>({Rational(2), Rational(4), Rational(0)})));
  CHECK(eb.reduce(sparse_of<Rational>({Rational(3), Rational(6), Rational(0)})).empty());
  CHECK(eb.insert(sparse_of<Rational>({Rational(0), Rational(0), Rational(5)})));
  CHECK(eb.rank() == 2);
  CHECK(eb.pivot_cols() == std::vector<int>({0, 2}));
  auto r = eb.to_rref();
  CHECK(r.mat.get(1, 2) == F.one());
}

TEST_CASE("solve_in_rowspace finds coefficients or reports failure") {
  auto r = rref(qmat({{1, 2}, {0, 1}}));
  auto c = solve_in_rowspace(r, sparse_of<Rational>({Rational(3), Rational(4)}));
  REQUIRE(c.has_value());
  // rref rows are (1,0) and (0,1)
  CHECK((*c)[0] == Rational(3));
  CHECK((*c)[1] == Rational(4));

  auto r1 = rref(qmat({{1, 2}}));
  CHECK(!solve_in_rowspace(r1, sparse_of<Rational>({Rational(0), Rational(1)})).has_value());
  auto c1 = solve_in_rowspace(r1, sparse_of<Rational>({Rational(2), Rational(4)}));
  REQUIRE(c1.has_value());
  CHECK((*c1)[0] == Rational(2));
}

TEST_CASE("matmul transpose identity") {
  auto F = make_rational_ctx();
  auto a = qmat({{1, 2}, {3, 4}});
  auto i2 = identity<Rational>(2, F);
  CHECK(matmul(a, i2) == a);
  CHECK(matmul(i2, a) == a);
  CHECK(transpose(transpose(a)) == a);
}

TEST_CASE("rank nullity and rref idempotence over Q") {
  auto F = make_rational_ctx();
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_mat(rng, F, 8);
    int rk = rank(a);
    auto k = kernel_basis(a, F);
    CHECK(rk + k.rows == a.cols);
    CHECK(is_zero_mat(matmul(a, transpose(k))));
    auto r = rref(a);
    auto rr = rref(r.mat);
    CHECK(rr.mat == r.mat);
    CHECK(rr.pivot_cols == r.pivot_cols);
  }
}

TEST_CASE("rank nullity and rref idempotence over F_p") {
  std::mt19937_64 rng(20240812);
  for (long long p : {2LL, 5LL, 1000003LL}) {
    auto F = make_fp_ctx(p);
    for (int trial = 0; trial < 200; ++trial) {
      auto a = random_mat(rng, F, 8);
      int rk = rank(a);
      auto k = kernel_basis(a, F);
      CHECK(rk + k.rows == a.cols);
      CHECK(is_zero_mat(matmul(a, transpose(k))));
      auto r = rref(a);
      CHECK(rref(r.mat).mat == r.mat);
    }
  }
}

TEST_CASE("clearing denominators preserves the row space") {
  auto F = make_rational_ctx();
  std::mt19937_64 rng(20240813);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_mat(rng, F, 6);
    auto r = rref(a);
    Mat<Rational> b(r.mat.rows, r.mat.cols);
    for (int i = 0; i < r.mat.rows; ++i) {
      mpz_class l(1);
      for (const auto& [j, v] : r.mat.row[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
      for (const auto& [j, v] : r.mat.row[i]) b.set(i, j, v * Rational(l));
    }
    auto rb = rref(b);
    for (int i = 0; i < a.rows; ++i) CHECK(solve_in_rowspace(rb, a.row[i]).has_value());
    for (int i = 0; i < b.rows; ++i) CHECK(solve_in_rowspace(r, b.row[i]).has_value());
  }
}

TEST_CASE("rank over a large prime matches the rank over Q") {
  // 6x6 with entries in [-3,3]: the Hadamard bound stays far below 1000003
  auto FQ = make_rational_ctx();
  auto Fp1 = make_fp_ctx(1000003);
  std::mt19937_64 rng(20240814);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    Mat<Rational> a(6, 6);
    Mat<Fp> b(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        int e = entry(rng);
        if (e == 0) continue;
        a.set(i, j, FQ.from_long(e));
        b.set(i, j, Fp1.from_long(e));
      }
    CHECK(rank(a) == rank(b));
  }
}

TEST_CASE("F_p arithmetic basics") {
  auto F = make_fp_ctx(7);
  CHECK(F.from_long(-3).v == 4);
  CHECK((F.from_long(3) / F.from_long(5)).v == 2);
  CHECK(F.from_mpq(mpq_class(1, 2)).v == 4);
  CHECK_THROWS_AS(F.from_mpq(mpq_class(1, 7)), std::domain_error);
  CHECK(F.parse("10").v == 3);
  CHECK(FieldSpec::prime(7).str() == "F7");
  CHECK(FieldSpec::rationals().str() == "Q");
  CHECK_THROWS_AS(FieldSpec::prime(6), std::invalid_argument);
}
