#include <doctest.h>

#include "gradedpi/linalg.hpp"

using namespace gradedpi;

namespace {

Vec vec(const FieldContext& F, std::initializer_list<int> xs) {
  Vec v;
  for (int x : xs) v.push_back(F.from_int(x));
  return v;
}

}  // namespace

TEST_CASE("echelon accumulator") {
  const auto F = make_field(5, 1);
  EchelonAccumulator acc(F, 3);
  CHECK(acc.insert(vec(F, {1, 2, 3})));
  CHECK(acc.insert(vec(F, {0, 1, 1})));
  CHECK_FALSE(acc.insert(vec(F, {1, 3, 4})));  // sum of the two
  CHECK(acc.rank() == 2);
  CHECK(acc.contains(vec(F, {1, 0, 1})));
  CHECK_FALSE(acc.contains(vec(F, {0, 0, 1})));
  CHECK(acc.pivots() == std::vector<std::size_t>{0, 1});
  CHECK(acc.reduced_rows() == std::vector<Vec>{vec(F, {1, 0, 1}), vec(F, {0, 1, 1})});
  const auto ns = acc.null_space();
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == vec(F, {1, 1, 4}));
}

TEST_CASE("merge is order independent") {
  const auto F = make_field(7, 1);
  EchelonAccumulator a(F, 4), b(F, 4);
  a.insert(vec(F, {1, 1, 0, 0}));
  a.insert(vec(F, {0, 3, 1, 0}));
  b.insert(vec(F, {0, 0, 2, 5}));
  b.insert(vec(F, {1, 4, 1, 0}));
  EchelonAccumulator ab = a, ba = b;
  ab.merge(b);
  ba.merge(a);
  CHECK(ab.reduced_rows() == ba.reduced_rows());
}

TEST_CASE("subspaces") {
  const auto F = make_field(5, 1);
  Subspace U(F, 3, {vec(F, {1, 0, 0}), vec(F, {0, 1, 0})});
  Subspace V(F, 3, {vec(F, {0, 1, 0}), vec(F, {0, 0, 1})});
  CHECK(intersect(F, U, V) == Subspace(F, 3, {vec(F, {0, 2, 0})}));
  CHECK(sum(F, U, V) == Subspace::full(F, 3));
  CHECK(annihilator(F, U) == Subspace(F, 3, {vec(F, {0, 0, 3})}));
  CHECK(U.contains(F, vec(F, {4, 4, 0})));
  CHECK_FALSE(U.contains(F, V));
  CHECK(Subspace::zero(3).dim() == 0);
}

TEST_CASE("matrices") {
  const auto F = make_field(5, 1);
  Matrix m(2, 2);
  m(0, 0) = F.from_int(1);
  m(0, 1) = F.from_int(2);
  m(1, 1) = F.from_int(3);
  const auto inv = inverse(F, m);
  REQUIRE(inv);
  CHECK(multiply(F, m, *inv) == Matrix::identity(F, 2));
  CHECK(power(F, m, 4)(1, 1) == F.one());
  Matrix singular(2, 2);
  singular(0, 0) = F.one();
  CHECK_FALSE(inverse(F, singular));
}

TEST_CASE("univariate polynomials") {
  const auto F = make_field(5, 1);
  UPoly t3t{F.zero(), F.one(), F.zero(), F.one()};  // t^3 + t
  UPoly t5t(6, F.zero());
  t5t[1] = F.from_int(-1);
  t5t[5] = F.one();
  CHECK(poly_divides(F, t3t, t5t));
  CHECK(format_poly(F, t3t) == "t^3 + t");
  CHECK(evaluate(F, t3t, F.from_int(2)) == F.zero());
  const auto sol = solve_in_span(F, {vec(F, {1, 0}), vec(F, {1, 1})}, vec(F, {3, 2}));
  REQUIRE(sol);
  CHECK(*sol == vec(F, {1, 2}));
}
