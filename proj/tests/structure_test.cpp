#include <doctest.h>

#include <random>

#include "gradedpi/error.hpp"
#include "gradedpi/structure.hpp"

using namespace gradedpi;

namespace {

const FieldContext F5 = make_field(5, 1);

Subspace span_of(const GradedAlgebra& A, std::initializer_list<const char*> elements) {
  std::vector<Vec> vs;
  for (const char* e : elements) vs.push_back(parse_element(A, e));
  return Subspace(A.field(), A.dim(), vs);
}

// Row vector times matrix.
Vec times(const FieldContext& F, const Vec& r, const Matrix& P) {
  Vec out = zero_vec(P.cols());
  for (std::size_t i = 0; i < r.size(); ++i) axpy(F, out, r[i], P.row(i));
  return out;
}

}  // namespace

TEST_CASE("center and series") {
  const auto sl2 = builtin("sl2_z2", F5);
  CHECK(center(sl2).dim() == 0);
  const auto F7 = make_field(7, 1);
  const auto m1 = forget_grading(builtin("m1_z3", F7));
  const auto series = derived_series(m1);
  REQUIRE(series.size() == 3);
  CHECK(series[0] == whole(m1));
  CHECK(series[1] == span_of(m1, {"e12"}));
  CHECK(series[2].dim() == 0);
  const auto line = abelian_algebra(F5, 1);
  const auto lc = lower_central(line);
  REQUIRE(lc.size() == 2);
  CHECK(lc[0].dim() == 1);
  CHECK(lc[1].dim() == 0);
  CHECK(center(builtin("gl2_z2", F5)) == span_of(builtin("gl2_z2", F5), {"e11 + e22"}));
}

TEST_CASE("ideal enumeration") {
  const auto sl2 = builtin("sl2_z2", F5);
  const auto ideals = enumerate_ideals(sl2, 3, Flavor::Ungraded);
  REQUIRE(ideals.size() == 2);
  CHECK(ideals[0].dim() == 0);
  CHECK(ideals[1] == whole(sl2));

  const auto m1 = builtin("m1_z", F5);
  const auto m1_ideals = enumerate_ideals(m1, 2, Flavor::Ungraded);
  REQUIRE(m1_ideals.size() == 3);
  CHECK(m1_ideals[1] == span_of(m1, {"e12"}));

  CHECK(enumerate_ideals(abelian_algebra(F5, 2), 2, Flavor::Ungraded).size() == 8);
  CHECK(subspace_count(abelian_algebra(F5, 2), 2, Flavor::Ungraded) == 8);
}

TEST_CASE("budget is enforced") {
  Budget tiny{3};
  CHECK_THROWS_AS(enumerate_ideals(abelian_algebra(F5, 2), 2, Flavor::Ungraded, tiny), Error);
  try {
    enumerate_ideals(abelian_algebra(F5, 2), 2, Flavor::Ungraded, tiny);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}

TEST_CASE("nilradical, radical and monolith") {
  const auto m1 = builtin("m1_z", F5);
  CHECK(nilradical(m1, Flavor::Ungraded) == span_of(m1, {"e12"}));
  CHECK(nilradical(m1, Flavor::Ungraded) == derived_algebra(m1));
  CHECK(radical(m1, Flavor::Ungraded) == whole(m1));
  const auto sl2 = builtin("sl2_z2", F5);
  CHECK(require_monolith(sl2, Flavor::Graded) == whole(sl2));
  CHECK(radical(sl2, Flavor::Ungraded).dim() == 0);
  const auto ab = monolith(abelian_algebra(F5, 2), Flavor::Ungraded);
  CHECK_FALSE(ab.monolithic());
  CHECK(ab.minimal_ideals.size() == 6);
  try {
    require_monolith(abelian_algebra(F5, 2), Flavor::Ungraded);
    FAIL("expected NotMonolithic");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotMonolithic);
  }
}

TEST_CASE("graded and ungraded flavors differ on sl2 over Z2xZ2") {
  // Graded ideals of a graded-simple algebra; the grading is by the Klein group.
  const auto A = builtin("sl2_z2z2", F5);
  CHECK(enumerate_ideals(A, 3, Flavor::Graded).size() == 2);
  const auto n = builtin("n_z2z2", F5);
  CHECK(minimal_ideals(n, Flavor::Graded).size() == 3);
  CHECK(minimal_ideals(n, Flavor::Ungraded).size() == 31);
}

TEST_CASE("A-algebras") {
  CHECK(is_A_algebra(builtin("sl2_z2", F5)).holds);
  const auto heis = heisenberg_algebra(F5);
  const auto r = is_A_algebra(heis);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(*r.witness == whole(heis));
  CHECK(is_A_algebra(abelian_algebra(F5, 3)).holds);
}

TEST_CASE("Sheina criterion") {
  CHECK(sheina_criterion(builtin("m1_z", F5), Flavor::Ungraded).criterion());
  CHECK(sheina_criterion(builtin("sl2_z2", F5), Flavor::Ungraded).criterion());
  const auto pair = direct_product("m1xm1", builtin("m1_z", F5), builtin("m1_z", F5));
  const auto r = sheina_criterion(pair, Flavor::Ungraded);
  CHECK_FALSE(r.criterion());
  CHECK(r.derived_dim == 2);
  REQUIRE(r.decomposition);
  CHECK(r.decomposition->first.dim() == 1);
  CHECK(r.decomposition->second.dim() == 1);
}

TEST_CASE("spectrum") {
  const auto A = builtin("sl2_z2", F5);
  const auto s = spectrum(A, parse_element(A, "h"));
  CHECK(format_poly(F5, s.min_poly) == "t^3 + t");
  REQUIRE(s.eigenvalues.size() == 3);
  CHECK(s.eigenvalues[0] == F5.from_int(0));
  CHECK(s.eigenvalues[1] == F5.from_int(2));
  CHECK(s.eigenvalues[2] == F5.from_int(3));
  CHECK(s.eigenspaces[0] == span_of(A, {"h"}));
  CHECK(s.eigenspaces[1] == span_of(A, {"e21"}));
  CHECK(s.eigenspaces[2] == span_of(A, {"e12"}));
  CHECK(s.diagonalizable);
  CHECK(s.homogeneous_eigenbasis);

  const auto z = spectrum(A, zero_vec(3));
  CHECK(format_poly(F5, z.min_poly) == "t");
  CHECK(z.eigenvalues == std::vector<FieldElement>{F5.zero()});

  // ad e12 is nilpotent and not diagonalizable.
  const auto n = spectrum(A, parse_element(A, "e12"));
  CHECK(format_poly(F5, n.min_poly) == "t^3");
  CHECK_FALSE(n.diagonalizable);
}

TEST_CASE("min poly of every element divides t^q - t on the even part") {
  const auto A = builtin("sl2_z2", F5);
  UPoly frob(6, F5.zero());
  frob[1] = F5.from_int(-1);
  frob[5] = F5.one();
  for (std::uint32_t c = 0; c < 5; ++c) {
    const auto s = spectrum(A, scaled(F5, F5.element(c), parse_element(A, "h")));
    CHECK(poly_divides(F5, s.min_poly, frob));
    CHECK(s.homogeneous_eigenbasis);
  }
}

TEST_CASE("Premet predicates") {
  const auto sl2 = check_premet_predicates(builtin("sl2_z2", F5));
  CHECK(sl2.derived_meets_center_trivially);
  CHECK(sl2.semisimple);
  REQUIRE(sl2.graded_simple_decomposition);
  CHECK(*sl2.graded_simple_decomposition);
  const auto m1 = check_premet_predicates(builtin("m1_z", F5));
  CHECK(m1.derived_meets_center_trivially);
  CHECK_FALSE(m1.semisimple);
  CHECK_FALSE(m1.graded_simple_decomposition);
  CHECK(check_premet_predicates(abelian_algebra(F5, 1)).derived_meets_center_trivially);
  CHECK_FALSE(check_premet_predicates(heisenberg_algebra(F5)).derived_meets_center_trivially);
}

TEST_CASE("radical, nilradical and monolith survive a change of basis") {
  std::mt19937_64 rng(20240611);
  for (const char* name : {"sl2_z2", "m1_z", "gl2_z2", "b2_z2"}) {
    const auto A = builtin(name, F5);
    const auto n = A.dim();
    Matrix P;
    for (;;) {
      P = Matrix(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) P(i, j) = F5.element(static_cast<std::uint32_t>(rng() % 5));
      if (inverse(F5, P)) break;
    }
    const auto B = change_basis(A, P);
    auto back = [&](const Subspace& S) {
      std::vector<Vec> rows;
      for (const auto& r : S.basis()) rows.push_back(times(F5, r, P));
      return Subspace(F5, n, rows);
    };
    CAPTURE(name);
    CHECK(back(nilradical(B, Flavor::Ungraded)) == nilradical(A, Flavor::Ungraded));
    CHECK(back(radical(B, Flavor::Ungraded)) == radical(A, Flavor::Ungraded));
    const auto ma = monolith(A, Flavor::Ungraded);
    const auto mb = monolith(B, Flavor::Ungraded);
    CHECK(ma.monolithic() == mb.monolithic());
    if (ma.monolithic() && mb.monolithic()) CHECK(back(*mb.monolith) == *ma.monolith);
  }
}

TEST_CASE("restriction to a graded subalgebra") {
  const auto A = builtin("gl2_z2", F5);
  const auto S = span_of(A, {"e11", "e12"});
  CHECK(is_subalgebra(A, S));
  CHECK(is_graded(A, S));
  const auto R = restrict_to(A, S, "b2");
  CHECK(R.dim() == 2);
  CHECK(is_solvable(A, S));
  CHECK_FALSE(is_nilpotent(A, S));
  CHECK(is_ideal(A, center(A)));
}
