#include <doctest.h>

#include "gradedpi/dsl.hpp"
#include "gradedpi/engine.hpp"
#include "gradedpi/error.hpp"

using namespace gradedpi;

namespace {

const FieldContext F5 = make_field(5, 1);
const GradingProfile Z2 = GradingProfile::z2();

EngineOptions opts(unsigned threads = 1) {
  EngineOptions o;
  o.threads = threads;
  return o;
}

VerifyReport check(const GradedAlgebra& A, std::string_view text, unsigned threads = 1) {
  return verify_identity(*parse_poly(text, Z2, A.field().q()), std::string(text), A, Z2, opts(threads));
}

}  // namespace

TEST_CASE("verify examples") {
  const auto A = builtin("sl2_z2", F5);
  const auto r = check(A, "[y1, y2]");
  CHECK(r.holds);
  CHECK(r.substitutions_checked == 25);
  const auto s = check(A, "Sem1(y1 + z1, y2 + z2)");
  CHECK(s.holds);
  CHECK(s.substitutions_checked == 15625);
  const auto f = check(A, "[z1, z2]");
  CHECK_FALSE(f.holds);
  REQUIRE(f.counterexample);
  CHECK(f.counterexample->at({'z', 1}) == parse_element(A, "e12"));
  CHECK(f.counterexample->at({'z', 2}) == parse_element(A, "e21"));
  CHECK(f.value == parse_element(A, "h"));
}

TEST_CASE("verify is deterministic across thread counts") {
  const auto A = builtin("gl2_z2", F5);
  for (const char* text : {"[z1, z2, y1]", "[y1, z1] - [z1, y1^5]", "[z1, z2, z3]"}) {
    const auto one = check(A, text, 1);
    const auto four = check(A, text, 4);
    CHECK(one.holds == four.holds);
    CHECK(one.counterexample == four.counterexample);
    CHECK(one.value == four.value);
  }
}

TEST_CASE("verify respects the budget") {
  const auto A = builtin("sl2_z2", F5);
  EngineOptions o;
  o.budget = 100;
  try {
    verify_identity(*parse_poly("[z1, z2, y1]", Z2, 5), "x", A, Z2, o);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
  CHECK(substitution_count({{'z', 1}, {'z', 2}, {'y', 1}}, A, Z2) == 3125);
}

TEST_CASE("kernel examples") {
  const auto A = builtin("sl2_z2", F5);
  const auto k = identity_kernel(A, Z2, Multidegree::parse("y1,y2"));
  CHECK(k.ambient_dim == 1);
  CHECK(k.dim() == 1);
  CHECK(format_liepoly(F5, k.element(0)) == "[y1, y2]");
  CHECK(identity_kernel(A, Z2, Multidegree::parse("z1,y1")).dim() == 0);
  const auto b2 = builtin("b2_z2", F5);
  CHECK(identity_kernel(b2, Z2, Multidegree::parse("z1,z2")).dim() == 1);
}

TEST_CASE("kernel of a cell with an empty component is everything") {
  const auto A = builtin("sl2_z2z2", F5);
  const auto profile = GradingProfile::z2z2();
  for (const char* cell : {"w1", "w1,y1", "w1,x1,z1", "w1:2,y1"}) {
    const auto k = identity_kernel(A, profile, Multidegree::parse(cell));
    CHECK(k.dim() == k.ambient_dim);
  }
}

TEST_CASE("kernel is thread independent") {
  const auto A = builtin("sl2_z2", F5);
  const auto d = Multidegree::parse("y1,z1,z2,z3");
  const auto a = identity_kernel(A, Z2, d, opts(1));
  const auto b = identity_kernel(A, Z2, d, opts(3));
  CHECK(a.basis == b.basis);
}

TEST_CASE("consequence examples") {
  const auto S = parse_basis("profile Z2\nident g: [y1, y2]\n", 5);
  CHECK(consequence_span(S, F5, Multidegree::parse("y1,y2")).span.dim() == 1);
  const auto frob = parse_basis("profile Z2\nident g: [z1, y1^q] - [z1, y1]\n", 5);
  const auto r = consequence_span(frob, F5, Multidegree::parse("z1,y1"));
  CHECK(r.span.dim() == 0);
  CHECK(r.span.ambient_dim == 1);
}

TEST_CASE("consequences sit inside the kernel") {
  const auto A = builtin("sl2_z2", F5);
  const auto S = load_basis("beta_z2.lie", 5);
  for (const char* cell : {"y1,y2", "y1,y2,z1", "z1,z2,y1", "z1,z2,z3", "z1,y1", "y1,y2,y3", "z1:2,y1"}) {
    CAPTURE(cell);
    const auto d = Multidegree::parse(cell);
    const auto c = consequence_span(S, F5, d).span;
    const auto k = identity_kernel(A, Z2, d);
    const auto rel = compare_spans(F5, c, k);
    CHECK((rel == SpanRelation::Equal || rel == SpanRelation::ASubsetB));
  }
}

TEST_CASE("larger limits never shrink the span") {
  const auto S = load_basis("beta_z2.lie", 5);
  const auto d = Multidegree::parse("y1,y2,z1");
  std::size_t last = 0;
  std::vector<Vec> prev;
  for (ConsequenceLimits l : {ConsequenceLimits{1, 0, 0}, ConsequenceLimits{1, 1, 0}, ConsequenceLimits{2, 1, 0},
                              ConsequenceLimits{2, 2, 0}, ConsequenceLimits{2, 2, 1}}) {
    const auto r = consequence_span(S, F5, d, l);
    CHECK(r.span.dim() >= last);
    CellSpan earlier{d, r.span.ambient_dim, prev};
    const auto rel = compare_spans(F5, earlier, r.span);
    CHECK((rel == SpanRelation::Equal || rel == SpanRelation::ASubsetB));
    last = r.span.dim();
    prev = r.span.basis;
  }
}

TEST_CASE("consequences are thread independent") {
  const auto S = load_basis("beta_z2.lie", 5);
  const auto d = Multidegree::parse("z1,z2,y1");
  const auto a = consequence_span(S, F5, d, {}, opts(1));
  const auto b = consequence_span(S, F5, d, {}, opts(4));
  CHECK(a.span.basis == b.span.basis);
  CHECK(a.instances == b.instances);
  CHECK(a.skipped == b.skipped);
}

TEST_CASE("generators above the cap are skipped") {
  const auto S = load_basis("beta_z2.lie", 5);
  const auto r = consequence_span(S, F5, Multidegree::parse("y1,y2"));
  CHECK(r.skipped == std::vector<std::string>{"sem1", "sem2"});
}

TEST_CASE("span comparison") {
  const auto d = Multidegree::parse("y1,y2");
  const CellSpan zero{d, 1, {}};
  const CellSpan one{d, 1, {Vec{F5.one()}}};
  CHECK(compare_spans(F5, zero, one) == SpanRelation::ASubsetB);
  CHECK(compare_spans(F5, one, zero) == SpanRelation::BSubsetA);
  CHECK(compare_spans(F5, one, one) == SpanRelation::Equal);
  const auto e = Multidegree::parse("z1,z2,z3");
  const CellSpan first{e, 2, {Vec{F5.one(), F5.zero()}}};
  const CellSpan second{e, 2, {Vec{F5.zero(), F5.one()}}};
  CHECK(compare_spans(F5, first, second) == SpanRelation::Incomparable);
  CHECK(to_string(SpanRelation::ASubsetB) == "a_subset_b");
  try {
    compare_spans(F5, zero, first);
    FAIL("expected CellMismatch");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::CellMismatch);
  }
}

TEST_CASE("algebra kernels") {
  const auto sl2 = builtin("sl2_z2", F5);
  const auto b2 = builtin("b2_z2", F5);
  const auto cmp = compare_algebra_kernels(sl2, b2, Z2, {Multidegree::parse("z1,z2")});
  REQUIRE(cmp.size() == 1);
  CHECK(cmp[0].dim_a == 0);
  CHECK(cmp[0].dim_b == 1);
  CHECK(cmp[0].relation == SpanRelation::ASubsetB);
  for (const auto& c : compare_algebra_kernels(sl2, sl2, Z2, multilinear_cells(Z2, 3)))
    CHECK(c.relation == SpanRelation::Equal);
  CHECK_THROWS_AS(compare_algebra_kernels(sl2, builtin("sl2_z2", make_field(7, 1)), Z2, {}), Error);
}

TEST_CASE("multilinear cells") {
  const auto cells = multilinear_cells(Z2, 3);
  std::vector<std::string> names;
  for (const auto& c : cells) names.push_back(c.to_string());
  CHECK(names == std::vector<std::string>{"y1:1", "z1:1", "y1:1,y2:1", "y1:1,z1:1", "z1:1,z2:1", "y1:1,y2:1,y3:1",
                                          "y1:1,y2:1,z1:1", "y1:1,z1:1,z2:1", "z1:1,z2:1,z3:1"});
}
