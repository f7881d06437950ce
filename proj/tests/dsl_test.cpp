#include <doctest.h>

#include <fstream>
#include <sstream>

#include "gradedpi/dsl.hpp"
#include "gradedpi/error.hpp"

using namespace gradedpi;

namespace {

const GradingProfile Z2 = GradingProfile::z2();

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

std::string parse_error(std::string_view text) {
  try {
    parse_poly(text, Z2, 5);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("exponents with q") {
  const auto e = parse_poly("[z1, y1^q] - [z1, y1]", Z2, 5);
  CHECK(max_degree(*e) == 6);
  REQUIRE(e->kind() == ExprKind::Sum);
  CHECK(max_degree(*e->terms()[1].expr) == 2);
  const auto s = parse_poly("[y1, y2^(q^2+2)] - [y1, y2^3]", Z2, 5);
  CHECK(to_string(*s) == "[y1, y2^27] - [y1, y2^3]");
  CHECK(to_string(*parse_poly("[y1, y2^(2*q-1)]", Z2, 7)) == "[y1, y2^13]");
}

TEST_CASE("identities with a right-hand side") {
  const auto e = parse_poly("[z1, y1^q] = [z1, y1]", Z2, 5);
  CHECK(same_tree(*e, *parse_poly("[z1, y1^q] - [z1, y1]", Z2, 5)));
}

TEST_CASE("parse errors") {
  CHECK(parse_error("[y1, y2") == "ParseError: at end of input: expected ']'");
  CHECK(parse_error("[y1 y2]").rfind("ParseError: at position 5", 0) == 0);
  CHECK(parse_error("y1^2").rfind("ParseError", 0) == 0);
  CHECK(parse_error("[y1, (y2^2)^2]").rfind("ParseError", 0) == 0);
  CHECK(parse_error("[y1^2, y2^2]").rfind("ParseError", 0) == 0);
  CHECK(code_of([] { parse_poly("[v1, y1]", Z2, 5); }) == ErrorCode::UnknownFamily);
  CHECK(code_of([] { parse_poly("[x1, y1]", Z2, 5); }) == ErrorCode::UnknownFamily);
  CHECK(code_of([] { parse_poly("[z1, y1^0]", Z2, 5); }) == ErrorCode::NonPositiveExponent);
  CHECK(code_of([] { parse_poly("[z1, y1^(q-5)]", Z2, 5); }) == ErrorCode::NonPositiveExponent);
}

TEST_CASE("Semenov macros") {
  const auto u = Expr::var({'y', 1}), v = Expr::var({'y', 2});
  const auto s1 = expand_macro(Macro::Sem1, u, v, 5);
  REQUIRE(s1->terms().size() == 2);
  CHECK(max_degree(*s1) == 28);
  const auto s2 = expand_macro(Macro::Sem2, u, v, 5);
  REQUIRE(s2->terms().size() == 6);
  const auto& fifth = *s2->terms()[4].expr;
  REQUIRE(fifth.kind() == ExprKind::Bracket);
  const auto& slot = *fifth.slots()[3];
  CHECK(slot.kind() == ExprKind::Power);
  CHECK(slot.exponent() == 3);
  CHECK(to_string(*slot.base()) == "[y1, y2]");
  CHECK(same_tree(*parse_poly("Sem1(y1, y2)", Z2, 5), *s1));
}

TEST_CASE("Semenov expansions match the golden text") {
  const auto u = parse_poly("y1 + z1", Z2, 5), v = parse_poly("y2 + z2", Z2, 5);
  std::ostringstream out;
  out << "Sem1 " << to_string(*expand_macro(Macro::Sem1, u, v, 5)) << "\n";
  out << "Sem2 " << to_string(*expand_macro(Macro::Sem2, u, v, 5)) << "\n";
  CHECK(out.str() == read(GOLDEN_DIR "/sem_q5.txt"));
}

TEST_CASE("shipped basis files") {
  const auto b = load_basis("beta_z2.lie", 5);
  CHECK(b.profile.name() == "Z2");
  CHECK(b.identities.size() == 4);
  const auto b2 = load_basis("beta2_z3.lie", 7);
  CHECK(b2.identities.size() == 7);
  const auto b3 = load_basis("beta3_z2z2.lie", 5);
  REQUIRE(b3.identities.size() == 6);
  CHECK(to_string(*b3.identities[0].expr) == "w1");
  CHECK(code_of([&] { b.find("nope"); }) == ErrorCode::UnknownName);
}

TEST_CASE("printing round-trips every shipped identity") {
  for (const char* file : {"beta_z2.lie", "beta2_z3.lie", "beta3_z2z2.lie", "m_z3.lie", "b2_z2.lie"})
    for (std::uint64_t q : {5u, 7u, 25u}) {
      const auto b = load_basis(file, q);
      for (const auto& id : b.identities) {
        CAPTURE(id.name);
        const auto again = parse_poly(to_string(*id.expr), b.profile, q);
        CHECK(same_tree(*again, *id.expr));
        CHECK(to_string(*again) == to_string(*id.expr));
      }
    }
}

TEST_CASE("basis file syntax") {
  const auto b = parse_basis("# comment\nprofile Z2\n\nident a: [y1, y2]  # trailing\nident b: [z1, y1^q] = [z1, y1]\n", 5);
  CHECK(b.identities.size() == 2);
  CHECK(b.find("b").name == "b");
  CHECK(code_of([] { parse_basis("profile Z5\n", 5); }) == ErrorCode::ProfileMismatch);
  CHECK(code_of([] { parse_basis("profile Z2\nident a: [y1, y2]\nident a: [z1, z2]\n", 5); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { parse_basis("profile Z2\nident a: [v1, y2]\n", 5); }) == ErrorCode::UnknownFamily);
  try {
    parse_basis("profile Z2\nident a: [y1, y2\n", 5);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}
