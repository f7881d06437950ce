#include <doctest.h>

#include "gradedpi/error.hpp"
#include "gradedpi/field.hpp"

using namespace gradedpi;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("field construction") {
  CHECK(make_field(5, 1).q() == 5);
  CHECK(make_field(7, 1).q() == 7);
  const auto F25 = make_field(5, 2);
  CHECK(F25.q() == 25);
  CHECK(F25.nonresidue() == 2);
  CHECK(F25.spec() == "5^2");
  CHECK(code_of([] { make_field(4, 1); }) == ErrorCode::InvalidField);
  CHECK(code_of([] { make_field(3, 1); }) == ErrorCode::InvalidField);
  CHECK(code_of([] { make_field(5, 3); }) == ErrorCode::InvalidField);
}

TEST_CASE("field spec parsing") {
  CHECK(parse_field_spec("5").q() == 5);
  CHECK(parse_field_spec("5^2").q() == 25);
  CHECK(parse_field_spec("25").q() == 25);
  CHECK(parse_field_spec("49").k() == 2);
  CHECK(code_of([] { parse_field_spec("6"); }) == ErrorCode::InvalidField);
  CHECK(code_of([] { parse_field_spec("five"); }) == ErrorCode::InvalidField);
}

TEST_CASE("arithmetic examples") {
  const auto F7 = make_field(7, 1);
  const auto F5 = make_field(5, 1);
  const auto F25 = make_field(5, 2);
  CHECK(F7.mul(F7.from_int(3), F7.from_int(5)) == F7.one());
  CHECK(F5.add(F5.from_int(2), F5.from_int(3)) == F5.zero());
  const auto t = F25.from_coeffs(0, 1);
  CHECK(F25.mul(t, t) == F25.from_int(2));
  CHECK(F7.pow(F7.from_int(2), 3) == F7.one());
  CHECK(F5.pow(F5.from_int(-2), 5) == F5.from_int(3));
  CHECK(F25.pow(t, 25) == t);
  CHECK(F5.pow(F5.zero(), 0) == F5.one());
  CHECK(code_of([&] { F5.inv(F5.zero()); }) == ErrorCode::DivisionByZero);
}

TEST_CASE("Frobenius fixes every element") {
  for (auto F : {make_field(5, 1), make_field(7, 1), make_field(5, 2), make_field(11, 1)})
    for (std::uint32_t i = 0; i < F.q(); ++i) CHECK(F.pow(F.element(i), F.q()) == F.element(i));
}

TEST_CASE("field axioms on GF(25)") {
  const auto F = make_field(5, 2);
  for (std::uint32_t i = 0; i < F.q(); ++i) {
    const auto a = F.element(i);
    CHECK(F.add(a, F.neg(a)) == F.zero());
    if (a != F.zero()) CHECK(F.mul(a, F.inv(a)) == F.one());
    for (std::uint32_t j = 0; j < F.q(); ++j) {
      const auto b = F.element(j);
      CHECK(F.mul(a, b) == F.mul(b, a));
      CHECK(F.mul(a, F.add(b, F.one())) == F.add(F.mul(a, b), a));
    }
  }
}

TEST_CASE("primitive cube roots") {
  const auto F7 = make_field(7, 1);
  CHECK(primitive_cube_root(F7) == F7.from_int(2));
  CHECK(code_of([] { primitive_cube_root(make_field(5, 1)); }) == ErrorCode::NotPresent);
  const auto F25 = make_field(5, 2);
  const auto w = primitive_cube_root(F25);
  CHECK(w != F25.one());
  CHECK(F25.pow(w, 3) == F25.one());
}

TEST_CASE("element printing") {
  const auto F25 = make_field(5, 2);
  CHECK(F25.to_string(F25.from_coeffs(1, 2)) == "1+2t");
  CHECK(F25.to_string(F25.from_coeffs(0, 4)) == "4t");
  CHECK(make_field(7, 1).to_string(make_field(7, 1).from_int(-1)) == "6");
}
