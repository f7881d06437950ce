#include <doctest.h>

#include "gradedpi/error.hpp"
#include "gradedpi/io.hpp"

using namespace gradedpi;
using nlohmann::json;

namespace {

const FieldContext F5 = make_field(5, 1);

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

json sl2_file() {
  return json::parse(R"({
    "name": "sl2_file", "field": "5", "group": [2],
    "basis": ["h", "e12", "e21"], "grades": [[0], [1], [1]],
    "matrices": [[[1, 0], [0, -1]], [[0, 1], [0, 0]], [[0, 0], [1, 0]]]
  })");
}

}  // namespace

TEST_CASE("matrix files reproduce the built-in") {
  const auto A = algebra_from_json(sl2_file());
  const auto B = builtin("sl2_z2", F5);
  CHECK(A.structure() == B.structure());
  CHECK(A.grades() == B.grades());
  CHECK(algebra_from_json(sl2_file(), make_field(7, 1)).field().q() == 7);
}

TEST_CASE("structure files") {
  const auto H = load_algebra_file(resolve_data_file("heisenberg_structure.json"));
  CHECK(H.structure() == heisenberg_algebra(F5).structure());
  const auto back = algebra_from_json(algebra_to_json(builtin("gl2_z2", F5)));
  CHECK(back.structure() == builtin("gl2_z2", F5).structure());
  CHECK(back.grades() == builtin("gl2_z2", F5).grades());
  CHECK(resolve_algebra("b2_z2.json", std::nullopt).structure() == builtin("b2_z2", F5).structure());
}

TEST_CASE("bad files") {
  auto j = sl2_file();
  j["matrices"] = json::parse("[[[0, 1], [0, 0]], [[0, 0], [1, 0]]]");
  j["basis"] = json::parse(R"(["e12", "e21"])");
  j["grades"] = json::parse("[[1], [1]]");
  CHECK(code_of([&] { algebra_from_json(j); }) == ErrorCode::NotClosed);

  auto s = json::parse(R"({"field": "5", "group": [], "basis": ["a", "b"], "grades": [[], []],
                          "structure": [[0, 1, 1, 1], [1, 0, 1, 1]]})");
  CHECK(code_of([&] { algebra_from_json(s); }) == ErrorCode::AntisymmetryViolation);
  auto jac = json::parse(R"({"field": "5", "group": [], "basis": ["a", "b", "c"], "grades": [[], [], []],
                            "structure": [[0, 1, 0, 1], [0, 2, 1, 1]]})");
  CHECK(code_of([&] { algebra_from_json(jac); }) == ErrorCode::JacobiViolation);
  CHECK(code_of([] { resolve_algebra("no_such_algebra", std::nullopt); }) == ErrorCode::UnknownName);
}

TEST_CASE("algebra names") {
  CHECK(resolve_algebra("heisenberg", std::nullopt).dim() == 3);
  CHECK(resolve_algebra("abelian4", F5).dim() == 4);
  CHECK(resolve_algebra("sl2_z3", std::nullopt).field().q() == 7);
}

TEST_CASE("report json") {
  const auto d = Multidegree::parse("y1,y2");
  const CellSpan s{d, 1, {Vec{F5.one()}}};
  const auto j = span_json("kernel", "sl2_z2", F5, s, "ok");
  CHECK(j["op"] == "kernel");
  CHECK(j["ambient_dim"] == 1);
  CHECK(j["dim"] == 1);
  CHECK(j["basis"] == json::array({"[y1, y2]"}));
  CHECK(j["verdict"] == "ok");
  CHECK(j.contains("cell"));
  const auto A = builtin("sl2_z2", F5);
  CHECK(format_subspace(A, Subspace::zero(3)) == "{0}");
  CHECK(format_subspace(A, Subspace(F5, 3, {parse_element(A, "e12")})) == "span{e12}");
}
