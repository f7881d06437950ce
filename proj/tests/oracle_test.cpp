#include <doctest.h>

#include "gradedpi/dsl.hpp"
#include "gradedpi/engine.hpp"
#include "oracle.hpp"

using namespace gradedpi;

namespace {

const FieldContext F5 = make_field(5, 1);

Multidegree cell_of(const oracle::Letters& letters) {
  std::string text;
  for (const auto& l : letters) text += (text.empty() ? "" : ",") + l;
  return Multidegree::parse(text);
}

struct Pinned {
  oracle::Letters letters;
  std::size_t kernel;
  std::size_t consequences;
};

// Dimensions from the brute-force oracle for beta_z2 on sl2 over GF(5).
const std::vector<Pinned> kPinned = {
    {{"y1", "y2"}, 1, 1},
    {{"y1", "y2", "z1"}, 1, 1},
    {{"z1", "z2", "y1"}, 1, 1},
    {{"z1", "z2", "z3"}, 0, 0},
    {{"y1", "z1"}, 0, 0},
    {{"y1", "y2", "y3"}, 2, 2},
};

}  // namespace

TEST_CASE("oracle dimensions are the frozen values") {
  for (const auto& p : kPinned) {
    CAPTURE(cell_of(p.letters).to_string());
    CHECK(oracle::multilinear_kernel_dim(oracle::sl2_z2(5), p.letters) == p.kernel);
    CHECK(oracle::beta_z2_consequence_dim(p.letters, 5) == p.consequences);
  }
}

TEST_CASE("engine kernels and consequences match the frozen values") {
  const auto A = builtin("sl2_z2", F5);
  const auto S = load_basis("beta_z2.lie", 5);
  for (const auto& p : kPinned) {
    const auto d = cell_of(p.letters);
    CAPTURE(d.to_string());
    CHECK(identity_kernel(A, GradingProfile::z2(), d).dim() == p.kernel);
    CHECK(consequence_span(S, F5, d).span.dim() == p.consequences);
  }
}

TEST_CASE("engine kernels match the matrix oracle across the fleet") {
  struct Case {
    const char* name;
    oracle::MatrixAlgebra (*make)(long long);
    GradingProfile profile;
    long long p;
    std::vector<oracle::Letters> cells;
  };
  const std::vector<Case> cases = {
      {"gl2_z2", oracle::gl2_z2, GradingProfile::z2(), 5,
       {{"y1", "y2"}, {"y1", "z1"}, {"z1", "z2"}, {"y1", "y2", "z1"}, {"y1", "z1", "z2"}, {"z1", "z2", "z3"}}},
      {"b2_z2", oracle::b2_z2, GradingProfile::z2(), 5, {{"z1", "z2"}, {"y1", "z1"}, {"y1", "z1", "z2"}}},
      {"sl2_z3", oracle::sl2_z3, GradingProfile::z3(), 7,
       {{"x1", "x2"}, {"x1", "z1"}, {"x1", "y1", "z1"}, {"x1", "x2", "z1"}, {"y1", "z1", "z2"}}},
      {"sl2_z2z2", oracle::sl2_z2z2, GradingProfile::z2z2(), 5,
       {{"x1", "y1"}, {"x1", "x2"}, {"x1", "y1", "z1"}, {"w1", "x1"}}},
  };
  for (const auto& c : cases) {
    const auto A = builtin(c.name, make_field(static_cast<std::uint32_t>(c.p), 1));
    const auto M = c.make(c.p);
    for (const auto& letters : c.cells) {
      const auto d = cell_of(letters);
      CAPTURE(c.name);
      CAPTURE(d.to_string());
      CHECK(identity_kernel(A, c.profile, d).dim() == oracle::multilinear_kernel_dim(M, letters));
    }
  }
}

TEST_CASE("oracle kernels of gl2 and sl2 coincide") {
  for (const oracle::Letters& letters : std::vector<oracle::Letters>{
           {"y1", "y2"}, {"y1", "z1"}, {"z1", "z2"}, {"y1", "y2", "z1"}, {"y1", "z1", "z2"}, {"z1", "z2", "z3"}})
    CHECK(oracle::same_span(oracle::multilinear_kernel(oracle::gl2_z2(5), letters),
                            oracle::multilinear_kernel(oracle::sl2_z2(5), letters), 5));
}
