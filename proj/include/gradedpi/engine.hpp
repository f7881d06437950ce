#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gradedpi/algebra.hpp"
#include "gradedpi/dsl.hpp"
#include "gradedpi/expr.hpp"
#include "gradedpi/freelie.hpp"
#include "gradedpi/profile.hpp"

namespace gradedpi {

struct EngineOptions {
  unsigned threads = 1;
  // Cap on substitution tuples and generated instances; GRADEDPI_BUDGET
  // overrides the default.
  std::uint64_t budget = 10'000'000;
  int cap = kDefaultDegreeCap;

  static EngineOptions defaults();
};

struct VerifyReport {
  std::string identity;
  std::string algebra;
  bool holds = true;
  std::uint64_t substitutions_checked = 0;
  std::optional<Assignment> counterexample;
  Vec value;
};

// Substitutes every tuple of component elements, in a fixed order, and
// stops at the first nonzero value.  Throws BudgetExceeded when the tuple
// count passes options.budget.
VerifyReport verify_identity(const Expr& f, const std::string& name, const GradedAlgebra& A,
                             const GradingProfile& profile, const EngineOptions& options = EngineOptions::defaults());
VerifyReport verify_identity(const LiePoly& f, const std::string& name, const GradedAlgebra& A,
                             const GradingProfile& profile, const EngineOptions& options = EngineOptions::defaults());
// Number of tuples verify_identity runs through for these variables.
std::uint64_t substitution_count(const std::vector<GradedVar>& vars, const GradedAlgebra& A,
                                 const GradingProfile& profile);

// Subspace of one cell in Lyndon coordinates, as reduced echelon rows.
struct CellSpan {
  Multidegree cell;
  std::size_t ambient_dim = 0;
  std::vector<Vec> basis;

  std::size_t dim() const noexcept { return basis.size(); }
  LiePoly element(std::size_t i) const;
};

// Lyndon polynomials of cell d vanishing on A.  Variables of exponent 1 run
// over component basis vectors, the others over whole components.  Each
// basis polynomial is then checked again with verify_identity.
CellSpan identity_kernel(const GradedAlgebra& A, const GradingProfile& profile, const Multidegree& d,
                         const EngineOptions& options = EngineOptions::defaults());

struct ConsequenceLimits {
  int summands = 2;  // s
  int outer = 2;     // r
  int margin = 0;
};

struct ConsequenceReport {
  CellSpan span;
  std::uint64_t instances = 0;
  std::size_t ambient_columns = 0;
  bool projection_used = false;
  // Generators whose degree exceeds the cap; they contribute nothing.
  std::vector<std::string> skipped;
  std::vector<std::string> warnings;
};

// A verified lower bound for the consequences of S inside cell d: the span
// of instances [f(u1, ..., uk), m1, ..., mj] (j <= outer) whose cells all
// lie under d + margin, intersected with cell d.
ConsequenceReport consequence_span(const BasisFile& S, const FieldContext& F, const Multidegree& d,
                                   const ConsequenceLimits& limits = {},
                                   const EngineOptions& options = EngineOptions::defaults());

enum class SpanRelation { Equal, ASubsetB, BSubsetA, Incomparable };
std::string to_string(SpanRelation r);

// Throws CellMismatch for spans of different cells.
SpanRelation compare_spans(const FieldContext& F, const CellSpan& a, const CellSpan& b);

struct KernelComparison {
  Multidegree cell;
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  SpanRelation relation = SpanRelation::Equal;
};

// Both algebras must share field and grade group.
std::vector<KernelComparison> compare_algebra_kernels(const GradedAlgebra& A, const GradedAlgebra& B,
                                                      const GradingProfile& profile,
                                                      const std::vector<Multidegree>& cells,
                                                      const EngineOptions& options = EngineOptions::defaults());

// Multilinear cells of total degree 1..max_total over the profile's
// families, one per family-count pattern (y1,y2,z1 but not y1,y3,z1).
std::vector<Multidegree> multilinear_cells(const GradingProfile& profile, int max_total);

}  // namespace gradedpi
