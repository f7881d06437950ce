#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gradedpi/algebra.hpp"
#include "gradedpi/linalg.hpp"

namespace gradedpi {

// Whether an analysis considers only graded subspaces (direct sums of their
// intersections with the grade components) or all subspaces.
enum class Flavor { Graded, Ungraded };

std::string to_string(Flavor f);

struct Budget {
  // Maximum number of subspaces an enumeration may visit.
  std::uint64_t max_subspaces = 10'000'000;
};

// Default budget, overridden by the GRADEDPI_BUDGET environment variable.
Budget default_budget();

// Span of all [u, v] with u in U and v in V.
Subspace product(const GradedAlgebra& A, const Subspace& U, const Subspace& V);
bool is_subalgebra(const GradedAlgebra& A, const Subspace& S);
bool is_ideal(const GradedAlgebra& A, const Subspace& S);
bool is_graded(const GradedAlgebra& A, const Subspace& S);
// S viewed as a Lie algebra in its own right.
bool is_nilpotent(const GradedAlgebra& A, const Subspace& S);
bool is_solvable(const GradedAlgebra& A, const Subspace& S);
bool is_abelian(const GradedAlgebra& A, const Subspace& S);

Subspace whole(const GradedAlgebra& A);
Subspace center(const GradedAlgebra& A);
Subspace derived_algebra(const GradedAlgebra& A);
// [L, L^(1), L^(2), ...] up to the first repeated term.
std::vector<Subspace> derived_series(const GradedAlgebra& A);
// [L^1 = L, L^2, ...] up to the first repeated term.
std::vector<Subspace> lower_central(const GradedAlgebra& A);

// Number of subspaces of GF(q)^n of dimension <= max_dim (graded: only
// direct sums of subspaces of the components).  Saturates at UINT64_MAX.
std::uint64_t subspace_count(const GradedAlgebra& A, std::size_t max_dim, Flavor flavor);

// Visits every subspace of dimension <= max_dim in canonical order.
void for_each_subspace(const GradedAlgebra& A, std::size_t max_dim, Flavor flavor, const Budget& budget,
                       const std::function<void(const Subspace&)>& visit);

// All ideals of dimension <= max_dim, sorted canonically.  Throws
// BudgetExceeded when the enumeration would pass the budget.
std::vector<Subspace> enumerate_ideals(const GradedAlgebra& A, std::size_t max_dim, Flavor flavor,
                                       const Budget& budget = default_budget());

Subspace nilradical(const GradedAlgebra& A, Flavor flavor, const Budget& budget = default_budget());
Subspace radical(const GradedAlgebra& A, Flavor flavor, const Budget& budget = default_budget());

struct MonolithResult {
  std::optional<Subspace> monolith;
  std::vector<Subspace> minimal_ideals;
  bool monolithic() const noexcept { return monolith.has_value(); }
};

std::vector<Subspace> minimal_ideals(const GradedAlgebra& A, Flavor flavor, const Budget& budget = default_budget());
MonolithResult monolith(const GradedAlgebra& A, Flavor flavor, const Budget& budget = default_budget());
// Throws NotMonolithic (listing the minimal ideals) when there is no monolith.
Subspace require_monolith(const GradedAlgebra& A, Flavor flavor, const Budget& budget = default_budget());

struct AAlgebraResult {
  bool holds = true;
  std::optional<Subspace> witness;  // nilpotent non-abelian subalgebra
};

// True iff every nilpotent subalgebra is abelian.
AAlgebraResult is_A_algebra(const GradedAlgebra& A, const Budget& budget = default_budget());

struct SheinaReport {
  bool monolithic = false;
  std::size_t derived_dim = 0;
  // Proper ideals I1, I2 of A inside [A, A] with I1 + I2 = [A, A], if any.
  std::optional<std::pair<Subspace, Subspace>> decomposition;
  // [A, A] is not a sum of two ideals strictly contained in it.
  bool criterion() const noexcept { return !decomposition.has_value(); }
};

SheinaReport sheina_criterion(const GradedAlgebra& A, Flavor flavor, const Budget& budget = default_budget());

struct SpectrumReport {
  Vec element;
  UPoly min_poly;
  std::vector<FieldElement> eigenvalues;  // ascending canonical order
  std::vector<Subspace> eigenspaces;      // parallel to eigenvalues
  bool diagonalizable = false;
  bool homogeneous_eigenbasis = false;
};

UPoly minimal_polynomial(const FieldContext& F, const Matrix& m);
SpectrumReport spectrum(const GradedAlgebra& A, const Vec& u);

struct PremetReport {
  bool derived_meets_center_trivially = false;
  bool semisimple = false;
  // Present only for semisimple A: whether A is a direct sum of graded
  // simple ideals.
  std::optional<bool> graded_simple_decomposition;
  std::vector<Subspace> simple_summands;
  std::string hypothesis_path;
};

PremetReport check_premet_predicates(const GradedAlgebra& A, const Budget& budget = default_budget());

// Algebra with basis rows of P (b'_i = sum_j P_ij b_j); grading dropped.
GradedAlgebra change_basis(const GradedAlgebra& A, const Matrix& P);
// Restriction of A to a graded subalgebra S, with a homogeneous basis.
GradedAlgebra restrict_to(const GradedAlgebra& A, const Subspace& S, std::string name);

}  // namespace gradedpi
