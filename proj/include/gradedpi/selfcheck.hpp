#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gradedpi/algebra.hpp"
#include "gradedpi/expr.hpp"
#include "gradedpi/profile.hpp"

namespace gradedpi {

// Random expression of bracket depth <= max_depth and degree <= max_degree
// over the given variables.  Uses sums, brackets, power slots and, when the
// degree allows, a first slot x^p.
ExprPtr random_tree(std::mt19937_64& rng, const std::vector<GradedVar>& vars, std::uint64_t p, int max_depth,
                    int max_degree);

// Uniform element of the component of v's grade.
Vec random_value(std::mt19937_64& rng, const GradedAlgebra& A, const GradingProfile& profile, GradedVar v);

struct SelfcheckReport {
  std::uint64_t seed = 0;
  int trees = 0;
  int assignments = 0;
  int mismatches = 0;
  std::string first_mismatch;
};

// Compares structural evaluation with evaluation of the normal form.
SelfcheckReport run_selfcheck(const GradedAlgebra& A, const GradingProfile& profile, std::uint64_t seed, int trees,
                              int assignments);

}  // namespace gradedpi
