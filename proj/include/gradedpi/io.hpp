#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "gradedpi/algebra.hpp"
#include "gradedpi/engine.hpp"
#include "gradedpi/structure.hpp"

namespace gradedpi {

// Algebra file: {"name", "field", "group", "basis", "grades"} plus either
// "matrices" (2x2 or larger integer matrices spanning a matrix Lie algebra)
// or "structure": [[i, j, k, c], ...] meaning [b_i, b_j] has coefficient c
// on b_k (0-based).  A pair (i, j) given without (j, i) gets the negated
// entries.  A field given by the caller overrides the file's.
GradedAlgebra algebra_from_json(const nlohmann::json& j, const std::optional<FieldContext>& field = std::nullopt);
GradedAlgebra load_algebra_file(const std::string& path, const std::optional<FieldContext>& field = std::nullopt);
nlohmann::json algebra_to_json(const GradedAlgebra& A);

// A built-in name, "heisenberg", "abelian<n>", or a JSON file.  Without a
// field, built-ins use default_field_for and files their own "field".
GradedAlgebra resolve_algebra(std::string_view name, const std::optional<FieldContext>& field);

nlohmann::json cell_json(const Multidegree& d);
nlohmann::json subspace_json(const GradedAlgebra& A, const Subspace& S);
nlohmann::json verify_json(const GradedAlgebra& A, const VerifyReport& r);
// {"op", "algebra", "cell", "ambient_dim", "dim", "basis", "verdict"}
nlohmann::json span_json(const std::string& op, const std::string& algebra, const FieldContext& F, const CellSpan& s,
                         const std::string& verdict);
nlohmann::json spectrum_json(const GradedAlgebra& A, const SpectrumReport& r);

std::string format_subspace(const GradedAlgebra& A, const Subspace& S);
std::string format_assignment(const GradedAlgebra& A, const Assignment& a);
// Basis rows of a span as DSL text.
std::vector<std::string> span_texts(const FieldContext& F, const CellSpan& s);

}  // namespace gradedpi
