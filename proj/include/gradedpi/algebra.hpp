#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gradedpi/field.hpp"
#include "gradedpi/linalg.hpp"

namespace gradedpi {

struct GroupElement {
  std::vector<int> coords;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

// Finitely generated abelian group given by one modulus per coordinate:
// m > 0 is Z_m, m = 0 is Z.
class GradeGroup {
 public:
  GradeGroup() = default;
  explicit GradeGroup(std::vector<int> moduli);

  static GradeGroup trivial() { return GradeGroup(std::vector<int>{}); }
  static GradeGroup z2() { return GradeGroup({2}); }
  static GradeGroup z3() { return GradeGroup({3}); }
  static GradeGroup z2z2() { return GradeGroup({2, 2}); }
  static GradeGroup integers() { return GradeGroup({0}); }

  const std::vector<int>& moduli() const noexcept { return moduli_; }
  std::size_t arity() const noexcept { return moduli_.size(); }
  GroupElement zero() const { return GroupElement{std::vector<int>(moduli_.size(), 0)}; }
  GroupElement element(std::vector<int> coords) const;  // reduces coordinates
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement scale(int k, const GroupElement& a) const;
  // "1", "Z2", "Z3", "Z2xZ2", "Z"
  std::string name() const;
  std::string to_string(const GroupElement& g) const;

  friend bool operator==(const GradeGroup&, const GradeGroup&) = default;

 private:
  std::vector<int> moduli_;
};

// c[i][j] holds the coordinates of [b_i, b_j].
using StructureTensor = std::vector<std::vector<Vec>>;

// A finite-dimensional Lie algebra over GF(q) with a homogeneous basis.
// Construction validates antisymmetry, the Jacobi identity and grading
// compatibility; a GradedAlgebra value always satisfies all three.
class GradedAlgebra {
 public:
  GradedAlgebra(std::string name, FieldContext field, std::vector<std::string> labels,
                StructureTensor structure, GradeGroup group, std::vector<GroupElement> grades);

  const std::string& name() const noexcept { return name_; }
  const FieldContext& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const GradeGroup& group() const noexcept { return group_; }
  const GroupElement& grade_of(std::size_t i) const { return grades_[i]; }
  const std::vector<GroupElement>& grades() const noexcept { return grades_; }
  const Vec& structure(std::size_t i, std::size_t j) const { return structure_[i][j]; }
  const StructureTensor& structure() const noexcept { return structure_; }

  Vec bracket(const Vec& u, const Vec& v) const;
  // Matrix of y -> [y, u]; column j is [b_j, u].
  Matrix ad_matrix(const Vec& u) const;

  // Indices of basis vectors of grade g (possibly none).
  std::vector<std::size_t> component(const GroupElement& g) const;
  Subspace component_space(const GroupElement& g) const;
  // Distinct grades carried by the basis, sorted.
  std::vector<GroupElement> support() const;
  std::optional<std::size_t> label_index(std::string_view label) const;

  GradedAlgebra renamed(std::string name) const;

 private:
  std::string name_;
  FieldContext field_;
  std::vector<std::string> labels_;
  StructureTensor structure_;
  GradeGroup group_;
  std::vector<GroupElement> grades_;
};

// Structure constants of span(matrices) under the commutator.  Throws
// NotClosed if some commutator leaves the span and InvalidArgument if the
// matrices are linearly dependent.
StructureTensor structure_from_matrices(const FieldContext& F, const std::vector<Matrix>& matrices,
                                        const std::vector<std::string>& labels = {});

GradedAlgebra algebra_from_matrices(std::string name, const FieldContext& F, std::vector<std::string> labels,
                                    const std::vector<Matrix>& matrices, GradeGroup group,
                                    std::vector<GroupElement> grades);

// Componentwise bracket; both factors must share field and grade group.
GradedAlgebra direct_product(std::string name, const GradedAlgebra& a, const GradedAlgebra& b);
// Same algebra, trivial grading.
GradedAlgebra forget_grading(const GradedAlgebra& a);
GradedAlgebra abelian_algebra(const FieldContext& F, std::size_t dim);
// [x, y] = z, z central.
GradedAlgebra heisenberg_algebra(const FieldContext& F);

const std::vector<std::string>& builtin_names();
// Throws UnknownName, or CubeRootMissing for the Z3 builders when
// 3 does not divide q - 1.
GradedAlgebra builtin(std::string_view name, const FieldContext& F);

// Field used when none is given: 7 for Z3-graded built-ins, otherwise 5.
FieldContext default_field_for(std::string_view builtin_name);

// Parses a linear combination of basis labels such as "h", "2*e12 - e21".
Vec parse_element(const GradedAlgebra& A, std::string_view text);
std::string format_element(const GradedAlgebra& A, const Vec& v);

}  // namespace gradedpi
