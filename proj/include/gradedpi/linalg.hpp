#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gradedpi/field.hpp"

namespace gradedpi {

using Vec = std::vector<FieldElement>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v) noexcept;
void axpy(const FieldContext& F, Vec& y, FieldElement a, const Vec& x);  // y += a*x
Vec scaled(const FieldContext& F, FieldElement a, const Vec& x);
Vec added(const FieldContext& F, const Vec& x, const Vec& y);

// Dense row-major matrix over GF(q).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(const FieldContext& F, std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  FieldElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  FieldElement operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Vec row(std::size_t i) const;
  const std::vector<FieldElement>& data() const noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

Matrix multiply(const FieldContext& F, const Matrix& a, const Matrix& b);
Vec apply(const FieldContext& F, const Matrix& m, const Vec& v);
Matrix add(const FieldContext& F, const Matrix& a, const Matrix& b);
Matrix scale(const FieldContext& F, FieldElement c, const Matrix& a);
Matrix power(const FieldContext& F, const Matrix& a, std::uint64_t e);
std::optional<Matrix> inverse(const FieldContext& F, const Matrix& a);

// Incremental row reduction.  Rows are kept with leading coefficient 1 and
// reduced against every other stored row, so reduced_rows() is the unique
// reduced row echelon form of the span inserted so far.
class EchelonAccumulator {
 public:
  EchelonAccumulator(const FieldContext& F, std::size_t width);

  // Returns true when v was independent of the rows already present.
  bool insert(Vec v);
  void merge(const EchelonAccumulator& other);
  bool contains(Vec v) const;

  std::size_t width() const noexcept { return width_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool full() const noexcept { return rows_.size() == width_; }
  // Canonical RREF rows sorted by pivot column.
  std::vector<Vec> reduced_rows() const;
  std::vector<std::size_t> pivots() const;
  // Canonical basis (RREF) of { c : <c, r> = 0 for every stored row r }.
  std::vector<Vec> null_space() const;

 private:
  void reduce(Vec& v) const;

  const FieldContext* F_;
  std::size_t width_;
  std::vector<Vec> rows_;            // sorted by pivot
  std::vector<std::size_t> pivots_;  // parallel to rows_
};

std::vector<Vec> rref(const FieldContext& F, const std::vector<Vec>& rows, std::size_t width);
std::vector<Vec> null_space(const FieldContext& F, const std::vector<Vec>& rows, std::size_t width);
std::size_t rank(const FieldContext& F, const std::vector<Vec>& rows, std::size_t width);

// A linear subspace of GF(q)^n held by its canonical RREF basis, so two
// Subspace values are equal exactly when the spaces coincide.
class Subspace {
 public:
  Subspace() = default;
  Subspace(const FieldContext& F, std::size_t ambient, const std::vector<Vec>& spanning);

  static Subspace zero(std::size_t ambient);
  static Subspace full(const FieldContext& F, std::size_t ambient);

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vec>& basis() const noexcept { return basis_; }
  bool contains(const FieldContext& F, const Vec& v) const;
  bool contains(const FieldContext& F, const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend bool operator<(const Subspace& a, const Subspace& b);

 private:
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
};

Subspace sum(const FieldContext& F, const Subspace& a, const Subspace& b);
Subspace intersect(const FieldContext& F, const Subspace& a, const Subspace& b);
// The annihilator under the standard dot product.
Subspace annihilator(const FieldContext& F, const Subspace& a);

}  // namespace gradedpi

namespace gradedpi {

// Coefficients c with sum_i c_i * vectors[i] = target, if target lies in
// the span; vectors must be linearly independent.
std::optional<Vec> solve_in_span(const FieldContext& F, const std::vector<Vec>& vectors, const Vec& target);

// Univariate polynomials over GF(q), coefficients from the constant term up.
using UPoly = std::vector<FieldElement>;

void trim(UPoly& a);
FieldElement evaluate(const FieldContext& F, const UPoly& a, FieldElement x);
// Remainder of a modulo b (b nonzero).
UPoly poly_mod(const FieldContext& F, UPoly a, const UPoly& b);
bool poly_divides(const FieldContext& F, const UPoly& divisor, const UPoly& dividend);
std::string format_poly(const FieldContext& F, const UPoly& a);

}  // namespace gradedpi
