#include "gradedpi/linalg.hpp"

#include <algorithm>

#include "gradedpi/error.hpp"

namespace gradedpi {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = FieldElement{1};
  return v;
}

bool is_zero(const Vec& v) noexcept {
  return std::all_of(v.begin(), v.end(), [](FieldElement a) { return a.code == 0; });
}

void axpy(const FieldContext& F, Vec& y, FieldElement a, const Vec& x) {
  if (a.code == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (x[i].code != 0) y[i] = F.add(y[i], F.mul(a, x[i]));
}

Vec scaled(const FieldContext& F, FieldElement a, const Vec& x) {
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = F.mul(a, x[i]);
  return r;
}

Vec added(const FieldContext& F, const Vec& x, const Vec& y) {
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = F.add(x[i], y[i]);
  return r;
}

Matrix Matrix::identity(const FieldContext& F, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = F.one();
  return m;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Matrix multiply(const FieldContext& F, const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      FieldElement aik = a(i, k);
      if (aik.code == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = F.add(c(i, j), F.mul(aik, b(k, j)));
    }
  return c;
}

Vec apply(const FieldContext& F, const Matrix& m, const Vec& v) {
  Vec r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (v[j].code != 0) r[i] = F.add(r[i], F.mul(m(i, j), v[j]));
  return r;
}

Matrix add(const FieldContext& F, const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = F.add(a(i, j), b(i, j));
  return c;
}

Matrix scale(const FieldContext& F, FieldElement s, const Matrix& a) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = F.mul(s, a(i, j));
  return c;
}

Matrix power(const FieldContext& F, const Matrix& a, std::uint64_t e) {
  Matrix result = Matrix::identity(F, a.rows());
  Matrix base = a;
  while (e > 0) {
    if (e & 1) result = multiply(F, result, base);
    e >>= 1;
    if (e) base = multiply(F, base, base);
  }
  return result;
}

std::optional<Matrix> inverse(const FieldContext& F, const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Vec r = a.row(i);
    Vec id = unit_vec(n, i);
    r.insert(r.end(), id.begin(), id.end());
    rows.push_back(std::move(r));
  }
  auto reduced = rref(F, rows, 2 * n);
  if (reduced.size() < n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (reduced[i][i] != F.one()) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = reduced[i][n + j];
  return inv;
}

EchelonAccumulator::EchelonAccumulator(const FieldContext& F, std::size_t width) : F_(&F), width_(width) {}

void EchelonAccumulator::reduce(Vec& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    FieldElement c = v[pivots_[r]];
    if (c.code != 0) axpy(*F_, v, F_->neg(c), rows_[r]);
  }
}

bool EchelonAccumulator::insert(Vec v) {
  if (v.size() != width_) throw Error(ErrorCode::InvalidArgument, "row width mismatch");
  if (full()) return false;
  reduce(v);
  auto lead = std::find_if(v.begin(), v.end(), [](FieldElement a) { return a.code != 0; });
  if (lead == v.end()) return false;
  const auto pivot = static_cast<std::size_t>(lead - v.begin());
  v = scaled(*F_, F_->inv(*lead), v);
  for (auto& row : rows_) {
    FieldElement c = row[pivot];
    if (c.code != 0) axpy(*F_, row, F_->neg(c), v);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  const auto idx = pos - pivots_.begin();
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

void EchelonAccumulator::merge(const EchelonAccumulator& other) {
  for (const auto& row : other.rows_) insert(row);
}

bool EchelonAccumulator::contains(Vec v) const {
  reduce(v);
  return is_zero(v);
}

std::vector<Vec> EchelonAccumulator::reduced_rows() const { return rows_; }

std::vector<std::size_t> EchelonAccumulator::pivots() const { return pivots_; }

std::vector<Vec> EchelonAccumulator::null_space() const {
  std::vector<bool> is_pivot(width_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < width_; ++f) {
    if (is_pivot[f]) continue;
    Vec x(width_);
    x[f] = F_->one();
    for (std::size_t r = 0; r < rows_.size(); ++r) x[pivots_[r]] = F_->neg(rows_[r][f]);
    basis.push_back(std::move(x));
  }
  return rref(*F_, basis, width_);
}

std::vector<Vec> rref(const FieldContext& F, const std::vector<Vec>& rows, std::size_t width) {
  EchelonAccumulator acc(F, width);
  for (const auto& r : rows) acc.insert(r);
  return acc.reduced_rows();
}

std::vector<Vec> null_space(const FieldContext& F, const std::vector<Vec>& rows, std::size_t width) {
  EchelonAccumulator acc(F, width);
  for (const auto& r : rows) acc.insert(r);
  return acc.null_space();
}

std::size_t rank(const FieldContext& F, const std::vector<Vec>& rows, std::size_t width) {
  EchelonAccumulator acc(F, width);
  for (const auto& r : rows) acc.insert(r);
  return acc.rank();
}

Subspace::Subspace(const FieldContext& F, std::size_t ambient, const std::vector<Vec>& spanning)
    : ambient_(ambient), basis_(rref(F, spanning, ambient)) {}

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  return s;
}

Subspace Subspace::full(const FieldContext& F, std::size_t ambient) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < ambient; ++i) rows.push_back(unit_vec(ambient, i));
  return Subspace(F, ambient, rows);
}

bool Subspace::contains(const FieldContext& F, const Vec& v) const {
  std::vector<Vec> rows = basis_;
  rows.push_back(v);
  return rank(F, rows, ambient_) == basis_.size();
}

bool Subspace::contains(const FieldContext& F, const Subspace& other) const {
  std::vector<Vec> rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  return rank(F, rows, ambient_) == basis_.size();
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a.basis_ < b.basis_;
}

Subspace sum(const FieldContext& F, const Subspace& a, const Subspace& b) {
  std::vector<Vec> rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace(F, a.ambient(), rows);
}

Subspace annihilator(const FieldContext& F, const Subspace& a) {
  return Subspace(F, a.ambient(), null_space(F, a.basis(), a.ambient()));
}

Subspace intersect(const FieldContext& F, const Subspace& a, const Subspace& b) {
  // (A ∩ B)^perp = A^perp + B^perp for the nondegenerate dot product.
  return annihilator(F, sum(F, annihilator(F, a), annihilator(F, b)));
}

}  // namespace gradedpi

namespace gradedpi {

std::optional<Vec> solve_in_span(const FieldContext& F, const std::vector<Vec>& vectors, const Vec& target) {
  const std::size_t n = vectors.size();
  const std::size_t len = target.size();
  std::vector<Vec> sys;
  for (std::size_t r = 0; r < len; ++r) {
    Vec row(n + 1);
    for (std::size_t k = 0; k < n; ++k) row[k] = vectors[k][r];
    row[n] = target[r];
    sys.push_back(std::move(row));
  }
  Vec c(n);
  for (const auto& row : rref(F, sys, n + 1)) {
    auto lead = std::find_if(row.begin(), row.end(), [](FieldElement a) { return a.code != 0; });
    auto col = static_cast<std::size_t>(lead - row.begin());
    if (col == n) return std::nullopt;
    c[col] = row[n];
  }
  return c;
}

void trim(UPoly& a) {
  while (!a.empty() && a.back().code == 0) a.pop_back();
}

FieldElement evaluate(const FieldContext& F, const UPoly& a, FieldElement x) {
  FieldElement r = F.zero();
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = F.add(F.mul(r, x), *it);
  return r;
}

UPoly poly_mod(const FieldContext& F, UPoly a, const UPoly& b_in) {
  UPoly b = b_in;
  trim(b);
  if (b.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  trim(a);
  const FieldElement lead_inv = F.inv(b.back());
  while (a.size() >= b.size()) {
    const FieldElement c = F.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
    trim(a);
  }
  return a;
}

bool poly_divides(const FieldContext& F, const UPoly& divisor, const UPoly& dividend) {
  return poly_mod(F, dividend, divisor).empty();
}

std::string format_poly(const FieldContext& F, const UPoly& a_in) {
  UPoly a = a_in;
  trim(a);
  if (a.empty()) return "0";
  std::string out;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i].code == 0) continue;
    if (!out.empty()) out += " + ";
    std::string c = F.to_string(a[i]);
    if (c.find('+') != std::string::npos) c = "(" + c + ")";
    if (i == 0) {
      out += c;
      continue;
    }
    if (a[i] != F.one()) out += c + "*";
    out += i == 1 ? "t" : "t^" + std::to_string(i);
  }
  return out;
}

}  // namespace gradedpi
