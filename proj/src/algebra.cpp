#include "gradedpi/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "gradedpi/error.hpp"

namespace gradedpi {

GradeGroup::GradeGroup(std::vector<int> moduli) : moduli_(std::move(moduli)) {
  for (int m : moduli_)
    if (m < 0) throw Error(ErrorCode::InvalidArgument, "negative group modulus");
}

GroupElement GradeGroup::element(std::vector<int> coords) const {
  if (coords.size() != moduli_.size())
    throw Error(ErrorCode::InvalidArgument, "group element arity mismatch for " + name());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (moduli_[i] > 0) {
      coords[i] %= moduli_[i];
      if (coords[i] < 0) coords[i] += moduli_[i];
    }
  }
  return GroupElement{std::move(coords)};
}

GroupElement GradeGroup::add(const GroupElement& a, const GroupElement& b) const {
  std::vector<int> c(moduli_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] + b.coords[i];
  return element(std::move(c));
}

GroupElement GradeGroup::scale(int k, const GroupElement& a) const {
  std::vector<int> c(moduli_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * a.coords[i];
  return element(std::move(c));
}

std::string GradeGroup::name() const {
  if (moduli_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) out += "x";
    out += moduli_[i] == 0 ? "Z" : "Z" + std::to_string(moduli_[i]);
  }
  return out;
}

std::string GradeGroup::to_string(const GroupElement& g) const {
  if (g.coords.size() == 1) return std::to_string(g.coords[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < g.coords.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(g.coords[i]);
  }
  return out + ")";
}

namespace {

std::string triple(const std::vector<std::string>& labels, std::size_t i, std::size_t j, std::size_t k) {
  return "(" + labels[i] + ", " + labels[j] + ", " + labels[k] + ")";
}

}  // namespace

GradedAlgebra::GradedAlgebra(std::string name, FieldContext field, std::vector<std::string> labels,
                             StructureTensor structure, GradeGroup group, std::vector<GroupElement> grades)
    : name_(std::move(name)),
      field_(std::move(field)),
      labels_(std::move(labels)),
      structure_(std::move(structure)),
      group_(std::move(group)),
      grades_(std::move(grades)) {
  const std::size_t n = labels_.size();
  const FieldContext& F = field_;
  if (structure_.size() != n || grades_.size() != n)
    throw Error(ErrorCode::InvalidArgument, "algebra '" + name_ + "': inconsistent dimensions");
  for (auto& g : grades_) g = group_.element(g.coords);
  for (std::size_t i = 0; i < n; ++i) {
    if (structure_[i].size() != n) throw Error(ErrorCode::InvalidArgument, "structure tensor is not n x n x n");
    for (std::size_t j = 0; j < n; ++j)
      if (structure_[i][j].size() != n) throw Error(ErrorCode::InvalidArgument, "structure tensor is not n x n x n");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (structure_[i][j][k] != F.neg(structure_[j][i][k]) || (i == j && structure_[i][i][k].code != 0))
          throw Error(ErrorCode::AntisymmetryViolation,
                      "algebra '" + name_ + "': c[i][j][k] != -c[j][i][k] at " + triple(labels_, i, j, k));
        if (structure_[i][j][k].code != 0 && grades_[k] != group_.add(grades_[i], grades_[j]))
          throw Error(ErrorCode::GradingViolation,
                      "algebra '" + name_ + "': [" + labels_[i] + ", " + labels_[j] + "] has a component along " +
                          labels_[k] + " of the wrong grade");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        Vec bi = unit_vec(n, i), bj = unit_vec(n, j), bl = unit_vec(n, l);
        Vec s = bracket(bracket(bi, bj), bl);
        s = added(F, s, bracket(bracket(bj, bl), bi));
        s = added(F, s, bracket(bracket(bl, bi), bj));
        if (!is_zero(s))
          throw Error(ErrorCode::JacobiViolation, "algebra '" + name_ + "': Jacobi fails on " + triple(labels_, i, j, l));
      }
}

Vec GradedAlgebra::bracket(const Vec& u, const Vec& v) const {
  const std::size_t n = dim();
  Vec r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].code == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j].code == 0 || i == j) continue;
      axpy(field_, r, field_.mul(u[i], v[j]), structure_[i][j]);
    }
  }
  return r;
}

Matrix GradedAlgebra::ad_matrix(const Vec& u) const {
  const std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec col = bracket(unit_vec(n, j), u);
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

std::vector<std::size_t> GradedAlgebra::component(const GroupElement& g) const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < dim(); ++i)
    if (grades_[i] == g) idx.push_back(i);
  return idx;
}

Subspace GradedAlgebra::component_space(const GroupElement& g) const {
  std::vector<Vec> rows;
  for (auto i : component(g)) rows.push_back(unit_vec(dim(), i));
  return Subspace(field_, dim(), rows);
}

std::vector<GroupElement> GradedAlgebra::support() const {
  std::set<GroupElement> s(grades_.begin(), grades_.end());
  return {s.begin(), s.end()};
}

std::optional<std::size_t> GradedAlgebra::label_index(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

GradedAlgebra GradedAlgebra::renamed(std::string name) const {
  GradedAlgebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

StructureTensor structure_from_matrices(const FieldContext& F, const std::vector<Matrix>& matrices,
                                        const std::vector<std::string>& labels) {
  auto label = [&](std::size_t i) { return i < labels.size() ? labels[i] : "#" + std::to_string(i); };
  const std::size_t n = matrices.size();
  if (n == 0) return {};
  const std::size_t m = matrices[0].rows();
  const std::size_t flat = m * m;
  for (const auto& x : matrices)
    if (x.rows() != m || x.cols() != m) throw Error(ErrorCode::InvalidArgument, "matrices must be square of equal size");
  std::vector<Vec> flats;
  for (const auto& x : matrices) flats.push_back(x.data());
  if (rank(F, flats, flat) != n) throw Error(ErrorCode::InvalidArgument, "basis matrices are linearly dependent");

  StructureTensor c(n, std::vector<Vec>(n, Vec(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Matrix comm = add(F, multiply(F, matrices[i], matrices[j]), scale(F, F.neg(F.one()), multiply(F, matrices[j], matrices[i])));
      auto coords = solve_in_span(F, flats, comm.data());
      if (!coords)
        throw Error(ErrorCode::NotClosed, "[" + label(i) + ", " + label(j) + "] leaves the span of the basis");
      c[i][j] = *coords;
    }
  return c;
}

GradedAlgebra algebra_from_matrices(std::string name, const FieldContext& F, std::vector<std::string> labels,
                                    const std::vector<Matrix>& matrices, GradeGroup group,
                                    std::vector<GroupElement> grades) {
  StructureTensor c = structure_from_matrices(F, matrices, labels);
  return GradedAlgebra(std::move(name), F, std::move(labels), std::move(c), std::move(group), std::move(grades));
}

GradedAlgebra direct_product(std::string name, const GradedAlgebra& a, const GradedAlgebra& b) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::InvalidArgument, "direct product over different fields");
  if (!(a.group() == b.group())) throw Error(ErrorCode::InvalidArgument, "direct product over different grade groups");
  const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
  StructureTensor c(n, std::vector<Vec>(n, Vec(n)));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k) c[i][j][k] = a.structure(i, j)[k];
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < nb; ++k) c[na + i][na + j][na + k] = b.structure(i, j)[k];
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(l + "_1");
  for (const auto& l : b.labels()) labels.push_back(l + "_2");
  std::vector<GroupElement> grades = a.grades();
  grades.insert(grades.end(), b.grades().begin(), b.grades().end());
  return GradedAlgebra(std::move(name), a.field(), std::move(labels), std::move(c), a.group(), std::move(grades));
}

GradedAlgebra forget_grading(const GradedAlgebra& a) {
  std::vector<GroupElement> grades(a.dim(), GroupElement{});
  return GradedAlgebra(a.name() + "/ungraded", a.field(), a.labels(), a.structure(), GradeGroup::trivial(),
                       std::move(grades));
}

GradedAlgebra abelian_algebra(const FieldContext& F, std::size_t dim) {
  StructureTensor c(dim, std::vector<Vec>(dim, Vec(dim)));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back("a" + std::to_string(i + 1));
  return GradedAlgebra("abelian" + std::to_string(dim), F, std::move(labels), std::move(c), GradeGroup::trivial(),
                       std::vector<GroupElement>(dim));
}

GradedAlgebra heisenberg_algebra(const FieldContext& F) {
  StructureTensor c(3, std::vector<Vec>(3, Vec(3)));
  c[0][1][2] = F.one();
  c[1][0][2] = F.neg(F.one());
  return GradedAlgebra("heisenberg", F, {"x", "y", "z"}, std::move(c), GradeGroup::trivial(),
                       std::vector<GroupElement>(3));
}

namespace {

Matrix mat2(const FieldContext& F, int a, int b, int c, int d) {
  Matrix m(2, 2);
  m(0, 0) = F.from_int(a);
  m(0, 1) = F.from_int(b);
  m(1, 0) = F.from_int(c);
  m(1, 1) = F.from_int(d);
  return m;
}

std::vector<GroupElement> grades_of(const GradeGroup& g, std::vector<std::vector<int>> raw) {
  std::vector<GroupElement> out;
  for (auto& r : raw) out.push_back(g.element(std::move(r)));
  return out;
}

void require_cube_root(std::string_view name, const FieldContext& F) {
  if ((F.q() - 1) % 3 != 0)
    throw Error(ErrorCode::CubeRootMissing, std::string(name) + " needs a primitive cube root of unity; GF(" +
                                                F.spec() + ") has none");
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"sl2_z2", "sl2_z3", "sl2_z2z2", "sl2_trivial", "gl2_z2",
                                                 "gl2_z",  "m1_z3",  "m2_z3",    "m1_z",        "m2_z",
                                                 "m_pair_z3", "n_z2z2", "b2_z2"};
  return names;
}

GradedAlgebra builtin(std::string_view name, const FieldContext& F) {
  const Matrix e11 = mat2(F, 1, 0, 0, 0), e22 = mat2(F, 0, 0, 0, 1);
  const Matrix e12 = mat2(F, 0, 1, 0, 0), e21 = mat2(F, 0, 0, 1, 0);
  const Matrix h = mat2(F, 1, 0, 0, -1);
  const Matrix s = mat2(F, 0, 1, 1, 0);   // e12 + e21
  const Matrix a = mat2(F, 0, 1, -1, 0);  // e12 - e21
  const std::string n(name);

  if (name == "sl2_z2") {
    auto G = GradeGroup::z2();
    return algebra_from_matrices(n, F, {"h", "e12", "e21"}, {h, e12, e21}, G, grades_of(G, {{0}, {1}, {1}}));
  }
  if (name == "sl2_z3") {
    require_cube_root(name, F);
    auto G = GradeGroup::z3();
    return algebra_from_matrices(n, F, {"h", "e12", "e21"}, {h, e12, e21}, G, grades_of(G, {{0}, {1}, {-1}}));
  }
  if (name == "sl2_z2z2") {
    auto G = GradeGroup::z2z2();
    return algebra_from_matrices(n, F, {"h", "s", "a"}, {h, s, a}, G, grades_of(G, {{1, 0}, {0, 1}, {1, 1}}));
  }
  if (name == "sl2_trivial") {
    auto G = GradeGroup::trivial();
    return algebra_from_matrices(n, F, {"h", "e12", "e21"}, {h, e12, e21}, G, grades_of(G, {{}, {}, {}}));
  }
  if (name == "gl2_z2") {
    auto G = GradeGroup::z2();
    return algebra_from_matrices(n, F, {"e11", "e22", "e12", "e21"}, {e11, e22, e12, e21}, G,
                                 grades_of(G, {{0}, {0}, {1}, {1}}));
  }
  if (name == "gl2_z") {
    auto G = GradeGroup::integers();
    return algebra_from_matrices(n, F, {"e11", "e22", "e12", "e21"}, {e11, e22, e12, e21}, G,
                                 grades_of(G, {{0}, {0}, {1}, {-1}}));
  }
  if (name == "m1_z3") {
    require_cube_root(name, F);
    auto G = GradeGroup::z3();
    return algebra_from_matrices(n, F, {"h", "e12"}, {h, e12}, G, grades_of(G, {{0}, {1}}));
  }
  if (name == "m2_z3") {
    require_cube_root(name, F);
    auto G = GradeGroup::z3();
    return algebra_from_matrices(n, F, {"h", "e21"}, {h, e21}, G, grades_of(G, {{0}, {-1}}));
  }
  if (name == "m1_z") {
    auto G = GradeGroup::integers();
    return algebra_from_matrices(n, F, {"h", "e12"}, {h, e12}, G, grades_of(G, {{0}, {1}}));
  }
  if (name == "m2_z") {
    auto G = GradeGroup::integers();
    return algebra_from_matrices(n, F, {"h", "e21"}, {h, e21}, G, grades_of(G, {{0}, {-1}}));
  }
  if (name == "m_pair_z3") {
    return direct_product(n, builtin("m1_z3", F), builtin("m2_z3", F));
  }
  if (name == "n_z2z2") {
    auto G = GradeGroup::z2z2();
    auto line = [&](const char* label, const Matrix& m, std::vector<int> g) {
      return algebra_from_matrices(label, F, {label}, {m}, G, grades_of(G, {std::move(g)}));
    };
    auto hs = direct_product("tmp", line("h", h, {1, 0}), line("a", a, {1, 1}));
    auto full = direct_product(n, hs, line("s", s, {0, 1}));
    // Flatten the generated labels back to h, a, s.
    return GradedAlgebra(n, F, {"h", "a", "s"}, full.structure(), G, full.grades());
  }
  if (name == "b2_z2") {
    auto G = GradeGroup::z2();
    return algebra_from_matrices(n, F, {"e11", "e12"}, {e11, e12}, G, grades_of(G, {{0}, {1}}));
  }
  throw Error(ErrorCode::UnknownName, "unknown algebra '" + n + "'");
}

FieldContext default_field_for(std::string_view builtin_name) {
  if (builtin_name.find("z3") != std::string_view::npos) return make_field(7, 1);
  return make_field(5, 1);
}

Vec parse_element(const GradedAlgebra& A, std::string_view text) {
  const FieldContext& F = A.field();
  Vec v(A.dim());
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::ParseError, "element '" + std::string(text) + "' at " + std::to_string(i) + ": " + why);
  };
  bool first = true;
  skip();
  if (text.substr(i) == "0") return v;
  while (i < text.size()) {
    long long sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    long long coeff = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coeff = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) coeff = coeff * 10 + (text[i++] - '0');
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
      }
    }
    std::size_t start = i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
    if (start == i) throw fail("expected a basis label");
    auto idx = A.label_index(text.substr(start, i - start));
    if (!idx) throw fail("unknown basis label '" + std::string(text.substr(start, i - start)) + "'");
    v[*idx] = F.add(v[*idx], F.from_int(sign * coeff));
    first = false;
    skip();
  }
  if (first) throw fail("empty element");
  return v;
}

std::string format_element(const GradedAlgebra& A, const Vec& v) {
  const FieldContext& F = A.field();
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].code == 0) continue;
    if (!out.empty()) out += " + ";
    if (v[i] != F.one()) {
      const std::string c = F.to_string(v[i]);
      out += c.find('+') != std::string::npos ? "(" + c + ")*" : c + "*";
    }
    out += A.labels()[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace gradedpi
