#include "gradedpi/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "gradedpi/dsl.hpp"
#include "gradedpi/error.hpp"

namespace gradedpi {

namespace {

using nlohmann::json;

Error bad_file(const std::string& msg) { return Error(ErrorCode::ParseError, "algebra file: " + msg); }

const json& require(const json& j, const char* key) {
  if (!j.contains(key)) throw bad_file(std::string("missing \"") + key + "\"");
  return j.at(key);
}

long long as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw bad_file(where + " must be an integer");
  return j.get<long long>();
}

}  // namespace

GradedAlgebra algebra_from_json(const json& j, const std::optional<FieldContext>& field) {
  if (!j.is_object()) throw bad_file("top level must be an object");
  FieldContext F = field ? *field : [&] {
    const json& f = require(j, "field");
    if (f.is_number_integer()) return parse_field_spec(std::to_string(f.get<long long>()));
    if (!f.is_string()) throw bad_file("\"field\" must be a string such as \"5\" or \"5^2\"");
    return parse_field_spec(f.get<std::string>());
  }();
  const std::string name = j.value("name", std::string("custom"));

  std::vector<int> moduli;
  for (const auto& m : require(j, "group")) moduli.push_back(static_cast<int>(as_int(m, "group entry")));
  const GradeGroup group(moduli);

  std::vector<std::string> labels;
  const json& basis = require(j, "basis");
  if (!basis.is_array() || basis.empty()) throw bad_file("\"basis\" must be a nonempty array");
  for (const auto& b : basis) {
    if (!b.is_string()) throw bad_file("basis labels must be strings");
    labels.push_back(b.get<std::string>());
  }
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size())
    throw bad_file("basis labels must be distinct");
  const std::size_t n = labels.size();

  std::vector<GroupElement> grades;
  const json& gj = require(j, "grades");
  if (!gj.is_array() || gj.size() != n) throw bad_file("\"grades\" needs one entry per basis element");
  for (const auto& g : gj) {
    std::vector<int> coords;
    if (!g.is_array() || g.size() != moduli.size()) throw bad_file("each grade needs one coordinate per group factor");
    for (const auto& c : g) coords.push_back(static_cast<int>(as_int(c, "grade coordinate")));
    grades.push_back(group.element(coords));
  }

  StructureTensor structure;
  if (j.contains("matrices")) {
    std::vector<Matrix> mats;
    const json& mj = j.at("matrices");
    if (!mj.is_array() || mj.size() != n) throw bad_file("\"matrices\" needs one matrix per basis element");
    std::size_t size = 0;
    for (const auto& m : mj) {
      if (!m.is_array() || m.empty()) throw bad_file("matrices must be nonempty arrays of rows");
      if (size == 0) size = m.size();
      if (m.size() != size) throw bad_file("all matrices must have the same size");
      Matrix M(size, size);
      for (std::size_t r = 0; r < size; ++r) {
        if (!m[r].is_array() || m[r].size() != size) throw bad_file("matrices must be square");
        for (std::size_t c = 0; c < size; ++c) M(r, c) = F.from_int(as_int(m[r][c], "matrix entry"));
      }
      mats.push_back(std::move(M));
    }
    structure = structure_from_matrices(F, mats, labels);
  } else if (j.contains("structure")) {
    structure.assign(n, std::vector<Vec>(n, zero_vec(n)));
    std::set<std::pair<std::size_t, std::size_t>> given;
    for (const auto& t : j.at("structure")) {
      if (!t.is_array() || t.size() != 4) throw bad_file("structure entries are [i, j, k, coeff]");
      const long long i = as_int(t[0], "index"), jj = as_int(t[1], "index"), k = as_int(t[2], "index");
      for (long long x : {i, jj, k})
        if (x < 0 || x >= static_cast<long long>(n)) throw bad_file("structure index out of range");
      auto& slot = structure[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)][static_cast<std::size_t>(k)];
      slot = F.add(slot, F.from_int(as_int(t[3], "coefficient")));
      given.emplace(static_cast<std::size_t>(i), static_cast<std::size_t>(jj));
    }
    for (const auto& [i, jj] : given)
      if (!given.count({jj, i})) structure[jj][i] = scaled(F, F.neg(F.one()), structure[i][jj]);
  } else {
    throw bad_file("need \"matrices\" or \"structure\"");
  }
  return GradedAlgebra(name, F, labels, std::move(structure), group, grades);
}

GradedAlgebra load_algebra_file(const std::string& path, const std::optional<FieldContext>& field) {
  std::ifstream in(resolve_data_file(path));
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "algebra file '" + path + "': " + e.what());
  }
  return algebra_from_json(j, field);
}

json algebra_to_json(const GradedAlgebra& A) {
  json j;
  j["name"] = A.name();
  j["field"] = A.field().spec();
  j["group"] = A.group().moduli();
  j["basis"] = A.labels();
  json grades = json::array();
  for (const auto& g : A.grades()) grades.push_back(g.coords);
  j["grades"] = grades;
  json structure = json::array();
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t k = 0; k < A.dim(); ++k)
      for (std::size_t c = 0; c < A.dim(); ++c) {
        const FieldElement x = A.structure(i, k)[c];
        if (x.code == 0) continue;
        if (A.field().k() != 1) throw Error(ErrorCode::InvalidArgument, "structure over GF(p^2) is not exportable");
        json entry = json::array({i, k, c, static_cast<long long>(x.code)});
        structure.push_back(entry);
      }
  j["structure"] = structure;
  return j;
}

GradedAlgebra resolve_algebra(std::string_view name, const std::optional<FieldContext>& field) {
  const auto& names = builtin_names();
  if (std::find(names.begin(), names.end(), name) != names.end())
    return builtin(name, field ? *field : default_field_for(name));
  if (name == "heisenberg") return heisenberg_algebra(field ? *field : make_field(5, 1));
  if (name.rfind("abelian", 0) == 0 && name.size() > 7 &&
      name.find_first_not_of("0123456789", 7) == std::string_view::npos) {
    const int n = std::stoi(std::string(name.substr(7)));
    if (n < 1 || n > 8) throw Error(ErrorCode::InvalidArgument, "abelian algebras of dimension 1..8 only");
    return abelian_algebra(field ? *field : make_field(5, 1), static_cast<std::size_t>(n));
  }
  if (name.find('.') == std::string_view::npos && name.find('/') == std::string_view::npos)
    throw Error(ErrorCode::UnknownName, "unknown algebra '" + std::string(name) + "'");
  return load_algebra_file(std::string(name), field);
}

json cell_json(const Multidegree& d) {
  json j = json::object();
  for (const auto& [v, e] : d.exps()) j[to_string(v)] = e;
  return j;
}

std::string format_subspace(const GradedAlgebra& A, const Subspace& S) {
  if (S.dim() == 0) return "{0}";
  std::string out = "span{";
  for (std::size_t i = 0; i < S.dim(); ++i) {
    if (i) out += ", ";
    out += format_element(A, S.basis()[i]);
  }
  return out + "}";
}

json subspace_json(const GradedAlgebra& A, const Subspace& S) {
  json basis = json::array();
  for (const auto& v : S.basis()) basis.push_back(format_element(A, v));
  return json{{"dim", S.dim()}, {"basis", basis}};
}

std::string format_assignment(const GradedAlgebra& A, const Assignment& a) {
  std::string out;
  for (const auto& [v, x] : a) {
    if (!out.empty()) out += ", ";
    out += to_string(v) + " = " + format_element(A, x);
  }
  return out;
}

json verify_json(const GradedAlgebra& A, const VerifyReport& r) {
  json j{{"op", "verify"},
         {"algebra", r.algebra},
         {"identity", r.identity},
         {"holds", r.holds},
         {"substitutions_checked", r.substitutions_checked},
         {"verdict", r.holds ? "holds" : "fails"}};
  if (r.counterexample) {
    json ce = json::object();
    for (const auto& [v, x] : *r.counterexample) ce[to_string(v)] = format_element(A, x);
    j["counterexample"] = ce;
    j["value"] = format_element(A, r.value);
  }
  return j;
}

std::vector<std::string> span_texts(const FieldContext& F, const CellSpan& s) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(format_liepoly(F, s.element(i)));
  return out;
}

json span_json(const std::string& op, const std::string& algebra, const FieldContext& F, const CellSpan& s,
               const std::string& verdict) {
  return json{{"op", op},
              {"algebra", algebra},
              {"cell", cell_json(s.cell)},
              {"ambient_dim", s.ambient_dim},
              {"dim", s.dim()},
              {"basis", span_texts(F, s)},
              {"verdict", verdict}};
}

json spectrum_json(const GradedAlgebra& A, const SpectrumReport& r) {
  const FieldContext& F = A.field();
  json eig = json::array();
  for (std::size_t i = 0; i < r.eigenvalues.size(); ++i)
    eig.push_back(json{{"value", F.to_string(r.eigenvalues[i])}, {"eigenspace", subspace_json(A, r.eigenspaces[i])}});
  return json{{"op", "spectrum"},
              {"algebra", A.name()},
              {"element", format_element(A, r.element)},
              {"min_poly", format_poly(F, r.min_poly)},
              {"eigenvalues", eig},
              {"diagonalizable", r.diagonalizable},
              {"homogeneous_eigenbasis", r.homogeneous_eigenbasis}};
}

}  // namespace gradedpi
