#include "gradedpi/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <sstream>

#include "gradedpi/dsl.hpp"
#include "gradedpi/engine.hpp"
#include "gradedpi/error.hpp"
#include "gradedpi/io.hpp"
#include "gradedpi/selfcheck.hpp"
#include "gradedpi/structure.hpp"

namespace gradedpi {

namespace {

using nlohmann::json;

struct Settings {
  bool json = false;
  unsigned threads = 1;
};

std::optional<FieldContext> field_option(const std::string& spec) {
  if (spec.empty()) return std::nullopt;
  return parse_field_spec(spec);
}

EngineOptions engine_options(const Settings& s) {
  EngineOptions o = EngineOptions::defaults();
  o.threads = s.threads;
  return o;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string describe(const GradedAlgebra& A) { return A.name() + " over GF(" + A.field().spec() + ")"; }

FieldContext basis_field(const std::string& spec, const std::string& basis_path) {
  if (!spec.empty()) return parse_field_spec(spec);
  // Default: 7 for Z3-graded bases, 5 otherwise.
  const BasisFile probe = load_basis(basis_path, 5);
  return make_field(probe.profile.name() == "Z3" ? 7 : 5, 1);
}

ConsequenceLimits parse_limits(const std::string& text) {
  ConsequenceLimits l;
  if (text.empty()) return l;
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidArgument, "--limits expects s,r,margin");
    }
  }
  if (parts.size() != 3) throw Error(ErrorCode::InvalidArgument, "--limits expects s,r,margin");
  l.summands = parts[0];
  l.outer = parts[1];
  l.margin = parts[2];
  return l;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int cmd_algebra_list(const Settings& s, std::ostream& out) {
  json list = json::array();
  for (const auto& name : builtin_names()) {
    const GradedAlgebra A = builtin(name, default_field_for(name));
    list.push_back(json{{"name", name}, {"field", A.field().spec()}, {"dim", A.dim()}, {"group", A.group().name()}});
    if (!s.json)
      out << name << "  dim " << A.dim() << "  group " << A.group().name() << "  default field GF(" << A.field().spec()
          << ")\n";
  }
  if (s.json) emit(out, json{{"op", "algebra list"}, {"algebras", list}});
  return kExitOk;
}

int cmd_algebra_show(const Settings& s, const std::string& name, const std::string& field, std::ostream& out) {
  const GradedAlgebra A = resolve_algebra(name, field_option(field));
  if (s.json) {
    json j = algebra_to_json(A);
    j["op"] = "algebra show";
    emit(out, j);
    return kExitOk;
  }
  out << describe(A) << ", graded by " << A.group().name() << "\n";
  for (std::size_t i = 0; i < A.dim(); ++i)
    out << "  " << A.labels()[i] << "  degree " << A.group().to_string(A.grade_of(i)) << "\n";
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = i + 1; j < A.dim(); ++j)
      if (!is_zero(A.structure(i, j)))
        out << "  [" << A.labels()[i] << ", " << A.labels()[j] << "] = " << format_element(A, A.structure(i, j)) << "\n";
  return kExitOk;
}

int cmd_algebra_validate(const Settings& s, const std::string& path, const std::string& field, std::ostream& out) {
  try {
    const GradedAlgebra A = load_algebra_file(path, field_option(field));
    if (s.json)
      emit(out, json{{"op", "algebra validate"}, {"algebra", A.name()}, {"valid", true}, {"dim", A.dim()}});
    else
      out << "valid: " << describe(A) << ", dim " << A.dim() << ", graded by " << A.group().name() << "\n";
    return kExitOk;
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::AntisymmetryViolation:
      case ErrorCode::JacobiViolation:
      case ErrorCode::GradingViolation:
      case ErrorCode::NotClosed:
        if (s.json)
          emit(out, json{{"op", "algebra validate"}, {"valid", false}, {"error", std::string(to_string(e.code()))},
                         {"message", e.detail()}});
        else
          out << "invalid: " << e.what() << "\n";
        return kExitNegative;
      default:
        throw;
    }
  }
}

int cmd_verify(const Settings& s, const std::string& alg, const std::string& field, const std::string& basis_path,
               const std::string& ident, std::ostream& out) {
  const GradedAlgebra A = resolve_algebra(alg, field_option(field));
  const BasisFile B = load_basis(basis_path, A.field().q());
  require_compatible(B.profile, A);
  std::vector<const Identity*> chosen;
  if (ident.empty())
    for (const auto& id : B.identities) chosen.push_back(&id);
  else
    chosen.push_back(&B.find(ident));
  const EngineOptions opts = engine_options(s);
  json results = json::array();
  std::size_t holding = 0;
  if (!s.json) out << describe(A) << ", basis " << basis_path << " (profile " << B.profile.name() << ")\n";
  for (const auto* id : chosen) {
    const VerifyReport r = verify_identity(*id->expr, id->name, A, B.profile, opts);
    holding += r.holds ? 1 : 0;
    results.push_back(verify_json(A, r));
    if (s.json) continue;
    if (r.holds)
      out << "  " << id->name << ": holds (" << r.substitutions_checked << " substitutions)\n";
    else
      out << "  " << id->name << ": FAILS at substitution " << r.substitutions_checked << ": "
          << format_assignment(A, *r.counterexample) << " gives " << format_element(A, r.value) << "\n";
  }
  const bool all = holding == chosen.size();
  if (s.json)
    emit(out, json{{"op", "verify"},
                   {"algebra", A.name()},
                   {"field", A.field().spec()},
                   {"basis", basis_path},
                   {"results", results},
                   {"verdict", all ? "holds" : "fails"}});
  else
    out << holding << " of " << chosen.size() << " identities hold\n";
  return all ? kExitOk : kExitNegative;
}

void print_span(std::ostream& out, const FieldContext& F, const CellSpan& span) {
  for (const auto& t : span_texts(F, span)) out << "  " << t << "\n";
}

int cmd_kernel(const Settings& s, const std::string& alg, const std::string& field, const std::string& cell,
               std::ostream& out) {
  const GradedAlgebra A = resolve_algebra(alg, field_option(field));
  const GradingProfile profile = GradingProfile::for_group(A.group());
  const Multidegree d = Multidegree::parse(cell);
  const CellSpan k = identity_kernel(A, profile, d, engine_options(s));
  if (s.json) {
    emit(out, span_json("kernel", A.name(), A.field(), k, "exact"));
  } else {
    out << "identity kernel of " << describe(A) << " in cell " << d.to_string() << "\n";
    out << "ambient dim " << k.ambient_dim << ", kernel dim " << k.dim() << "\n";
    print_span(out, A.field(), k);
  }
  return kExitOk;
}

int cmd_consequences(const Settings& s, const std::string& basis_path, const std::string& field,
                     const std::string& cell, const std::string& limits_text, std::ostream& out) {
  const FieldContext F = basis_field(field, basis_path);
  const BasisFile B = load_basis(basis_path, F.q());
  const Multidegree d = Multidegree::parse(cell);
  const ConsequenceReport r = consequence_span(B, F, d, parse_limits(limits_text), engine_options(s));
  if (s.json) {
    json j = span_json("consequences", basis_path, F, r.span, "lower bound");
    j["instances"] = r.instances;
    j["ambient_columns"] = r.ambient_columns;
    j["skipped"] = r.skipped;
    j["warnings"] = r.warnings;
    emit(out, j);
  } else {
    out << "consequences of " << basis_path << " over GF(" << F.spec() << ") in cell " << d.to_string()
        << " (lower bound)\n";
    out << "ambient dim " << r.span.ambient_dim << ", span dim " << r.span.dim() << "\n";
    print_span(out, F, r.span);
    out << "instances " << r.instances << "\n";
    if (!r.skipped.empty()) {
      out << "skipped (degree above cap):";
      for (const auto& n : r.skipped) out << " " << n;
      out << "\n";
    }
    for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  }
  return kExitOk;
}

int cmd_compare_spans(const Settings& s, const std::string& alg, const std::string& field,
                      const std::string& basis_path, const std::string& cell, const std::string& limits_text,
                      std::ostream& out) {
  const GradedAlgebra A = resolve_algebra(alg, field_option(field));
  const BasisFile B = load_basis(basis_path, A.field().q());
  require_compatible(B.profile, A);
  const Multidegree d = Multidegree::parse(cell);
  const EngineOptions opts = engine_options(s);
  const ConsequenceReport c = consequence_span(B, A.field(), d, parse_limits(limits_text), opts);
  const CellSpan k = identity_kernel(A, B.profile, d, opts);
  const SpanRelation rel = compare_spans(A.field(), c.span, k);
  const long long gap = static_cast<long long>(k.dim()) - static_cast<long long>(c.span.dim());
  if (s.json) {
    emit(out, json{{"op", "compare-spans"},
                   {"algebra", A.name()},
                   {"basis", basis_path},
                   {"cell", cell_json(d)},
                   {"ambient_dim", k.ambient_dim},
                   {"consequence_dim", c.span.dim()},
                   {"kernel_dim", k.dim()},
                   {"gap", gap},
                   {"verdict", to_string(rel)}});
  } else {
    out << "cell " << d.to_string() << " on " << describe(A) << " with " << basis_path << "\n";
    out << "consequence dim " << c.span.dim() << ", kernel dim " << k.dim() << ", ambient dim " << k.ambient_dim
        << "\n";
    out << "relation: " << to_string(rel);
    if (rel == SpanRelation::ASubsetB) out << " (gap " << gap << ")";
    out << "\n";
  }
  return rel == SpanRelation::Equal ? kExitOk : kExitNegative;
}

int cmd_compare_kernels(const Settings& s, const std::string& a, const std::string& b, const std::string& field,
                        int max_total, const std::vector<std::string>& cells, std::ostream& out) {
  const GradedAlgebra A = resolve_algebra(a, field_option(field));
  const GradedAlgebra B = resolve_algebra(b, field_option(field));
  const GradingProfile profile = GradingProfile::for_group(A.group());
  std::vector<Multidegree> ds;
  for (const auto& c : cells) ds.push_back(Multidegree::parse(c));
  if (max_total > 0)
    for (const auto& d : multilinear_cells(profile, max_total)) ds.push_back(d);
  if (ds.empty()) throw Error(ErrorCode::InvalidArgument, "give --cell or --max-total-degree");
  const auto cmp = compare_algebra_kernels(A, B, profile, ds, engine_options(s));
  std::size_t differing = 0;
  json rows = json::array();
  if (!s.json) out << "identity kernels of " << describe(A) << " and " << B.name() << "\n";
  for (const auto& c : cmp) {
    differing += c.relation == SpanRelation::Equal ? 0 : 1;
    rows.push_back(json{{"cell", cell_json(c.cell)}, {"dim_a", c.dim_a}, {"dim_b", c.dim_b}, {"verdict", to_string(c.relation)}});
    if (!s.json)
      out << "  " << c.cell.to_string() << "  " << c.dim_a << " / " << c.dim_b << "  " << to_string(c.relation) << "\n";
  }
  if (s.json)
    emit(out, json{{"op", "compare-kernels"},
                   {"a", A.name()},
                   {"b", B.name()},
                   {"field", A.field().spec()},
                   {"cells", rows},
                   {"verdict", differing == 0 ? "equal" : "different"}});
  else if (differing == 0)
    out << "equal in all " << cmp.size() << " cells\n";
  else
    out << differing << " of " << cmp.size() << " cells differ\n";
  return differing == 0 ? kExitOk : kExitNegative;
}

int cmd_analyze(const Settings& s, const std::string& alg, const std::string& field, bool ungraded,
                std::ostream& out) {
  const GradedAlgebra A = resolve_algebra(alg, field_option(field));
  const Flavor flavor = ungraded ? Flavor::Ungraded : Flavor::Graded;
  const Budget budget = default_budget();
  const FieldContext& F = A.field();
  auto dims = [](const std::vector<Subspace>& series) {
    std::vector<std::size_t> d;
    for (const auto& S : series) d.push_back(S.dim());
    return d;
  };
  const Subspace Z = center(A);
  const auto derived = derived_series(A);
  const auto lower = lower_central(A);
  const Subspace nil = nilradical(A, flavor, budget);
  const Subspace rad = radical(A, flavor, budget);
  const MonolithResult mono = monolith(A, flavor, budget);
  const AAlgebraResult aa = is_A_algebra(A, budget);
  const SheinaReport sheina = sheina_criterion(A, flavor, budget);
  const PremetReport premet = check_premet_predicates(A, budget);
  if (s.json) {
    json minimal = json::array();
    for (const auto& I : mono.minimal_ideals) minimal.push_back(subspace_json(A, I));
    json j{{"op", "analyze"},
           {"algebra", A.name()},
           {"field", F.spec()},
           {"flavor", to_string(flavor)},
           {"dim", A.dim()},
           {"center", subspace_json(A, Z)},
           {"derived_series_dims", dims(derived)},
           {"lower_central_dims", dims(lower)},
           {"nilradical", subspace_json(A, nil)},
           {"radical", subspace_json(A, rad)},
           {"minimal_ideals", minimal},
           {"monolith", mono.monolith ? subspace_json(A, *mono.monolith) : json(nullptr)},
           {"a_algebra", aa.holds},
           {"a_algebra_witness", aa.witness ? subspace_json(A, *aa.witness) : json(nullptr)},
           {"sheina_criterion", sheina.criterion()},
           {"derived_meets_center_trivially", premet.derived_meets_center_trivially},
           {"semisimple", premet.semisimple},
           {"graded_simple_decomposition",
            premet.graded_simple_decomposition ? json(*premet.graded_simple_decomposition) : json(nullptr)},
           {"hypothesis_path", premet.hypothesis_path}};
    emit(out, j);
    return kExitOk;
  }
  auto join = [](const std::vector<std::size_t>& v) {
    std::string o;
    for (std::size_t i = 0; i < v.size(); ++i) o += (i ? ", " : "") + std::to_string(v[i]);
    return o;
  };
  out << describe(A) << ", " << to_string(flavor) << " analysis\n";
  out << "dim " << A.dim() << ", graded by " << A.group().name() << "\n";
  out << "center: " << format_subspace(A, Z) << "\n";
  out << "derived series dims: " << join(dims(derived)) << "\n";
  out << "lower central series dims: " << join(dims(lower)) << "\n";
  out << "nilradical: " << format_subspace(A, nil) << "\n";
  out << "radical: " << format_subspace(A, rad) << "\n";
  out << "minimal ideals:";
  for (const auto& I : mono.minimal_ideals) out << " " << format_subspace(A, I);
  out << "\n";
  out << "monolith: " << (mono.monolith ? format_subspace(A, *mono.monolith) : std::string("none")) << "\n";
  out << "A-algebra: " << yes_no(aa.holds);
  if (aa.witness) out << " (witness " << format_subspace(A, *aa.witness) << ")";
  out << "\n";
  out << "sheina criterion: " << yes_no(sheina.criterion());
  if (!sheina.monolithic) out << " (algebra is not monolithic)";
  out << "\n";
  out << "[L,L] meets Z(L) trivially: " << yes_no(premet.derived_meets_center_trivially) << "\n";
  out << "semisimple: " << yes_no(premet.semisimple) << "\n";
  if (premet.graded_simple_decomposition)
    out << "direct sum of graded simple ideals: " << yes_no(*premet.graded_simple_decomposition) << " ("
        << premet.hypothesis_path << ")\n";
  return kExitOk;
}

int cmd_spectrum(const Settings& s, const std::string& alg, const std::string& field, const std::string& element,
                 std::ostream& out) {
  const GradedAlgebra A = resolve_algebra(alg, field_option(field));
  const SpectrumReport r = spectrum(A, parse_element(A, element));
  if (s.json) {
    emit(out, spectrum_json(A, r));
    return kExitOk;
  }
  const FieldContext& F = A.field();
  out << "ad(" << format_element(A, r.element) << ") on " << describe(A) << "\n";
  out << "minimal polynomial: " << format_poly(F, r.min_poly) << "\n";
  for (std::size_t i = 0; i < r.eigenvalues.size(); ++i)
    out << "eigenvalue " << F.to_string(r.eigenvalues[i]) << ": " << format_subspace(A, r.eigenspaces[i]) << "\n";
  out << "diagonalizable: " << yes_no(r.diagonalizable) << "\n";
  out << "homogeneous eigenbasis: " << yes_no(r.homogeneous_eigenbasis) << "\n";
  return kExitOk;
}

int cmd_selfcheck(const Settings& s, std::uint64_t seed, int trees, int assignments, std::ostream& out) {
  const GradedAlgebra A = builtin("sl2_z2", make_field(5, 1));
  const SelfcheckReport r = run_selfcheck(A, GradingProfile::z2(), seed, trees, assignments);
  if (s.json)
    emit(out, json{{"op", "selfcheck"},
                   {"seed", r.seed},
                   {"trees", r.trees},
                   {"assignments", r.assignments},
                   {"mismatches", r.mismatches},
                   {"verdict", r.mismatches == 0 ? "agree" : "disagree"}});
  else
    out << "selfcheck seed " << r.seed << ": " << r.trees << " trees x " << r.assignments << " assignments on "
        << describe(A) << ", " << r.mismatches << " mismatches\n";
  if (r.mismatches != 0 && !s.json) out << "first mismatch: " << r.first_mismatch << "\n";
  return r.mismatches == 0 ? kExitOk : kExitNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded polynomial identities of small Lie algebras over finite fields", "gradedpi"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings settings;
  app.add_flag("--json", settings.json, "Emit JSON reports");
  app.add_option("--threads", settings.threads, "Worker threads")->check(CLI::Range(1u, 256u));

  std::string field, alg, basis, ident, cell, limits, a, b, element;
  std::vector<std::string> cells;
  int max_total = 0;
  bool multilinear = false, graded = false, ungraded = false;
  std::uint64_t seed = 1;
  int trees = 200, assignments = 20;

  auto* algebra = app.add_subcommand("algebra", "List, show or validate algebras");
  algebra->require_subcommand(1);
  auto* list = algebra->add_subcommand("list", "Built-in algebras");
  auto* show = algebra->add_subcommand("show", "Basis, grades and brackets");
  show->add_option("name", alg, "Built-in name or JSON file")->required();
  show->add_option("--field", field, "Field, e.g. 5 or 5^2");
  auto* validate = algebra->add_subcommand("validate", "Check an algebra JSON file");
  validate->add_option("file", alg, "JSON file")->required();
  validate->add_option("--field", field, "Field override");

  auto* verify = app.add_subcommand("verify", "Check identities exhaustively");
  verify->add_option("--algebra", alg)->required();
  verify->add_option("--field", field);
  verify->add_option("--basis", basis)->required();
  verify->add_option("--ident", ident, "Only this identity");

  auto* kernel = app.add_subcommand("kernel", "Identities of an algebra in one cell");
  kernel->add_option("--algebra", alg)->required();
  kernel->add_option("--field", field);
  kernel->add_option("--cell", cell, "e.g. \"y1:1,z1:1\"")->required();

  auto* cons = app.add_subcommand("consequences", "Consequences of a basis file in one cell");
  cons->add_option("--basis", basis)->required();
  cons->add_option("--field", field);
  cons->add_option("--cell", cell)->required();
  cons->add_option("--limits", limits, "s,r,margin (default 2,2,0)");

  auto* cspans = app.add_subcommand("compare-spans", "Consequences of a basis against the identity kernel");
  cspans->add_option("--algebra", alg)->required();
  cspans->add_option("--basis", basis)->required();
  cspans->add_option("--field", field);
  cspans->add_option("--cell", cell)->required();
  cspans->add_option("--limits", limits, "s,r,margin (default 2,2,0)");

  auto* ckernels = app.add_subcommand("compare-kernels", "Identity kernels of two algebras");
  ckernels->add_option("--a", a)->required();
  ckernels->add_option("--b", b)->required();
  ckernels->add_option("--field", field);
  ckernels->add_option("--cell", cells, "Cell to compare (repeatable)");
  ckernels->add_option("--max-total-degree", max_total, "Compare all multilinear cells up to this degree");
  ckernels->add_flag("--multilinear", multilinear, "Cells are multilinear (the only generated kind)");

  auto* analyze = app.add_subcommand("analyze", "Structure report");
  analyze->add_option("--algebra", alg)->required();
  analyze->add_option("--field", field);
  auto* g1 = analyze->add_flag("--graded", graded, "Graded ideals only (default)");
  auto* g2 = analyze->add_flag("--ungraded", ungraded, "All ideals");
  g1->excludes(g2);

  auto* spec = app.add_subcommand("spectrum", "Spectrum of ad(u)");
  spec->add_option("--algebra", alg)->required();
  spec->add_option("--field", field);
  spec->add_option("--element", element)->required();

  auto* self = app.add_subcommand("selfcheck", "Normal form against structural evaluation on random trees");
  self->add_option("--seed", seed);
  self->add_option("--trees", trees)->check(CLI::PositiveNumber);
  self->add_option("--assignments", assignments)->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (list->parsed()) return cmd_algebra_list(settings, out);
    if (show->parsed()) return cmd_algebra_show(settings, alg, field, out);
    if (validate->parsed()) return cmd_algebra_validate(settings, alg, field, out);
    if (verify->parsed()) return cmd_verify(settings, alg, field, basis, ident, out);
    if (kernel->parsed()) return cmd_kernel(settings, alg, field, cell, out);
    if (cons->parsed()) return cmd_consequences(settings, basis, field, cell, limits, out);
    if (cspans->parsed()) return cmd_compare_spans(settings, alg, field, basis, cell, limits, out);
    if (ckernels->parsed()) return cmd_compare_kernels(settings, a, b, field, max_total, cells, out);
    if (analyze->parsed()) return cmd_analyze(settings, alg, field, ungraded, out);
    if (spec->parsed()) return cmd_spectrum(settings, alg, field, element, out);
    if (self->parsed()) return cmd_selfcheck(settings, seed, trees, assignments, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace gradedpi
