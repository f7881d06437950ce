// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gradedpi/dsl.hpp"
#include "gradedpi/engine.hpp"
#include "gradedpi/error.hpp"
#include "gradedpi/io.hpp"
#include "gradedpi/selfcheck.hpp"
#include "gradedpi/structure.hpp"
#include "oracle.hpp"

using namespace gradedpi;

namespace {

// Collects failed checks of one criterion.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    std::string s;
    for (const auto& f : failures_) s += (s.empty() ? "" : "; ") + f;
    return s;
  }

 private:
  std::vector<std::string> failures_;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<void(Checks&)> body;
};

void verify_all(Checks& c, const GradedAlgebra& A, const BasisFile& B, std::size_t expected,
                std::uint64_t max_tuples) {
  c.expect(B.identities.size() == expected, "expected " + std::to_string(expected) + " identities");
  for (const auto& id : B.identities) {
    const auto r = verify_identity(*id.expr, id.name, A, B.profile);
    c.expect(r.holds, id.name + " fails on " + A.name());
    c.expect(r.substitutions_checked <= max_tuples, id.name + " used " + std::to_string(r.substitutions_checked) + " tuples");
  }
}

void z2_basis(Checks& c) {
  const auto F = make_field(5, 1);
  const auto B = load_basis("beta_z2.lie", F.q());
  verify_all(c, builtin("sl2_z2", F), B, 4, 15625);
  c.expect(to_string(*B.find("sem1").expr).find("^27") != std::string::npos, "sem1 exponent q^2+2 is not 27");
}

void z3_basis(Checks& c) {
  const auto F = make_field(7, 1);
  verify_all(c, builtin("sl2_z3", F), load_basis("beta2_z3.lie", F.q()), 7, 343 * 343);
  try {
    builtin("sl2_z3", make_field(5, 1));
    c.expect(false, "sl2_z3 over GF(5) was built");
  } catch (const Error& e) {
    c.expect(e.code() == ErrorCode::CubeRootMissing, "sl2_z3 over GF(5) raised " + std::string(to_string(e.code())));
  }
  c.expect(builtin("sl2_z3", make_field(5, 2)).dim() == 3, "sl2_z3 over GF(25) failed");
}

void z2z2_basis(Checks& c) {
  const auto F = make_field(5, 1);
  const auto A = builtin("sl2_z2z2", F);
  const auto B = load_basis("beta3_z2z2.lie", F.q());
  verify_all(c, A, B, 6, 15625);
  c.expect(A.component(A.group().zero()).empty(), "w component is not zero");
  const auto w = verify_identity(*B.identities.front().expr, "w1", A, B.profile);
  c.expect(w.holds && w.substitutions_checked == 1, "w1 did not hold with one substitution");
}

void gl2_equals_sl2(Checks& c) {
  const auto F = make_field(5, 1);
  const auto profile = GradingProfile::z2();
  const auto cells = multilinear_cells(profile, 3);
  const auto cmp = compare_algebra_kernels(builtin("gl2_z2", F), builtin("sl2_z2", F), profile, cells);
  c.expect(cmp.size() == cells.size(), "missing cells");
  for (const auto& k : cmp)
    c.expect(k.relation == SpanRelation::Equal, "kernels differ at " + k.cell.to_string());
}

void kernel_equals_consequences(Checks& c) {
  const auto F = make_field(5, 1);
  const auto A = builtin("sl2_z2", F);
  const auto profile = GradingProfile::z2();
  const auto S = load_basis("beta_z2.lie", F.q());
  struct Pinned {
    oracle::Letters letters;
    std::size_t dim;  // frozen oracle value
  };
  const std::vector<Pinned> pinned = {
      {{"y1", "y2"}, 1}, {{"y1", "y2", "z1"}, 1}, {{"z1", "z2", "y1"}, 1}, {{"z1", "z2", "z3"}, 0}};
  for (const auto& p : pinned) {
    std::string text;
    for (const auto& l : p.letters) text += (text.empty() ? "" : ",") + l;
    const auto d = Multidegree::parse(text);
    const auto live = oracle::beta_z2_consequence_dim(p.letters, 5);
    c.expect(live == p.dim, "oracle gives " + std::to_string(live) + " at " + text);
    c.expect(oracle::multilinear_kernel_dim(oracle::sl2_z2(5), p.letters) == p.dim, "oracle kernel differs at " + text);
    const auto kernel = identity_kernel(A, profile, d);
    const auto cons = consequence_span(S, F, d, ConsequenceLimits{2, 2, 0}).span;
    c.expect(kernel.dim() == p.dim, "kernel dim " + std::to_string(kernel.dim()) + " at " + text);
    c.expect(cons.dim() == p.dim, "consequence dim " + std::to_string(cons.dim()) + " at " + text);
    c.expect(compare_spans(F, cons, kernel) == SpanRelation::Equal, "spans differ at " + text);
  }
  for (const char* text : {"y1,z1", "y1,y2,y3", "z1:2,y1", "y1:2,z1", "y1,z1,z2,z3"}) {
    const auto d = Multidegree::parse(text);
    const auto rel = compare_spans(F, consequence_span(S, F, d).span, identity_kernel(A, profile, d));
    c.expect(rel == SpanRelation::Equal || rel == SpanRelation::ASubsetB, std::string("containment fails at ") + text);
  }
}

void lemma_suite(Checks& c) {
  const auto F = make_field(5, 1);
  const auto A = builtin("b2_z2", F);
  const auto B = load_basis("b2_z2.lie", F.q());
  verify_all(c, A, B, 3, 125);
  const auto frob = verify_identity(*parse_poly("[z1, y1^5] - [z1, y1]", B.profile, 5), "frob", A, B.profile);
  c.expect(frob.holds, "[z1, y1^5] - [z1, y1] fails");
  c.expect(identity_kernel(A, B.profile, Multidegree::parse("z1,z2")).dim() == 1, "kernel at z1,z2 is not 1");
  const auto file = load_algebra_file(resolve_data_file("b2_z2.json"));
  c.expect(file.structure() == A.structure(), "b2_z2.json differs from the built-in");
}

void spectral_suite(Checks& c) {
  const auto F = make_field(5, 1);
  const auto A = builtin("sl2_z2", F);
  const auto s = spectrum(A, parse_element(A, "h"));
  c.expect(s.eigenvalues == std::vector<FieldElement>{F.from_int(0), F.from_int(2), F.from_int(3)}, "eigenvalues");
  for (const auto& e : s.eigenspaces) c.expect(e.dim() == 1, "eigenspace of dim " + std::to_string(e.dim()));
  c.expect(s.homogeneous_eigenbasis, "ad h has no homogeneous eigenbasis");
  UPoly frob(6, F.zero());
  frob[1] = F.from_int(-1);
  frob[5] = F.one();
  const auto even = A.component(A.group().zero());
  for (std::uint32_t k = 0; k < F.q(); ++k) {
    Vec u = zero_vec(A.dim());
    u[even.front()] = F.element(k);
    const auto r = spectrum(A, u);
    c.expect(poly_divides(F, r.min_poly, frob), "min poly does not divide t^5 - t");
    c.expect(r.diagonalizable && r.homogeneous_eigenbasis, "element " + format_element(A, u));
  }
  c.expect(even.size() == 1, "grade-0 component is not a line");
}

void structure_suite(Checks& c) {
  const auto F = make_field(5, 1);
  const auto m1 = builtin("m1_z", F);
  const auto e12 = Subspace(F, 2, {parse_element(m1, "e12")});
  for (auto flavor : {Flavor::Graded, Flavor::Ungraded}) {
    c.expect(nilradical(m1, flavor) == e12, "nilradical(M1), " + to_string(flavor));
    c.expect(sheina_criterion(m1, flavor).criterion(), "sheina(M1), " + to_string(flavor));
  }
  c.expect(derived_algebra(m1) == e12, "[M1, M1]");
  const auto sl2 = builtin("sl2_z2", F);
  c.expect(require_monolith(sl2, Flavor::Graded) == whole(sl2), "monolith(sl2)");
  c.expect(require_monolith(sl2, Flavor::Ungraded) == whole(sl2), "ungraded monolith(sl2)");
  c.expect(is_A_algebra(sl2).holds, "sl2 is not an A-algebra");
  for (const auto& name : builtin_names()) {
    const auto A = builtin(name, default_field_for(name));
    c.expect(intersect(A.field(), derived_algebra(A), center(A)).dim() == 0, "[L,L] meets Z(L) in " + name);
  }
  c.expect(!is_A_algebra(heisenberg_algebra(F)).holds, "Heisenberg passes is_A_algebra");
}

void free_algebra_suite(Checks& c) {
  const std::vector<GradedVar> vars{{'y', 1}, {'y', 2}, {'z', 1}};
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; a + b <= 6; ++b)
      for (int e = 0; a + b + e <= 6; ++e) {
        if (a + b + e == 0) continue;
        std::map<GradedVar, int> exps;
        if (a) exps[vars[0]] = a;
        if (b) exps[vars[1]] = b;
        if (e) exps[vars[2]] = e;
        const Multidegree d(exps);
        const auto n = lyndon_basis(d).size();
        c.expect(n == witt_dimension(d), "witt mismatch at " + d.to_string());
        c.expect(n == oracle::aperiodic_classes({a, b, e}), "necklace mismatch at " + d.to_string());
      }
  const auto F = make_field(5, 1);
  const auto r = run_selfcheck(builtin("sl2_z2", F), GradingProfile::z2(), 20240611, 200, 20);
  c.expect(r.mismatches == 0, "normalize differs from evaluation: " + r.first_mismatch);
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Z2 basis holds on sl2 over GF(5)", 5, z2_basis},
      {2, "Z3 basis holds on sl2 over GF(7); cube root required", 60, z3_basis},
      {3, "Z2xZ2 basis holds on sl2 over GF(5)", 30, z2z2_basis},
      {4, "gl2 and sl2 kernels agree on multilinear cells up to degree 3", 60, gl2_equals_sl2},
      {5, "kernel equals consequences at pinned cells", 300, kernel_equals_consequences},
      {6, "identities of span{e11, e12}", 30, lemma_suite},
      {7, "spectra of even elements", 30, spectral_suite},
      {8, "structure suite", 120, structure_suite},
      {9, "free Lie algebra oracles", 60, free_algebra_suite},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Checks checks;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(checks);
    } catch (const std::exception& e) {
      checks.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    checks.expect(secs <= cr.limit_seconds, "over the time limit");
    std::ostringstream line;
    line << (checks.ok() ? "PASS" : "FAIL") << " " << cr.id << " " << cr.title << " (" << std::fixed
         << std::setprecision(2) << secs << " s, limit " << std::setprecision(0) << cr.limit_seconds << " s)";
    if (!checks.ok()) line << ": " << checks.summary();
    std::cout << line.str() << std::endl;
    if (!checks.ok()) ++failed;
  }
  std::cout << (criteria.size() - failed) << " of " << criteria.size() << " criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
