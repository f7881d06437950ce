#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "gradedpi/algebra.hpp"
#include "gradedpi/freelie.hpp"
#include "gradedpi/profile.hpp"

namespace gradedpi {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class ExprKind { Var, Sum, Bracket, Power };

struct Term {
  long long coeff = 1;
  ExprPtr expr;
};

// Immutable expression tree over graded variables.
//
// [a1, ..., an] is left-normed.  Every slot after the first acts on the
// bracket built so far as an operator: a plain element e acts as ad(e), a
// power e^k as ad(e)^k, and a sum of such slots as the sum of operators.
// When the first slot is itself an operator P, [P, v, ...] starts from
// -(v P); this is the bracket [x^k, v] of a restricted algebra and is only
// accepted for k a power of the characteristic.
class Expr {
 public:
  static ExprPtr var(GradedVar v);
  // A single term with coefficient 1 collapses to the term itself.
  static ExprPtr sum(std::vector<Term> terms);
  static ExprPtr bracket(std::vector<ExprPtr> slots);
  // e^1 collapses to e.
  static ExprPtr power(ExprPtr base, long long k);

  ExprKind kind() const noexcept { return kind_; }
  GradedVar variable() const noexcept { return var_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const std::vector<ExprPtr>& slots() const noexcept { return slots_; }
  const ExprPtr& base() const noexcept { return slots_.front(); }
  long long exponent() const noexcept { return exponent_; }

 private:
  Expr() = default;

  ExprKind kind_ = ExprKind::Var;
  GradedVar var_;
  std::vector<Term> terms_;
  std::vector<ExprPtr> slots_;
  long long exponent_ = 0;
};

ExprPtr difference(ExprPtr a, ExprPtr b);

bool same_tree(const Expr& a, const Expr& b);
// Canonical text; parsing it back gives the same tree.
std::string to_string(const Expr& e);
// True when e contains a power outside any bracket, i.e. only makes sense as
// an operator slot.
bool is_operator(const Expr& e);
std::set<GradedVar> variables(const Expr& e);
// Largest total degree of any term.
long long max_degree(const Expr& e);

using Assignment = std::map<GradedVar, Vec>;

// Structural evaluation, compiled once per (algebra, expression).
class Evaluator {
 public:
  Evaluator(const GradedAlgebra& A, const Expr& e);

  // Sorted variables; operator() takes their values in this order.
  const std::vector<GradedVar>& variables() const noexcept { return vars_; }
  Vec operator()(const std::vector<Vec>& values) const;

 private:
  struct Node {
    ExprKind kind = ExprKind::Var;
    std::size_t var = 0;
    std::vector<std::pair<FieldElement, std::size_t>> terms;
    std::vector<std::size_t> slots;
    std::uint64_t exponent = 0;
    bool op = false;
  };

  std::size_t compile(const Expr& e, const std::map<GradedVar, std::size_t>& index);
  Vec value(std::size_t node, const std::vector<Vec>& values) const;
  Vec act(std::size_t node, const Vec& y, const std::vector<Vec>& values) const;

  const GradedAlgebra* algebra_;
  std::vector<GradedVar> vars_;
  std::vector<Node> nodes_;
  std::size_t root_ = 0;
};

// Throws InvalidArgument if a variable is unassigned.
Vec evaluate(const GradedAlgebra& A, const Expr& e, const Assignment& a);
// Also checks every assigned vector lies in its variable's component.
Vec evaluate(const GradedAlgebra& A, const GradingProfile& profile, const Expr& e, const Assignment& a);
Vec evaluate(const GradedAlgebra& A, const GradingProfile& profile, const LiePoly& p, const Assignment& a);
// Value of the standard bracketing of a Lyndon word.
Vec evaluate_lyndon(const GradedAlgebra& A, const Word& w, const Assignment& a);

// Throws GradeMismatch naming the variable.
void check_assignment(const GradedAlgebra& A, const GradingProfile& profile, const Assignment& a);

// Associative expansion; throws CapExceeded when max_degree(e) > cap.
AssocPoly assoc_form(const FieldContext& F, const Expr& e, int cap = kDefaultDegreeCap);
LiePoly normalize(const FieldContext& F, const Expr& e, int cap = kDefaultDegreeCap);

}  // namespace gradedpi
