#include "gradedpi/expr.hpp"

#include <algorithm>
#include <stdexcept>

#include "gradedpi/error.hpp"

namespace gradedpi {

ExprPtr Expr::var(GradedVar v) {
  auto e = std::shared_ptr<Expr>(new Expr());
  e->kind_ = ExprKind::Var;
  e->var_ = v;
  return e;
}

ExprPtr Expr::sum(std::vector<Term> terms) {
  if (terms.empty()) throw Error(ErrorCode::InvalidArgument, "empty sum");
  if (terms.size() == 1 && terms[0].coeff == 1) return terms[0].expr;
  auto e = std::shared_ptr<Expr>(new Expr());
  e->kind_ = ExprKind::Sum;
  e->terms_ = std::move(terms);
  return e;
}

ExprPtr Expr::bracket(std::vector<ExprPtr> slots) {
  if (slots.size() < 2) throw Error(ErrorCode::InvalidArgument, "a bracket needs at least two slots");
  auto e = std::shared_ptr<Expr>(new Expr());
  e->kind_ = ExprKind::Bracket;
  e->slots_ = std::move(slots);
  return e;
}

ExprPtr Expr::power(ExprPtr base, long long k) {
  if (k <= 0) throw Error(ErrorCode::NonPositiveExponent, "exponent " + std::to_string(k) + " is not positive");
  if (k == 1) return base;
  auto e = std::shared_ptr<Expr>(new Expr());
  e->kind_ = ExprKind::Power;
  e->slots_ = {std::move(base)};
  e->exponent_ = k;
  return e;
}

ExprPtr difference(ExprPtr a, ExprPtr b) { return Expr::sum({{1, std::move(a)}, {-1, std::move(b)}}); }

bool same_tree(const Expr& a, const Expr& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ExprKind::Var:
      return a.variable() == b.variable();
    case ExprKind::Sum:
      if (a.terms().size() != b.terms().size()) return false;
      for (std::size_t i = 0; i < a.terms().size(); ++i)
        if (a.terms()[i].coeff != b.terms()[i].coeff || !same_tree(*a.terms()[i].expr, *b.terms()[i].expr))
          return false;
      return true;
    case ExprKind::Bracket:
      if (a.slots().size() != b.slots().size()) return false;
      for (std::size_t i = 0; i < a.slots().size(); ++i)
        if (!same_tree(*a.slots()[i], *b.slots()[i])) return false;
      return true;
    case ExprKind::Power:
      return a.exponent() == b.exponent() && same_tree(*a.base(), *b.base());
  }
  return false;
}

std::string to_string(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Var:
      return to_string(e.variable());
    case ExprKind::Sum: {
      std::string out;
      for (std::size_t i = 0; i < e.terms().size(); ++i) {
        const auto& [c, t] = e.terms()[i];
        if (i == 0)
          out += c < 0 ? "-" : "";
        else
          out += c < 0 ? " - " : " + ";
        const long long mag = c < 0 ? -c : c;
        if (mag != 1) out += std::to_string(mag) + "*";
        out += t->kind() == ExprKind::Sum ? "(" + to_string(*t) + ")" : to_string(*t);
      }
      return out;
    }
    case ExprKind::Bracket: {
      std::string out = "[";
      for (std::size_t i = 0; i < e.slots().size(); ++i) {
        if (i) out += ", ";
        out += to_string(*e.slots()[i]);
      }
      return out + "]";
    }
    case ExprKind::Power: {
      const Expr& b = *e.base();
      std::string base = b.kind() == ExprKind::Sum ? "(" + to_string(b) + ")" : to_string(b);
      return base + "^" + std::to_string(e.exponent());
    }
  }
  return {};
}

bool is_operator(const Expr& e) {
  if (e.kind() == ExprKind::Power) return true;
  if (e.kind() == ExprKind::Sum)
    return std::any_of(e.terms().begin(), e.terms().end(), [](const Term& t) { return is_operator(*t.expr); });
  return false;
}

namespace {

void collect(const Expr& e, std::set<GradedVar>& out) {
  switch (e.kind()) {
    case ExprKind::Var:
      out.insert(e.variable());
      break;
    case ExprKind::Sum:
      for (const auto& t : e.terms()) collect(*t.expr, out);
      break;
    case ExprKind::Bracket:
    case ExprKind::Power:
      for (const auto& s : e.slots()) collect(*s, out);
      break;
  }
}

}  // namespace

std::set<GradedVar> variables(const Expr& e) {
  std::set<GradedVar> out;
  collect(e, out);
  return out;
}

long long max_degree(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Var:
      return 1;
    case ExprKind::Sum: {
      long long d = 0;
      for (const auto& t : e.terms()) d = std::max(d, max_degree(*t.expr));
      return d;
    }
    case ExprKind::Bracket: {
      long long d = 0;
      for (const auto& s : e.slots()) d += max_degree(*s);
      return d;
    }
    case ExprKind::Power:
      return e.exponent() * max_degree(*e.base());
  }
  return 0;
}

Evaluator::Evaluator(const GradedAlgebra& A, const Expr& e) : algebra_(&A) {
  const auto vars = gradedpi::variables(e);
  vars_.assign(vars.begin(), vars.end());
  std::map<GradedVar, std::size_t> index;
  for (std::size_t i = 0; i < vars_.size(); ++i) index[vars_[i]] = i;
  root_ = compile(e, index);
  if (nodes_[root_].op) throw Error(ErrorCode::InvalidArgument, "a power is only meaningful inside a bracket");
}

std::size_t Evaluator::compile(const Expr& e, const std::map<GradedVar, std::size_t>& index) {
  Node n;
  n.kind = e.kind();
  n.op = is_operator(e);
  switch (e.kind()) {
    case ExprKind::Var:
      n.var = index.at(e.variable());
      break;
    case ExprKind::Sum:
      for (const auto& t : e.terms()) n.terms.emplace_back(algebra_->field().from_int(t.coeff), compile(*t.expr, index));
      break;
    case ExprKind::Bracket:
    case ExprKind::Power:
      for (const auto& s : e.slots()) n.slots.push_back(compile(*s, index));
      n.exponent = static_cast<std::uint64_t>(e.exponent());
      break;
  }
  nodes_.push_back(std::move(n));
  return nodes_.size() - 1;
}

Vec Evaluator::operator()(const std::vector<Vec>& values) const { return value(root_, values); }

Vec Evaluator::value(std::size_t id, const std::vector<Vec>& values) const {
  const Node& n = nodes_[id];
  const GradedAlgebra& A = *algebra_;
  switch (n.kind) {
    case ExprKind::Var:
      return values[n.var];
    case ExprKind::Sum: {
      Vec out = zero_vec(A.dim());
      for (const auto& [c, t] : n.terms) axpy(A.field(), out, c, value(t, values));
      return out;
    }
    case ExprKind::Bracket: {
      Vec acc;
      std::size_t i = 1;
      if (nodes_[n.slots[0]].op) {
        acc = scaled(A.field(), A.field().neg(A.field().one()), act(n.slots[0], value(n.slots[1], values), values));
        i = 2;
      } else {
        acc = value(n.slots[0], values);
      }
      for (; i < n.slots.size(); ++i) acc = act(n.slots[i], acc, values);
      return acc;
    }
    case ExprKind::Power:
      break;
  }
  throw std::logic_error("power evaluated outside a bracket");
}

Vec Evaluator::act(std::size_t id, const Vec& y, const std::vector<Vec>& values) const {
  const Node& n = nodes_[id];
  const GradedAlgebra& A = *algebra_;
  if (n.kind == ExprKind::Power) {
    const Matrix m = A.ad_matrix(value(n.slots[0], values));
    Vec out = y;
    for (std::uint64_t k = 0; k < n.exponent && !is_zero(out); ++k) out = apply(A.field(), m, out);
    return out;
  }
  if (n.kind == ExprKind::Sum && n.op) {
    Vec out = zero_vec(A.dim());
    for (const auto& [c, t] : n.terms) axpy(A.field(), out, c, act(t, y, values));
    return out;
  }
  return A.bracket(y, value(id, values));
}

void check_assignment(const GradedAlgebra& A, const GradingProfile& profile, const Assignment& a) {
  require_compatible(profile, A);
  for (const auto& [v, x] : a) {
    if (x.size() != A.dim())
      throw Error(ErrorCode::InvalidArgument, "value of " + to_string(v) + " has the wrong length");
    const GroupElement& g = profile.grade(v);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i].code != 0 && !(A.grade_of(i) == g))
        throw Error(ErrorCode::GradeMismatch, "value of " + to_string(v) + " is not in the component of degree " +
                                                  A.group().to_string(g));
  }
}

Vec evaluate(const GradedAlgebra& A, const Expr& e, const Assignment& a) {
  Evaluator ev(A, e);
  std::vector<Vec> values;
  for (auto v : ev.variables()) {
    auto it = a.find(v);
    if (it == a.end()) throw Error(ErrorCode::InvalidArgument, "no value for " + to_string(v));
    values.push_back(it->second);
  }
  return ev(values);
}

Vec evaluate(const GradedAlgebra& A, const GradingProfile& profile, const Expr& e, const Assignment& a) {
  check_assignment(A, profile, a);
  return evaluate(A, e, a);
}

Vec evaluate_lyndon(const GradedAlgebra& A, const Word& w, const Assignment& a) {
  if (w.size() == 1) {
    auto it = a.find(w[0]);
    if (it == a.end()) throw Error(ErrorCode::InvalidArgument, "no value for " + to_string(w[0]));
    return it->second;
  }
  auto [u, v] = standard_factorization(w);
  return A.bracket(evaluate_lyndon(A, u, a), evaluate_lyndon(A, v, a));
}

Vec evaluate(const GradedAlgebra& A, const GradingProfile& profile, const LiePoly& p, const Assignment& a) {
  check_assignment(A, profile, a);
  Vec out = zero_vec(A.dim());
  for (const auto& [d, coords] : p.cells()) {
    const auto& basis = lyndon_basis(d, d.total());
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (coords[i].code != 0) axpy(A.field(), out, coords[i], evaluate_lyndon(A, basis[i], a));
  }
  return out;
}

namespace {

AssocPoly assoc_value(const FieldContext& F, const Expr& e);

AssocPoly assoc_act(const FieldContext& F, const Expr& slot, const AssocPoly& y) {
  if (slot.kind() == ExprKind::Power) {
    const AssocPoly b = assoc_value(F, *slot.base());
    AssocPoly out = y;
    for (long long k = 0; k < slot.exponent() && !out.empty(); ++k) out = assoc_commutator(F, out, b);
    return out;
  }
  if (slot.kind() == ExprKind::Sum && is_operator(slot)) {
    AssocPoly out;
    for (const auto& t : slot.terms()) add_scaled(F, out, F.from_int(t.coeff), assoc_act(F, *t.expr, y));
    return out;
  }
  return assoc_commutator(F, y, assoc_value(F, slot));
}

AssocPoly assoc_value(const FieldContext& F, const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Var:
      return {{Word{e.variable()}, F.one()}};
    case ExprKind::Sum: {
      AssocPoly out;
      for (const auto& t : e.terms()) add_scaled(F, out, F.from_int(t.coeff), assoc_value(F, *t.expr));
      return out;
    }
    case ExprKind::Bracket: {
      AssocPoly acc;
      std::size_t i = 1;
      if (is_operator(*e.slots()[0])) {
        add_scaled(F, acc, F.neg(F.one()), assoc_act(F, *e.slots()[0], assoc_value(F, *e.slots()[1])));
        i = 2;
      } else {
        acc = assoc_value(F, *e.slots()[0]);
      }
      for (; i < e.slots().size(); ++i) acc = assoc_act(F, *e.slots()[i], acc);
      return acc;
    }
    case ExprKind::Power:
      break;
  }
  throw Error(ErrorCode::InvalidArgument, "a power is only meaningful inside a bracket");
}

}  // namespace

AssocPoly assoc_form(const FieldContext& F, const Expr& e, int cap) {
  const long long d = max_degree(e);
  if (d > cap)
    throw Error(ErrorCode::CapExceeded,
                "expression has degree " + std::to_string(d) + " above the cap " + std::to_string(cap));
  return assoc_value(F, e);
}

LiePoly normalize(const FieldContext& F, const Expr& e, int cap) {
  return lie_coordinates(F, assoc_form(F, e, cap), cap);
}

}  // namespace gradedpi
