#include "gradedpi/structure.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>

#include "gradedpi/error.hpp"

namespace gradedpi {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::uint64_t sat_pow(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r = sat_mul(r, base);
  return r;
}

// Reduces v against an RREF basis; the result is zero iff v is in the span.
Vec reduce(const FieldContext& F, const std::vector<Vec>& basis, Vec v) {
  for (const auto& row : basis) {
    auto lead = std::find_if(row.begin(), row.end(), [](FieldElement a) { return a.code != 0; });
    const auto p = static_cast<std::size_t>(lead - row.begin());
    if (v[p].code != 0) axpy(F, v, F.neg(v[p]), row);
  }
  return v;
}

bool in_span(const FieldContext& F, const Subspace& S, const Vec& v) { return is_zero(reduce(F, S.basis(), v)); }

// Number of subspaces of GF(q)^n with dimension in [0, max_dim], per dimension.
std::vector<std::uint64_t> gaussian_counts(std::uint64_t q, std::size_t n, std::size_t max_dim) {
  std::vector<std::uint64_t> counts(std::min(n, max_dim) + 1, 0);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto k = static_cast<std::size_t>(__builtin_popcount(mask));
    if (k > max_dim) continue;
    std::size_t free = 0, seen = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (mask & (1u << c))
        ++seen;
      else
        free += seen;
    }
    counts[k] = sat_add(counts[k], sat_pow(q, free));
  }
  return counts;
}

// Calls visit with the RREF basis of every subspace of GF(q)^n of
// dimension <= max_dim.
void enumerate_rref(const FieldContext& F, std::size_t n, std::size_t max_dim,
                    const std::function<void(const std::vector<Vec>&)>& visit) {
  for (std::size_t k = 0; k <= std::min(n, max_dim); ++k) {
    std::vector<std::size_t> piv(k);
    for (std::size_t i = 0; i < k; ++i) piv[i] = i;
    while (true) {
      // Free slots: (row, col) with col > pivot[row] and col not a pivot.
      std::vector<std::pair<std::size_t, std::size_t>> slots;
      std::vector<bool> is_piv(n, false);
      for (auto p : piv) is_piv[p] = true;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = piv[r] + 1; c < n; ++c)
          if (!is_piv[c]) slots.emplace_back(r, c);
      std::vector<std::uint32_t> digits(slots.size(), 0);
      while (true) {
        std::vector<Vec> rows(k, Vec(n));
        for (std::size_t r = 0; r < k; ++r) rows[r][piv[r]] = F.one();
        for (std::size_t s = 0; s < slots.size(); ++s) rows[slots[s].first][slots[s].second] = F.element(digits[s]);
        visit(rows);
        std::size_t s = 0;
        while (s < digits.size() && ++digits[s] == F.q()) digits[s++] = 0;
        if (s == digits.size()) break;
      }
      // next combination of pivots
      std::size_t i = k;
      while (i > 0 && piv[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++piv[i - 1];
      for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
}

std::vector<std::vector<std::size_t>> component_indices(const GradedAlgebra& A) {
  std::vector<std::vector<std::size_t>> comps;
  for (const auto& g : A.support()) comps.push_back(A.component(g));
  return comps;
}

}  // namespace

std::string to_string(Flavor f) { return f == Flavor::Graded ? "graded" : "ungraded"; }

Budget default_budget() {
  Budget b;
  if (const char* env = std::getenv("GRADEDPI_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) b.max_subspaces = v;
  }
  return b;
}

Subspace whole(const GradedAlgebra& A) { return Subspace::full(A.field(), A.dim()); }

Subspace product(const GradedAlgebra& A, const Subspace& U, const Subspace& V) {
  std::vector<Vec> rows;
  for (const auto& u : U.basis())
    for (const auto& v : V.basis()) {
      Vec w = A.bracket(u, v);
      if (!is_zero(w)) rows.push_back(std::move(w));
    }
  return Subspace(A.field(), A.dim(), rows);
}

bool is_subalgebra(const GradedAlgebra& A, const Subspace& S) {
  const auto& b = S.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!in_span(A.field(), S, A.bracket(b[i], b[j]))) return false;
  return true;
}

bool is_ideal(const GradedAlgebra& A, const Subspace& S) {
  for (const auto& s : S.basis())
    for (std::size_t i = 0; i < A.dim(); ++i)
      if (!in_span(A.field(), S, A.bracket(s, unit_vec(A.dim(), i)))) return false;
  return true;
}

bool is_graded(const GradedAlgebra& A, const Subspace& S) {
  std::size_t total = 0;
  for (const auto& g : A.support()) total += intersect(A.field(), S, A.component_space(g)).dim();
  return total == S.dim();
}

bool is_nilpotent(const GradedAlgebra& A, const Subspace& S) {
  Subspace term = S;
  while (term.dim() > 0) {
    Subspace next = product(A, term, S);
    if (next.dim() == term.dim()) return false;
    term = std::move(next);
  }
  return true;
}

bool is_solvable(const GradedAlgebra& A, const Subspace& S) {
  Subspace term = S;
  while (term.dim() > 0) {
    Subspace next = product(A, term, term);
    if (next.dim() == term.dim()) return false;
    term = std::move(next);
  }
  return true;
}

bool is_abelian(const GradedAlgebra& A, const Subspace& S) { return product(A, S, S).dim() == 0; }

Subspace center(const GradedAlgebra& A) {
  // x is central iff [x, b_i] = 0 for all i: stack the linear conditions.
  const std::size_t n = A.dim();
  std::vector<Vec> conditions;
  for (std::size_t i = 0; i < n; ++i) {
    // Row k of the map x -> [x, b_i] is (c[0][i][k], ..., c[n-1][i][k]).
    for (std::size_t k = 0; k < n; ++k) {
      Vec row(n);
      for (std::size_t j = 0; j < n; ++j) row[j] = A.structure(j, i)[k];
      conditions.push_back(std::move(row));
    }
  }
  return Subspace(A.field(), n, null_space(A.field(), conditions, n));
}

Subspace derived_algebra(const GradedAlgebra& A) { return product(A, whole(A), whole(A)); }

std::vector<Subspace> derived_series(const GradedAlgebra& A) {
  std::vector<Subspace> series{whole(A)};
  while (true) {
    Subspace next = product(A, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subspace> lower_central(const GradedAlgebra& A) {
  std::vector<Subspace> series{whole(A)};
  while (true) {
    Subspace next = product(A, series.back(), whole(A));
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::uint64_t subspace_count(const GradedAlgebra& A, std::size_t max_dim, Flavor flavor) {
  const std::uint64_t q = A.field().q();
  if (flavor == Flavor::Ungraded) {
    std::uint64_t total = 0;
    for (auto c : gaussian_counts(q, A.dim(), max_dim)) total = sat_add(total, c);
    return total;
  }
  // Convolution of the per-component dimension profiles.
  std::vector<std::uint64_t> acc{1};
  for (const auto& comp : component_indices(A)) {
    auto counts = gaussian_counts(q, comp.size(), comp.size());
    std::vector<std::uint64_t> next(acc.size() + counts.size() - 1, 0);
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (std::size_t j = 0; j < counts.size(); ++j) next[i + j] = sat_add(next[i + j], sat_mul(acc[i], counts[j]));
    acc = std::move(next);
  }
  std::uint64_t total = 0;
  for (std::size_t d = 0; d < acc.size() && d <= max_dim; ++d) total = sat_add(total, acc[d]);
  return total;
}

void for_each_subspace(const GradedAlgebra& A, std::size_t max_dim, Flavor flavor, const Budget& budget,
                       const std::function<void(const Subspace&)>& visit) {
  const std::uint64_t count = subspace_count(A, max_dim, flavor);
  if (count > budget.max_subspaces)
    throw Error(ErrorCode::BudgetExceeded, "enumerating " + std::to_string(count) + " subspaces of " + A.name() +
                                               " exceeds the budget of " + std::to_string(budget.max_subspaces));
  const FieldContext& F = A.field();
  const std::size_t n = A.dim();
  if (flavor == Flavor::Ungraded) {
    enumerate_rref(F, n, max_dim, [&](const std::vector<Vec>& rows) { visit(Subspace(F, n, rows)); });
    return;
  }
  const auto comps = component_indices(A);
  // Per-component subspaces embedded in the ambient coordinates.
  std::vector<std::vector<std::vector<Vec>>> choices(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    enumerate_rref(F, comps[c].size(), comps[c].size(), [&](const std::vector<Vec>& rows) {
      std::vector<Vec> embedded;
      for (const auto& r : rows) {
        Vec v(n);
        for (std::size_t i = 0; i < r.size(); ++i) v[comps[c][i]] = r[i];
        embedded.push_back(std::move(v));
      }
      choices[c].push_back(std::move(embedded));
    });
  }
  std::vector<Vec> current;
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (current.size() > max_dim) return;
    if (c == comps.size()) {
      visit(Subspace(F, n, current));
      return;
    }
    for (const auto& choice : choices[c]) {
      const std::size_t mark = current.size();
      current.insert(current.end(), choice.begin(), choice.end());
      rec(c + 1);
      current.resize(mark);
    }
  };
  rec(0);
}

std::vector<Subspace> enumerate_ideals(const GradedAlgebra& A, std::size_t max_dim, Flavor flavor,
                                       const Budget& budget) {
  std::vector<Subspace> ideals;
  for_each_subspace(A, max_dim, flavor, budget, [&](const Subspace& S) {
    if (is_ideal(A, S)) ideals.push_back(S);
  });
  std::sort(ideals.begin(), ideals.end());
  return ideals;
}

namespace {

// Sum of all ideals with the property; for nilpotency and solvability the
// sum is again such an ideal, which is re-checked.
Subspace greatest_ideal(const GradedAlgebra& A, Flavor flavor, const Budget& budget,
                        bool (*property)(const GradedAlgebra&, const Subspace&), const char* what) {
  Subspace total = Subspace::zero(A.dim());
  for (const auto& I : enumerate_ideals(A, A.dim(), flavor, budget))
    if (property(A, I)) total = sum(A.field(), total, I);
  if (!property(A, total))
    throw Error(ErrorCode::InvalidArgument, std::string("sum of ") + what + " ideals is not " + what);
  return total;
}

}  // namespace

Subspace nilradical(const GradedAlgebra& A, Flavor flavor, const Budget& budget) {
  return greatest_ideal(A, flavor, budget, &is_nilpotent, "nilpotent");
}

Subspace radical(const GradedAlgebra& A, Flavor flavor, const Budget& budget) {
  return greatest_ideal(A, flavor, budget, &is_solvable, "solvable");
}

std::vector<Subspace> minimal_ideals(const GradedAlgebra& A, Flavor flavor, const Budget& budget) {
  const auto ideals = enumerate_ideals(A, A.dim(), flavor, budget);
  std::vector<Subspace> minimal;
  for (const auto& I : ideals) {
    if (I.dim() == 0) continue;
    bool is_min = true;
    for (const auto& J : ideals)
      if (J.dim() > 0 && J.dim() < I.dim() && I.contains(A.field(), J)) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(I);
  }
  return minimal;
}

MonolithResult monolith(const GradedAlgebra& A, Flavor flavor, const Budget& budget) {
  MonolithResult r;
  r.minimal_ideals = minimal_ideals(A, flavor, budget);
  if (r.minimal_ideals.size() == 1) r.monolith = r.minimal_ideals.front();
  return r;
}

Subspace require_monolith(const GradedAlgebra& A, Flavor flavor, const Budget& budget) {
  auto r = monolith(A, flavor, budget);
  if (!r.monolithic())
    throw Error(ErrorCode::NotMonolithic, A.name() + " has " + std::to_string(r.minimal_ideals.size()) + " minimal " +
                                              to_string(flavor) + " ideals");
  return *r.monolith;
}

AAlgebraResult is_A_algebra(const GradedAlgebra& A, const Budget& budget) {
  AAlgebraResult result;
  std::vector<Subspace> witnesses;
  for_each_subspace(A, A.dim(), Flavor::Ungraded, budget, [&](const Subspace& S) {
    if (S.dim() < 2 || !is_subalgebra(A, S)) return;
    if (!is_abelian(A, S) && is_nilpotent(A, S)) witnesses.push_back(S);
  });
  if (!witnesses.empty()) {
    result.holds = false;
    result.witness = *std::min_element(witnesses.begin(), witnesses.end());
  }
  return result;
}

SheinaReport sheina_criterion(const GradedAlgebra& A, Flavor flavor, const Budget& budget) {
  SheinaReport report;
  const FieldContext& F = A.field();
  report.monolithic = monolith(A, flavor, budget).monolithic();
  const Subspace D = derived_algebra(A);
  report.derived_dim = D.dim();
  std::vector<Subspace> inside;
  for (const auto& I : enumerate_ideals(A, A.dim(), flavor, budget))
    if (I.dim() < D.dim() && D.contains(F, I)) inside.push_back(I);
  for (std::size_t i = 0; i < inside.size() && !report.decomposition; ++i)
    for (std::size_t j = i; j < inside.size(); ++j)
      if (sum(F, inside[i], inside[j]) == D) {
        report.decomposition = std::make_pair(inside[i], inside[j]);
        break;
      }
  return report;
}

UPoly minimal_polynomial(const FieldContext& F, const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<Vec> powers{Matrix::identity(F, n).data()};
  Matrix current = Matrix::identity(F, n);
  for (std::size_t k = 1; k <= n; ++k) {
    current = multiply(F, current, m);
    if (auto c = solve_in_span(F, powers, current.data())) {
      UPoly poly(k + 1);
      for (std::size_t i = 0; i < k; ++i) poly[i] = F.neg((*c)[i]);
      poly[k] = F.one();
      return poly;
    }
    powers.push_back(current.data());
  }
  throw Error(ErrorCode::InvalidArgument, "minimal polynomial degree exceeds dimension");
}

SpectrumReport spectrum(const GradedAlgebra& A, const Vec& u) {
  const FieldContext& F = A.field();
  const std::size_t n = A.dim();
  SpectrumReport r;
  r.element = u;
  const Matrix ad = A.ad_matrix(u);
  r.min_poly = minimal_polynomial(F, ad);
  for (std::uint32_t i = 0; i < F.q(); ++i)
    if (evaluate(F, r.min_poly, F.element(i)).code == 0) r.eigenvalues.push_back(F.element(i));
  std::size_t total = 0;
  r.homogeneous_eigenbasis = true;
  for (auto lambda : r.eigenvalues) {
    Matrix shifted = add(F, ad, scale(F, F.neg(lambda), Matrix::identity(F, n)));
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(shifted.row(i));
    Subspace E(F, n, null_space(F, rows, n));
    total += E.dim();
    std::size_t homogeneous = 0;
    for (const auto& g : A.support()) homogeneous += intersect(F, E, A.component_space(g)).dim();
    if (homogeneous != E.dim()) r.homogeneous_eigenbasis = false;
    r.eigenspaces.push_back(std::move(E));
  }
  r.diagonalizable = r.eigenvalues.size() + 1 == r.min_poly.size();
  if (r.diagonalizable != (total == n))
    throw Error(ErrorCode::InvalidArgument, "eigenspace dimensions inconsistent with the minimal polynomial");
  return r;
}

GradedAlgebra change_basis(const GradedAlgebra& A, const Matrix& P) {
  const FieldContext& F = A.field();
  const std::size_t n = A.dim();
  if (!inverse(F, P)) throw Error(ErrorCode::InvalidArgument, "change of basis matrix is singular");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(P.row(i));
  StructureTensor c(n, std::vector<Vec>(n, Vec(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = *solve_in_span(F, rows, A.bracket(rows[i], rows[j]));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i + 1));
  return GradedAlgebra(A.name() + "/rebased", F, std::move(labels), std::move(c), GradeGroup::trivial(),
                       std::vector<GroupElement>(n));
}

GradedAlgebra restrict_to(const GradedAlgebra& A, const Subspace& S, std::string name) {
  const FieldContext& F = A.field();
  std::vector<Vec> basis;
  std::vector<GroupElement> grades;
  for (const auto& g : A.support()) {
    const Subspace part = intersect(F, S, A.component_space(g));
    for (const auto& v : part.basis()) {
      basis.push_back(v);
      grades.push_back(g);
    }
  }
  if (basis.size() != S.dim()) throw Error(ErrorCode::InvalidArgument, "subspace is not graded");
  const std::size_t m = basis.size();
  StructureTensor c(m, std::vector<Vec>(m, Vec(m)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto coords = solve_in_span(F, basis, A.bracket(basis[i], basis[j]));
      if (!coords) throw Error(ErrorCode::NotClosed, "subspace is not a subalgebra");
      c[i][j] = *coords;
    }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) labels.push_back(format_element(A, basis[i]));
  for (auto& l : labels)
    for (auto& ch : l)
      if (ch == ' ' || ch == '+' || ch == '*' || ch == '(' || ch == ')') ch = '_';
  return GradedAlgebra(std::move(name), F, std::move(labels), std::move(c), A.group(), std::move(grades));
}

PremetReport check_premet_predicates(const GradedAlgebra& A, const Budget& budget) {
  const FieldContext& F = A.field();
  PremetReport r;
  r.derived_meets_center_trivially = intersect(F, derived_algebra(A), center(A)).dim() == 0;
  r.semisimple = radical(A, Flavor::Ungraded, budget).dim() == 0;

  const auto& moduli = A.group().moduli();
  if (moduli.empty()) {
    r.hypothesis_path = "ungraded: ordinary simple decomposition";
  } else if (moduli == std::vector<int>{2} || moduli == std::vector<int>{2, 2}) {
    r.hypothesis_path = "group " + A.group().name() + ": no root of unity required";
  } else if (moduli == std::vector<int>{3}) {
    r.hypothesis_path = (F.q() - 1) % 3 == 0 ? "group Z3: primitive cube root of unity present in GF(" + F.spec() + ")"
                                             : "group Z3: primitive cube root of unity absent from GF(" + F.spec() + ")";
  } else {
    r.hypothesis_path = "group " + A.group().name() + ": no finite root-of-unity hypothesis";
  }

  if (!r.semisimple) return r;
  const auto minimal = minimal_ideals(A, Flavor::Graded, budget);
  bool ok = true;
  Subspace total = Subspace::zero(A.dim());
  std::size_t dims = 0;
  for (const auto& I : minimal) {
    auto sub = restrict_to(A, I, A.name() + "/summand");
    const auto inner = enumerate_ideals(sub, sub.dim(), Flavor::Graded, budget);
    const bool simple = inner.size() == 2 && !is_abelian(A, I);
    if (!simple) ok = false;
    total = sum(F, total, I);
    dims += I.dim();
    r.simple_summands.push_back(I);
  }
  r.graded_simple_decomposition = ok && dims == A.dim() && total.dim() == A.dim();
  return r;
}

}  // namespace gradedpi
