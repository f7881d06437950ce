#include "gradedpi/selfcheck.hpp"

#include <algorithm>
#include <set>

#include "gradedpi/freelie.hpp"

namespace gradedpi {

namespace {

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

ExprPtr element(std::mt19937_64& rng, const std::vector<GradedVar>& vars, std::uint64_t p, int depth, int cap);

ExprPtr bracket(std::mt19937_64& rng, const std::vector<GradedVar>& vars, std::uint64_t p, int depth, int cap) {
  const int slots = 2 + static_cast<int>(pick(rng, 2));
  std::vector<ExprPtr> out;
  int left = cap;
  if (left >= static_cast<int>(p) + 1 && pick(rng, 8) == 0) {
    // [x^p, e, ...]
    out.push_back(Expr::power(Expr::var(vars[pick(rng, vars.size())]), static_cast<long long>(p)));
    left -= static_cast<int>(p);
    ExprPtr e = element(rng, vars, p, depth - 1, left - (slots - 2));
    left -= static_cast<int>(max_degree(*e));
    out.push_back(std::move(e));
  } else {
    ExprPtr e = element(rng, vars, p, depth - 1, left - (slots - 1));
    left -= static_cast<int>(max_degree(*e));
    out.push_back(std::move(e));
  }
  while (static_cast<int>(out.size()) < slots && left >= 1) {
    const int reserve = slots - static_cast<int>(out.size()) - 1;
    ExprPtr e = element(rng, vars, p, depth - 1, std::max(1, left - reserve));
    const int deg = static_cast<int>(max_degree(*e));
    if (left >= 2 * deg && pick(rng, 3) == 0) {
      const int k = 2 + static_cast<int>(pick(rng, static_cast<std::uint64_t>(std::min(3, left / deg - 1))));
      if (k * deg <= left) {
        left -= k * deg;
        out.push_back(Expr::power(std::move(e), k));
        continue;
      }
    }
    left -= deg;
    out.push_back(std::move(e));
  }
  if (out.size() < 2) out.push_back(Expr::var(vars[pick(rng, vars.size())]));
  return Expr::bracket(std::move(out));
}

ExprPtr element(std::mt19937_64& rng, const std::vector<GradedVar>& vars, std::uint64_t p, int depth, int cap) {
  if (depth <= 0 || cap < 2) return Expr::var(vars[pick(rng, vars.size())]);
  switch (pick(rng, 5)) {
    case 0:
      return Expr::var(vars[pick(rng, vars.size())]);
    case 1: {
      std::vector<Term> terms;
      const int n = 2 + static_cast<int>(pick(rng, 2));
      for (int i = 0; i < n; ++i) {
        long long c = static_cast<long long>(pick(rng, 7)) - 3;
        if (c == 0) c = 1;
        terms.push_back({c, element(rng, vars, p, depth - 1, cap)});
      }
      return Expr::sum(std::move(terms));
    }
    default:
      return bracket(rng, vars, p, depth, cap);
  }
}

}  // namespace

ExprPtr random_tree(std::mt19937_64& rng, const std::vector<GradedVar>& vars, std::uint64_t p, int max_depth,
                    int max_degree) {
  return element(rng, vars, p, max_depth, max_degree);
}

Vec random_value(std::mt19937_64& rng, const GradedAlgebra& A, const GradingProfile& profile, GradedVar v) {
  Vec x = zero_vec(A.dim());
  for (auto i : A.component(profile.grade(v)))
    x[i] = A.field().element(static_cast<std::uint32_t>(pick(rng, A.field().q())));
  return x;
}

SelfcheckReport run_selfcheck(const GradedAlgebra& A, const GradingProfile& profile, std::uint64_t seed, int trees,
                              int assignments) {
  SelfcheckReport report{seed, trees, assignments, 0, {}};
  std::mt19937_64 rng(seed);
  std::vector<GradedVar> families;
  for (const auto& [f, g] : profile.family_grades()) families.push_back(GradedVar{f, 1});
  const std::uint64_t p = A.field().p();
  for (int t = 0; t < trees; ++t) {
    std::vector<GradedVar> vars;
    const std::size_t nvars = 1 + pick(rng, 4);
    for (std::size_t i = 0; i < nvars; ++i) {
      GradedVar v = families[pick(rng, families.size())];
      v.index = 1 + static_cast<int>(pick(rng, 2));
      vars.push_back(v);
    }
    const ExprPtr tree = random_tree(rng, vars, p, 5, kDefaultDegreeCap);
    const LiePoly normal = normalize(A.field(), *tree);
    for (int a = 0; a < assignments; ++a) {
      Assignment values;
      for (auto v : variables(*tree)) values[v] = random_value(rng, A, profile, v);
      const Vec direct = evaluate(A, profile, *tree, values);
      const Vec via_normal = evaluate(A, profile, normal, values);
      if (direct != via_normal) {
        if (report.mismatches == 0) report.first_mismatch = to_string(*tree);
        ++report.mismatches;
      }
    }
  }
  return report;
}

}  // namespace gradedpi
