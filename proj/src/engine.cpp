#include "gradedpi/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>
#include <thread>

#include "gradedpi/error.hpp"
#include "gradedpi/linalg.hpp"

namespace gradedpi {

EngineOptions EngineOptions::defaults() {
  EngineOptions o;
  if (const char* env = std::getenv("GRADEDPI_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) o.budget = v;
  }
  return o;
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

// Runs fn(begin, end, worker) over contiguous chunks of [0, n).
void parallel_chunks(unsigned threads, std::uint64_t n, const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& fn) {
  threads = std::max(1u, threads);
  if (threads == 1 || n < 2) {
    fn(0, n, 0);
    return;
  }
  const std::uint64_t workers = std::min<std::uint64_t>(threads, n);
  std::vector<std::thread> pool;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = n * w / workers;
    const std::uint64_t end = n * (w + 1) / workers;
    pool.emplace_back([&fn, begin, end, w] { fn(begin, end, static_cast<unsigned>(w)); });
  }
  for (auto& t : pool) t.join();
}

// Values a variable runs through: a list of coordinate vectors, either given
// explicitly or all q^k elements of a k-dimensional component.
struct Domain {
  std::vector<std::size_t> indices;  // component basis positions
  bool basis_only = false;
  std::uint64_t size = 0;
};

Domain make_domain(const GradedAlgebra& A, const GroupElement& g, bool basis_only) {
  Domain d;
  d.indices = A.component(g);
  d.basis_only = basis_only;
  if (basis_only) {
    d.size = d.indices.size();
  } else {
    d.size = 1;
    for (std::size_t i = 0; i < d.indices.size(); ++i) d.size = saturating_mul(d.size, A.field().q());
  }
  return d;
}

void decode(const GradedAlgebra& A, const Domain& d, std::uint64_t local, Vec& out) {
  std::fill(out.begin(), out.end(), FieldElement{0});
  if (d.basis_only) {
    out[d.indices[local]] = A.field().one();
    return;
  }
  const std::uint64_t q = A.field().q();
  // First basis vector varies fastest, so single basis vectors come early.
  for (std::size_t j = 0; j < d.indices.size(); ++j) {
    out[d.indices[j]] = A.field().element(static_cast<std::uint32_t>(local % q));
    local /= q;
  }
}

std::uint64_t tuple_count(const std::vector<Domain>& domains) {
  std::uint64_t n = 1;
  for (const auto& d : domains) n = saturating_mul(n, d.size);
  return n;
}

void decode_tuple(const GradedAlgebra& A, const std::vector<Domain>& domains, std::uint64_t t,
                  std::vector<Vec>& values) {
  for (std::size_t k = domains.size(); k-- > 0;) {
    decode(A, domains[k], t % domains[k].size, values[k]);
    t /= domains[k].size;
  }
}

void check_budget(std::uint64_t n, const EngineOptions& options, const std::string& what) {
  if (n > options.budget)
    throw Error(ErrorCode::BudgetExceeded, what + " needs " + (n == kSaturated ? std::string("too many") : std::to_string(n)) +
                                               " steps, over the budget of " + std::to_string(options.budget));
}

using ValueFn = std::function<Vec(const std::vector<Vec>&)>;

VerifyReport run_verify(const std::vector<GradedVar>& vars, const ValueFn& value, const std::string& name,
                        const GradedAlgebra& A, const GradingProfile& profile, const EngineOptions& options) {
  require_compatible(profile, A);
  std::vector<Domain> domains;
  for (auto v : vars) domains.push_back(make_domain(A, profile.grade(v), false));
  const std::uint64_t n = tuple_count(domains);
  check_budget(n, options, "verifying " + name + " on " + A.name());

  std::atomic<std::uint64_t> first_failure{n};
  parallel_chunks(options.threads, n, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
    std::vector<Vec> values(vars.size(), zero_vec(A.dim()));
    for (std::uint64_t t = begin; t < end && t < first_failure.load(std::memory_order_relaxed); ++t) {
      decode_tuple(A, domains, t, values);
      if (!is_zero(value(values))) {
        std::uint64_t cur = first_failure.load();
        while (t < cur && !first_failure.compare_exchange_weak(cur, t)) {
        }
        return;
      }
    }
  });

  VerifyReport r;
  r.identity = name;
  r.algebra = A.name();
  const std::uint64_t fail = first_failure.load();
  if (fail == n) {
    r.holds = true;
    r.substitutions_checked = n;
    return r;
  }
  std::vector<Vec> values(vars.size(), zero_vec(A.dim()));
  decode_tuple(A, domains, fail, values);
  r.holds = false;
  r.substitutions_checked = fail + 1;
  r.value = value(values);
  Assignment a;
  for (std::size_t k = 0; k < vars.size(); ++k) a[vars[k]] = values[k];
  r.counterexample = std::move(a);
  return r;
}

std::vector<GradedVar> liepoly_variables(const LiePoly& p) {
  std::set<GradedVar> vars;
  for (const auto& [d, coords] : p.cells())
    for (const auto& [v, e] : d.exps()) vars.insert(v);
  return {vars.begin(), vars.end()};
}

}  // namespace

VerifyReport verify_identity(const Expr& f, const std::string& name, const GradedAlgebra& A,
                             const GradingProfile& profile, const EngineOptions& options) {
  require_compatible(profile, A);
  for (auto v : variables(f)) profile.grade(v);
  const Evaluator ev(A, f);
  return run_verify(ev.variables(), [&ev](const std::vector<Vec>& values) { return ev(values); }, name, A, profile,
                    options);
}

VerifyReport verify_identity(const LiePoly& f, const std::string& name, const GradedAlgebra& A,
                             const GradingProfile& profile, const EngineOptions& options) {
  const std::vector<GradedVar> vars = liepoly_variables(f);
  auto value = [&](const std::vector<Vec>& values) {
    Assignment a;
    for (std::size_t k = 0; k < vars.size(); ++k) a[vars[k]] = values[k];
    Vec out = zero_vec(A.dim());
    for (const auto& [d, coords] : f.cells()) {
      const auto& basis = lyndon_basis(d, d.total());
      for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i].code != 0) axpy(A.field(), out, coords[i], evaluate_lyndon(A, basis[i], a));
    }
    return out;
  };
  return run_verify(vars, value, name, A, profile, options);
}

std::uint64_t substitution_count(const std::vector<GradedVar>& vars, const GradedAlgebra& A,
                                 const GradingProfile& profile) {
  std::vector<Domain> domains;
  for (auto v : vars) domains.push_back(make_domain(A, profile.grade(v), false));
  return tuple_count(domains);
}

LiePoly CellSpan::element(std::size_t i) const {
  LiePoly p;
  p.set(cell, basis.at(i));
  return p;
}

namespace {

Vec evaluate_word(const GradedAlgebra& A, const Word& w, const Assignment& a, std::map<Word, Vec>& memo) {
  auto it = memo.find(w);
  if (it != memo.end()) return it->second;
  Vec v;
  if (w.size() == 1) {
    v = a.at(w[0]);
  } else {
    auto [l, r] = standard_factorization(w);
    v = A.bracket(evaluate_word(A, l, a, memo), evaluate_word(A, r, a, memo));
  }
  memo.emplace(w, v);
  return v;
}

}  // namespace

CellSpan identity_kernel(const GradedAlgebra& A, const GradingProfile& profile, const Multidegree& d,
                         const EngineOptions& options) {
  require_compatible(profile, A);
  if (d.empty()) throw Error(ErrorCode::InvalidArgument, "empty cell");
  const FieldContext& F = A.field();
  const auto& words = lyndon_basis(d, options.cap);
  const std::size_t m = words.size();
  const std::vector<GradedVar> vars = d.variables();
  std::vector<Domain> domains;
  for (auto v : vars) domains.push_back(make_domain(A, profile.grade(v), d[v] == 1));
  const std::uint64_t n = tuple_count(domains);
  check_budget(n, options, "kernel of cell " + d.to_string());

  std::vector<EchelonAccumulator> accs(std::max(1u, options.threads), EchelonAccumulator(F, m));
  std::atomic<bool> full{m == 0};
  parallel_chunks(options.threads, n, [&](std::uint64_t begin, std::uint64_t end, unsigned worker) {
    EchelonAccumulator& acc = accs[worker];
    std::vector<Vec> values(vars.size(), zero_vec(A.dim()));
    for (std::uint64_t t = begin; t < end && !full.load(std::memory_order_relaxed); ++t) {
      decode_tuple(A, domains, t, values);
      Assignment a;
      for (std::size_t k = 0; k < vars.size(); ++k) a[vars[k]] = values[k];
      std::map<Word, Vec> memo;
      std::vector<Vec> cols;
      for (const auto& w : words) cols.push_back(evaluate_word(A, w, a, memo));
      for (std::size_t r = 0; r < A.dim(); ++r) {
        Vec row(m);
        for (std::size_t j = 0; j < m; ++j) row[j] = cols[j][r];
        acc.insert(std::move(row));
      }
      if (acc.full()) full.store(true);
    }
  });
  for (std::size_t i = 1; i < accs.size(); ++i) accs[0].merge(accs[i]);

  CellSpan span;
  span.cell = d;
  span.ambient_dim = m;
  span.basis = accs[0].null_space();
  for (std::size_t i = 0; i < span.dim(); ++i) {
    const VerifyReport check = verify_identity(span.element(i), "kernel element", A, profile, options);
    if (!check.holds) throw std::logic_error("kernel element of " + d.to_string() + " failed verification");
  }
  return span;
}

namespace {

// All multidegrees e <= bound componentwise with 1 <= total <= max_total.
void cells_below(const std::vector<std::pair<GradedVar, int>>& bound, std::size_t k, std::map<GradedVar, int>& cur,
                 int total, int max_total, std::vector<Multidegree>& out) {
  if (k == bound.size()) {
    if (total >= 1) out.emplace_back(cur);
    return;
  }
  for (int e = 0; e <= bound[k].second && total + e <= max_total; ++e) {
    cur[bound[k].first] = e;
    cells_below(bound, k + 1, cur, total + e, max_total, out);
  }
  cur.erase(bound[k].first);
}

struct Ambient {
  std::vector<Multidegree> cells;  // target cell last
  std::map<Multidegree, std::size_t> offset;
  std::size_t width = 0;
  std::size_t target_offset = 0;
  std::size_t target_dim = 0;
  std::map<GradedVar, int> bound;
  int max_total = 0;

  bool fits(const Multidegree& e) const {
    if (e.total() > max_total) return false;
    for (const auto& [v, x] : e.exps()) {
      auto it = bound.find(v);
      if (it == bound.end() || x > it->second) return false;
    }
    return true;
  }
};

struct Candidate {
  AssocPoly poly;
  std::map<GradedVar, int> maxdeg;
  int maxtotal = 0;
};

struct Monomial {
  Word word;
  Multidegree deg;
  GroupElement grade;
};

void combos(const std::vector<const Monomial*>& pool, std::size_t start, int left, const FieldContext& F,
            std::vector<std::pair<const Monomial*, FieldElement>>& cur, std::vector<Candidate>& out) {
  if (!cur.empty()) {
    Candidate c;
    for (const auto& [m, coef] : cur) {
      add_scaled(F, c.poly, coef, to_field(F, lyndon_expansion(m->word)));
      for (const auto& [v, e] : m->deg.exps()) c.maxdeg[v] = std::max(c.maxdeg[v], e);
      c.maxtotal = std::max(c.maxtotal, m->deg.total());
    }
    out.push_back(std::move(c));
  }
  if (left == 0) return;
  for (std::size_t i = start; i < pool.size(); ++i)
    for (std::uint32_t code = 1; code < F.q(); ++code) {
      cur.emplace_back(pool[i], F.element(code));
      combos(pool, i + 1, left - 1, F, cur, out);
      cur.pop_back();
    }
}

// A set of instances touching the same cells.
using Signature = std::vector<Multidegree>;

Signature signature_of(const LiePoly& p) {
  Signature s;
  for (const auto& [d, c] : p.cells()) s.push_back(d);
  return s;
}

Vec to_row(const Ambient& amb, const LiePoly& p) {
  Vec row(amb.width);
  for (const auto& [d, coords] : p.cells()) {
    const std::size_t off = amb.offset.at(d);
    std::copy(coords.begin(), coords.end(), row.begin() + static_cast<std::ptrdiff_t>(off));
  }
  return row;
}

LiePoly from_row(const Ambient& amb, const Vec& row) {
  LiePoly p;
  for (const auto& d : amb.cells) {
    const std::size_t off = amb.offset.at(d);
    const std::size_t len = lyndon_basis(d, d.total()).size();
    p.set(d, Vec(row.begin() + static_cast<std::ptrdiff_t>(off), row.begin() + static_cast<std::ptrdiff_t>(off + len)));
  }
  return p;
}

using Groups = std::map<Signature, EchelonAccumulator>;

void add_to_groups(const FieldContext& F, const Ambient& amb, Groups& groups, const LiePoly& p) {
  if (p.is_zero()) return;
  for (const auto& [d, c] : p.cells())
    if (!amb.fits(d)) throw std::logic_error("instance left the ambient cells");
  auto it = groups.try_emplace(signature_of(p), F, amb.width).first;
  it->second.insert(to_row(amb, p));
}

void merge_groups(Groups& into, const Groups& from) {
  for (const auto& [sig, acc] : from) {
    auto it = into.find(sig);
    if (it == into.end())
      into.emplace(sig, acc);
    else
      it->second.merge(acc);
  }
}

}  // namespace

ConsequenceReport consequence_span(const BasisFile& S, const FieldContext& F, const Multidegree& d,
                                   const ConsequenceLimits& limits, const EngineOptions& options) {
  if (d.empty()) throw Error(ErrorCode::InvalidArgument, "empty cell");
  if (limits.summands < 1 || limits.outer < 0 || limits.margin < 0)
    throw Error(ErrorCode::InvalidArgument, "limits must satisfy s >= 1, r >= 0, margin >= 0");
  const GradingProfile& profile = S.profile;
  for (auto v : d.variables()) profile.grade(v);
  const std::uint64_t q = F.q();
  ConsequenceReport report;
  report.span.cell = d;
  report.span.ambient_dim = lyndon_basis(d, options.cap).size();

  Ambient amb;
  amb.max_total = std::min(d.total() + limits.margin, options.cap);
  std::vector<std::pair<GradedVar, int>> bound;
  for (const auto& [v, e] : d.exps()) {
    amb.bound[v] = e + limits.margin;
    bound.emplace_back(v, e + limits.margin);
    if (e >= static_cast<int>(q))
      report.warnings.push_back("exponent of " + to_string(v) + " is not below q; no projection shortcut");
  }
  {
    std::map<GradedVar, int> cur;
    std::vector<Multidegree> all;
    cells_below(bound, 0, cur, 0, amb.max_total, all);
    std::sort(all.begin(), all.end());
    for (const auto& e : all)
      if (!(e == d) && !lyndon_basis(e, options.cap).empty()) amb.cells.push_back(e);
    amb.cells.push_back(d);
  }
  for (const auto& e : amb.cells) {
    amb.offset[e] = amb.width;
    amb.width += lyndon_basis(e, options.cap).size();
  }
  amb.target_offset = amb.offset.at(d);
  amb.target_dim = report.span.ambient_dim;
  report.ambient_columns = amb.width;

  std::vector<Monomial> monomials;
  for (const auto& e : amb.cells)
    for (const auto& w : lyndon_basis(e, options.cap)) monomials.push_back({w, e, profile.grade(e)});

  // Level 0: substitution instances f(u1, ..., uk).
  struct Job {
    const AssocPoly* form;
    std::vector<const Candidate*> choice;
    std::vector<GradedVar> vars;
  };
  std::vector<AssocPoly> forms;
  std::vector<std::vector<std::vector<Candidate>>> candidates;
  forms.reserve(S.identities.size());
  candidates.reserve(S.identities.size());
  std::vector<Job> jobs;
  for (const auto& id : S.identities) {
    if (max_degree(*id.expr) > options.cap) {
      report.skipped.push_back(id.name);
      continue;
    }
    forms.push_back(assoc_form(F, *id.expr, options.cap));
    const AssocPoly& form = forms.back();
    if (form.empty()) {
      candidates.emplace_back();
      continue;
    }
    std::set<GradedVar> varset;
    for (const auto& [w, c] : form) varset.insert(w.begin(), w.end());
    const std::vector<GradedVar> vars(varset.begin(), varset.end());
    // Letter counts of every word, per variable.
    std::vector<std::vector<int>> counts;
    for (const auto& [w, c] : form) {
      std::vector<int> row(vars.size());
      for (auto x : w) ++row[static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), x) - vars.begin())];
      counts.push_back(std::move(row));
    }
    candidates.emplace_back();
    auto& cands = candidates.back();
    for (std::size_t k = 0; k < vars.size(); ++k) {
      const bool linear = std::all_of(counts.begin(), counts.end(), [k](const auto& r) { return r[k] == 1; });
      std::vector<const Monomial*> pool;
      for (const auto& m : monomials)
        if (m.grade == profile.grade(vars[k])) pool.push_back(&m);
      cands.emplace_back();
      if (linear) {
        for (const auto* m : pool) {
          Candidate c;
          c.poly = to_field(F, lyndon_expansion(m->word));
          c.maxdeg = m->deg.exps();
          c.maxtotal = m->deg.total();
          cands.back().push_back(std::move(c));
        }
      } else {
        std::vector<std::pair<const Monomial*, FieldElement>> cur;
        combos(pool, 0, limits.summands, F, cur, cands.back());
      }
    }
    // Depth-first over choices, pruning when some word would leave the bound.
    std::vector<const Candidate*> choice(vars.size());
    std::vector<std::map<GradedVar, int>> deg(counts.size());
    std::vector<int> total(counts.size());
    std::function<void(std::size_t)> dfs = [&](std::size_t k) {
      if (k == vars.size()) {
        jobs.push_back({&form, choice, vars});
        check_budget(jobs.size(), options, "consequence instances");
        return;
      }
      for (const auto& c : cands[k]) {
        bool ok = true;
        auto saved_deg = deg;
        auto saved_total = total;
        for (std::size_t wi = 0; wi < counts.size() && ok; ++wi) {
          const int n = counts[wi][k];
          if (n == 0) continue;
          total[wi] += n * c.maxtotal;
          if (total[wi] > amb.max_total) ok = false;
          for (const auto& [v, e] : c.maxdeg) {
            deg[wi][v] += n * e;
            if (deg[wi][v] > amb.bound[v]) ok = false;
          }
        }
        if (ok) {
          choice[k] = &c;
          dfs(k + 1);
        }
        deg = std::move(saved_deg);
        total = std::move(saved_total);
      }
    };
    dfs(0);
  }

  const unsigned workers = std::max(1u, options.threads);
  std::vector<Groups> partial(workers);
  parallel_chunks(options.threads, jobs.size(), [&](std::uint64_t begin, std::uint64_t end, unsigned worker) {
    for (std::uint64_t j = begin; j < end; ++j) {
      const Job& job = jobs[j];
      AssocPoly inst;
      for (const auto& [w, c] : *job.form) {
        AssocPoly prod{{Word{}, F.one()}};
        for (auto x : w) {
          const std::size_t k = static_cast<std::size_t>(std::lower_bound(job.vars.begin(), job.vars.end(), x) - job.vars.begin());
          prod = assoc_multiply(F, prod, job.choice[k]->poly);
        }
        add_scaled(F, inst, c, prod);
      }
      add_to_groups(F, amb, partial[worker], lie_coordinates(F, inst, options.cap));
    }
  });
  Groups level;
  for (const auto& g : partial) merge_groups(level, g);
  report.instances = jobs.size();

  // Outer brackets, one level at a time.
  Groups all = level;
  for (int k = 0; k < limits.outer && !level.empty(); ++k) {
    struct Task {
      const Vec* row;
      const Monomial* m;
    };
    std::vector<std::vector<Vec>> rows;
    std::vector<Task> tasks;
    rows.reserve(level.size());
    for (const auto& [sig, acc] : level) {
      rows.push_back(acc.reduced_rows());
      for (const auto& m : monomials) {
        bool ok = true;
        for (const auto& c : sig) ok = ok && amb.fits(c.plus(m.deg));
        if (!ok) continue;
        for (const auto& r : rows.back()) tasks.push_back({&r, &m});
      }
    }
    report.instances += tasks.size();
    check_budget(report.instances, options, "consequence instances");
    std::vector<Groups> next(workers);
    parallel_chunks(options.threads, tasks.size(), [&](std::uint64_t begin, std::uint64_t end, unsigned worker) {
      for (std::uint64_t t = begin; t < end; ++t) {
        const AssocPoly b = to_assoc(F, from_row(amb, *tasks[t].row));
        const AssocPoly br = assoc_commutator(F, b, to_field(F, lyndon_expansion(tasks[t].m->word)));
        add_to_groups(F, amb, next[worker], lie_coordinates(F, br, options.cap));
      }
    });
    level.clear();
    for (const auto& g : next) merge_groups(level, g);
    merge_groups(all, level);
  }

  EchelonAccumulator total(F, amb.width);
  for (const auto& [sig, acc] : all)
    for (const auto& row : acc.reduced_rows()) total.insert(row);
  EchelonAccumulator target(F, amb.target_dim);
  auto target_part = [&](const Vec& row) {
    return Vec(row.begin() + static_cast<std::ptrdiff_t>(amb.target_offset), row.end());
  };
  const auto pivots = total.pivots();
  const auto rows = total.reduced_rows();
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (pivots[i] >= amb.target_offset) target.insert(target_part(rows[i]));
  // Components of instances of degree below q in every variable are
  // consequences themselves.
  for (const auto& [sig, acc] : all) {
    bool low_degree = true;
    for (const auto& c : sig)
      for (const auto& [v, e] : c.exps()) low_degree = low_degree && e < static_cast<int>(q);
    if (!low_degree) continue;
    for (const auto& row : acc.reduced_rows())
      if (target.insert(target_part(row))) report.projection_used = true;
  }
  report.span.basis = target.reduced_rows();
  return report;
}

std::string to_string(SpanRelation r) {
  switch (r) {
    case SpanRelation::Equal:
      return "equal";
    case SpanRelation::ASubsetB:
      return "a_subset_b";
    case SpanRelation::BSubsetA:
      return "b_subset_a";
    case SpanRelation::Incomparable:
      return "incomparable";
  }
  return {};
}

SpanRelation compare_spans(const FieldContext& F, const CellSpan& a, const CellSpan& b) {
  if (!(a.cell == b.cell) || a.ambient_dim != b.ambient_dim)
    throw Error(ErrorCode::CellMismatch, "spans live in cells " + a.cell.to_string() + " and " + b.cell.to_string());
  const Subspace sa(F, a.ambient_dim, a.basis);
  const Subspace sb(F, b.ambient_dim, b.basis);
  const bool ab = sb.contains(F, sa);
  const bool ba = sa.contains(F, sb);
  if (ab && ba) return SpanRelation::Equal;
  if (ab) return SpanRelation::ASubsetB;
  if (ba) return SpanRelation::BSubsetA;
  return SpanRelation::Incomparable;
}

std::vector<KernelComparison> compare_algebra_kernels(const GradedAlgebra& A, const GradedAlgebra& B,
                                                      const GradingProfile& profile,
                                                      const std::vector<Multidegree>& cells,
                                                      const EngineOptions& options) {
  if (!(A.field() == B.field()))
    throw Error(ErrorCode::InvalidArgument, A.name() + " and " + B.name() + " are over different fields");
  require_compatible(profile, A);
  require_compatible(profile, B);
  std::vector<KernelComparison> out;
  for (const auto& d : cells) {
    const CellSpan ka = identity_kernel(A, profile, d, options);
    const CellSpan kb = identity_kernel(B, profile, d, options);
    out.push_back({d, ka.dim(), kb.dim(), compare_spans(A.field(), ka, kb)});
  }
  return out;
}

std::vector<Multidegree> multilinear_cells(const GradingProfile& profile, int max_total) {
  std::vector<char> families;
  for (const auto& [f, g] : profile.family_grades()) families.push_back(f);
  std::vector<Multidegree> out;
  std::vector<int> counts(families.size());
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (k == families.size()) {
      std::map<GradedVar, int> exps;
      for (std::size_t i = 0; i < families.size(); ++i)
        for (int j = 1; j <= counts[i]; ++j) exps[GradedVar{families[i], j}] = 1;
      if (!exps.empty()) out.emplace_back(std::move(exps));
      return;
    }
    for (int c = 0; c <= left; ++c) {
      counts[k] = c;
      rec(k + 1, left - c);
    }
  };
  rec(0, max_total);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gradedpi
