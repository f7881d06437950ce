#include "gradedpi/freelie.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>

#include "gradedpi/error.hpp"

namespace gradedpi {

std::string to_string(GradedVar v) { return std::string(1, v.family) + std::to_string(v.index); }

Multidegree::Multidegree(std::map<GradedVar, int> exps) {
  for (auto& [v, e] : exps) {
    if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent for " + gradedpi::to_string(v));
    if (e > 0) {
      exps_.emplace(v, e);
      total_ += e;
    }
  }
}

Multidegree Multidegree::of_word(const Word& w) {
  std::map<GradedVar, int> exps;
  for (auto v : w) ++exps[v];
  return Multidegree(std::move(exps));
}

Multidegree Multidegree::parse(std::string_view text) {
  std::map<GradedVar, int> exps;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::ParseError, "cell '" + std::string(text) + "' at " + std::to_string(i) + ": " + why);
  };
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto number = [&]() {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) throw fail("expected a number");
    long long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i++] - '0');
      if (v > 1'000'000) throw fail("number too large");
    }
    return static_cast<int>(v);
  };
  skip();
  while (i < text.size()) {
    if (!std::islower(static_cast<unsigned char>(text[i]))) throw fail("expected a variable");
    GradedVar v{text[i++], 0};
    v.index = number();
    if (v.index < 1) throw fail("variable index must be positive");
    skip();
    int e = 1;
    if (i < text.size() && text[i] == ':') {
      ++i;
      skip();
      e = number();
      if (e < 1) throw fail("exponent must be positive");
      skip();
    }
    if (exps.count(v)) throw fail("variable " + gradedpi::to_string(v) + " repeated");
    exps[v] = e;
    if (i < text.size()) {
      if (text[i] != ',') throw fail("expected ','");
      ++i;
      skip();
    }
  }
  if (exps.empty()) throw fail("empty cell");
  return Multidegree(std::move(exps));
}

int Multidegree::operator[](GradedVar v) const {
  auto it = exps_.find(v);
  return it == exps_.end() ? 0 : it->second;
}

std::vector<GradedVar> Multidegree::variables() const {
  std::vector<GradedVar> out;
  for (const auto& [v, e] : exps_) out.push_back(v);
  return out;
}

bool Multidegree::is_multilinear() const {
  return std::all_of(exps_.begin(), exps_.end(), [](const auto& kv) { return kv.second == 1; });
}

bool Multidegree::leq(const Multidegree& other) const {
  return std::all_of(exps_.begin(), exps_.end(), [&](const auto& kv) { return kv.second <= other[kv.first]; });
}

Multidegree Multidegree::plus(const Multidegree& other) const {
  std::map<GradedVar, int> exps = exps_;
  for (const auto& [v, e] : other.exps_) exps[v] += e;
  return Multidegree(std::move(exps));
}

Word Multidegree::letters() const {
  Word w;
  for (const auto& [v, e] : exps_) w.insert(w.end(), static_cast<std::size_t>(e), v);
  return w;
}

std::string Multidegree::to_string() const {
  std::string out;
  for (const auto& [v, e] : exps_) {
    if (!out.empty()) out += ",";
    out += gradedpi::to_string(v) + ":" + std::to_string(e);
  }
  return out;
}

bool operator<(const Multidegree& a, const Multidegree& b) {
  if (a.total_ != b.total_) return a.total_ < b.total_;
  return a.exps_ < b.exps_;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + static_cast<std::ptrdiff_t>(i), w.end()))
      return false;
  return true;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word v(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
    if (is_lyndon(v)) return {Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i)), std::move(v)};
  }
  throw Error(ErrorCode::InvalidArgument, "word has no standard factorization");
}

std::string bracketing_string(const Word& w) {
  if (w.size() == 1) return to_string(w[0]);
  auto [u, v] = standard_factorization(w);
  return "[" + bracketing_string(u) + ", " + bracketing_string(v) + "]";
}

const std::vector<Word>& lyndon_basis(const Multidegree& d, int cap) {
  if (d.total() > cap)
    throw Error(ErrorCode::CapExceeded, "cell " + d.to_string() + " has degree " + std::to_string(d.total()) +
                                            " above the cap " + std::to_string(cap));
  static std::mutex mutex;
  static std::map<Multidegree, std::vector<Word>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  std::vector<Word> words;
  Word w = d.letters();
  if (!w.empty()) {
    do {
      if (is_lyndon(w)) words.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
  }
  return cache.emplace(d, std::move(words)).first->second;
}

namespace {

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

// n! / prod k_i! computed exactly via binomial products.
unsigned __int128 multinomial(const std::vector<int>& parts) {
  unsigned __int128 result = 1;
  int running = 0;
  for (int k : parts) {
    for (int j = 1; j <= k; ++j) {
      ++running;
      result = result * static_cast<unsigned>(running) / static_cast<unsigned>(j);
    }
  }
  return result;
}

}  // namespace

std::uint64_t witt_dimension(const Multidegree& d, int cap) {
  if (d.total() > cap)
    throw Error(ErrorCode::CapExceeded, "cell " + d.to_string() + " exceeds the degree cap " + std::to_string(cap));
  if (d.empty()) return 0;
  int g = 0;
  for (const auto& [v, e] : d.exps()) g = std::gcd(g, e);
  __int128 sum = 0;
  for (int t = 1; t <= g; ++t) {
    if (g % t != 0) continue;
    const int mu = mobius(t);
    if (mu == 0) continue;
    std::vector<int> parts;
    for (const auto& [v, e] : d.exps()) parts.push_back(e / t);
    sum += static_cast<__int128>(mu) * static_cast<__int128>(multinomial(parts));
  }
  return static_cast<std::uint64_t>(sum / d.total());
}

namespace {

IntAssoc int_commutator(const IntAssoc& a, const IntAssoc& b) {
  IntAssoc out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word ab = wa;
      ab.insert(ab.end(), wb.begin(), wb.end());
      Word ba = wb;
      ba.insert(ba.end(), wa.begin(), wa.end());
      out[ab] += ca * cb;
      out[ba] -= ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

const IntAssoc& lyndon_expansion(const Word& w) {
  static std::recursive_mutex mutex;
  static std::map<Word, IntAssoc> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(w);
  if (it != cache.end()) return it->second;
  IntAssoc result;
  if (w.size() == 1) {
    result[w] = 1;
  } else {
    auto [u, v] = standard_factorization(w);
    result = int_commutator(lyndon_expansion(u), lyndon_expansion(v));
  }
  return cache.emplace(w, std::move(result)).first->second;
}

AssocPoly to_field(const FieldContext& F, const IntAssoc& p) {
  AssocPoly out;
  for (const auto& [w, c] : p) {
    FieldElement e = F.from_int(c);
    if (e.code != 0) out.emplace(w, e);
  }
  return out;
}

void add_scaled(const FieldContext& F, AssocPoly& acc, FieldElement c, const AssocPoly& p) {
  if (c.code == 0) return;
  for (const auto& [w, x] : p) {
    auto [it, inserted] = acc.try_emplace(w, F.mul(c, x));
    if (!inserted) {
      it->second = F.add(it->second, F.mul(c, x));
      if (it->second.code == 0) acc.erase(it);
    }
  }
}

AssocPoly assoc_multiply(const FieldContext& F, const AssocPoly& a, const AssocPoly& b) {
  AssocPoly out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word ab = wa;
      ab.insert(ab.end(), wb.begin(), wb.end());
      FieldElement c = F.mul(ca, cb);
      auto [it, inserted] = out.try_emplace(std::move(ab), c);
      if (!inserted) it->second = F.add(it->second, c);
    }
  std::erase_if(out, [](const auto& kv) { return kv.second.code == 0; });
  return out;
}

AssocPoly assoc_commutator(const FieldContext& F, const AssocPoly& a, const AssocPoly& b) {
  AssocPoly out = assoc_multiply(F, a, b);
  add_scaled(F, out, F.neg(F.one()), assoc_multiply(F, b, a));
  return out;
}

Vec LiePoly::coordinates(const Multidegree& d) const {
  auto it = cells_.find(d);
  if (it != cells_.end()) return it->second;
  return Vec(lyndon_basis(d, d.total()).size());
}

void LiePoly::set(const Multidegree& d, Vec coords) {
  if (gradedpi::is_zero(coords))
    cells_.erase(d);
  else
    cells_[d] = std::move(coords);
}

void LiePoly::add(const FieldContext& F, const LiePoly& other, FieldElement c) {
  for (const auto& [d, v] : other.cells_) {
    Vec mine = coordinates(d);
    axpy(F, mine, c, v);
    set(d, std::move(mine));
  }
}

LiePoly LiePoly::monomial(const FieldContext& F, const Word& w) {
  const Multidegree d = Multidegree::of_word(w);
  const auto& basis = lyndon_basis(d, d.total());
  auto it = std::find(basis.begin(), basis.end(), w);
  if (it == basis.end()) throw Error(ErrorCode::InvalidArgument, "not a Lyndon word");
  LiePoly p;
  Vec coords(basis.size());
  coords[static_cast<std::size_t>(it - basis.begin())] = F.one();
  p.set(d, std::move(coords));
  return p;
}

LiePoly lie_coordinates(const FieldContext& F, const AssocPoly& p, int cap) {
  std::map<Multidegree, AssocPoly> by_cell;
  for (const auto& [w, c] : p)
    if (c.code != 0) by_cell[Multidegree::of_word(w)].emplace(w, c);
  LiePoly out;
  for (auto& [d, poly] : by_cell) {
    const auto& basis = lyndon_basis(d, cap);
    Vec coords(basis.size());
    while (!poly.empty()) {
      const Word w = poly.begin()->first;
      const FieldElement c = poly.begin()->second;
      auto it = std::lower_bound(basis.begin(), basis.end(), w);
      if (it == basis.end() || *it != w)
        throw Error(ErrorCode::InvalidArgument, "associative polynomial is not a Lie element");
      coords[static_cast<std::size_t>(it - basis.begin())] = c;
      add_scaled(F, poly, F.neg(c), to_field(F, lyndon_expansion(w)));
    }
    out.set(d, std::move(coords));
  }
  return out;
}

AssocPoly to_assoc(const FieldContext& F, const LiePoly& p) {
  AssocPoly out;
  for (const auto& [d, coords] : p.cells()) {
    const auto& basis = lyndon_basis(d, d.total());
    for (std::size_t i = 0; i < coords.size(); ++i)
      add_scaled(F, out, coords[i], to_field(F, lyndon_expansion(basis[i])));
  }
  return out;
}

std::string format_liepoly(const FieldContext& F, const LiePoly& p) {
  std::string out;
  for (const auto& [d, coords] : p.cells()) {
    const auto& basis = lyndon_basis(d, d.total());
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords[i].code == 0) continue;
      std::string coef;
      bool negative = false;
      if (F.k() == 1) {
        std::uint32_t c = coords[i].code;
        if (c > F.p() / 2) {
          negative = true;
          c = F.p() - c;
        }
        if (c != 1) coef = std::to_string(c) + "*";
      } else if (coords[i] != F.one()) {
        coef = "(" + F.to_string(coords[i]) + ")*";
      }
      if (out.empty())
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      out += coef + bracketing_string(basis[i]);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace gradedpi
