#include "gradedpi/dsl.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "gradedpi/error.hpp"

namespace gradedpi {

namespace {

constexpr long long kMaxExponent = 1'000'000;

enum class Ctx { Element, Slot, FirstSlot };

std::uint64_t characteristic(std::uint64_t q) {
  for (std::uint64_t p = 2; p * p <= q; ++p)
    if (q % p == 0) return p;
  return q;
}

bool is_power_of(long long k, std::uint64_t p) {
  while (k > 1 && k % static_cast<long long>(p) == 0) k /= static_cast<long long>(p);
  return k == 1;
}

class Parser {
 public:
  Parser(std::string_view text, const GradingProfile& profile, std::uint64_t q)
      : text_(text), profile_(profile), q_(q), p_(characteristic(q)) {}

  ExprPtr identity() {
    ExprPtr lhs = expr(Ctx::Element);
    skip();
    if (accept('=')) {
      ExprPtr rhs = expr(Ctx::Element);
      lhs = difference(lhs, rhs);
    }
    skip();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return lhs;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }

  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    if (at >= text_.size()) throw Error(ErrorCode::ParseError, "at end of input: " + msg);
    throw Error(ErrorCode::ParseError, "at position " + std::to_string(at + 1) + ": " + msg);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail("expected '" + std::string(1, c) + "'");
  }

  bool peek_digit() {
    skip();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  long long integer() {
    if (!peek_digit()) fail("expected an integer");
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > kMaxExponent) fail_at(start, "integer too large");
    }
    return v;
  }

  std::string word() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  ExprPtr expr(Ctx ctx) {
    std::vector<Term> terms;
    long long sign = 1;
    if (accept('-'))
      sign = -1;
    else
      accept('+');
    while (true) {
      Term t = term(ctx);
      t.coeff *= sign;
      terms.push_back(std::move(t));
      if (accept('+'))
        sign = 1;
      else if (accept('-'))
        sign = -1;
      else
        break;
    }
    return Expr::sum(std::move(terms));
  }

  Term term(Ctx ctx) {
    long long coeff = 1;
    if (peek_digit()) {
      coeff = integer();
      expect('*');
    }
    return Term{coeff, factor(ctx)};
  }

  ExprPtr factor(Ctx ctx) {
    ExprPtr base = primary(ctx);
    if (!peek('^')) return base;
    const std::size_t at = pos_;
    ++pos_;
    if (ctx == Ctx::Element) fail_at(at, "a power may only stand in a bracket slot");
    if (is_operator(*base)) fail_at(at, "the base of a power cannot contain a power");
    const long long k = exponent();
    if (ctx == Ctx::FirstSlot && k > 1 && !is_power_of(k, p_))
      fail_at(at, "a power in the first slot must have exponent a power of " + std::to_string(p_));
    return Expr::power(std::move(base), k);
  }

  ExprPtr primary(Ctx ctx) {
    skip();
    if (pos_ >= text_.size()) fail("expected an expression");
    const std::size_t at = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      // The parenthesized expression may hold powers only where the
      // surrounding context allows them; as a power base it may not.
      ExprPtr e = expr(ctx);
      expect(')');
      return e;
    }
    if (c == '[') {
      ++pos_;
      std::vector<ExprPtr> slots;
      slots.push_back(expr(Ctx::FirstSlot));
      while (accept(',')) slots.push_back(expr(Ctx::Slot));
      expect(']');
      if (slots.size() < 2) fail_at(at, "a bracket needs at least two entries");
      if (is_operator(*slots[0]) && is_operator(*slots[1]))
        fail_at(at, "the first two bracket entries cannot both be powers");
      return Expr::bracket(std::move(slots));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::string w = word();
      if (w == "Sem1" || w == "Sem2") {
        expect('(');
        ExprPtr u = expr(Ctx::Element);
        expect(',');
        ExprPtr v = expr(Ctx::Element);
        expect(')');
        return expand_macro(w == "Sem1" ? Macro::Sem1 : Macro::Sem2, u, v, q_);
      }
      if (w.size() < 2 || !std::islower(static_cast<unsigned char>(w[0])) ||
          w.find_first_not_of("0123456789", 1) != std::string::npos)
        fail_at(at, "unknown name '" + w + "'");
      if (!profile_.has_family(w[0]))
        throw Error(ErrorCode::UnknownFamily, "at position " + std::to_string(at + 1) + ": variable family '" +
                                                  std::string(1, w[0]) + "' is not declared by profile " +
                                                  profile_.name());
      if (w[1] == '0' || w.size() > 7) fail_at(at, "bad variable index in '" + w + "'");
      return Expr::var(GradedVar{w[0], std::stoi(w.substr(1))});
    }
    fail("expected an expression");
  }

  long long exponent() {
    const std::size_t at = pos_;
    long long k;
    if (accept('(')) {
      k = arith();
      expect(')');
    } else {
      k = atom();
      if (accept('^')) k = checked_pow(k, integer(), at);
    }
    if (k <= 0)
      throw Error(ErrorCode::NonPositiveExponent,
                  "at position " + std::to_string(at + 1) + ": exponent evaluates to " + std::to_string(k));
    return k;
  }

  long long atom() {
    skip();
    if (pos_ < text_.size() && text_[pos_] == 'q') {
      ++pos_;
      return static_cast<long long>(q_);
    }
    if (accept('(')) {
      const long long v = arith();
      expect(')');
      return v;
    }
    return integer();
  }

  long long arith() {
    const std::size_t at = pos_;
    long long v = aterm();
    while (true) {
      if (accept('+'))
        v += aterm();
      else if (accept('-'))
        v -= aterm();
      else
        break;
      if (v > kMaxExponent || v < -kMaxExponent) fail_at(at, "exponent too large");
    }
    return v;
  }

  long long aterm() {
    const std::size_t at = pos_;
    long long v = afactor();
    while (accept('*')) {
      v *= afactor();
      if (v > kMaxExponent || v < -kMaxExponent) fail_at(at, "exponent too large");
    }
    return v;
  }

  long long afactor() {
    const std::size_t at = pos_;
    long long v = atom();
    if (accept('^')) v = checked_pow(v, atom(), at);
    return v;
  }

  long long checked_pow(long long b, long long e, std::size_t at) const {
    if (e < 0) fail_at(at, "negative exponent");
    long long v = 1;
    for (long long i = 0; i < e; ++i) {
      v *= b;
      if (v > kMaxExponent || v < -kMaxExponent) fail_at(at, "exponent too large");
    }
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  const GradingProfile& profile_;
  std::uint64_t q_;
  std::uint64_t p_;
};

ExprPtr sum(std::initializer_list<Term> terms) { return Expr::sum(std::vector<Term>(terms)); }

ExprPtr br(std::initializer_list<ExprPtr> slots) { return Expr::bracket(std::vector<ExprPtr>(slots)); }

}  // namespace

ExprPtr parse_poly(std::string_view text, const GradingProfile& profile, std::uint64_t q) {
  return Parser(text, profile, q).identity();
}

ExprPtr expand_macro(Macro m, const ExprPtr& u, const ExprPtr& v, std::uint64_t q) {
  const auto k = static_cast<long long>(q);
  const long long k2 = k * k;
  auto pw = [](const ExprPtr& e, long long n) { return Expr::power(e, n); };
  if (m == Macro::Sem1) return difference(br({u, pw(v, k2 + 2)}), br({u, pw(v, 3)}));
  const ExprPtr uv = br({u, v});
  const ExprPtr fu = sum({{1, pw(u, k2)}, {-1, u}});
  const ExprPtr fv = sum({{1, pw(v, k2)}, {-1, v}});
  return sum({
      {1, uv},
      {-1, br({u, v, pw(u, k2 - 1)})},
      {-1, br({u, pw(v, k)})},
      {1, br({u, v, pw(u, k2 - 1), pw(v, k - 1)})},
      {1, br({u, v, fu, pw(uv, k - 2), fv})},
      {-1, br({v, pw(br({fu, v}), k), sum({{1, pw(v, k2 - 2)}, {-1, pw(v, k - 2)}})})},
  });
}

const Identity& BasisFile::find(std::string_view name) const {
  for (const auto& id : identities)
    if (id.name == name) return id;
  throw Error(ErrorCode::UnknownName, "no identity named '" + std::string(name) + "'");
}

BasisFile parse_basis(std::string_view text, std::uint64_t q) {
  std::optional<GradingProfile> profile;
  std::vector<Identity> identities;
  std::set<std::string> names;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) { return Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + msg); };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string keyword;
    if (!(words >> keyword)) continue;
    if (keyword == "profile") {
      std::string name, extra;
      if (!(words >> name) || (words >> extra)) throw fail("expected 'profile NAME'");
      if (profile) throw fail("profile declared twice");
      try {
        profile = GradingProfile::by_name(name);
      } catch (const Error&) {
        throw Error(ErrorCode::ProfileMismatch, "line " + std::to_string(lineno) + ": unknown profile '" + name + "'");
      }
    } else if (keyword == "ident") {
      if (!profile) throw fail("'ident' before the profile line");
      const std::size_t colon = line.find(':');
      if (colon == std::string::npos) throw fail("expected 'ident NAME: EXPR'");
      std::string head = line.substr(0, colon);
      std::istringstream hw(head);
      std::string kw, name, extra;
      hw >> kw >> name;
      if (name.empty() || (hw >> extra)) throw fail("expected 'ident NAME: EXPR'");
      for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') throw fail("bad identity name '" + name + "'");
      if (!names.insert(name).second) throw fail("identity '" + name + "' defined twice");
      try {
        identities.push_back({name, parse_poly(std::string_view(line).substr(colon + 1), *profile, q)});
      } catch (const Error& e) {
        std::string detail = e.detail();
        // Positions are reported relative to the whole line.
        const std::string marker = "at position ";
        if (detail.rfind(marker, 0) == 0) {
          const std::size_t end = detail.find(':');
          const std::size_t pos = std::stoul(detail.substr(marker.size(), end - marker.size())) + colon + 1;
          detail = "column " + std::to_string(pos) + detail.substr(end);
        }
        throw Error(e.code(), "line " + std::to_string(lineno) + ", " + detail);
      }
    } else {
      throw fail("unknown keyword '" + keyword + "'");
    }
  }
  if (!profile) throw Error(ErrorCode::ParseError, "missing 'profile' line");
  return BasisFile{*profile, std::move(identities)};
}

std::string resolve_data_file(const std::string& path) {
  namespace fs = std::filesystem;
  if (fs::exists(path)) return path;
  const fs::path shipped = fs::path(GRADEDPI_DATA_DIR) / path;
  if (fs::path(path).is_relative() && fs::exists(shipped)) return shipped.string();
  throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
}

BasisFile load_basis(const std::string& path, std::uint64_t q) {
  std::ifstream in(resolve_data_file(path));
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_basis(text.str(), q);
}

}  // namespace gradedpi
