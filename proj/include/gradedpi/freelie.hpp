#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gradedpi/field.hpp"
#include "gradedpi/linalg.hpp"

namespace gradedpi {

// A free generator such as y1 or z2.  The grade is not stored: it follows
// from the family letter under the active grading profile.  Variables are
// ordered by family letter (w < x < y < z) and then by index.
struct GradedVar {
  char family = 'y';
  int index = 1;

  friend bool operator==(GradedVar, GradedVar) = default;
  friend auto operator<=>(GradedVar, GradedVar) = default;
};

std::string to_string(GradedVar v);

using Word = std::vector<GradedVar>;

// Exponent of each variable in one multihomogeneous component ("cell").
class Multidegree {
 public:
  Multidegree() = default;
  explicit Multidegree(std::map<GradedVar, int> exps);

  static Multidegree of_word(const Word& w);
  // Parses "y1:1,z2:3"; a bare "y1" means exponent 1.
  static Multidegree parse(std::string_view text);

  const std::map<GradedVar, int>& exps() const noexcept { return exps_; }
  int operator[](GradedVar v) const;
  int total() const noexcept { return total_; }
  bool empty() const noexcept { return exps_.empty(); }
  std::vector<GradedVar> variables() const;
  bool is_multilinear() const;
  // Componentwise comparison.
  bool leq(const Multidegree& other) const;
  Multidegree plus(const Multidegree& other) const;
  // Letters sorted ascending, each repeated by its exponent.
  Word letters() const;
  std::string to_string() const;

  friend bool operator==(const Multidegree&, const Multidegree&) = default;
  // Total degree first, then the sorted (variable, exponent) list.
  friend bool operator<(const Multidegree& a, const Multidegree& b);

 private:
  std::map<GradedVar, int> exps_;
  int total_ = 0;
};

constexpr int kDefaultDegreeCap = 8;

bool is_lyndon(const Word& w);
// w = uv with v the longest proper Lyndon suffix; w must be Lyndon of length >= 2.
std::pair<Word, Word> standard_factorization(const Word& w);
std::string bracketing_string(const Word& w);

// Lyndon words with the letter content of d, ascending lexicographically.
// Results are memoized; the cache never changes what is returned.
const std::vector<Word>& lyndon_basis(const Multidegree& d, int cap = kDefaultDegreeCap);
// Necklace formula (1/n) sum_{g | gcd} mu(g) (n/g)! / prod (n_i/g)!.
std::uint64_t witt_dimension(const Multidegree& d, int cap = 20);

// Element of the free associative algebra with integer or field
// coefficients.  Lie elements are converted to Lyndon coordinates from
// their associative expansion.
using IntAssoc = std::map<Word, long long>;
using AssocPoly = std::map<Word, FieldElement>;

// Associative expansion of the standard bracketing of a Lyndon word.  Its
// smallest word is w itself, with coefficient 1.
const IntAssoc& lyndon_expansion(const Word& w);

AssocPoly to_field(const FieldContext& F, const IntAssoc& p);
void add_scaled(const FieldContext& F, AssocPoly& acc, FieldElement c, const AssocPoly& p);
AssocPoly assoc_multiply(const FieldContext& F, const AssocPoly& a, const AssocPoly& b);
// ab - ba
AssocPoly assoc_commutator(const FieldContext& F, const AssocPoly& a, const AssocPoly& b);

// A Lie polynomial as Lyndon coordinates per cell.  Zero cells are omitted,
// so two LiePoly values are equal exactly when the polynomials are.
class LiePoly {
 public:
  using Cells = std::map<Multidegree, Vec>;

  LiePoly() = default;

  const Cells& cells() const noexcept { return cells_; }
  bool is_zero() const noexcept { return cells_.empty(); }
  // Coordinates in one cell (zero vector if absent).
  Vec coordinates(const Multidegree& d) const;
  void set(const Multidegree& d, Vec coords);
  void add(const FieldContext& F, const LiePoly& other, FieldElement c);

  // Unit polynomial on one Lyndon word.
  static LiePoly monomial(const FieldContext& F, const Word& w);

  friend bool operator==(const LiePoly&, const LiePoly&) = default;

 private:
  Cells cells_;
};

// Rewrites an associative polynomial that is a Lie element into Lyndon
// coordinates.  Throws InvalidArgument if it is not a Lie element.
LiePoly lie_coordinates(const FieldContext& F, const AssocPoly& p, int cap = kDefaultDegreeCap);
// Associative expansion of a LiePoly.
AssocPoly to_assoc(const FieldContext& F, const LiePoly& p);

// "c*[y1, [y2, z1]] + ..." using standard bracketings; "0" for zero.
std::string format_liepoly(const FieldContext& F, const LiePoly& p);

}  // namespace gradedpi
