#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gradedpi/expr.hpp"
#include "gradedpi/profile.hpp"

namespace gradedpi {

// Parses one polynomial, or an identity "lhs = rhs" stored as lhs - rhs.
// The symbol q in exponents is replaced by the field size.  Grammar in
// docs/grammar.md.  Throws ParseError (with position), UnknownFamily or
// NonPositiveExponent.
ExprPtr parse_poly(std::string_view text, const GradingProfile& profile, std::uint64_t q);

enum class Macro { Sem1, Sem2 };

// Sem1(u, v) = [u, v^(q^2+2)] - [u, v^3]
// Sem2(u, v) = [u,v] - [u,v,u^(q^2-1)] - [u,v^q] + [u,v,u^(q^2-1),v^(q-1)]
//            + [u,v,u^(q^2)-u,[u,v]^(q-2),v^(q^2)-v]
//            - [v,[u^(q^2)-u,v]^q,v^(q^2-2)-v^(q-2)]
ExprPtr expand_macro(Macro m, const ExprPtr& u, const ExprPtr& v, std::uint64_t q);

struct Identity {
  std::string name;
  ExprPtr expr;
};

struct BasisFile {
  GradingProfile profile;
  std::vector<Identity> identities;

  // Throws UnknownName.
  const Identity& find(std::string_view name) const;
};

// Text of a .lie file: a "profile NAME" line, then "ident NAME: EXPR" lines;
// '#' starts a comment.  An unknown profile name is a ProfileMismatch.
BasisFile parse_basis(std::string_view text, std::uint64_t q);
// Reads path, falling back to the shipped data directory for bare names
// such as "beta_z2.lie".
BasisFile load_basis(const std::string& path, std::uint64_t q);
std::string resolve_data_file(const std::string& path);

}  // namespace gradedpi
