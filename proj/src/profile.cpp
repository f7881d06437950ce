#include "gradedpi/profile.hpp"

#include "gradedpi/error.hpp"

namespace gradedpi {

GradingProfile::GradingProfile(std::string name, GradeGroup group, std::map<char, GroupElement> family_grades)
    : name_(std::move(name)), group_(std::move(group)) {
  for (auto& [family, g] : family_grades) family_grades_.emplace(family, group_.element(g.coords));
}

GradingProfile GradingProfile::z2() {
  const GradeGroup g = GradeGroup::z2();
  return GradingProfile("Z2", g, {{'y', g.element({0})}, {'z', g.element({1})}});
}

GradingProfile GradingProfile::z3() {
  const GradeGroup g = GradeGroup::z3();
  return GradingProfile("Z3", g, {{'x', g.element({-1})}, {'y', g.element({0})}, {'z', g.element({1})}});
}

GradingProfile GradingProfile::z2z2() {
  const GradeGroup g = GradeGroup::z2z2();
  return GradingProfile("Z2Z2", g,
                        {{'w', g.element({0, 0})},
                         {'x', g.element({0, 1})},
                         {'y', g.element({1, 0})},
                         {'z', g.element({1, 1})}});
}

GradingProfile GradingProfile::integers() {
  const GradeGroup g = GradeGroup::integers();
  return GradingProfile("Z", g, {{'x', g.element({-1})}, {'y', g.element({0})}, {'z', g.element({1})}});
}

GradingProfile GradingProfile::trivial() {
  const GradeGroup g = GradeGroup::trivial();
  return GradingProfile("Trivial", g, {{'w', g.zero()}, {'x', g.zero()}, {'y', g.zero()}, {'z', g.zero()}});
}

GradingProfile GradingProfile::by_name(std::string_view name) {
  if (name == "Z2") return z2();
  if (name == "Z3") return z3();
  if (name == "Z2Z2") return z2z2();
  if (name == "Z") return integers();
  if (name == "Trivial") return trivial();
  throw Error(ErrorCode::UnknownName, "unknown profile '" + std::string(name) + "'");
}

GradingProfile GradingProfile::for_group(const GradeGroup& group) {
  for (const auto& p : {z2(), z3(), z2z2(), integers(), trivial()})
    if (p.group() == group) return p;
  throw Error(ErrorCode::ProfileMismatch, "no grading profile for group " + group.name());
}

const GroupElement& GradingProfile::grade(char family) const {
  auto it = family_grades_.find(family);
  if (it == family_grades_.end())
    throw Error(ErrorCode::UnknownFamily,
                "variable family '" + std::string(1, family) + "' is not declared by profile " + name_);
  return it->second;
}

GroupElement GradingProfile::grade(const Multidegree& d) const {
  GroupElement g = group_.zero();
  for (const auto& [v, e] : d.exps()) g = group_.add(g, group_.scale(e, grade(v)));
  return g;
}

GroupElement GradingProfile::grade(const Word& w) const {
  GroupElement g = group_.zero();
  for (auto v : w) g = group_.add(g, grade(v));
  return g;
}

void require_compatible(const GradingProfile& profile, const GradedAlgebra& A) {
  if (!(profile.group() == A.group()))
    throw Error(ErrorCode::ProfileMismatch, "profile " + profile.name() + " is over " + profile.group().name() +
                                                " but " + A.name() + " is graded by " + A.group().name());
}

}  // namespace gradedpi
