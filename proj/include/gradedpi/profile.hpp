#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gradedpi/algebra.hpp"
#include "gradedpi/freelie.hpp"

namespace gradedpi {

// Assigns a grade to every variable family letter.
class GradingProfile {
 public:
  GradingProfile(std::string name, GradeGroup group, std::map<char, GroupElement> family_grades);

  // Z2 {y:0, z:1}; Z3 {x:-1, y:0, z:1}; Z2Z2 {w:(0,0), x:(0,1), y:(1,0), z:(1,1)};
  // Z {x:-1, y:0, z:1}; Trivial puts w, x, y, z in degree 0.
  static GradingProfile z2();
  static GradingProfile z3();
  static GradingProfile z2z2();
  static GradingProfile integers();
  static GradingProfile trivial();
  // Throws UnknownName.
  static GradingProfile by_name(std::string_view name);
  // Built-in profile over the given group; throws ProfileMismatch if none.
  static GradingProfile for_group(const GradeGroup& group);

  const std::string& name() const noexcept { return name_; }
  const GradeGroup& group() const noexcept { return group_; }
  const std::map<char, GroupElement>& family_grades() const noexcept { return family_grades_; }
  bool has_family(char family) const { return family_grades_.count(family) != 0; }
  // Throws UnknownFamily.
  const GroupElement& grade(char family) const;
  const GroupElement& grade(GradedVar v) const { return grade(v.family); }
  GroupElement grade(const Multidegree& d) const;
  GroupElement grade(const Word& w) const;

  friend bool operator==(const GradingProfile& a, const GradingProfile& b) {
    return a.group_ == b.group_ && a.family_grades_ == b.family_grades_;
  }

 private:
  std::string name_;
  GradeGroup group_;
  std::map<char, GroupElement> family_grades_;
};

// Throws ProfileMismatch unless the algebra is graded by the profile's group.
void require_compatible(const GradingProfile& profile, const GradedAlgebra& A);

}  // namespace gradedpi
