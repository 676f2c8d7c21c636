#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "groupopt/errors.hpp"

namespace groupopt {

using ParamMap = std::map<std::string, double>;

/// Declared range of one scalar family parameter. Closed on both ends
/// unless the corresponding *_strict flag is set.
struct ParamRange {
  std::string name;
  double lo;
  double hi;
  bool lo_strict = false;
  bool hi_strict = false;

  bool contains(double v) const;
};

/// Definition of a function family f(x; params) with analytic first and
/// second derivatives. Built-ins are registered at startup; custom families
/// may be registered programmatically and are treated identically.
struct FamilyDef {
  std::string name;
  std::vector<ParamRange> param_ranges;

  /// Model-side lower bound on the group size x (scan default, >= 2 except
  /// where the family is undefined or not admissible below a larger bound).
  std::function<double(const ParamMap&)> x_min;

  /// Analytic infimum of the evaluation domain: f, f', f'' are defined and
  /// finite for all x strictly above this value.
  std::function<double(const ParamMap&)> x_floor;

  std::function<double(const ParamMap&, double)> f;
  std::function<double(const ParamMap&, double)> f1;
  std::function<double(const ParamMap&, double)> f2;
};

/// An immutable, validated (family, parameters) pair. All evaluation
/// methods are pure; instances are safe to share across threads.
class FamilySpec {
 public:
  FamilySpec(std::shared_ptr<const FamilyDef> def, ParamMap params);

  const std::string& name() const { return def_->name; }
  const ParamMap& params() const { return params_; }
  double param(const std::string& name) const;

  double x_min() const { return x_min_; }
  double x_floor() const { return x_floor_; }

  double f(double x) const;
  double f1(double x) const;
  double f2(double x) const;

 private:
  void check_domain(double x) const;

  std::shared_ptr<const FamilyDef> def_;
  ParamMap params_;
  double x_min_;
  double x_floor_;
};

/// Looks up `name` in the registry and constructs a validated FamilySpec.
/// Throws family_error for unknown names, missing parameters, extra
/// parameters, or values outside the declared range.
FamilySpec make_family(const std::string& name, const ParamMap& params);

/// Registers a custom family. Throws family_error if the name is taken.
void register_family(FamilyDef def);

bool family_registered(const std::string& name);
const FamilyDef& family_def(const std::string& name);
std::vector<std::string> family_names();

// Spec-level evaluation aliases.
inline double eval_f(const FamilySpec& fam, double x) { return fam.f(x); }
inline double eval_f1(const FamilySpec& fam, double x) { return fam.f1(x); }
inline double eval_f2(const FamilySpec& fam, double x) { return fam.f2(x); }

}  // namespace groupopt
