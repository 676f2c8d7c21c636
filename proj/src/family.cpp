#include "groupopt/family.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>
#include <utility>

namespace groupopt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double get(const ParamMap& pm, const char* key) { return pm.at(key); }

void register_family_impl(FamilyDef def);

// True when 1/p is an integer to double precision. Inside the combo range
// [1/2, 3/4] this happens only at p = 1/2, where (ln ln x)^2 is an even
// power and the family is defined for all x > 1.
bool reciprocal_is_integer(double p) {
  const double q = 1.0 / p;
  return std::abs(q - std::round(q)) < 1e-12;
}

std::map<std::string, std::shared_ptr<const FamilyDef>>& registry();

void register_builtins() {
  const double e = std::exp(1.0);
  const double ee = std::exp(e);

  // f(x) = x^p + (ln x)^{1/p}
  register_family_impl(FamilyDef{
      "yunus",
      {{"p", 0.5, 1.0}},
      [](const ParamMap&) { return 2.0; },
      [](const ParamMap&) { return 1.0; },
      [](const ParamMap& pm, double x) {
        const double p = get(pm, "p");
        return std::pow(x, p) + std::pow(std::log(x), 1.0 / p);
      },
      [](const ParamMap& pm, double x) {
        const double p = get(pm, "p"), q = 1.0 / p;
        return p * std::pow(x, p - 1.0) + q * std::pow(std::log(x), q - 1.0) / x;
      },
      [](const ParamMap& pm, double x) {
        const double p = get(pm, "p"), q = 1.0 / p, lx = std::log(x);
        return p * (p - 1.0) * std::pow(x, p - 2.0) +
               q / (x * x) * ((q - 1.0) * std::pow(lx, q - 2.0) - std::pow(lx, q - 1.0));
      }});

  // f(x) = x^r
  register_family_impl(FamilyDef{
      "power",
      {{"r", 0.0, kInf, /*lo_strict=*/true}},
      [](const ParamMap&) { return 2.0; },
      [](const ParamMap&) { return 0.0; },
      [](const ParamMap& pm, double x) { return std::pow(x, get(pm, "r")); },
      [](const ParamMap& pm, double x) {
        const double r = get(pm, "r");
        return r * std::pow(x, r - 1.0);
      },
      [](const ParamMap& pm, double x) {
        const double r = get(pm, "r");
        return r * (r - 1.0) * std::pow(x, r - 2.0);
      }});

  // f(x) = (ln x)^{1/p}
  register_family_impl(FamilyDef{
      "logpow",
      {{"p", 0.5, 1.0}},
      [](const ParamMap&) { return 2.0; },
      [](const ParamMap&) { return 1.0; },
      [](const ParamMap& pm, double x) {
        return std::pow(std::log(x), 1.0 / get(pm, "p"));
      },
      [](const ParamMap& pm, double x) {
        const double q = 1.0 / get(pm, "p");
        return q * std::pow(std::log(x), q - 1.0) / x;
      },
      [](const ParamMap& pm, double x) {
        const double q = 1.0 / get(pm, "p"), lx = std::log(x);
        return q / (x * x) * ((q - 1.0) * std::pow(lx, q - 2.0) - std::pow(lx, q - 1.0));
      }});

  // f(x) = (x ln x)^p
  register_family_impl(FamilyDef{
      "xlnx",
      {{"p", 0.5, 0.75}},
      [](const ParamMap&) { return 2.0; },
      [](const ParamMap&) { return 1.0; },
      [](const ParamMap& pm, double x) {
        return std::pow(x * std::log(x), get(pm, "p"));
      },
      [](const ParamMap& pm, double x) {
        const double p = get(pm, "p");
        return p * std::pow(x * std::log(x), p - 1.0) * (std::log(x) + 1.0);
      },
      [](const ParamMap& pm, double x) {
        const double p = get(pm, "p"), lx = std::log(x), u = x * lx;
        const double du = lx + 1.0;
        return p * (p - 1.0) * std::pow(u, p - 2.0) * du * du +
               p * std::pow(u, p - 1.0) / x;
      }});

  // f(x) = (ln ln x)^p; f > 1 requires x > e^e, hence the raised x_min.
  register_family_impl(FamilyDef{
      "lnln",
      {{"p", 0.0, kInf, /*lo_strict=*/true}},
      [ee](const ParamMap&) { return ee + 1e-9; },
      [e](const ParamMap&) { return e; },
      [](const ParamMap& pm, double x) {
        return std::pow(std::log(std::log(x)), get(pm, "p"));
      },
      [](const ParamMap& pm, double x) {
        const double p = get(pm, "p"), lx = std::log(x);
        return p * std::pow(std::log(lx), p - 1.0) / (x * lx);
      },
      [](const ParamMap& pm, double x) {
        const double p = get(pm, "p"), lx = std::log(x), L = std::log(lx);
        return p / (x * x * lx * lx) *
               ((p - 1.0) * std::pow(L, p - 2.0) - std::pow(L, p - 1.0) * (lx + 1.0));
      }});

  // f(x) = (x ln x)^p + (ln ln x)^{1/p}
  register_family_impl(FamilyDef{
      "combo",
      {{"p", 0.5, 0.75}},
      [ee](const ParamMap& pm) {
        return reciprocal_is_integer(get(pm, "p")) ? 2.0 : ee + 1e-9;
      },
      [e](const ParamMap& pm) {
        return reciprocal_is_integer(get(pm, "p")) ? 1.0 : e;
      },
      [](const ParamMap& pm, double x) {
        const double p = get(pm, "p"), q = 1.0 / p;
        return std::pow(x * std::log(x), p) + std::pow(std::log(std::log(x)), q);
      },
      [](const ParamMap& pm, double x) {
        const double p = get(pm, "p"), q = 1.0 / p, lx = std::log(x);
        return p * std::pow(x * lx, p - 1.0) * (lx + 1.0) +
               q * std::pow(std::log(lx), q - 1.0) / (x * lx);
      },
      [](const ParamMap& pm, double x) {
        const double p = get(pm, "p"), q = 1.0 / p, lx = std::log(x);
        const double u = x * lx, du = lx + 1.0, L = std::log(lx);
        return p * (p - 1.0) * std::pow(u, p - 2.0) * du * du +
               p * std::pow(u, p - 1.0) / x +
               q / (x * x * lx * lx) *
                   ((q - 1.0) * std::pow(L, q - 2.0) - std::pow(L, q - 1.0) * (lx + 1.0));
      }});

  // f(x) = e^{rx}; decays too fast to admit a finite maximizer.
  register_family_impl(FamilyDef{
      "exp",
      {{"r", 1.0, kInf}},
      [](const ParamMap&) { return 2.0; },
      [](const ParamMap&) { return 0.0; },
      [](const ParamMap& pm, double x) { return std::exp(get(pm, "r") * x); },
      [](const ParamMap& pm, double x) {
        const double r = get(pm, "r");
        return r * std::exp(r * x);
      },
      [](const ParamMap& pm, double x) {
        const double r = get(pm, "r");
        return r * r * std::exp(r * x);
      }});
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, std::shared_ptr<const FamilyDef>>& registry() {
  static std::map<std::string, std::shared_ptr<const FamilyDef>> reg;
  return reg;
}

void ensure_builtins() {
  static std::once_flag flag;
  std::call_once(flag, register_builtins);
}

}  // namespace

bool ParamRange::contains(double v) const {
  if (!std::isfinite(v)) return false;
  if (lo_strict ? !(v > lo) : !(v >= lo)) return false;
  if (hi_strict ? !(v < hi) : !(v <= hi)) return false;
  return true;
}

FamilySpec::FamilySpec(std::shared_ptr<const FamilyDef> def, ParamMap params)
    : def_(std::move(def)), params_(std::move(params)) {
  for (const auto& range : def_->param_ranges) {
    auto it = params_.find(range.name);
    if (it == params_.end()) {
      throw family_error("family '" + def_->name + "': missing parameter '" +
                         range.name + "'");
    }
    if (!range.contains(it->second)) {
      std::ostringstream os;
      os << "family '" << def_->name << "': parameter " << range.name << "="
         << it->second << " out of range " << (range.lo_strict ? "(" : "[")
         << range.lo << ", " << range.hi << (range.hi_strict ? ")" : "]");
      throw family_error(os.str());
    }
  }
  if (params_.size() != def_->param_ranges.size()) {
    throw family_error("family '" + def_->name + "': unexpected extra parameter");
  }
  x_min_ = def_->x_min(params_);
  x_floor_ = def_->x_floor(params_);
}

double FamilySpec::param(const std::string& name) const {
  auto it = params_.find(name);
  if (it == params_.end()) {
    throw family_error("family '" + def_->name + "': no parameter '" + name + "'");
  }
  return it->second;
}

void FamilySpec::check_domain(double x) const {
  if (!std::isfinite(x) || x <= x_floor_) {
    std::ostringstream os;
    os << "family '" << def_->name << "': x=" << x
       << " below the evaluation domain (x > " << x_floor_ << ")";
    throw domain_error(os.str());
  }
}

double FamilySpec::f(double x) const {
  check_domain(x);
  return def_->f(params_, x);
}

double FamilySpec::f1(double x) const {
  check_domain(x);
  return def_->f1(params_, x);
}

double FamilySpec::f2(double x) const {
  check_domain(x);
  return def_->f2(params_, x);
}

FamilySpec make_family(const std::string& name, const ParamMap& params) {
  ensure_builtins();
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto it = registry().find(name);
  if (it == registry().end()) {
    throw family_error("unknown family '" + name + "'");
  }
  return FamilySpec(it->second, params);
}

namespace {

void register_family_impl(FamilyDef def) {
  auto ptr = std::make_shared<const FamilyDef>(std::move(def));
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto [it, inserted] = registry().emplace(ptr->name, ptr);
  if (!inserted) {
    throw family_error("family '" + ptr->name + "' already registered");
  }
}

}  // namespace

void register_family(FamilyDef def) {
  ensure_builtins();  // built-ins always win name collisions
  register_family_impl(std::move(def));
}

bool family_registered(const std::string& name) {
  ensure_builtins();
  std::lock_guard<std::mutex> lock(registry_mutex());
  return registry().count(name) != 0;
}

const FamilyDef& family_def(const std::string& name) {
  ensure_builtins();
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto it = registry().find(name);
  if (it == registry().end()) {
    throw family_error("unknown family '" + name + "'");
  }
  return *it->second;
}

std::vector<std::string> family_names() {
  ensure_builtins();
  std::lock_guard<std::mutex> lock(registry_mutex());
  std::vector<std::string> names;
  names.reserve(registry().size());
  for (const auto& [name, def] : registry()) names.push_back(name);
  return names;
}

}  // namespace groupopt
