// groupopt command-line tool: certify function families, locate optimal
// group sizes, run parameter sweeps, and cross-check with Monte Carlo.
//
// Exit codes: 0 success, 1 a check reported failures, 2 usage error,
// 3 config-file error, 4 domain error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "groupopt/analysis.hpp"
#include "groupopt/errors.hpp"
#include "groupopt/family.hpp"
#include "groupopt/optimizer.hpp"
#include "groupopt/report.hpp"
#include "groupopt/simulation.hpp"
#include "groupopt/verifier.hpp"

namespace {

using groupopt::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitConfig = 3;
constexpr int kExitDomain = 4;

struct Options {
  std::string command;
  std::optional<std::string> family;
  std::optional<double> p;
  std::optional<double> r;
  std::optional<std::string> sweep_param;
  std::optional<double> lo, hi, step;
  std::optional<double> p_lo, p_hi, p_step;
  std::optional<double> x_lo, x_hi, x_step;
  std::optional<double> scan_step, tol;
  std::optional<int> k;
  std::optional<long long> trials;
  std::optional<std::uint64_t> seed;
  std::optional<int> points;
  std::optional<std::string> format;
  std::optional<std::string> output;
};

struct ConfigError {
  std::string message;
};

struct UsageError {
  std::string message;
};

// Fills unset options from the JSON config; command-line flags win.
template <typename T>
void merge(std::optional<T>& field, const json& cfg, const char* key) {
  if (field || !cfg.contains(key)) return;
  try {
    field = cfg.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError{std::string("config key '") + key + "' has the wrong type"};
  }
}

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError{"cannot open config file '" + path + "'"};
  json cfg;
  try {
    in >> cfg;
  } catch (const json::parse_error& e) {
    throw ConfigError{std::string("malformed config JSON: ") + e.what()};
  }
  if (!cfg.is_object()) throw ConfigError{"config root must be a JSON object"};
  return cfg;
}

void merge_all(Options& o, const json& cfg) {
  if (o.command.empty() && cfg.contains("command")) {
    o.command = cfg.at("command").get<std::string>();
  }
  merge(o.family, cfg, "family");
  if (cfg.contains("params")) {
    const auto& params = cfg.at("params");
    if (!params.is_object()) throw ConfigError{"config key 'params' must be an object"};
    if (!o.p && params.contains("p")) o.p = params.at("p").get<double>();
    if (!o.r && params.contains("r")) o.r = params.at("r").get<double>();
  }
  merge(o.sweep_param, cfg, "param");
  merge(o.lo, cfg, "lo");
  merge(o.hi, cfg, "hi");
  merge(o.step, cfg, "step");
  merge(o.p_lo, cfg, "p_lo");
  merge(o.p_hi, cfg, "p_hi");
  merge(o.p_step, cfg, "p_step");
  merge(o.x_lo, cfg, "x_lo");
  merge(o.x_hi, cfg, "x_hi");
  merge(o.x_step, cfg, "x_step");
  merge(o.scan_step, cfg, "scan_step");
  merge(o.tol, cfg, "tol");
  merge(o.k, cfg, "k");
  merge(o.trials, cfg, "trials");
  merge(o.seed, cfg, "seed");
  merge(o.points, cfg, "points");
  merge(o.format, cfg, "format");
  merge(o.output, cfg, "output");
}

// Missing required values map to the config exit code when a config file is
// in play, otherwise to usage.
struct Require {
  bool have_config;

  template <typename T>
  T operator()(const std::optional<T>& field, const char* name) const {
    if (field) return *field;
    const std::string msg = std::string("missing required value '") + name + "'";
    if (have_config) throw ConfigError{msg};
    throw UsageError{msg};
  }
};

groupopt::ParamMap collect_params(const Options& o) {
  groupopt::ParamMap pm;
  if (o.p) pm["p"] = *o.p;
  if (o.r) pm["r"] = *o.r;
  return pm;
}

void emit(const Options& o, const std::string& text) {
  if (o.output && !o.output->empty() && *o.output != "-") {
    std::ofstream out(*o.output, std::ios::binary);
    if (!out) throw ConfigError{"cannot open output file '" + *o.output + "'"};
    out << text;
  } else {
    std::cout << text;
  }
}

std::string check_format(const Options& o, std::initializer_list<const char*> allowed,
                         const char* def) {
  const std::string fmt = o.format.value_or(def);
  for (const char* a : allowed) {
    if (fmt == a) return fmt;
  }
  throw UsageError{"format '" + fmt + "' not valid for this command"};
}

int cmd_families(const Options& o) {
  const auto fmt = check_format(o, {"text", "json"}, "text");
  const auto names = groupopt::family_names();
  if (fmt == "json") {
    json arr = json::array();
    for (const auto& name : names) {
      const auto& def = groupopt::family_def(name);
      json ranges = json::array();
      for (const auto& pr : def.param_ranges) {
        ranges.push_back({{"name", pr.name},
                          {"lo", pr.lo},
                          {"hi", pr.hi},
                          {"lo_strict", pr.lo_strict},
                          {"hi_strict", pr.hi_strict}});
      }
      arr.push_back({{"name", name}, {"params", ranges}});
    }
    emit(o, arr.dump(2) + "\n");
    return kExitOk;
  }
  std::ostringstream os;
  os << "family    parameter  range\n";
  for (const auto& name : names) {
    const auto& def = groupopt::family_def(name);
    for (const auto& pr : def.param_ranges) {
      const bool unbounded = std::isinf(pr.hi);
      os << name << std::string(name.size() < 10 ? 10 - name.size() : 1, ' ')
         << pr.name << std::string(pr.name.size() < 11 ? 11 - pr.name.size() : 1, ' ')
         << (pr.lo_strict ? "(" : "[") << pr.lo << ", " << pr.hi
         << (pr.hi_strict || unbounded ? ")" : "]") << "\n";
    }
  }
  emit(o, os.str());
  return kExitOk;
}

groupopt::ScanConfig scan_from(const Options& o) {
  groupopt::ScanConfig scan;
  if (o.x_lo) scan.x_lo = *o.x_lo;
  if (o.x_hi) scan.x_hi = *o.x_hi;
  if (o.scan_step) scan.step = *o.scan_step;
  if (o.tol) scan.tol = *o.tol;
  return scan;
}

int cmd_verify(const Options& o, const Require& need) {
  check_format(o, {"json"}, "json");
  const auto fam = groupopt::make_family(need(o.family, "family"), collect_params(o));
  const auto cert = groupopt::verify_conditions(fam, scan_from(o));
  json j = groupopt::to_json(cert);
  j["family"] = fam.name();
  j["params"] = fam.params();
  emit(o, j.dump(2) + "\n");
  return kExitOk;
}

int cmd_optimize(const Options& o, const Require& need) {
  check_format(o, {"json"}, "json");
  const auto fam = groupopt::make_family(need(o.family, "family"), collect_params(o));
  const auto cert = groupopt::verify_conditions(fam, scan_from(o));
  const auto opt = groupopt::maximize(fam, cert, o.tol.value_or(1e-12));
  json j = groupopt::to_json(opt);
  j["family"] = fam.name();
  j["params"] = fam.params();
  j["branch"] = groupopt::to_string(cert.branch);
  emit(o, j.dump(2) + "\n");
  return kExitOk;
}

int cmd_sweep(const Options& o, const Require& need) {
  const auto fmt = check_format(o, {"json", "csv"}, "csv");
  const auto records = groupopt::sweep(
      need(o.family, "family"), need(o.sweep_param, "param"), need(o.lo, "lo"),
      need(o.hi, "hi"), need(o.step, "step"));
  if (fmt == "csv") {
    emit(o, groupopt::sweep_csv(records));
  } else {
    emit(o, groupopt::to_json(records).dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_narrow(const Options& o, const Require& need) {
  check_format(o, {"json"}, "json");
  const double e = std::exp(1.0);
  const auto res = groupopt::narrow_interval(
      need(o.family, "family"), o.sweep_param.value_or("p"),
      need(o.p_lo, "p-lo"), need(o.p_hi, "p-hi"), o.p_step.value_or(1e-3),
      o.x_lo.value_or(e), o.x_hi.value_or(e * e), o.x_step.value_or(0.1));
  emit(o, groupopt::to_json(res).dump(2) + "\n");
  return kExitOk;
}

int cmd_simulate(const Options& o, const Require& need) {
  check_format(o, {"json"}, "json");
  const auto fam = groupopt::make_family(need(o.family, "family"), collect_params(o));
  const int k = need(o.k, "k");
  const auto est = groupopt::simulate_group(fam, k, o.trials.value_or(1'000'000),
                                            o.seed.value_or(0));
  const double analytic = groupopt::analytic_group_prob(fam, k);
  emit(o, groupopt::simulation_json(est, k, analytic).dump(2) + "\n");
  return kExitOk;
}

int cmd_check_appendix(const Options& o) {
  const auto fmt = check_format(o, {"text", "json"}, "text");
  const auto grid = groupopt::default_p_grid(o.points.value_or(501));
  const auto rep = groupopt::appendix_b_checks(grid);
  if (fmt == "json") {
    emit(o, groupopt::to_json(rep).dump(2) + "\n");
  } else {
    std::ostringstream os;
    auto line = [&os](bool ok, const std::string& what) {
      os << (ok ? "PASS  " : "FAIL  ") << what << "\n";
    };
    std::ostringstream s1;
    s1 << "h_p(e) < 1/2 on the p-grid (max " << rep.max_h_e << " at p=" << rep.argmax_p
       << ", analytic argmax 3W(1/3)=" << rep.p_star_analytic << ")";
    line(rep.h_e_below_half, s1.str());
    std::ostringstream s2;
    s2 << "h_p(e^2) >= 1 on the p-grid (min " << rep.min_h_e2
       << "; h_{1/2}(e^2)=" << rep.h_e2_at_half << ", h_1(e^2)=" << rep.h_e2_at_one
       << ")";
    line(rep.h_e2_at_least_one, s2.str());
    line(rep.h_increasing, "h_p increasing on [e, e^2] (sampled)");
    line(rep.f2_negative, "f'' < 0 on [e, e^2] (sampled)");
    emit(o, os.str());
  }
  return rep.all_ok() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  std::string config_path;

  CLI::App app{"Optimal group size for group-lending default models"};
  app.require_subcommand(0, 1);
  app.add_option("--config", config_path, "JSON config file; flags override it");

  auto add_family_opts = [&](CLI::App* sub) {
    sub->fallthrough();  // lets --config appear after the subcommand
    sub->add_option("--family", o.family, "family name");
    sub->add_option("--p", o.p, "parameter p");
    sub->add_option("--r", o.r, "parameter r");
  };
  auto add_io_opts = [&](CLI::App* sub) {
    sub->add_option("--output", o.output, "output path (default stdout)");
    sub->add_option("--format", o.format, "output format");
  };

  auto* families = app.add_subcommand("families", "list registered families");
  families->fallthrough();
  add_io_opts(families);

  auto* verify = app.add_subcommand("verify", "certify the theorem conditions");
  add_family_opts(verify);
  verify->add_option("--x-lo", o.x_lo, "scan start (default max(2, x_min))");
  verify->add_option("--x-hi", o.x_hi, "scan end (default 1e4)");
  verify->add_option("--step", o.scan_step, "scan step (default 1e-3)");
  verify->add_option("--tol", o.tol, "bracket refinement tolerance");
  add_io_opts(verify);

  auto* optimize = app.add_subcommand("optimize", "locate the optimal group size");
  add_family_opts(optimize);
  optimize->add_option("--tol", o.tol, "solver tolerance (default 1e-12)");
  add_io_opts(optimize);

  auto* sweep = app.add_subcommand("sweep", "sweep a family parameter");
  add_family_opts(sweep);
  sweep->add_option("--param", o.sweep_param, "parameter name to sweep");
  sweep->add_option("--lo", o.lo, "sweep start");
  sweep->add_option("--hi", o.hi, "sweep end");
  sweep->add_option("--step", o.step, "sweep step");
  add_io_opts(sweep);

  auto* narrow = app.add_subcommand("narrow", "narrow the maximizer interval");
  add_family_opts(narrow);
  narrow->add_option("--param", o.sweep_param, "parameter name (default p)");
  narrow->add_option("--p-lo", o.p_lo, "parameter range start");
  narrow->add_option("--p-hi", o.p_hi, "parameter range end");
  narrow->add_option("--p-step", o.p_step, "parameter grid step (default 1e-3)");
  narrow->add_option("--x-lo", o.x_lo, "x interval start (default e)");
  narrow->add_option("--x-hi", o.x_hi, "x interval end (default e^2)");
  narrow->add_option("--x-step", o.x_step, "x grid step (default 0.1)");
  add_io_opts(narrow);

  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo group simulation");
  add_family_opts(simulate);
  simulate->add_option("--k", o.k, "group size");
  simulate->add_option("--trials", o.trials, "trial count (default 1e6)");
  simulate->add_option("--seed", o.seed, "RNG seed (default 0)");
  add_io_opts(simulate);

  auto* check = app.add_subcommand("check-appendix", "verify the analytic claims");
  check->fallthrough();
  check->add_option("--points", o.points, "p-grid size (default 501)");
  add_io_opts(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const bool have_config = !config_path.empty();
    if (have_config) merge_all(o, load_config(config_path));

    for (auto* sub : {families, verify, optimize, sweep, narrow, simulate, check}) {
      if (sub->parsed()) o.command = sub->get_name();
    }
    if (o.command.empty()) {
      std::cerr << "error: no command given\n" << app.help();
      return kExitUsage;
    }

    const Require need{have_config};
    if (o.command == "families") return cmd_families(o);
    if (o.command == "verify") return cmd_verify(o, need);
    if (o.command == "optimize") return cmd_optimize(o, need);
    if (o.command == "sweep") return cmd_sweep(o, need);
    if (o.command == "narrow") return cmd_narrow(o, need);
    if (o.command == "simulate") return cmd_simulate(o, need);
    if (o.command == "check-appendix") return cmd_check_appendix(o);
    std::cerr << "error: unknown command '" << o.command << "'\n";
    return have_config ? kExitConfig : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitConfig;
  } catch (const groupopt::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}
