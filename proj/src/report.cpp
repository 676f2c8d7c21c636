#include "groupopt/report.hpp"

#include <cstdio>

namespace groupopt {

namespace {

json failures_json(const std::vector<CertFailure>& failures) {
  json arr = json::array();
  for (const auto& f : failures) {
    arr.push_back({{"condition", f.condition}, {"x", f.x}, {"value", f.value}});
  }
  return arr;
}

}  // namespace

json to_json(const TheoremCertificate& cert) {
  json j;
  j["conditions"] = {{"condition1_ok", cert.condition1_ok},
                     {"condition2_ok", cert.condition2_ok},
                     {"condition3_ok", cert.condition3_ok}};
  j["branch"] = to_string(cert.branch);
  j["a"] = cert.a ? json(*cert.a) : json(nullptr);
  j["b"] = cert.b ? json(*cert.b) : json(nullptr);
  j["a_clipped"] = cert.a_clipped;
  j["scan"] = {{"x_lo", cert.scan.x_lo.value_or(0.0)},
               {"x_hi", cert.scan.x_hi},
               {"step", cert.scan.step},
               {"tol", cert.scan.tol}};
  j["failures"] = failures_json(cert.failures);
  j["notes"] = cert.notes;
  return j;
}

json to_json(const Optimum& opt) {
  return {{"x_star", opt.x_star},
          {"k_star", opt.k_star},
          {"k_star_rounded", opt.k_star_rounded},
          {"p_no_default", opt.p_no_default},
          {"method_agreement", opt.method_agreement},
          {"a", opt.a},
          {"b", opt.b},
          {"k_min_boundary", opt.k_min_boundary},
          {"rounding_mismatch", opt.rounding_mismatch}};
}

json to_json(const SweepRecord& rec) {
  json j;
  j["param"] = rec.param_value;
  j["certified"] = rec.certified;
  j["a"] = rec.a ? json(*rec.a) : json(nullptr);
  j["b"] = rec.b ? json(*rec.b) : json(nullptr);
  if (rec.optimum) {
    j["x_star"] = rec.optimum->x_star;
    j["k_star"] = rec.optimum->k_star;
    j["k_star_rounded"] = rec.optimum->k_star_rounded;
    j["p_no_default"] = rec.optimum->p_no_default;
    j["method_agreement"] = rec.optimum->method_agreement;
  } else {
    j["x_star"] = nullptr;
    j["k_star"] = nullptr;
    j["k_star_rounded"] = nullptr;
    j["p_no_default"] = nullptr;
    j["method_agreement"] = nullptr;
  }
  return j;
}

json to_json(const std::vector<SweepRecord>& records) {
  json arr = json::array();
  for (const auto& rec : records) arr.push_back(to_json(rec));
  return arr;
}

json to_json(const NarrowResult& res) {
  return {{"x_lo", res.x_lo},
          {"x_hi", res.x_hi},
          {"found_lo", res.found_lo},
          {"found_hi", res.found_hi}};
}

json to_json(const AppendixBReport& rep) {
  json j;
  j["h_e_below_half"] = rep.h_e_below_half;
  j["h_e2_at_least_one"] = rep.h_e2_at_least_one;
  j["h_increasing"] = rep.h_increasing;
  j["f2_negative"] = rep.f2_negative;
  j["max_h_e"] = rep.max_h_e;
  j["argmax_p"] = rep.argmax_p;
  j["p_star_analytic"] = rep.p_star_analytic;
  j["h_e_at_p_star"] = rep.h_e_at_p_star;
  j["min_h_e2"] = rep.min_h_e2;
  j["h_e2_at_half"] = rep.h_e2_at_half;
  j["h_e2_at_one"] = rep.h_e2_at_one;
  j["all_ok"] = rep.all_ok();
  j["failures"] = failures_json(rep.failures);
  return j;
}

json simulation_json(const SimulationEstimate& est, int k, double analytic) {
  const double z =
      est.stderr_ > 0.0 ? (est.estimate - analytic) / est.stderr_ : 0.0;
  return {{"k", k},
          {"estimate", est.estimate},
          {"stderr", est.stderr_},
          {"analytic", analytic},
          {"z", z},
          {"trials", est.trials},
          {"seed", est.seed}};
}

std::string format_sig9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string sweep_csv(const std::vector<SweepRecord>& records) {
  std::string out =
      "param,x_star,k_star,k_star_rounded,p_no_default,certified,a,b,"
      "method_agreement\n";
  for (const auto& rec : records) {
    out += format_sig9(rec.param_value);
    out += ',';
    if (rec.optimum) {
      const auto& o = *rec.optimum;
      out += format_sig9(o.x_star);
      out += ',';
      out += std::to_string(o.k_star);
      out += ',';
      out += std::to_string(o.k_star_rounded);
      out += ',';
      out += format_sig9(o.p_no_default);
    } else {
      out += ",,,";
    }
    out += ',';
    out += rec.certified ? "true" : "false";
    out += ',';
    if (rec.a) out += format_sig9(*rec.a);
    out += ',';
    if (rec.b) out += format_sig9(*rec.b);
    out += ',';
    if (rec.optimum) out += format_sig9(rec.optimum->method_agreement);
    out += '\n';
  }
  return out;
}

}  // namespace groupopt
