#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "groupopt/optimizer.hpp"
#include "groupopt/simulation.hpp"
#include "groupopt/verifier.hpp"

namespace groupopt {

using json = nlohmann::json;

json to_json(const TheoremCertificate& cert);
json to_json(const Optimum& opt);
json to_json(const SweepRecord& rec);
json to_json(const std::vector<SweepRecord>& records);
json to_json(const NarrowResult& res);
json to_json(const AppendixBReport& rep);

/// simulate payload: {"k", "estimate", "stderr", "analytic", "z", "trials", "seed"}.
json simulation_json(const SimulationEstimate& est, int k, double analytic);

/// Sweep rows as CSV: '.' decimal, comma separator, header row, LF line
/// endings, 9 significant digits. Uncertified rows leave the optimum columns
/// empty.
std::string sweep_csv(const std::vector<SweepRecord>& records);

/// 9-significant-digit formatting used for CSV cells.
std::string format_sig9(double v);

}  // namespace groupopt
