#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sinrcap/capacity.hpp"
#include "sinrcap/instance.hpp"
#include "sinrcap/matrix.hpp"
#include "sinrcap/model.hpp"
#include "sinrcap/oracle.hpp"
#include "sinrcap/power.hpp"
#include "sinrcap/scheduling.hpp"

namespace sinrcap {

/// Instance document:
///
///   {
///     "alpha": 2.0, "beta": 1.0, "noise": 0.0, "mode": "uni",
///     "metric": {"kind": "euclidean", "dim": 2, "points": [[x, y], ...]}
///             | {"kind": "matrix", "dist": [[...], ...]},
///     "links": [{"s": point_index, "r": point_index}, ...]
///   }
///
/// Link ids are the positions in the "links" array.
nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);

/// {"kind": "uniform" | "mean" | "linear" | "explicit", "scale": 1.0,
///  "powers": [...]}  -- powers required for (and only for) explicit.
nlohmann::json power_to_json(const PowerAssignment& p);
PowerAssignment power_from_json(const nlohmann::json& j);

nlohmann::json capacity_result_to_json(const CapacityResult& r);
nlohmann::json schedule_to_json(const Schedule& s);
nlohmann::json feasibility_to_json(const FeasibilityReport& r);
nlohmann::json oracle_result_to_json(const OracleResult& r);
nlohmann::json min_schedule_to_json(const MinScheduleResult& r);
nlohmann::json pc_feasibility_to_json(const PcFeasibility& r);

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

/// One line of the sweep report.  Optional cells are left empty.
struct SweepRow {
  std::string instance_id;
  std::size_t n = 0;
  double delta = 1.0;
  std::string algorithm;
  std::size_t x_size = 0;
  std::optional<std::size_t> oracle_opt;
  std::optional<double> ratio;
  std::optional<std::size_t> slots;
  double runtime_ms = 0.0;
};

/// CSV with the fixed header
/// instance_id,n,delta,algorithm,x_size,oracle_opt,ratio,slots,runtime_ms,
/// "\n" line endings and "." decimals, sorted by (instance_id, algorithm).
std::string sweep_csv(std::vector<SweepRow> rows);

}  // namespace sinrcap
