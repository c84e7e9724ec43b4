#pragma once

// Named verification grids, a bounded worker pool to run them, and JSON
// report I/O.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "onedim/report.hpp"
#include "onedim/weights.hpp"

namespace onedim {

/// Grid bounds; a negative or empty field means "the suite's default".
struct SuiteOptions {
  int m = -1;         // maximal number of parts
  int max_mu = -1;    // maximal |mu|
  int rank = 0;       // 0: the suite's per-cell default
  std::vector<Diamond> diamonds;
  int nvars = 0;      // Littlewood: 0 runs n = 1..4
  int cap = 6;        // x-degree cap (Littlewood) or q-degree cap (generating function)
  int kmax = 4;       // stability shifts
  int workers = 1;
};

/// Every suite name accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs a suite.  Throws std::invalid_argument on an unknown name or bad bounds.
Report run_suite(const std::string& name, const SuiteOptions& options);

/// Evaluates the tasks on `workers` threads and concatenates their cells in
/// task order.  A task that throws yields one failing cell with the message.
std::vector<Cell> run_cells(const std::vector<std::function<std::vector<Cell>()>>& tasks,
                            int workers);

nlohmann::json to_json(const Cell& c);
nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

/// Stable hexadecimal key for a suite run, from the suite name and options.
std::string cache_key(const std::string& name, const SuiteOptions& options);

}  // namespace onedim
