#pragma once

// Result records shared by every verification routine.

#include <string>
#include <vector>

#include "onedim/weights.hpp"

namespace onedim {

/// One checked instance.  `x` and `k` hold the two sides that were compared
/// (canonical polynomial strings, or counts for set-level checks).
struct Cell {
  Partition lambda;
  Partition mu;
  std::string kind;
  int rank = 0;
  std::string x;
  std::string k;
  bool pass = true;
  long vertices = 0;
  std::string detail;  // empty on success
};

inline Cell make_cell(Partition lambda, Partition mu, std::string kind, int rank) {
  Cell c;
  c.lambda = std::move(lambda);
  c.mu = std::move(mu);
  c.kind = std::move(kind);
  c.rank = rank;
  return c;
}

struct Report {
  std::string suite;
  std::vector<Cell> cells;

  bool pass() const {
    for (const auto& c : cells)
      if (!c.pass) return false;
    return true;
  }
  void append(const Report& other) {
    cells.insert(cells.end(), other.cells.begin(), other.cells.end());
  }
};

}  // namespace onedim
