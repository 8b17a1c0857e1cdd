#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sinrcap/instance.hpp"
#include "sinrcap/matrix.hpp"
#include "sinrcap/model.hpp"
#include "sinrcap/power.hpp"

namespace sinrcap {

struct OracleResult {
  std::size_t opt = 0;
  std::vector<int> witness;  // lexicographically smallest maximum set
  std::optional<PowerCertificate> certificate;  // opt_pc only
  std::uint64_t evaluated = 0;  // subsets whose feasibility was computed
};

/// Largest delta-signal subset under a fixed power assignment, by exhaustive
/// subset search (cardinality-descending, with pair-conflict pruning and a
/// feasibility memo).  Refuses instances with more than `cap` links.
OracleResult opt_fixed(const Instance& inst, const PowerAssignment& p,
                       SignalStrength delta = {}, std::size_t cap = 16);

/// Largest subset feasible under *some* power (zero-noise), by the same
/// search over pc_feasible_oracle.  Subset feasibility is monotone, so the
/// first hit at a cardinality is optimal.
OracleResult opt_pc(const Instance& inst, std::size_t cap = 16);

struct MinScheduleResult {
  std::size_t slots = 0;
  std::vector<std::vector<int>> witness;
};

/// Exact minimum number of feasible slots that partition the links, by
/// dynamic programming over subsets.  Throws WeakLinkError if a link can
/// never be scheduled under p.
MinScheduleResult min_schedule(const Instance& inst, const PowerAssignment& p,
                               std::size_t cap = 10);

}  // namespace sinrcap
