#pragma once

#include <vector>

#include "sinrcap/capacity.hpp"
#include "sinrcap/instance.hpp"
#include "sinrcap/power.hpp"

namespace sinrcap {

enum class ScheduleMethod { repeated_capacity, first_fit };

/// Which capacity routine a schedule round runs: algorithm_c under a caller
/// power (fixed), algorithm_pc (pc_uni), or bidirectional_pc_capacity (pc_bi).
struct ScheduleRegime {
  enum class Kind { fixed, pc_uni, pc_bi };

  static ScheduleRegime fixed(PowerAssignment p) {
    return ScheduleRegime{Kind::fixed, std::move(p)};
  }
  static ScheduleRegime pc_uni() {
    return ScheduleRegime{Kind::pc_uni, PowerAssignment::mean()};
  }
  static ScheduleRegime pc_bi() {
    return ScheduleRegime{Kind::pc_bi, PowerAssignment::mean()};
  }

  Kind kind;
  PowerAssignment power;  // meaningful for fixed only
};

/// A partition of the schedulable links into feasible slots.  Weak links can
/// never be scheduled; they are reported here and appear in no slot.
struct Schedule {
  ScheduleMethod method = ScheduleMethod::repeated_capacity;
  std::vector<std::vector<int>> slots;          // ids, ascending within a slot
  std::vector<PowerAssignment> slot_powers;     // aligned with slots
  std::vector<int> weak_links;
};

/// Rounds of the chosen capacity routine on the shrinking residual set; each
/// round's output becomes one slot.
Schedule schedule_repeated_capacity(const Instance& inst,
                                    const ScheduleRegime& regime);

/// Baseline: place each link (in id order) into the first slot that stays
/// feasible with it, rechecking the whole slot.
Schedule schedule_first_fit(const Instance& inst, const PowerAssignment& p);

}  // namespace sinrcap
