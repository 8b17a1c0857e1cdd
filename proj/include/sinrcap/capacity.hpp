#pragma once

#include <span>
#include <vector>

#include "sinrcap/instance.hpp"
#include "sinrcap/model.hpp"
#include "sinrcap/power.hpp"

namespace sinrcap {

struct AlgCConfig {
  double gamma = 0.5;  // greedy admission threshold, in (0, 1)
};

struct CapacityResult {
  std::vector<int> selected;  // S, in processing order
  std::vector<int> output;    // X subset of S: members with a_S(v) <= 1
  PowerAssignment power = PowerAssignment::uniform();
  std::vector<double> selected_affectance;  // a_S(v), aligned with selected
  std::vector<int> weak_links;              // input links excluded up front
  bool power_warning = false;  // explicit power failed the monotone/sub-linear check
};

/// Greedy capacity under a fixed power assignment.  Links are processed in
/// non-decreasing length order (ties by id); v joins S when its two-sided
/// affectance against the current S is below gamma, and the output keeps the
/// members whose final incoming sum is at most 1.  The output always
/// contains at least a (1 - gamma) fraction of S.
CapacityResult algorithm_c(const Instance& inst, std::span<const int> links,
                           const PowerAssignment& p, AlgCConfig cfg = {});
CapacityResult algorithm_c(const Instance& inst, const PowerAssignment& p,
                           AlgCConfig cfg = {});

/// Splits a tau-signal set into delta-signal groups (first-fit over links in
/// non-decreasing length order, admitting a link only where every member's
/// incoming budget 1/delta survives).  Groups come back largest-first; the
/// group count is verified against ceil(4*delta/tau) (uni) or
/// ceil(8*delta/tau) (bi) and overflow throws.
std::vector<std::vector<int>> signal_strengthen(const Instance& inst,
                                                std::span<const int> S,
                                                const PowerAssignment& p,
                                                SignalStrength tau,
                                                SignalStrength delta);

/// Runs algorithm_c separately on each factor-2 length class and returns the
/// best result (largest output, ties to the shortest class).
CapacityResult equilength_capacity(const Instance& inst,
                                   std::span<const int> links,
                                   const PowerAssignment& p,
                                   AlgCConfig cfg = {});

/// Length levels with geometrically growing boundaries D = 8 n^(2/alpha):
/// level k holds links with length in [lmin * D^k, lmin * D^(k+1)), and the
/// parity classes are the unions of odd/even levels.
struct LevelPartition {
  double D = 0.0;
  std::vector<std::vector<int>> levels;  // index k, ids sorted by (length, id)
  std::vector<int> odd_ids, even_ids;
};

LevelPartition build_level_partition(const Instance& inst,
                                     std::span<const int> links);

/// Capacity with oblivious mean power on a unidirectional instance.  Works
/// on each parity class in turn: per level, links are bucketed into factor-2
/// length groups, each group is filled greedily (two-sided affectance below
/// gamma within the group, and no pairing with an already-kept link of an
/// earlier level whose mean-power affectance reaches 1/(2n)), and the
/// largest group of the level is kept.  Returns the better parity class
/// after the final incoming-sum filter.
CapacityResult algorithm_pc(const Instance& inst);
CapacityResult algorithm_pc(const Instance& inst, std::span<const int> links);

/// Bidirectional capacity with mean power: algorithm_c under the
/// noise-scaled mean assignment.
CapacityResult bidirectional_pc_capacity(const Instance& inst);
CapacityResult bidirectional_pc_capacity(const Instance& inst,
                                         std::span<const int> links);

}  // namespace sinrcap
