#include "sinrcap/scheduling.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sinrcap/errors.hpp"
#include "sinrcap/matrix.hpp"
#include "sinrcap/model.hpp"

namespace sinrcap {

Schedule schedule_repeated_capacity(const Instance& inst,
                                    const ScheduleRegime& regime) {
  Schedule sched;
  sched.method = ScheduleMethod::repeated_capacity;

  std::vector<int> residual = inst.all_ids();
  if (regime.kind == ScheduleRegime::Kind::fixed) {
    // Weak links can never clear the noise floor under the fixed power, so
    // no round would make progress on them; report them up front.
    LinkTerms t = link_terms(regime.power, inst);
    std::vector<int> strong;
    for (int v : residual)
      (t.weak[v] ? sched.weak_links : strong).push_back(v);
    residual.swap(strong);
  }

  while (!residual.empty()) {
    CapacityResult round;
    switch (regime.kind) {
      case ScheduleRegime::Kind::fixed:
        round = algorithm_c(inst, residual, regime.power);
        break;
      case ScheduleRegime::Kind::pc_uni:
        round = algorithm_pc(inst, residual);
        break;
      case ScheduleRegime::Kind::pc_bi:
        round = bidirectional_pc_capacity(inst, residual);
        break;
    }
    if (round.output.empty())
      throw ScheduleStuckError(
          "schedule: no progress on a residual of " +
          std::to_string(residual.size()) + " links starting at id " +
          std::to_string(residual.front()));
    std::vector<int> slot = round.output;
    std::sort(slot.begin(), slot.end());
    std::vector<int> rest;
    rest.reserve(residual.size() - slot.size());
    for (int v : residual)
      if (!std::binary_search(slot.begin(), slot.end(), v)) rest.push_back(v);
    residual.swap(rest);
    sched.slots.push_back(std::move(slot));
    sched.slot_powers.push_back(round.power);
  }
  return sched;
}

Schedule schedule_first_fit(const Instance& inst, const PowerAssignment& p) {
  Schedule sched;
  sched.method = ScheduleMethod::first_fit;
  LinkTerms t = link_terms(p, inst);
  std::vector<int> strong;
  for (int v : inst.all_ids())
    (t.weak[v] ? sched.weak_links : strong).push_back(v);

  // Affectances are additive, so a slot stays feasible exactly when every
  // member's running incoming sum stays within budget; one precomputed
  // matrix turns each placement probe into a linear pass over the slot.
  const AffectanceMatrix m = build_matrix(strong, p, inst);
  const double budget = 1.0 + kFeasibilityRelTol;
  struct Slot {
    std::vector<std::size_t> members;  // indices into m.ids
    std::vector<double> in_sums;       // aligned with members
  };
  std::vector<Slot> slots;
  for (std::size_t v = 0; v < strong.size(); ++v) {
    bool placed = false;
    for (Slot& slot : slots) {
      double v_in = 0.0;
      bool fits = true;
      for (std::size_t t2 = 0; fits && t2 < slot.members.size(); ++t2) {
        const std::size_t u = slot.members[t2];
        v_in += m.entries.at(v, u);
        fits = slot.in_sums[t2] + m.entries.at(u, v) <= budget;
      }
      if (!fits || v_in > budget) continue;
      for (std::size_t t2 = 0; t2 < slot.members.size(); ++t2)
        slot.in_sums[t2] += m.entries.at(slot.members[t2], v);
      slot.members.push_back(v);
      slot.in_sums.push_back(v_in);
      placed = true;
      break;
    }
    if (!placed) slots.push_back({{v}, {0.0}});
  }

  for (const Slot& slot : slots) {
    std::vector<int> ids;
    ids.reserve(slot.members.size());
    for (std::size_t u : slot.members) ids.push_back(m.ids[u]);
    std::sort(ids.begin(), ids.end());
    sched.slots.push_back(std::move(ids));
  }
  sched.slot_powers.assign(sched.slots.size(), p);
  return sched;
}

}  // namespace sinrcap
