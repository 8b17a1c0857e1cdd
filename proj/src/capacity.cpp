#include "sinrcap/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sinrcap/errors.hpp"

namespace sinrcap {

namespace {

// Shared per-run scratch: resolved powers/constants plus a pairwise
// affectance evaluator.  Weak links must be filtered out before use.
struct AffEval {
  const Instance& inst;
  LinkTerms terms;

  explicit AffEval(const Instance& i, const PowerAssignment& p)
      : inst(i), terms(link_terms(p, i)) {}

  double operator()(int w, int v) const {
    if (w == v) return 0.0;
    double d = link_distance(w, v, inst);
    if (d == 0.0)
      throw DegenerateDistanceError(
          w, v, "capacity: links " + std::to_string(w) + " and " +
                    std::to_string(v) + " are at distance zero");
    return terms.c[v] * (terms.power[w] / terms.power[v]) *
           std::pow(inst.link(v).length / d, inst.alpha());
  }
};

std::vector<int> sorted_by_length(const Instance& inst, std::span<const int> ids) {
  std::vector<int> out(ids.begin(), ids.end());
  std::sort(out.begin(), out.end(), [&inst](int a, int b) {
    double la = inst.link(a).length, lb = inst.link(b).length;
    if (la != lb) return la < lb;
    return a < b;
  });
  return out;
}

void split_weak(const AffEval& aff, std::vector<int>& ids,
                std::vector<int>& weak) {
  std::vector<int> strong;
  strong.reserve(ids.size());
  for (int v : ids) {
    if (aff.terms.weak[v])
      weak.push_back(v);
    else
      strong.push_back(v);
  }
  ids.swap(strong);
}

void finalize_output(const AffEval& aff, CapacityResult& r) {
  const double budget = 1.0 + kFeasibilityRelTol;
  r.selected_affectance.resize(r.selected.size(), 0.0);
  for (std::size_t i = 0; i < r.selected.size(); ++i) {
    double sum = 0.0;
    for (int w : r.selected) sum += aff(w, r.selected[i]);
    r.selected_affectance[i] = sum;
    if (sum <= budget) r.output.push_back(r.selected[i]);
  }
}

constexpr double kPcGamma = 0.5;

}  // namespace

CapacityResult algorithm_c(const Instance& inst, std::span<const int> links,
                           const PowerAssignment& p, AlgCConfig cfg) {
  if (!(cfg.gamma > 0.0) || !(cfg.gamma < 1.0))
    throw std::invalid_argument("algorithm_c: gamma must lie in (0, 1)");
  for (int v : links) inst.link(v);
  AffEval aff(inst, p);
  CapacityResult r;
  r.power = p;
  r.power_warning = !is_length_monotone_sublinear(p, inst);
  std::vector<int> order = sorted_by_length(inst, links);
  split_weak(aff, order, r.weak_links);
  for (int v : order) {
    double two_sided = 0.0;
    for (int w : r.selected) two_sided += aff(w, v) + aff(v, w);
    if (two_sided < cfg.gamma) r.selected.push_back(v);
  }
  finalize_output(aff, r);
  return r;
}

CapacityResult algorithm_c(const Instance& inst, const PowerAssignment& p,
                           AlgCConfig cfg) {
  return algorithm_c(inst, inst.all_ids(), p, cfg);
}

std::vector<std::vector<int>> signal_strengthen(const Instance& inst,
                                                std::span<const int> S,
                                                const PowerAssignment& p,
                                                SignalStrength tau,
                                                SignalStrength delta) {
  if (!(tau.delta >= 1.0) || !(delta.delta >= tau.delta))
    throw std::invalid_argument(
        "signal_strengthen: need delta >= tau >= 1");
  FeasibilityReport pre = is_feasible(S, p, inst, tau);
  if (!pre.feasible)
    throw std::invalid_argument(
        "signal_strengthen: input is not a tau-signal set (link " +
        std::to_string(pre.worst_link) + " has incoming affectance " +
        std::to_string(pre.worst_affectance) + ")");

  AffEval aff(inst, p);
  const double budget = (1.0 / delta.delta) * (1.0 + kFeasibilityRelTol);
  std::vector<std::vector<int>> groups;
  std::vector<std::vector<double>> in_sums;  // per group, aligned with members
  for (int v : sorted_by_length(inst, S)) {
    bool placed = false;
    for (std::size_t g = 0; g < groups.size() && !placed; ++g) {
      double v_in = 0.0;
      for (int w : groups[g]) v_in += aff(w, v);
      if (v_in > budget) continue;
      bool fits = true;
      for (std::size_t m = 0; m < groups[g].size(); ++m)
        if (in_sums[g][m] + aff(v, groups[g][m]) > budget) {
          fits = false;
          break;
        }
      if (!fits) continue;
      for (std::size_t m = 0; m < groups[g].size(); ++m)
        in_sums[g][m] += aff(v, groups[g][m]);
      groups[g].push_back(v);
      in_sums[g].push_back(v_in);
      placed = true;
    }
    if (!placed) {
      groups.push_back({v});
      in_sums.push_back({0.0});
    }
  }

  double factor = inst.mode() == Mode::uni ? 4.0 : 8.0;
  auto bound = static_cast<std::size_t>(
      std::ceil(factor * delta.delta / tau.delta));
  if (groups.size() > bound)
    throw std::runtime_error(
        "signal_strengthen: produced " + std::to_string(groups.size()) +
        " groups, above the guaranteed bound of " + std::to_string(bound));
  for (const auto& g : groups) {
    FeasibilityReport check = is_feasible(g, p, inst, delta);
    if (!check.feasible)
      throw std::runtime_error(
          "signal_strengthen: group verification failed at link " +
          std::to_string(check.worst_link));
  }
  std::stable_sort(groups.begin(), groups.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return groups;
}

CapacityResult equilength_capacity(const Instance& inst,
                                   std::span<const int> links,
                                   const PowerAssignment& p, AlgCConfig cfg) {
  AffEval aff(inst, p);
  CapacityResult best;
  best.power = p;
  best.power_warning = !is_length_monotone_sublinear(p, inst);
  std::vector<int> order = sorted_by_length(inst, links);
  split_weak(aff, order, best.weak_links);
  if (order.empty()) return best;

  std::vector<std::vector<int>> classes;
  double lo = inst.link(order.front()).length;
  double hi = lo * 2.0;
  classes.emplace_back();
  for (int v : order) {
    while (inst.link(v).length >= hi) {
      hi *= 2.0;
      classes.emplace_back();
    }
    classes.back().push_back(v);
  }

  std::vector<int> weak = std::move(best.weak_links);
  bool warn = best.power_warning;
  bool have = false;
  for (const auto& cls : classes) {
    if (cls.empty()) continue;
    CapacityResult r = algorithm_c(inst, cls, p, cfg);
    if (!have || r.output.size() > best.output.size()) {
      best = std::move(r);
      have = true;
    }
  }
  best.weak_links = std::move(weak);
  best.power_warning = warn;
  return best;
}

LevelPartition build_level_partition(const Instance& inst,
                                     std::span<const int> links) {
  LevelPartition part;
  std::vector<int> order = sorted_by_length(inst, links);
  double n = static_cast<double>(order.size());
  part.D = 8.0 * std::pow(n, 2.0 / inst.alpha());
  if (order.empty()) return part;

  double hi = inst.link(order.front()).length * part.D;
  part.levels.emplace_back();
  for (int v : order) {
    while (inst.link(v).length >= hi) {
      hi *= part.D;
      part.levels.emplace_back();
    }
    part.levels.back().push_back(v);
  }
  for (std::size_t k = 0; k < part.levels.size(); ++k) {
    auto& bucket = (k % 2 == 1) ? part.odd_ids : part.even_ids;
    bucket.insert(bucket.end(), part.levels[k].begin(), part.levels[k].end());
  }
  return part;
}

namespace {

// One parity class of the level partition, processed level by level.
std::vector<int> pc_select_class(const Instance& inst, const AffEval& aff,
                                 const LevelPartition& part, std::size_t parity,
                                 double pair_threshold) {
  std::vector<int> kept;
  for (std::size_t k = parity; k < part.levels.size(); k += 2) {
    const auto& level = part.levels[k];
    if (level.empty()) continue;

    // Factor-2 length buckets inside the level (level ids are length-sorted).
    std::vector<std::vector<int>> buckets;
    double hi = inst.link(level.front()).length * 2.0;
    buckets.emplace_back();
    for (int v : level) {
      while (inst.link(v).length >= hi) {
        hi *= 2.0;
        buckets.emplace_back();
      }
      buckets.back().push_back(v);
    }

    std::vector<int> level_best;
    for (const auto& bucket : buckets) {
      std::vector<int> sel;
      for (int v : bucket) {
        double two_sided = 0.0;
        for (int w : sel) two_sided += aff(w, v) + aff(v, w);
        if (two_sided >= kPcGamma) continue;
        bool clashes = false;
        for (int w : kept)
          if (std::max(aff(v, w), aff(w, v)) >= pair_threshold) {
            clashes = true;
            break;
          }
        if (!clashes) sel.push_back(v);
      }
      if (sel.size() > level_best.size()) level_best = std::move(sel);
    }
    kept.insert(kept.end(), level_best.begin(), level_best.end());
  }
  return kept;
}

}  // namespace

CapacityResult algorithm_pc(const Instance& inst, std::span<const int> links) {
  if (inst.mode() != Mode::uni)
    throw std::invalid_argument("algorithm_pc: instance must be unidirectional");
  for (int v : links) inst.link(v);
  PowerAssignment p = scale_power_for_noise(PowerAssignment::mean(), inst);
  AffEval aff(inst, p);
  LevelPartition part = build_level_partition(inst, links);
  double n = static_cast<double>(links.size());

  // Even class first; strict comparison keeps it on ties, so reruns are
  // deterministic.
  CapacityResult best;
  bool have = false;
  for (std::size_t parity : {std::size_t{0}, std::size_t{1}}) {
    CapacityResult r;
    r.power = p;
    r.selected = pc_select_class(inst, aff, part, parity, 1.0 / (2.0 * n));
    finalize_output(aff, r);
    if (!have || r.output.size() > best.output.size()) {
      best = std::move(r);
      have = true;
    }
  }
  return best;
}

CapacityResult algorithm_pc(const Instance& inst) {
  return algorithm_pc(inst, inst.all_ids());
}

CapacityResult bidirectional_pc_capacity(const Instance& inst,
                                         std::span<const int> links) {
  if (inst.mode() != Mode::bi)
    throw std::invalid_argument(
        "bidirectional_pc_capacity: instance must be bidirectional");
  PowerAssignment p = scale_power_for_noise(PowerAssignment::mean(), inst);
  return algorithm_c(inst, links, p);
}

CapacityResult bidirectional_pc_capacity(const Instance& inst) {
  return bidirectional_pc_capacity(inst, inst.all_ids());
}

}  // namespace sinrcap
